#include "flagcodes/bounds.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace flagcodes {

namespace {

std::string fmt_vec(const std::vector<std::uint32_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::uint32_t sum_m(std::uint32_t v, const FlagType& type) {
    std::uint32_t s = 0;
    for (auto x : m_vector(v, type)) s += x;
    return s;
}

}  // namespace

std::string to_string(BoundKind k) {
    switch (k) {
        case BoundKind::anticode: return "anticode";
        case BoundKind::johnson: return "johnson";
        case BoundKind::cdc: return "cdc";
        case BoundKind::sphere_packing: return "sphere-packing";
        case BoundKind::sphere_covering: return "sphere-covering";
        case BoundKind::exact: return "exact";
        case BoundKind::construction: return "construction";
    }
    return "?";
}

QRational anticode_bound_symbolic(std::uint32_t v, std::uint32_t d, const FlagType& type,
                                  const ReductionVector& r) {
    if (r.ambient != v || r.type.dims != type.dims)
        throw ShapeMismatch("reduction vector does not match (v, T)");
    if (d <= closed_deficit(r))
        throw DistanceConditionViolated("d must exceed the closed distance deficit of r");
    if (!family_nonempty(r)) throw NotApplicable("prescription family of r is empty");
    auto sd = support_dims(r);
    QPolynomial num = QPolynomial::constant(1);
    QPolynomial den = QPolynomial::constant(1);
    for (std::size_t i = 0; i < sd.size(); ++i) {
        auto [k, u] = sd[i];
        std::uint32_t uprev = i ? sd[i - 1].second : 0;
        num = num * gaussian_binomial(i ? v - uprev : v, u - uprev);
        den = den * gaussian_binomial(k - uprev, u - uprev);
    }
    return QRational(num, den);
}

BoundResult anticode_bound(std::uint32_t v, std::uint32_t d, const FlagType& type,
                           const ReductionVector& r, std::uint32_t q) {
    QRational sym = anticode_bound_symbolic(v, d, type, r);
    BoundResult out;
    out.kind = BoundKind::anticode;
    out.symbolic = sym;
    out.value = sym.evaluate_floor(BigInt(q));
    out.provenance = "anticode r=" + fmt_vec(r.entries);
    out.r = r;
    return out;
}

BoundResult best_anticode_bound(std::uint32_t v, std::uint32_t d, const FlagType& type,
                                std::uint32_t q) {
    auto R = compute_R(v, d, type);
    std::optional<BoundResult> best;
    for (const auto& r : R) {
        if (!family_nonempty(r)) continue;
        BoundResult cand = anticode_bound(v, d, type, r, q);
        // Ties resolve to the lexicographically greatest r, which keeps the
        // e_1-style vectors of the worked propositions as witnesses.
        if (!best || cand.value < best->value ||
            (cand.value == best->value && best->r->entries < cand.r->entries))
            best = std::move(cand);
    }
    if (!best) {
        // Every minimal family was empty; fall back to the whole-space bound.
        ReductionVector full(v, type, m_vector(v, type));
        best = anticode_bound(v, d, type, full, q);
    }
    return *best;
}

namespace {

BoundResult table_best(std::uint32_t v, std::uint32_t d, std::uint32_t q);

// Point-shadow recursion. Full-type chains recurse through table_best so the
// published table reproduces exactly; general types recurse through the full
// aggregate for the shifted type.
BoundResult johnson_impl(std::uint32_t v, std::uint32_t d, const FlagType& type, std::uint32_t q) {
    if (v < 2) throw NotApplicable("johnson bound needs v >= 2");
    std::uint32_t k1 = type.dims.front();

    std::vector<std::uint32_t> shifted;
    for (auto t : type.dims)
        if (t >= 2) shifted.push_back(t - 1);

    BigInt sub_value = 1;
    std::optional<QRational> sub_sym = QRational(QPolynomial::constant(1));
    std::string sub_desc = "1";
    if (!shifted.empty()) {
        FlagType sub_type(v - 1, shifted);
        BoundResult sub = sub_type.is_full() ? table_best(v - 1, d, q)
                                             : best_upper_bound_typed(v - 1, d, sub_type, q);
        sub_value = sub.value;
        sub_sym = sub.symbolic;
        sub_desc = "A(" + std::to_string(v - 1) + "," + std::to_string(d) +
                   (sub_type.is_full() ? "" : ";" + fmt_vec(sub_type.dims)) + ")<=" + sub.value.str();
    }

    QRational factor(gaussian_binomial(v, 1), gaussian_binomial(k1, 1));
    BoundResult out;
    out.kind = BoundKind::johnson;
    BigRational val = factor.evaluate(BigInt(q)) * BigRational(sub_value);
    BigInt n = boost::multiprecision::numerator(val), den = boost::multiprecision::denominator(val);
    out.value = n / den;  // values are nonnegative
    if (sub_sym) out.symbolic = factor * *sub_sym;
    out.provenance = "johnson [" + std::to_string(v) + " 1]/[" + std::to_string(k1) + " 1] * " + sub_desc;
    return out;
}

struct CdcCandidate {
    std::uint32_t t = 0, alpha = 0;
    CdcValue val;
};

std::optional<CdcCandidate> cdc_best_candidate(std::uint32_t v, std::uint32_t d,
                                               const FlagType& type, std::uint32_t q) {
    auto m = m_vector(v, type);
    std::optional<CdcCandidate> best;
    for (std::size_t i = 0; i < type.dims.size(); ++i) {
        for (std::uint32_t alpha = 1; alpha <= m[i]; ++alpha) {
            std::vector<std::uint32_t> r(type.dims.size(), 0);
            r[i] = alpha;
            ReductionVector rv(v, type, std::move(r));
            if (d <= closed_deficit(rv)) continue;
            CdcValue cv = cdc_value(v, m[i] - alpha + 1, type.dims[i], q);
            if (!best || cv.value < best->val.value)
                best = CdcCandidate{type.dims[i], alpha, std::move(cv)};
        }
    }
    return best;
}

}  // namespace

BoundResult johnson_bound(std::uint32_t v, std::uint32_t d, std::uint32_t q) {
    return johnson_impl(v, d, FlagType::full(v), q);
}

BoundResult johnson_bound_typed(std::uint32_t v, std::uint32_t d, const FlagType& type,
                                std::uint32_t q) {
    return johnson_impl(v, d, type, q);
}

CdcValue cdc_value(std::uint32_t v, std::uint32_t d, std::uint32_t k, std::uint32_t q) {
    if (k > v || d < 1) throw InvalidParams("cdc_value requires 1 <= d and k <= v");
    static std::mutex mu;
    static std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t>, CdcValue>
        cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({v, d, k, q});
        if (it != cache.end()) return it->second;
    }

    CdcValue out;
    std::uint32_t kk = std::min(k, v - k);  // duality
    if (d > kk) {
        out = {BigInt(1), true, QPolynomial::constant(1), "distance exceeds min(k,v-k)"};
    } else if (d == 1) {
        const QPolynomial& g = gaussian_binomial(v, k);
        out = {evaluate(g, q), true, g, "whole Grassmannian"};
    } else if (d == kk && v == 2 * kk) {
        QPolynomial p = QPolynomial::monomial(1, kk) + QPolynomial::constant(1);
        out = {evaluate(p, q), true, p, "spread"};
    } else if (d == kk && v == 2 * kk + 1 && kk >= 2) {
        QPolynomial p = QPolynomial::monomial(1, kk + 1) + QPolynomial::constant(1);
        out = {evaluate(p, q), true, p, "maximum partial spread"};
    } else if (v == 6 && d == 2 && kk == 3 && q == 2) {
        out = {BigInt(77), true, std::nullopt, "A_2^i(6,2;3)=77"};
    } else if (v == 7 && d == 2 && kk == 2 && q == 2) {
        out = {BigInt(41), true, std::nullopt, "A_2^i(7,2;2)=41"};
    } else {
        // Anticode bound.
        QRational ac(gaussian_binomial(v, kk - d + 1), gaussian_binomial(kk, kk - d + 1));
        BigInt best = ac.evaluate_floor(BigInt(q));
        std::string source = "cdc anticode";
        // Johnson recursion where it applies (d < k).
        if (d < kk && v >= 1) {
            CdcValue sub = cdc_value(v - 1, d, kk - 1, q);
            BigInt qv = boost::multiprecision::pow(BigInt(q), v) - 1;
            BigInt qk = boost::multiprecision::pow(BigInt(q), kk) - 1;
            BigInt jv = qv * sub.value / qk;
            if (jv < best) {
                best = jv;
                source = "cdc johnson";
            }
        }
        out = {best, false, std::nullopt, source};
    }

    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_tuple(v, d, k, q), out);
    return out;
}

BoundResult cdc_bound_typed(std::uint32_t v, std::uint32_t d, const FlagType& type,
                            std::uint32_t q) {
    auto best = cdc_best_candidate(v, d, type, q);
    if (!best) throw NotApplicable("no admissible single-layer reduction");
    BoundResult out;
    out.kind = BoundKind::cdc;
    out.value = best->val.value;
    if (best->val.symbolic) out.symbolic = QRational(*best->val.symbolic);
    out.provenance = "cdc r=" + std::to_string(best->alpha) + "*e_" + std::to_string(best->t) +
                     " -> A_q^i(" + std::to_string(v) + "," +
                     std::to_string(std::min(best->t, v - best->t) - best->alpha + 1) + ";" +
                     std::to_string(best->t) + ") [" + best->val.source + "]";
    return out;
}

BoundResult cdc_bound(std::uint32_t v, std::uint32_t d, std::uint32_t q) {
    std::uint32_t dmax = (v * v) / 4;
    std::uint32_t half = v / 2;
    if (d > dmax || d + half <= dmax) throw NotApplicable("no admissible delta for the CDC bound");
    std::uint32_t delta = dmax - d;
    std::uint32_t k = half - delta;
    CdcValue cv = cdc_value(v, k, k, q);
    BoundResult out;
    out.kind = BoundKind::cdc;
    out.value = cv.value;
    if (cv.symbolic) out.symbolic = QRational(*cv.symbolic);
    out.provenance = "cdc delta=" + std::to_string(delta) + " -> A_q^i(" + std::to_string(v) + "," +
                     std::to_string(k) + ";" + std::to_string(k) + ") [" + cv.source + "]";
    return out;
}

std::uint32_t beta_exponent(std::uint32_t v, std::uint32_t d) {
    if (d < 1) throw NotApplicable("beta exponent needs d >= 1");
    std::uint32_t vh = 1;
    while (vh * vh < 4 * d) ++vh;  // ceil(2 sqrt d)
    if (v < vh || vh < 2) throw NotApplicable("v below ceil(2 sqrt d)");
    std::uint32_t term = (v * (v - 1) - vh * (vh - 1)) / 2;
    return term + vh - d + ((vh - 1) * (vh - 1)) / 4;
}

std::uint64_t ball_size(std::uint32_t v, std::uint32_t q, const FlagType& type,
                        std::uint32_t radius, const Flag& center, std::uint64_t work_cap) {
    Field F = make_field(q);
    BigInt n = evaluate(count_flags_symbolic(v, type), q);
    if (n > work_cap) throw TooLarge("flag space exceeds the ball-size work cap");
    std::uint64_t count = 0;
    for_each_flag(v, F, type, [&](const Flag& f) {
        if (grassmann_distance(f, center) <= radius) ++count;
    });
    return count;
}

std::uint64_t ball_size(std::uint32_t v, std::uint32_t q, const FlagType& type,
                        std::uint32_t radius, std::uint64_t work_cap) {
    // Transitivity makes the ball size center-independent; use the coordinate flag.
    Field F = make_field(q);
    std::vector<Subspace> parts;
    for (auto k : type.dims) {
        std::vector<std::vector<FieldElement>> rows(k, std::vector<FieldElement>(v, 0));
        for (std::uint32_t i = 0; i < k; ++i) rows[i][i] = 1;
        parts.emplace_back(F, v, std::move(rows));
    }
    return ball_size(v, q, type, radius, Flag(type, std::move(parts)), work_cap);
}

BigInt sphere_packing_bound(std::uint32_t v, std::uint32_t d, std::uint32_t q, const FlagType& type,
                            std::uint64_t work_cap) {
    BigInt n = evaluate(count_flags_symbolic(v, type), q);
    std::uint64_t b = ball_size(v, q, type, (d - 1) / 2, work_cap);
    return n / b;
}

BigInt sphere_covering_bound(std::uint32_t v, std::uint32_t d, std::uint32_t q, const FlagType& type,
                             std::uint64_t work_cap) {
    BigInt n = evaluate(count_flags_symbolic(v, type), q);
    std::uint64_t b = ball_size(v, q, type, d - 1, work_cap);
    return (n + b - 1) / b;
}

std::optional<BoundResult> exact_value(std::uint32_t v, std::uint32_t d, std::uint32_t q) {
    auto make = [&](QPolynomial p, const std::string& why) {
        BoundResult b;
        b.kind = BoundKind::exact;
        b.symbolic = QRational(p);
        b.value = evaluate(p, q);
        b.exact = true;
        b.provenance = why;
        return b;
    };
    if (v < 2) {
        return make(QPolynomial::constant(1), "trivial ambient");
    }
    std::uint32_t dmax = (v * v) / 4;
    if (d > dmax) return make(QPolynomial::constant(1), "d exceeds (v/2)^2");
    if (d == 1) return make(count_flags_symbolic(v, FlagType::full(v)), "full flag count");
    if (v % 2 == 0 && d == dmax) {
        QPolynomial p = QPolynomial::monomial(1, v / 2) + QPolynomial::constant(1);
        return make(p, "spread construction, tight");
    }
    if (v % 2 == 1 && v >= 5 && d == dmax) {
        // dmax = k^2 + k for v = 2k+1.
        QPolynomial p = QPolynomial::monomial(1, (v + 1) / 2) + QPolynomial::constant(1);
        return make(p, "partial spread construction, tight");
    }
    if (v == 3 && d == 2) return make(gaussian_binomial(3, 1), "point-pinned bound, Singer orbit");
    if (v == 4 && d == 3) return make(gaussian_binomial(4, 1), "point-pinned bound, Singer orbit");
    return std::nullopt;
}

std::optional<BigInt> construction_lower_bound(std::uint32_t v, std::uint32_t d, std::uint32_t q) {
    // Only the families that attain the bound at this exact distance; richer
    // lower bounds (solver incumbents, codes at larger d) come from the cache.
    if (auto e = exact_value(v, d, q)) return e->value;
    return std::nullopt;
}

namespace {

using TypedKey = std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::vector<std::uint32_t>>;

int kind_priority(BoundKind k) {
    switch (k) {
        case BoundKind::exact: return 0;
        case BoundKind::anticode: return 1;
        case BoundKind::johnson: return 2;
        case BoundKind::cdc: return 3;
        default: return 4;
    }
}

const BoundResult& pick_min(const std::vector<BoundResult>& candidates) {
    const BoundResult* best = nullptr;
    for (const auto& c : candidates) {
        if (!best || c.value < best->value ||
            (c.value == best->value && kind_priority(c.kind) < kind_priority(best->kind)))
            best = &c;
    }
    return *best;
}

BoundResult trivial_one(const std::string& why) {
    BoundResult b;
    b.kind = BoundKind::exact;
    b.symbolic = QRational(QPolynomial::constant(1));
    b.value = 1;
    b.exact = true;
    b.provenance = why;
    return b;
}

// Exact registry + Johnson recursion + single-layer CDC: the method set behind
// the published tables. Memoized; recursion only ever descends in v.
BoundResult table_best(std::uint32_t v, std::uint32_t d, std::uint32_t q) {
    if (v < 2) return trivial_one("trivial ambient");
    static std::mutex mu;
    static std::map<TypedKey, BoundResult> cache;
    TypedKey key{v, d, q, {}};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::vector<BoundResult> candidates;
    if (auto e = exact_value(v, d, q)) candidates.push_back(std::move(*e));
    if (d > (v * v) / 4) candidates.push_back(trivial_one("d exceeds the maximum Grassmann distance"));
    candidates.push_back(johnson_impl(v, d, FlagType::full(v), q));
    try {
        candidates.push_back(cdc_bound(v, d, q));
    } catch (const NotApplicable&) {
    }
    BoundResult best = pick_min(candidates);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::move(key), best);
    return best;
}

BoundResult raw_best(std::uint32_t v, std::uint32_t d, const FlagType& type, std::uint32_t q) {
    std::vector<BoundResult> candidates;
    std::uint32_t dmax = sum_m(v, type);
    if (d > dmax) candidates.push_back(trivial_one("d exceeds the maximum Grassmann distance"));
    if (type.size() == 1) {
        CdcValue cv = cdc_value(v, d, type.dims[0], q);
        BoundResult b;
        b.kind = BoundKind::cdc;
        b.value = cv.value;
        b.exact = cv.exact;
        if (cv.symbolic) b.symbolic = QRational(*cv.symbolic);
        b.provenance = "single layer: A_q^i [" + cv.source + "]";
        candidates.push_back(std::move(b));
    }
    if (d <= dmax) {
        candidates.push_back(best_anticode_bound(v, d, type, q));
        if (v >= 2) candidates.push_back(johnson_impl(v, d, type, q));
        try {
            candidates.push_back(cdc_bound_typed(v, d, type, q));
        } catch (const NotApplicable&) {
        }
    }
    return pick_min(candidates);
}

}  // namespace

BoundResult best_upper_bound_typed(std::uint32_t v, std::uint32_t d, const FlagType& type,
                                   std::uint32_t q) {
    if (d < 1) throw InvalidDistance("d must be positive");
    if (type.is_full()) return best_upper_bound(v, d, q);
    static std::mutex mu;
    static std::map<TypedKey, BoundResult> cache;
    TypedKey key{v, d, q, type.dims};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    BoundResult best = raw_best(v, d, type, q);
    FlagType dualt = type.dual_type();
    if (dualt.dims != type.dims) {
        BoundResult alt = raw_best(v, d, dualt, q);
        if (alt.value < best.value) {
            alt.provenance += " (via dual type)";
            best = std::move(alt);
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::move(key), best);
    return best;
}

BoundResult best_upper_bound(std::uint32_t v, std::uint32_t d, std::uint32_t q) {
    if (d < 1) throw InvalidDistance("d must be positive");
    if (v < 2) return trivial_one("trivial ambient");
    std::vector<BoundResult> candidates;
    candidates.push_back(table_best(v, d, q));
    if (d <= (v * v) / 4)
        candidates.push_back(best_anticode_bound(v, d, FlagType::full(v), q));
    return pick_min(candidates);
}

BoundsTable bounds_table(std::uint32_t v_min, std::uint32_t v_max, std::uint32_t q,
                         const std::vector<KnownValue>& cache) {
    BoundsTable table;
    table.q = q;
    for (std::uint32_t v = v_min; v <= v_max; ++v) {
        std::uint32_t dmax = (v * v) / 4;
        for (std::uint32_t d = 1; d <= dmax; ++d) {
            TableCell cell;
            cell.v = v;
            cell.d = d;
            // Cells follow the published method set (exact, Johnson chain, CDC);
            // the anticode route is available through best_upper_bound and the
            // bound subcommand, and improves on the published (6,5) entry.
            cell.upper = table_best(v, d, q);
            cell.lower = construction_lower_bound(v, d, q);
            for (const auto& kv : cache) {
                if (kv.v != v || kv.q != q || !kv.type.empty()) continue;
                if (kv.d < d) continue;  // a code at larger distance stays valid
                if (!cell.lower || kv.size > *cell.lower) cell.lower = kv.size;
            }
            if (cell.lower && *cell.lower == cell.upper.value) cell.upper.exact = true;
            if (cell.lower && *cell.lower > cell.upper.value)
                throw Error("lower bound exceeds upper bound at (" + std::to_string(v) + "," +
                            std::to_string(d) + ")");
            table.cells.push_back(std::move(cell));
        }
    }
    return table;
}

QRational cartesian_anticode_bound_symbolic(std::uint32_t v, std::uint32_t d, const FlagType& type,
                                            const ReductionVector& r) {
    if (r.ambient != v || r.type.dims != type.dims)
        throw ShapeMismatch("reduction vector does not match (v, T)");
    auto m = m_vector(v, type);
    std::uint32_t deficit = 0;
    for (std::size_t i = 0; i < m.size(); ++i) deficit += m[i] - r.entries[i];
    if (d <= deficit)
        throw DistanceConditionViolated("d must exceed the raw distance deficit of r");
    QPolynomial num = QPolynomial::constant(1);
    QPolynomial den = QPolynomial::constant(1);
    for (std::size_t i = 0; i < r.entries.size(); ++i) {
        if (r.entries[i] == 0) continue;
        std::uint32_t k = type.dims[i];
        std::uint32_t u = k - m[i] + r.entries[i];
        num = num * gaussian_binomial(v, u);
        den = den * gaussian_binomial(k, u);
    }
    return QRational(num, den);
}

BoundResult cartesian_anticode_bound(std::uint32_t v, std::uint32_t d, const FlagType& type,
                                     const ReductionVector& r, std::uint32_t q) {
    QRational sym = cartesian_anticode_bound_symbolic(v, d, type, r);
    BoundResult out;
    out.kind = BoundKind::anticode;
    out.symbolic = sym;
    out.value = sym.evaluate_floor(BigInt(q));
    out.provenance = "cartesian anticode r=" + fmt_vec(r.entries);
    out.r = r;
    return out;
}

}  // namespace flagcodes
