#include "flagcodes/constructions.hpp"

#include <algorithm>
#include <map>

namespace flagcodes {

namespace {

// F_q[x]/(f) with coefficients in an arbitrary base field, used where subspace
// coordinates over F_q itself are needed (multiplication matrices, Gabidulin
// evaluation). Elements are coefficient vectors of length deg.
struct ExtField {
    Field base;
    std::uint32_t deg;
    std::vector<FieldElement> mod;  // c_0..c_{deg-1} of the monic modulus

    using Elt = std::vector<FieldElement>;

    ExtField(Field b, std::uint32_t d) : base(b), deg(d), mod(primitive_polynomial(b, d)) {}

    Elt zero() const { return Elt(deg, 0); }
    Elt from_index(std::uint64_t idx) const {
        Elt e(deg);
        for (std::uint32_t i = 0; i < deg; ++i) {
            e[i] = static_cast<FieldElement>(idx % base.q());
            idx /= base.q();
        }
        return e;
    }
    std::uint64_t size() const {
        std::uint64_t s = 1;
        for (std::uint32_t i = 0; i < deg; ++i) s *= base.q();
        return s;
    }

    Elt add(const Elt& a, const Elt& b) const {
        Elt r(deg);
        for (std::uint32_t i = 0; i < deg; ++i) r[i] = base.add(a[i], b[i]);
        return r;
    }
    Elt sub(const Elt& a, const Elt& b) const {
        Elt r(deg);
        for (std::uint32_t i = 0; i < deg; ++i) r[i] = base.sub(a[i], b[i]);
        return r;
    }
    Elt mul_x(Elt a) const {  // multiply by x and reduce
        FieldElement lead = a[deg - 1];
        for (std::uint32_t j = deg - 1; j > 0; --j) a[j] = a[j - 1];
        a[0] = 0;
        if (lead != 0)
            for (std::uint32_t j = 0; j < deg; ++j) a[j] = base.sub(a[j], base.mul(lead, mod[j]));
        return a;
    }
    Elt mul(const Elt& a, const Elt& b) const {
        Elt acc = zero();
        Elt shifted = a;
        for (std::uint32_t i = 0; i < deg; ++i) {
            if (b[i] != 0) {
                for (std::uint32_t j = 0; j < deg; ++j)
                    acc[j] = base.add(acc[j], base.mul(b[i], shifted[j]));
            }
            if (i + 1 < deg) shifted = mul_x(shifted);
        }
        return acc;
    }
    Elt pow_q(const Elt& a) const {  // Frobenius z -> z^q
        std::uint64_t n = base.q();
        Elt acc = zero();
        acc[0] = 1;
        Elt sq = a;
        while (n) {
            if (n & 1) acc = mul(acc, sq);
            sq = mul(sq, sq);
            n >>= 1;
        }
        return acc;
    }
    bool is_zero(const Elt& a) const {
        for (auto x : a)
            if (x) return false;
        return true;
    }
};

// Matrix of z -> z * a restricted to span(1, x, ..., x^{rows-1}), expressed in
// the full polynomial basis: row i = coordinates of x^i * a.
MatrixFq mult_matrix(const ExtField& E, const ExtField::Elt& a, std::uint32_t rows) {
    MatrixFq m(E.base, rows, E.deg);
    ExtField::Elt cur = a;
    for (std::uint32_t i = 0; i < rows; ++i) {
        for (std::uint32_t j = 0; j < E.deg; ++j) m.set(i, j, cur[j]);
        cur = E.mul_x(cur);
    }
    return m;
}

Subspace lift_at(const MatrixFq& m, std::uint32_t ambient) {
    const Field& F = m.field();
    std::vector<std::vector<FieldElement>> rows(m.rows(), std::vector<FieldElement>(ambient, 0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        rows[i][i] = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][m.rows() + j] = m.at(i, j);
    }
    return rref_rows(F, ambient, std::move(rows));
}

// Nested completion below: prefixes of the RREF basis.
void complete_below(const FlagType& type, const Subspace& w, std::vector<Subspace>& parts) {
    const Field& F = w.field();
    for (auto k : type.dims) {
        if (k >= w.dim()) break;
        std::vector<std::vector<FieldElement>> rows(w.rows().begin(), w.rows().begin() + k);
        parts.emplace_back(F, w.ambient(), std::move(rows));
    }
}

// Nested completion above by least unused coordinate vectors.
void complete_above(const FlagType& type, Subspace current, std::vector<Subspace>& parts) {
    const Field& F = current.field();
    std::uint32_t v = current.ambient();
    for (auto k : type.dims) {
        if (k <= current.dim()) continue;
        while (current.dim() < k) {
            for (std::uint32_t j = 0; j < v; ++j) {
                std::vector<FieldElement> e(v, 0);
                e[j] = 1;
                Subspace cand = rref_rows(F, v, [&] {
                    auto rows = current.rows();
                    rows.push_back(e);
                    return rows;
                }());
                if (cand.dim() == current.dim() + 1) {
                    current = cand;
                    break;
                }
            }
        }
        parts.push_back(current);
    }
}

FlagCode assemble_full_flags(std::uint32_t v, const Field& F,
                             const std::vector<std::pair<Subspace, Subspace>>& middles) {
    // middles: (W_k, W_{k+1}) pairs, W_{k+1} possibly equal to W_k for even v.
    FlagType type = FlagType::full(v);
    FlagCode code(F, type);
    for (const auto& [wk, wk1] : middles) {
        std::vector<Subspace> parts;
        complete_below(type, wk, parts);
        parts.push_back(wk);
        Subspace top = wk;
        if (wk1.dim() > wk.dim()) {
            parts.push_back(wk1);
            top = wk1;
        }
        complete_above(type, top, parts);
        code.words.emplace_back(type, std::move(parts));
    }
    return code;
}

}  // namespace

std::size_t rank_distance(const MatrixFq& a, const MatrixFq& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeMismatch("rank distance of unequal shapes");
    MatrixFq diff(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            diff.set(i, j, a.field().sub(a.at(i, j), b.at(i, j)));
    return diff.rank();
}

FlagCode spread_code(std::uint32_t k, std::uint32_t q) {
    if (k < 1) throw InvalidParams("spread_code needs k >= 1");
    Field F = make_field(q);
    std::uint32_t v = 2 * k;
    ExtField E(F, k);

    std::vector<std::pair<Subspace, Subspace>> middles;
    for (std::uint64_t idx = 0; idx < E.size(); ++idx) {
        Subspace w = lift_at(mult_matrix(E, E.from_index(idx), k), v);
        middles.emplace_back(w, w);
    }
    // The space at infinity: 0 x F_q^k.
    std::vector<std::vector<FieldElement>> rows(k, std::vector<FieldElement>(v, 0));
    for (std::uint32_t i = 0; i < k; ++i) rows[i][k + i] = 1;
    Subspace infinity(F, v, std::move(rows));
    middles.emplace_back(infinity, infinity);

    return assemble_full_flags(v, F, middles);
}

FlagCode partial_spread_flag_code(std::uint32_t k, std::uint32_t q) {
    if (k < 2) throw InvalidParams("partial_spread_flag_code needs k >= 2");
    Field F = make_field(q);
    std::uint32_t v = 2 * k + 1;
    ExtField E(F, k + 1);

    auto embed_point = [&](const ExtField::Elt& z) {
        std::vector<std::vector<FieldElement>> rows(1, std::vector<FieldElement>(v, 0));
        for (std::uint32_t j = 0; j < k + 1; ++j) rows[0][k + j] = z[j];
        return Subspace(F, v, std::move(rows));
    };
    auto join = [&](const Subspace& a, const Subspace& b) {
        auto rows = a.rows();
        for (const auto& r : b.rows()) rows.push_back(r);
        return rref_rows(F, v, std::move(rows));
    };

    // lambda = x^k, outside the evaluation span <1, x, ..., x^{k-1}>.
    ExtField::Elt lambda = E.zero();
    lambda[k] = 1;

    std::vector<std::pair<Subspace, Subspace>> middles;
    for (std::uint64_t idx = 0; idx < E.size(); ++idx) {
        ExtField::Elt a = E.from_index(idx);
        Subspace wk = lift_at(mult_matrix(E, a, k), v);
        // Extension point lambda * a keeps the (k+1)-layer intersections at
        // exactly one point pairwise; a = 0 gets an arbitrary nonzero point.
        ExtField::Elt ext;
        if (E.is_zero(a)) {
            ext = E.zero();
            ext[0] = 1;
        } else {
            ext = E.mul(lambda, a);
        }
        Subspace wk1 = join(wk, embed_point(ext));
        middles.emplace_back(wk, wk1);
    }
    // W_infinity inside S = 0 x F_q^{k+1}: the embedded evaluation span, with S
    // itself as its (k+1)-layer.
    std::vector<std::vector<FieldElement>> winf_rows(k, std::vector<FieldElement>(v, 0));
    for (std::uint32_t i = 0; i < k; ++i) winf_rows[i][k + i] = 1;
    Subspace winf(F, v, std::move(winf_rows));
    std::vector<std::vector<FieldElement>> s_rows(k + 1, std::vector<FieldElement>(v, 0));
    for (std::uint32_t i = 0; i < k + 1; ++i) s_rows[i][k + i] = 1;
    Subspace s_space(F, v, std::move(s_rows));
    middles.emplace_back(winf, s_space);

    return assemble_full_flags(v, F, middles);
}

FlagCode singer_orbit_code(std::uint32_t v, std::uint32_t q, const Flag& seed) {
    GroupAction group = group_closure({singer_generator(v, q)});
    std::vector<Flag> orbit;
    for (const auto& g : group.elements) {
        std::vector<Subspace> parts;
        for (const auto& p : seed.parts) parts.push_back(apply(g, p));
        orbit.emplace_back(seed.type, std::move(parts));
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    FlagCode code(make_field(q), seed.type);
    code.words = std::move(orbit);
    return code;
}

FlagCode seed_search_singer(std::uint32_t v, std::uint32_t q, std::uint32_t d,
                            const FlagType& type, std::size_t flag_cap) {
    Field F = make_field(q);
    BigInt n = evaluate(count_flags_symbolic(v, type), q);
    if (n > flag_cap) throw TooLarge("flag count exceeds the seed-search cap");
    std::vector<Flag> flags = enumerate_flags(v, F, type);
    GroupAction group = group_closure({singer_generator(v, q)});
    OrbitPartition part = orbits_of_flags(group, flags);

    FlagCode best(F, type);
    for (std::uint32_t oid = 0; oid < part.orbits.size(); ++oid) {
        FlagCode cand(F, type);
        for (auto fi : part.orbits[oid]) cand.words.push_back(flags[fi]);
        auto md = min_distance(cand);
        if (!md.infinite && md.distance < d) continue;
        if (cand.words.size() > best.words.size()) best = std::move(cand);
    }
    return best;
}

RankMetricCode gabidulin_mrd(std::uint32_t m, std::uint32_t n, std::uint32_t d_prime,
                             std::uint32_t q) {
    std::uint32_t nn = std::min(m, n), mm = std::max(m, n);
    if (d_prime < 1 || d_prime > nn) throw InvalidParams("need 1 <= d' <= min(m,n)");
    std::uint32_t kk = nn - d_prime + 1;  // q-degree bound
    Field F = make_field(q);
    ExtField E(F, mm);
    std::uint64_t words = 1;
    for (std::uint32_t i = 0; i < kk; ++i) {
        words *= E.size();
        if (words > (1u << 22)) throw TooLarge("MRD code too large to enumerate");
    }

    // Evaluation points: 1, x, ..., x^{nn-1}.
    std::vector<ExtField::Elt> points;
    for (std::uint32_t i = 0; i < nn; ++i) {
        ExtField::Elt e = E.zero();
        e[i] = 1;
        points.push_back(e);
    }

    RankMetricCode code(F);
    code.m = m;
    code.n = n;
    code.min_rank_distance = d_prime;
    for (std::uint64_t w = 0; w < words; ++w) {
        // Coefficients of the linearized polynomial sum a_j z^{q^j}.
        std::vector<ExtField::Elt> coeff(kk);
        std::uint64_t t = w;
        for (std::uint32_t j = 0; j < kk; ++j) {
            coeff[j] = E.from_index(t % E.size());
            t /= E.size();
        }
        MatrixFq word(F, nn, mm);
        for (std::uint32_t i = 0; i < nn; ++i) {
            ExtField::Elt z = points[i];
            ExtField::Elt acc = E.zero();
            for (std::uint32_t j = 0; j < kk; ++j) {
                acc = E.add(acc, E.mul(coeff[j], z));
                if (j + 1 < kk) z = E.pow_q(z);
            }
            for (std::uint32_t c = 0; c < mm; ++c) word.set(i, c, acc[c]);
        }
        if (m <= n) {
            code.words.push_back(std::move(word));
        } else {
            MatrixFq tr(F, mm, nn);
            for (std::uint32_t i = 0; i < nn; ++i)
                for (std::uint32_t j = 0; j < mm; ++j) tr.set(j, i, word.at(i, j));
            code.words.push_back(std::move(tr));
        }
    }
    return code;
}

Subspace lift(const MatrixFq& m) {
    return lift_at(m, static_cast<std::uint32_t>(m.rows() + m.cols()));
}

namespace {

// Canonical coset decomposition of the full matrix space by a linear code:
// reps[j] indexed in discovery order over the lexicographic matrix scan,
// member i of coset j is reps[j] + code.words[i].
struct CosetIndex {
    std::vector<MatrixFq> reps;
    std::map<std::vector<FieldElement>, std::pair<std::uint32_t, std::uint32_t>> where;
};

CosetIndex coset_partition(const RankMetricCode& code) {
    const Field& F = code.field;
    std::uint32_t cells = code.m * code.n;
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < cells; ++i) {
        total *= F.q();
        if (total > (1u << 24)) throw TooLarge("matrix space too large for coset partition");
    }
    CosetIndex idx;
    for (std::uint64_t t = 0; t < total; ++t) {
        MatrixFq a(F, code.m, code.n);
        std::uint64_t x = t;
        for (std::uint32_t c = 0; c < cells; ++c) {
            a.set(c / code.n, c % code.n, static_cast<FieldElement>(x % F.q()));
            x /= F.q();
        }
        if (idx.where.count(a.data())) continue;
        std::uint32_t j = static_cast<std::uint32_t>(idx.reps.size());
        for (std::uint32_t i = 0; i < code.words.size(); ++i) {
            MatrixFq member(F, code.m, code.n);
            for (std::uint32_t r = 0; r < code.m; ++r)
                for (std::uint32_t cc = 0; cc < code.n; ++cc)
                    member.set(r, cc, F.add(a.at(r, cc), code.words[i].at(r, cc)));
            idx.where.emplace(member.data(), std::make_pair(j, i));
        }
        idx.reps.push_back(std::move(a));
    }
    return idx;
}

MatrixFq coset_member(const CosetIndex& idx, const RankMetricCode& code, std::uint32_t j,
                      std::uint32_t i) {
    const Field& F = code.field;
    MatrixFq out(F, code.m, code.n);
    for (std::uint32_t r = 0; r < code.m; ++r)
        for (std::uint32_t c = 0; c < code.n; ++c)
            out.set(r, c, F.add(idx.reps[j].at(r, c), code.words[i].at(r, c)));
    return out;
}

}  // namespace

CartesianCode cartesian_code_5_2(std::uint32_t q) {
    if (q > 3) throw TooLarge("cartesian_code_5_2 is limited to q <= 3");
    Field F = make_field(q);
    std::uint32_t Q3 = q * q * q;

    RankMetricCode lines_code = gabidulin_mrd(2, 3, 2, q);
    RankMetricCode planes_code = gabidulin_mrd(3, 2, 2, q);
    CosetIndex line_cosets = coset_partition(lines_code);
    CosetIndex plane_cosets = coset_partition(planes_code);

    // Lift every coset member once.
    auto lift_all = [&](const CosetIndex& idx, const RankMetricCode& code) {
        std::vector<std::vector<Subspace>> lifted(Q3);
        for (std::uint32_t j = 0; j < Q3; ++j) {
            lifted[j].reserve(Q3);
            for (std::uint32_t i = 0; i < Q3; ++i)
                lifted[j].push_back(lift_at(coset_member(idx, code, j, i), 5));
        }
        return lifted;
    };
    auto lines = lift_all(line_cosets, lines_code);    // lines[j][i], 2-spaces
    auto planes = lift_all(plane_cosets, planes_code); // planes[j][h], 3-spaces

    CartesianCode code(F, 5, FlagType(5, {2, 3}));
    for (std::uint32_t i = 0; i < Q3; ++i)
        for (std::uint32_t j = 0; j < Q3; ++j)
            for (std::uint32_t h = 0; h < Q3; ++h)
                code.words.push_back({lines[j][i], planes[j][h]});
    return code;
}

CartesianCode cartesian_code_5_3(std::uint32_t q) {
    if (q > 3) throw TooLarge("cartesian_code_5_3 is limited to q <= 3");
    Field F = make_field(q);
    std::uint64_t Q4 = static_cast<std::uint64_t>(q) * q * q * q;
    std::uint64_t total = Q4 * Q4;  // q^8

    CartesianCode mid = cartesian_code_5_2(q);  // q^9 >= q^8 middle pairs

    std::vector<Subspace> points = enumerate_grassmannian(5, 1, F);
    std::vector<Subspace> hyperplanes = enumerate_grassmannian(5, 4, F);

    CartesianCode code(F, 5, FlagType(5, {1, 2, 3, 4}));
    for (std::uint64_t w = 0; w < total; ++w) {
        std::uint64_t i = w / Q4, j = w % Q4;
        code.words.push_back(
            {points[j], mid.words[w][0], mid.words[w][1], hyperplanes[i]});
    }
    return code;
}

MatrixFq fixture_155_generator() {
    Field F = make_field(2);
    MatrixFq g(F, 5, 5);
    const std::uint8_t rows[5][5] = {
        {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}, {1, 0, 1, 1, 1}};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) g.set(i, j, rows[i][j]);
    return g;
}

std::vector<Flag> fixture_155_representatives() {
    Field F = make_field(2);
    FlagType type = FlagType::full(5);
    auto sub = [&](std::initializer_list<const char*> rows) {
        std::vector<std::vector<FieldElement>> rr;
        for (const char* r : rows) {
            std::vector<FieldElement> row;
            for (const char* p = r; *p; ++p) row.push_back(*p - '0');
            rr.push_back(std::move(row));
        }
        return rref_rows(F, 5, std::move(rr));
    };
    std::vector<Flag> reps;
    reps.emplace_back(type, std::vector<Subspace>{
        sub({"00001"}), sub({"00010", "00001"}), sub({"11000", "00010", "00001"}),
        sub({"11000", "00100", "00010", "00001"})});
    reps.emplace_back(type, std::vector<Subspace>{
        sub({"00001"}), sub({"00100", "00001"}), sub({"10010", "00100", "00001"}),
        sub({"10000", "00100", "00010", "00001"})});
    reps.emplace_back(type, std::vector<Subspace>{
        sub({"00001"}), sub({"01010", "00001"}), sub({"10100", "01010", "00001"}),
        sub({"10000", "01010", "00100", "00001"})});
    reps.emplace_back(type, std::vector<Subspace>{
        sub({"00001"}), sub({"01110", "00001"}), sub({"01000", "00110", "00001"}),
        sub({"01000", "00100", "00010", "00001"})});
    reps.emplace_back(type, std::vector<Subspace>{
        sub({"00001"}), sub({"10000", "00001"}), sub({"10000", "01100", "00001"}),
        sub({"10000", "01000", "00100", "00001"})});
    return reps;
}

FlagCode fixture_155() {
    Field F = make_field(2);
    GroupAction group = group_closure({fixture_155_generator()});
    FlagCode code(F, FlagType::full(5));
    for (const Flag& rep : fixture_155_representatives()) {
        std::vector<Flag> orbit;
        for (const auto& g : group.elements) {
            std::vector<Subspace> parts;
            for (const auto& p : rep.parts) parts.push_back(apply(g, p));
            orbit.emplace_back(rep.type, std::move(parts));
        }
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        code.words.insert(code.words.end(), orbit.begin(), orbit.end());
    }
    std::sort(code.words.begin(), code.words.end());
    return code;
}

}  // namespace flagcodes
