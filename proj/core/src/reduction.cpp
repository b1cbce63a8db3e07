#include "flagcodes/reduction.hpp"

#include <algorithm>

#include "flagcodes/errors.hpp"

namespace flagcodes {

ReductionVector::ReductionVector(std::uint32_t v, FlagType t, std::vector<std::uint32_t> r)
    : ambient(v), type(std::move(t)), entries(std::move(r)) {
    if (entries.size() != type.dims.size()) throw ShapeMismatch("reduction vector length mismatch");
    auto m = m_vector(ambient, type);
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i] > m[i]) throw InvalidRange("reduction vector exceeds m(v,T)");
}

ClosedReductionVector closure(const ReductionVector& r) {
    const auto& dims = r.type.dims;
    std::int64_t v = r.ambient;
    std::size_t n = dims.size();
    auto m = m_vector(r.ambient, r.type);

    std::vector<std::int64_t> u(n);
    for (std::size_t i = 0; i < n; ++i)
        u[i] = std::max<std::int64_t>(2 * static_cast<std::int64_t>(dims[i]) - v, 0) + r.entries[i];

    std::vector<std::uint32_t> rbar(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::int64_t t = dims[j];
        std::int64_t ubar = std::max<std::int64_t>(2 * t - v, 0);
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t s = dims[i];
            std::int64_t cand = (s <= t) ? u[i] : u[i] - 2 * (s - t);
            ubar = std::max(ubar, cand);
        }
        rbar[j] = static_cast<std::uint32_t>(ubar - t + m[j]);
    }
    return ClosedReductionVector{r, std::move(rbar)};
}

bool preceq(const ReductionVector& a, const ReductionVector& b) {
    if (a.ambient != b.ambient || a.type != b.type)
        throw ShapeMismatch("reduction vectors with different shapes");
    auto ca = closure(a).closed;
    auto cb = closure(b).closed;
    bool le = true, strict = false;
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] > cb[i]) le = false;
        if (ca[i] < cb[i]) strict = true;
    }
    if (le && strict) return true;
    if (ca == cb) {
        for (std::size_t i = 0; i < a.entries.size(); ++i)
            if (a.entries[i] > b.entries[i]) return false;
        return true;
    }
    return false;
}

std::uint32_t closed_deficit(const ReductionVector& r) {
    auto m = m_vector(r.ambient, r.type);
    auto c = closure(r).closed;
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) s += m[i] - c[i];
    return s;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> support_dims(const ReductionVector& r) {
    auto m = m_vector(r.ambient, r.type);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::size_t i = 0; i < r.entries.size(); ++i) {
        if (r.entries[i] == 0) continue;
        out.emplace_back(r.type.dims[i], r.type.dims[i] - m[i] + r.entries[i]);
    }
    return out;
}

bool family_nonempty(const ReductionVector& r) {
    auto sd = support_dims(r);
    for (std::size_t i = 1; i < sd.size(); ++i)
        if (sd[i].second < sd[i - 1].second) return false;
    return true;
}

std::vector<ReductionVector> compute_R(std::uint32_t v, std::uint32_t d, const FlagType& type) {
    auto m = m_vector(v, type);
    std::uint32_t total = 0;
    for (auto x : m) total += x;
    if (d < 1 || d > total) throw InvalidDistance("distance outside 1..sum m(v,T)");

    std::vector<ReductionVector> satisfying;
    std::vector<std::uint32_t> r(m.size(), 0);
    while (true) {
        ReductionVector rv(v, type, r);
        if (closed_deficit(rv) < d) satisfying.push_back(std::move(rv));
        std::size_t i = 0;
        while (i < r.size()) {
            if (r[i] < m[i]) {
                ++r[i];
                break;
            }
            r[i] = 0;
            ++i;
        }
        if (i == r.size()) break;
    }

    std::vector<std::vector<std::uint32_t>> closures;
    closures.reserve(satisfying.size());
    for (const auto& rv : satisfying) closures.push_back(closure(rv).closed);

    auto precedes = [&](std::size_t x, std::size_t y) {
        const auto& cx = closures[x];
        const auto& cy = closures[y];
        bool le = true, strict = false;
        for (std::size_t i = 0; i < cx.size(); ++i) {
            if (cx[i] > cy[i]) le = false;
            if (cx[i] < cy[i]) strict = true;
        }
        if (le && strict) return true;
        if (!strict && le) {  // closures equal
            for (std::size_t i = 0; i < cx.size(); ++i)
                if (satisfying[x].entries[i] > satisfying[y].entries[i]) return false;
            return true;
        }
        return false;
    };

    std::vector<ReductionVector> minimal;
    for (std::size_t a = 0; a < satisfying.size(); ++a) {
        bool dominated = false;
        for (std::size_t b = 0; b < satisfying.size() && !dominated; ++b) {
            if (a == b) continue;
            if (precedes(b, a)) dominated = true;
        }
        if (!dominated) minimal.push_back(satisfying[a]);
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

}  // namespace flagcodes
