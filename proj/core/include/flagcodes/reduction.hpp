#pragma once

#include <cstdint>
#include <vector>

#include "flagcodes/flags.hpp"

namespace flagcodes {

/// Integer vector 0 <= r <= m(v,T) indexed by the type's dimensions. Entry r_t
/// prescribes how much of the maximal injection distance is given up at layer t.
struct ReductionVector {
    std::uint32_t ambient = 0;
    FlagType type;
    std::vector<std::uint32_t> entries;

    ReductionVector() = default;
    ReductionVector(std::uint32_t v, FlagType t, std::vector<std::uint32_t> r);

    bool operator==(const ReductionVector& o) const { return entries == o.entries; }
    bool operator<(const ReductionVector& o) const { return entries < o.entries; }
};

/// r with its closure attached; closure(closure) = closure.
struct ClosedReductionVector {
    ReductionVector raw;
    std::vector<std::uint32_t> closed;
};

/// Intersection-propagation closure: u_t = max{2t-v,0} + r_t on t in T,
/// u-bar_t = max({u_s : s <= t} + {u_s - 2(s-t) : s > t}) over s in T, floored
/// at max{2t-v,0}, and r-bar_t = u-bar_t - t + m(v,T)_t.
ClosedReductionVector closure(const ReductionVector& r);

/// a precedes b when closure(a) < closure(b) componentwise with some strict
/// coordinate, or the closures agree and a <= b componentwise.
bool preceq(const ReductionVector& a, const ReductionVector& b);

/// The preceq-minimal vectors among those whose closed distance deficit is
/// below d, sorted lexicographically.
std::vector<ReductionVector> compute_R(std::uint32_t v, std::uint32_t d, const FlagType& type);

/// Sum_t (m(v,T)_t - closure(r)_t): the guaranteed Grassmann-distance loss.
std::uint32_t closed_deficit(const ReductionVector& r);

/// Dims u_t = t - m_t + r_t at the support of r; weakly increasing exactly when
/// the clique family of r is nonempty.
std::vector<std::pair<std::uint32_t, std::uint32_t>> support_dims(const ReductionVector& r);
bool family_nonempty(const ReductionVector& r);

}  // namespace flagcodes
