#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flagcodes/qcombin.hpp"
#include "flagcodes/reduction.hpp"

namespace flagcodes {

enum class BoundKind {
    anticode,
    johnson,
    cdc,
    sphere_packing,
    sphere_covering,
    exact,
    construction,
};

std::string to_string(BoundKind k);

/// One evaluated bound: the floor-evaluated integer value at a concrete q,
/// the symbolic rational when the method is parametric, and enough provenance
/// to recompute the cell.
struct BoundResult {
    BoundKind kind = BoundKind::exact;
    std::optional<QRational> symbolic;
    BigInt value;
    bool exact = false;  // known to be attained
    std::string provenance;
    std::optional<ReductionVector> r;
};

/// Upper bound from the weakly-increasing prescription family of r; symbolic.
/// Requires d > closed deficit of r and a nonempty family.
QRational anticode_bound_symbolic(std::uint32_t v, std::uint32_t d, const FlagType& type,
                                  const ReductionVector& r);
BoundResult anticode_bound(std::uint32_t v, std::uint32_t d, const FlagType& type,
                           const ReductionVector& r, std::uint32_t q);

/// Minimum anticode bound over compute_R(v,d,T), empty families skipped.
BoundResult best_anticode_bound(std::uint32_t v, std::uint32_t d, const FlagType& type,
                                std::uint32_t q);

/// Point-shadow recursion [v 1]/[k_1 1] * A(v-1, d, T-1); full type reduces to
/// [v 1] * A(v-1, d).
BoundResult johnson_bound(std::uint32_t v, std::uint32_t d, std::uint32_t q);
BoundResult johnson_bound_typed(std::uint32_t v, std::uint32_t d, const FlagType& type,
                                std::uint32_t q);

/// Constant-dimension-code value A_q^i(v,d;k): exact where a cited formula or
/// value applies, otherwise the best of the CDC anticode and Johnson bounds.
struct CdcValue {
    BigInt value;
    bool exact = false;
    std::optional<QPolynomial> symbolic;
    std::string source;
};
CdcValue cdc_value(std::uint32_t v, std::uint32_t d, std::uint32_t k, std::uint32_t q);

/// A_q^f(v, d_max - delta) <= A_q^i(v,k;k) with k = floor(v/2) - delta,
/// 0 <= delta < floor(v/2); NotApplicable outside that range.
BoundResult cdc_bound(std::uint32_t v, std::uint32_t d, std::uint32_t q);
/// General single-layer form: best A_q^f(v,d;T) <= A_q^i(v, m_t - a + 1; t)
/// over admissible r = a*e_t.
BoundResult cdc_bound_typed(std::uint32_t v, std::uint32_t d, const FlagType& type, std::uint32_t q);

/// Exponent of the leading term of the general parametric upper bound.
std::uint32_t beta_exponent(std::uint32_t v, std::uint32_t d);

/// Brute-force ball cardinality; center-independent by transitivity.
std::uint64_t ball_size(std::uint32_t v, std::uint32_t q, const FlagType& type, std::uint32_t radius,
                        const Flag& center, std::uint64_t work_cap = 10'000'000);
std::uint64_t ball_size(std::uint32_t v, std::uint32_t q, const FlagType& type, std::uint32_t radius,
                        std::uint64_t work_cap = 10'000'000);

BigInt sphere_packing_bound(std::uint32_t v, std::uint32_t d, std::uint32_t q, const FlagType& type,
                            std::uint64_t work_cap = 10'000'000);
BigInt sphere_covering_bound(std::uint32_t v, std::uint32_t d, std::uint32_t q, const FlagType& type,
                             std::uint64_t work_cap = 10'000'000);

/// Minimum over the exact registry, anticode, Johnson and CDC routes; memoized.
BoundResult best_upper_bound(std::uint32_t v, std::uint32_t d, std::uint32_t q);
BoundResult best_upper_bound_typed(std::uint32_t v, std::uint32_t d, const FlagType& type,
                                   std::uint32_t q);

/// Exact parametric value when one of the known families applies.
std::optional<BoundResult> exact_value(std::uint32_t v, std::uint32_t d, std::uint32_t q);

/// Best built-in lower bound (d=1 count and the construction families).
std::optional<BigInt> construction_lower_bound(std::uint32_t v, std::uint32_t d, std::uint32_t q);

struct TableCell {
    std::uint32_t v = 0, d = 0;
    BoundResult upper;
    std::optional<BigInt> lower;
};

struct BoundsTable {
    std::uint32_t q = 0;
    std::vector<TableCell> cells;  // row-major: v ascending, d ascending
};

/// Extra lower bounds fed into table cells, e.g. parsed from a results cache.
struct KnownValue {
    std::uint32_t v, d, q;
    std::vector<std::uint32_t> type;  // empty = full
    BigInt size;
    std::string source;
};

BoundsTable bounds_table(std::uint32_t v_min, std::uint32_t v_max, std::uint32_t q,
                         const std::vector<KnownValue>& cache = {});

/// Modified anticode bound for Cartesian-product codes: raw r (no closure) and
/// independent, not chained, prescription tuples.
QRational cartesian_anticode_bound_symbolic(std::uint32_t v, std::uint32_t d, const FlagType& type,
                                            const ReductionVector& r);
BoundResult cartesian_anticode_bound(std::uint32_t v, std::uint32_t d, const FlagType& type,
                                     const ReductionVector& r, std::uint32_t q);

}  // namespace flagcodes
