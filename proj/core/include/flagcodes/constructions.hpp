#pragma once

#include <cstdint>
#include <vector>

#include "flagcodes/flags.hpp"
#include "flagcodes/search.hpp"

namespace flagcodes {

/// Rank-metric code: words are m x n matrices, distance rank(A - B).
struct RankMetricCode {
    std::uint32_t m = 0, n = 0;
    Field field;
    std::vector<MatrixFq> words;
    std::uint32_t min_rank_distance = 0;

    explicit RankMetricCode(Field f) : field(f) {}
};

/// Codewords are tuples of subspaces of prescribed dimensions, no nesting.
struct CartesianCode {
    Field field;
    std::uint32_t v = 0;
    FlagType type;
    std::vector<std::vector<Subspace>> words;

    CartesianCode(Field f, std::uint32_t amb, FlagType t)
        : field(f), v(amb), type(std::move(t)) {}
};

std::size_t rank_distance(const MatrixFq& a, const MatrixFq& b);

/// Full-flag code in F_q^{2k} built on the field-reduction k-spread; size
/// q^k + 1, minimum Grassmann distance k^2.
FlagCode spread_code(std::uint32_t k, std::uint32_t q);

/// Full-flag code in F_q^{2k+1} of size q^{k+1} + 1 and distance k^2 + k,
/// built on a lifted MRD partial spread (k >= 2).
FlagCode partial_spread_flag_code(std::uint32_t k, std::uint32_t q);

/// Orbit of a seed flag under the projective Singer group of F_q^v.
FlagCode singer_orbit_code(std::uint32_t v, std::uint32_t q, const Flag& seed);

/// Largest Singer orbit code with min distance >= d, trying one seed per orbit.
FlagCode seed_search_singer(std::uint32_t v, std::uint32_t q, std::uint32_t d,
                            const FlagType& type, std::size_t flag_cap = 20'000);

/// Linear MRD code from linearized polynomials of q-degree < min(m,n)-d'+1
/// evaluated over F_{q^max(m,n)}.
RankMetricCode gabidulin_mrd(std::uint32_t m, std::uint32_t n, std::uint32_t d_prime,
                             std::uint32_t q);

/// Row space of (I | M), an m-space of F_q^{m+n}.
Subspace lift(const MatrixFq& m);

/// q^9 words of type {2,3} in F_q^5 with Grassmann distance >= 2 (coset-indexed
/// lifted MRD lines and planes).
CartesianCode cartesian_code_5_2(std::uint32_t q);

/// q^8 words of full type in F_q^5 with Grassmann distance >= 3.
CartesianCode cartesian_code_5_3(std::uint32_t q);

/// The 155-flag binary code in F_2^5 with distance 4: five orbits of length 31
/// under the printed Singer generator.
FlagCode fixture_155();
/// Its generator (last row 1,0,1,1,1) and the five orbit representatives.
MatrixFq fixture_155_generator();
std::vector<Flag> fixture_155_representatives();

}  // namespace flagcodes
