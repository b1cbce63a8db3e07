#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "flagcodes/linalg.hpp"

namespace flagcodes {

/// Type of a flag: the strictly increasing set of occurring dimensions.
struct FlagType {
    std::uint32_t ambient = 0;
    std::vector<std::uint32_t> dims;

    FlagType() = default;
    FlagType(std::uint32_t v, std::vector<std::uint32_t> ks);
    static FlagType full(std::uint32_t v);

    bool is_full() const { return dims.size() == ambient - 1; }
    std::size_t size() const { return dims.size(); }
    /// {v - t : t in T}, ascending.
    FlagType dual_type() const;

    bool operator==(const FlagType& o) const { return ambient == o.ambient && dims == o.dims; }
    bool operator!=(const FlagType& o) const { return !(*this == o); }
};

/// A strictly nested chain of canonical subspaces matching a FlagType.
struct Flag {
    FlagType type;
    std::vector<Subspace> parts;

    Flag() = default;
    Flag(FlagType t, std::vector<Subspace> p);

    bool operator==(const Flag& o) const { return parts == o.parts; }
    bool operator!=(const Flag& o) const { return !(*this == o); }
    bool operator<(const Flag& o) const { return parts < o.parts; }
};

/// Duplicate-free list of flags sharing one field and type.
struct FlagCode {
    Field field;
    FlagType type;
    std::vector<Flag> words;

    explicit FlagCode(Field f, FlagType t) : field(f), type(std::move(t)) {}
};

/// Componentwise maximal injection distances (min(k_i, v-k_i)).
std::vector<std::uint32_t> m_vector(std::uint32_t v, const FlagType& type);

std::size_t grassmann_distance(const Flag& a, const Flag& b);

void for_each_flag(std::uint32_t v, const Field& field, const FlagType& type,
                   const std::function<void(const Flag&)>& fn);
std::vector<Flag> enumerate_flags(std::uint32_t v, const Field& field, const FlagType& type);

Flag dual_flag(const Flag& a);

struct MinDistanceResult {
    bool infinite = false;  // fewer than two words
    std::size_t distance = 0;
    std::size_t witness_i = 0, witness_j = 0;  // lexicographically least attaining pair
};

/// Exact pairwise minimum; fans the O(n^2) sweep out to threads for large codes,
/// with a schedule-independent result.
MinDistanceResult min_distance(const FlagCode& code);

/// Same sweep over tuples that need not be nested (Cartesian-product codes).
MinDistanceResult min_distance_tuples(const std::vector<std::vector<Subspace>>& words);

}  // namespace flagcodes
