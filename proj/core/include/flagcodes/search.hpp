#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "flagcodes/bounds.hpp"
#include "flagcodes/flags.hpp"
#include "flagcodes/reduction.hpp"

namespace flagcodes {

/// Flags as vertices, edges between pairs at Grassmann distance < d.
struct ConflictGraph {
    std::uint32_t v = 0, d = 0, q = 0;
    FlagType type;
    std::vector<Flag> vertices;                   // enumeration order
    std::vector<std::vector<std::uint32_t>> adj;  // sorted neighbor lists

    bool has_edge(std::uint32_t a, std::uint32_t b) const;
    std::size_t edge_count() const;
};

ConflictGraph build_conflict_graph(std::uint32_t v, std::uint32_t q, std::uint32_t d,
                                   const FlagType& type, std::size_t vertex_cap = 20'000);

/// The cliques prescribed by one reduction vector: each clique is the set of
/// flags whose layers contain a fixed weakly increasing tuple.
struct CliqueFamily {
    ClosedReductionVector r;
    // Clique keys (the prescribed tuples) and their member flag indices.
    std::vector<std::vector<Subspace>> tuples;
    std::vector<std::vector<std::uint32_t>> members;
};

CliqueFamily generate_clique_family(std::uint32_t v, std::uint32_t q, std::uint32_t d,
                                    const FlagType& type, const ReductionVector& r,
                                    const std::vector<Flag>& flags);

/// A finite matrix group, closed under products and inverses.
struct GroupAction {
    Field field;
    std::uint32_t ambient = 0;
    std::vector<MatrixFq> elements;  // includes the identity

    std::size_t order() const { return elements.size(); }
};

GroupAction group_closure(const std::vector<MatrixFq>& generators, std::size_t cap = 1'000'000);

/// Companion matrix of the deterministically chosen primitive polynomial of
/// degree v over F_q; generates a Singer cycle.
MatrixFq singer_generator(std::uint32_t v, std::uint32_t q);

/// Orbit partition of items under a group, representatives least in input order.
struct OrbitPartition {
    std::vector<std::uint32_t> orbit_of;               // item index -> orbit id
    std::vector<std::vector<std::uint32_t>> orbits;    // orbit id -> sorted item indices
    std::vector<std::uint32_t> representatives;        // orbit id -> least item index
};

OrbitPartition orbits_of_flags(const GroupAction& group, const std::vector<Flag>& flags);
OrbitPartition orbits_of_subspaces(const GroupAction& group, const std::vector<Subspace>& items);

/// Generic set-packing instance: maximize sum of weights over selected columns
/// subject to (sum over a row of selected entries) <= 1.
struct PackingProblem {
    std::size_t columns = 0;
    std::vector<BigInt> weights;                       // per column
    std::vector<std::vector<std::uint32_t>> row_cols;  // row -> sorted columns with entry >= 1
    std::vector<std::uint32_t> forced_zero;            // columns with some entry >= 2
};

/// Orbit-reduced constraint system M^G x <= 1 with orbit bookkeeping.
struct KramerMesnerSystem {
    std::uint32_t v = 0, d = 0, q = 0;
    FlagType type;
    std::vector<Flag> flags;  // global enumeration
    OrbitPartition flag_orbits;
    // Row orbits: one representative clique per orbit with its entry counts.
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> rows;  // (col, multiplicity)
    std::size_t row_count() const { return rows.size(); }
    std::size_t column_count() const { return flag_orbits.orbits.size(); }

    PackingProblem packing() const;
    std::string to_json() const;
};

KramerMesnerSystem kramer_mesner(const GroupAction& group, std::uint32_t v, std::uint32_t q,
                                 std::uint32_t d, const FlagType& type);
/// The identity-group case: one column per flag, one row per clique.
KramerMesnerSystem unreduced_system(std::uint32_t v, std::uint32_t q, std::uint32_t d,
                                    const FlagType& type);

enum class SolveStatus { optimal, feasible_aborted, infeasible };

struct SolveBudget {
    std::uint64_t node_limit = 50'000'000;
    double time_limit_seconds = 0;  // 0 = unlimited
    /// Proven external upper bound; the search stops as optimal on reaching it.
    std::optional<BigInt> upper_bound;
};

struct SolveReport {
    SolveStatus status = SolveStatus::infeasible;
    BigInt best_value;
    std::vector<std::uint32_t> best_columns;
    BigInt upper_bound_reached;
    std::uint64_t nodes_explored = 0;
    double wall_time_seconds = 0;
};

/// Deterministic branch-and-bound maximization with a greedy row-cover bound.
SolveReport solve_packing(const PackingProblem& problem, const SolveBudget& budget);

/// Solve a Kramer-Mesner (or unreduced) system and verify the expanded code.
SolveReport solve(const KramerMesnerSystem& system, const SolveBudget& budget);

FlagCode expand_solution(const KramerMesnerSystem& system,
                         const std::vector<std::uint32_t>& selected_columns);

/// LP-format export of a constraint system; deterministic text.
void export_ilp(const KramerMesnerSystem& system, std::ostream& out);
void export_ilp_file(const KramerMesnerSystem& system, const std::string& path);

/// Minimal parser for the LP subset written by export_ilp (round-trip checks).
struct LpModel {
    std::vector<std::string> variables;
    std::vector<BigInt> objective;
    std::vector<std::vector<std::pair<std::uint32_t, BigInt>>> rows;  // var index, coefficient
};
LpModel parse_lp(std::istream& in);

}  // namespace flagcodes
