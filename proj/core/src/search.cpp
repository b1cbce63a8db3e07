#include "flagcodes/search.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace flagcodes {

bool ConflictGraph::has_edge(std::uint32_t a, std::uint32_t b) const {
    const auto& n = adj[a];
    return std::binary_search(n.begin(), n.end(), b);
}

std::size_t ConflictGraph::edge_count() const {
    std::size_t s = 0;
    for (const auto& n : adj) s += n.size();
    return s / 2;
}

ConflictGraph build_conflict_graph(std::uint32_t v, std::uint32_t q, std::uint32_t d,
                                   const FlagType& type, std::size_t vertex_cap) {
    BigInt n = evaluate(count_flags_symbolic(v, type), q);
    if (n > vertex_cap) throw TooLarge("flag count exceeds the conflict-graph vertex cap");
    ConflictGraph g;
    g.v = v;
    g.d = d;
    g.q = q;
    g.type = type;
    Field F = make_field(q);
    g.vertices = enumerate_flags(v, F, type);
    g.adj.resize(g.vertices.size());
    for (std::uint32_t i = 0; i < g.vertices.size(); ++i) {
        for (std::uint32_t j = i + 1; j < g.vertices.size(); ++j) {
            if (grassmann_distance(g.vertices[i], g.vertices[j]) < d) {
                g.adj[i].push_back(j);
                g.adj[j].push_back(i);
            }
        }
    }
    return g;
}

CliqueFamily generate_clique_family(std::uint32_t v, std::uint32_t q, std::uint32_t d,
                                    const FlagType& type, const ReductionVector& r,
                                    const std::vector<Flag>& flags) {
    if (d <= closed_deficit(r))
        throw DistanceConditionViolated("d must exceed the closed distance deficit of r");
    CliqueFamily fam;
    fam.r = closure(r);
    if (!family_nonempty(r)) return fam;

    auto sd = support_dims(r);
    std::vector<std::size_t> layer_index;  // position of each support dim in the type
    for (auto [k, u] : sd) {
        (void)u;
        layer_index.push_back(
            std::find(type.dims.begin(), type.dims.end(), k) - type.dims.begin());
    }

    Field F = make_field(q);
    std::map<std::vector<Subspace>, std::uint32_t> ids;
    Subspace zero(F, v);

    for (std::uint32_t fi = 0; fi < flags.size(); ++fi) {
        const Flag& flag = flags[fi];
        std::vector<Subspace> tuple;
        std::function<void(std::size_t)> rec = [&](std::size_t level) {
            if (level == sd.size()) {
                auto it = ids.find(tuple);
                std::uint32_t id;
                if (it == ids.end()) {
                    id = static_cast<std::uint32_t>(fam.tuples.size());
                    ids.emplace(tuple, id);
                    fam.tuples.push_back(tuple);
                    fam.members.emplace_back();
                } else {
                    id = it->second;
                }
                fam.members[id].push_back(fi);
                return;
            }
            const Subspace& lo = level ? tuple.back() : zero;
            const Subspace& hi = flag.parts[layer_index[level]];
            for_each_between(lo, &hi, sd[level].second, [&](const Subspace& s) {
                tuple.push_back(s);
                rec(level + 1);
                tuple.pop_back();
            });
        };
        rec(0);
    }
    return fam;
}

GroupAction group_closure(const std::vector<MatrixFq>& generators, std::size_t cap) {
    if (generators.empty()) throw InvalidParams("group needs at least one generator");
    Field F = generators.front().field();
    std::uint32_t v = static_cast<std::uint32_t>(generators.front().rows());
    for (const auto& g : generators) {
        if (g.rows() != v || g.cols() != v) throw ShapeMismatch("generators must be square, equal size");
        if (!g.invertible()) throw SingularMatrix("generator is singular");
    }
    GroupAction action{F, v, {}};
    std::map<std::vector<FieldElement>, std::uint32_t> seen;
    std::vector<MatrixFq> queue;
    MatrixFq id = MatrixFq::identity(F, v);
    seen.emplace(id.data(), 0);
    action.elements.push_back(id);
    queue.push_back(id);
    while (!queue.empty()) {
        MatrixFq m = queue.back();
        queue.pop_back();
        for (const auto& g : generators) {
            MatrixFq prod = m * g;
            if (seen.count(prod.data())) continue;
            if (action.elements.size() >= cap) throw TooLarge("group closure exceeds cap");
            seen.emplace(prod.data(), static_cast<std::uint32_t>(action.elements.size()));
            action.elements.push_back(prod);
            queue.push_back(prod);
        }
    }
    return action;
}

MatrixFq singer_generator(std::uint32_t v, std::uint32_t q) {
    Field F = make_field(q);
    std::vector<FieldElement> c = primitive_polynomial(F, v);
    MatrixFq m(F, v, v);
    for (std::uint32_t i = 0; i + 1 < v; ++i) m.set(i, i + 1, 1);
    for (std::uint32_t j = 0; j < v; ++j) m.set(v - 1, j, F.neg(c[j]));
    return m;
}

namespace {

template <typename Item>
OrbitPartition orbit_partition(const GroupAction& group, const std::vector<Item>& items,
                               const std::function<Item(const MatrixFq&, const Item&)>& act) {
    std::map<Item, std::uint32_t> index;
    for (std::uint32_t i = 0; i < items.size(); ++i) index.emplace(items[i], i);
    OrbitPartition part;
    part.orbit_of.assign(items.size(), UINT32_MAX);
    for (std::uint32_t i = 0; i < items.size(); ++i) {
        if (part.orbit_of[i] != UINT32_MAX) continue;
        std::uint32_t oid = static_cast<std::uint32_t>(part.orbits.size());
        std::vector<std::uint32_t> members;
        for (const auto& g : group.elements) {
            Item moved = act(g, items[i]);
            auto it = index.find(moved);
            if (it == index.end()) throw InvalidParams("item set is not closed under the group");
            if (part.orbit_of[it->second] == UINT32_MAX) {
                part.orbit_of[it->second] = oid;
                members.push_back(it->second);
            }
        }
        std::sort(members.begin(), members.end());
        part.representatives.push_back(members.front());
        part.orbits.push_back(std::move(members));
    }
    return part;
}

Flag apply_flag(const MatrixFq& g, const Flag& f) {
    std::vector<Subspace> parts;
    parts.reserve(f.parts.size());
    for (const auto& part : f.parts) parts.push_back(apply(g, part));
    return Flag(f.type, std::move(parts));
}

}  // namespace

OrbitPartition orbits_of_flags(const GroupAction& group, const std::vector<Flag>& flags) {
    return orbit_partition<Flag>(group, flags, [](const MatrixFq& g, const Flag& f) {
        return apply_flag(g, f);
    });
}

OrbitPartition orbits_of_subspaces(const GroupAction& group, const std::vector<Subspace>& items) {
    return orbit_partition<Subspace>(group, items, [](const MatrixFq& g, const Subspace& s) {
        return apply(g, s);
    });
}

namespace {

std::vector<CliqueFamily> all_families(std::uint32_t v, std::uint32_t q, std::uint32_t d,
                                       const FlagType& type, const std::vector<Flag>& flags) {
    std::vector<CliqueFamily> fams;
    std::uint32_t dmax = 0;
    for (auto m : m_vector(v, type)) dmax += m;
    if (d > dmax) return fams;
    for (const auto& r : compute_R(v, d, type)) {
        if (!family_nonempty(r)) continue;
        fams.push_back(generate_clique_family(v, q, d, type, r, flags));
    }
    return fams;
}

}  // namespace

KramerMesnerSystem kramer_mesner(const GroupAction& group, std::uint32_t v, std::uint32_t q,
                                 std::uint32_t d, const FlagType& type) {
    KramerMesnerSystem sys;
    sys.v = v;
    sys.d = d;
    sys.q = q;
    sys.type = type;
    Field F = make_field(q);
    sys.flags = enumerate_flags(v, F, type);
    sys.flag_orbits = orbits_of_flags(group, sys.flags);

    std::set<std::vector<std::pair<std::uint32_t, std::uint32_t>>> seen;
    for (const auto& fam : all_families(v, q, d, type, sys.flags)) {
        OrbitPartition tuple_orbits = orbit_partition<std::vector<Subspace>>(
            group, fam.tuples, [](const MatrixFq& g, const std::vector<Subspace>& t) {
                std::vector<Subspace> moved;
                moved.reserve(t.size());
                for (const auto& s : t) moved.push_back(apply(g, s));
                return moved;
            });
        for (std::uint32_t oid = 0; oid < tuple_orbits.orbits.size(); ++oid) {
            std::uint32_t rep = tuple_orbits.representatives[oid];
            std::map<std::uint32_t, std::uint32_t> counts;
            for (std::uint32_t fi : fam.members[rep]) ++counts[sys.flag_orbits.orbit_of[fi]];
            std::vector<std::pair<std::uint32_t, std::uint32_t>> row(counts.begin(), counts.end());
            // Clique orbits from different prescriptions can reduce to the same
            // row; only distinct rows stay.
            if (seen.insert(row).second) sys.rows.push_back(std::move(row));
        }
    }
    return sys;
}

KramerMesnerSystem unreduced_system(std::uint32_t v, std::uint32_t q, std::uint32_t d,
                                    const FlagType& type) {
    KramerMesnerSystem sys;
    sys.v = v;
    sys.d = d;
    sys.q = q;
    sys.type = type;
    Field F = make_field(q);
    sys.flags = enumerate_flags(v, F, type);
    sys.flag_orbits.orbit_of.resize(sys.flags.size());
    for (std::uint32_t i = 0; i < sys.flags.size(); ++i) {
        sys.flag_orbits.orbit_of[i] = i;
        sys.flag_orbits.orbits.push_back({i});
        sys.flag_orbits.representatives.push_back(i);
    }
    for (const auto& fam : all_families(v, q, d, type, sys.flags)) {
        for (const auto& members : fam.members) {
            std::vector<std::pair<std::uint32_t, std::uint32_t>> row;
            row.reserve(members.size());
            for (std::uint32_t fi : members) row.emplace_back(fi, 1);
            sys.rows.push_back(std::move(row));
        }
    }
    return sys;
}

PackingProblem KramerMesnerSystem::packing() const {
    PackingProblem p;
    p.columns = column_count();
    p.weights.reserve(p.columns);
    for (const auto& orbit : flag_orbits.orbits) p.weights.emplace_back(orbit.size());
    std::vector<char> forced(p.columns, 0);
    for (const auto& row : rows) {
        std::vector<std::uint32_t> cols;
        cols.reserve(row.size());
        for (auto [col, mult] : row) {
            cols.push_back(col);
            if (mult > 1) forced[col] = 1;
        }
        std::sort(cols.begin(), cols.end());
        p.row_cols.push_back(std::move(cols));
    }
    for (std::uint32_t c = 0; c < p.columns; ++c)
        if (forced[c]) p.forced_zero.push_back(c);
    return p;
}

std::string KramerMesnerSystem::to_json() const {
    std::ostringstream os;
    os << "{\n  \"v\": " << v << ", \"d\": " << d << ", \"q\": " << q << ",\n  \"type\": [";
    for (std::size_t i = 0; i < type.dims.size(); ++i) os << (i ? "," : "") << type.dims[i];
    os << "],\n  \"orbit_lengths\": [";
    for (std::size_t i = 0; i < flag_orbits.orbits.size(); ++i)
        os << (i ? "," : "") << flag_orbits.orbits[i].size();
    os << "],\n  \"orbit_representatives\": [";
    for (std::size_t i = 0; i < flag_orbits.representatives.size(); ++i)
        os << (i ? "," : "") << flag_orbits.representatives[i];
    os << "],\n  \"rows\": [";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        os << (i ? ",\n    " : "\n    ") << "[";
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            os << (j ? "," : "") << "[" << rows[i][j].first << "," << rows[i][j].second << "]";
        }
        os << "]";
    }
    os << "\n  ]\n}\n";
    return os.str();
}

namespace {

struct Bitset {
    std::vector<std::uint64_t> w;
    explicit Bitset(std::size_t n = 0) : w((n + 63) / 64, 0) {}
    bool test(std::uint32_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(std::uint32_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::uint32_t i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
};

struct PackingSolver {
    const PackingProblem& p;
    const SolveBudget& budget;
    std::vector<std::vector<std::uint32_t>> col_rows;  // column -> rows containing it
    SolveReport report;
    std::vector<std::uint32_t> chosen;
    std::chrono::steady_clock::time_point t0;
    bool aborted = false;
    bool done = false;          // best incumbent meets the proven ceiling
    BigInt proven_ceiling = 0;  // certified upper bound on the optimum
    BigInt target = 0;          // 0 = classic mode; else prune below target

    PackingSolver(const PackingProblem& prob, const SolveBudget& b) : p(prob), budget(b) {
        col_rows.resize(p.columns);
        for (std::uint32_t r = 0; r < p.row_cols.size(); ++r)
            for (auto c : p.row_cols[r]) col_rows[c].push_back(r);
    }

    bool out_of_budget() {
        if (budget.node_limit && report.nodes_explored >= budget.node_limit) return true;
        if (budget.time_limit_seconds > 0 && (report.nodes_explored & 1023) == 0) {
            double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (s > budget.time_limit_seconds) return true;
        }
        return false;
    }

    // Greedy row cover upper bound for the candidate set; rows in static order.
    BigInt cover_bound(const Bitset& cand) {
        Bitset covered(p.columns);
        BigInt bound = 0;
        for (const auto& row : p.row_cols) {
            std::uint32_t cnt = 0;
            BigInt maxw = 0;
            for (auto c : row) {
                if (!cand.test(c) || covered.test(c)) continue;
                ++cnt;
                if (p.weights[c] > maxw) maxw = p.weights[c];
            }
            if (cnt >= 2) {
                bound += maxw;
                for (auto c : row)
                    if (cand.test(c)) covered.set(c);
            }
        }
        for (std::uint32_t c = 0; c < p.columns; ++c)
            if (cand.test(c) && !covered.test(c)) bound += p.weights[c];
        return bound;
    }

    void record_incumbent(const BigInt& value, const std::vector<std::uint32_t>& extra) {
        if (value <= report.best_value) return;
        report.best_value = value;
        report.best_columns = chosen;
        report.best_columns.insert(report.best_columns.end(), extra.begin(), extra.end());
        std::sort(report.best_columns.begin(), report.best_columns.end());
        if (report.best_value >= proven_ceiling) done = true;
    }

    void dfs(const Bitset& cand, const BigInt& weight) {
        if (aborted || done) return;
        ++report.nodes_explored;
        if (out_of_budget()) {
            aborted = true;
            return;
        }

        // Pick the branching row: fewest candidates among rows with >= 2.
        std::uint32_t branch_row = UINT32_MAX, branch_cnt = UINT32_MAX;
        for (std::uint32_t r = 0; r < p.row_cols.size(); ++r) {
            std::uint32_t cnt = 0;
            for (auto c : p.row_cols[r]) {
                if (cand.test(c)) ++cnt;
                if (cnt >= branch_cnt) break;
            }
            if (cnt >= 2 && cnt < branch_cnt) {
                branch_row = r;
                branch_cnt = cnt;
                if (cnt == 2) break;
            }
        }

        if (branch_row == UINT32_MAX) {
            // Conflict-free remainder: take everything.
            BigInt total = weight;
            std::vector<std::uint32_t> extra;
            for (std::uint32_t c = 0; c < p.columns; ++c) {
                if (cand.test(c)) {
                    total += p.weights[c];
                    extra.push_back(c);
                }
            }
            record_incumbent(total, extra);
            return;
        }

        BigInt potential = weight + cover_bound(cand);
        if (target > 0 && potential < target) return;
        if (potential <= report.best_value) return;

        // Branch on the least candidate column of the chosen row.
        std::uint32_t pivot = UINT32_MAX;
        for (auto c : p.row_cols[branch_row]) {
            if (cand.test(c)) {
                pivot = c;
                break;
            }
        }

        // Include pivot.
        Bitset inc = cand;
        inc.reset(pivot);
        for (auto r : col_rows[pivot])
            for (auto c : p.row_cols[r]) inc.reset(c);
        chosen.push_back(pivot);
        dfs(inc, weight + p.weights[pivot]);
        chosen.pop_back();

        // Exclude pivot.
        Bitset exc = cand;
        exc.reset(pivot);
        dfs(exc, weight);
    }
};

}  // namespace

SolveReport solve_packing(const PackingProblem& problem, const SolveBudget& budget) {
    PackingSolver solver(problem, budget);
    solver.t0 = std::chrono::steady_clock::now();
    solver.report.best_value = 0;

    Bitset cand(problem.columns);
    for (std::uint32_t c = 0; c < problem.columns; ++c) cand.set(c);
    for (auto c : problem.forced_zero) cand.reset(c);

    // Certified ceiling: greedy cover at the root, tightened by any external bound.
    BigInt ceiling = solver.cover_bound(cand);
    if (budget.upper_bound && *budget.upper_bound < ceiling) ceiling = *budget.upper_bound;
    solver.proven_ceiling = ceiling;

    // Phase 1: hunt for a ceiling-matching solution with target pruning. On
    // tight instances the search backtracks the moment a pick breaks the cover.
    // A completed phase without a hit refutes the ceiling; fall back to the
    // classic incumbent search.
    if (ceiling > 0) {
        solver.target = ceiling;
        solver.dfs(cand, BigInt(0));
    }
    if (!solver.done && !solver.aborted) {
        solver.target = 0;
        solver.dfs(cand, BigInt(0));
    }

    SolveReport& rep = solver.report;
    rep.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - solver.t0).count();
    if (solver.aborted) {
        rep.status = SolveStatus::feasible_aborted;
        rep.upper_bound_reached = solver.proven_ceiling;
    } else {
        rep.status = SolveStatus::optimal;
        rep.upper_bound_reached = rep.best_value;
    }
    return rep;
}

SolveReport solve(const KramerMesnerSystem& system, const SolveBudget& budget) {
    SolveReport rep = solve_packing(system.packing(), budget);
    // Any returned code must pass the distance check. Above the maximum
    // Grassmann distance the system is the degenerate constraint-free model,
    // where no code of two or more words can comply.
    std::uint32_t dmax = 0;
    for (auto m : m_vector(system.v, system.type)) dmax += m;
    if (system.d <= dmax) {
        FlagCode code = expand_solution(system, rep.best_columns);
        auto md = min_distance(code);
        if (!md.infinite && md.distance < system.d)
            throw InfeasibleSolution("solver produced a code below the required distance");
    }
    return rep;
}

FlagCode expand_solution(const KramerMesnerSystem& system,
                         const std::vector<std::uint32_t>& selected_columns) {
    FlagCode code(make_field(system.q), system.type);
    for (auto col : selected_columns)
        for (auto fi : system.flag_orbits.orbits[col]) code.words.push_back(system.flags[fi]);
    std::sort(code.words.begin(), code.words.end());
    return code;
}

void export_ilp(const KramerMesnerSystem& system, std::ostream& out) {
    out << "\\ flag code packing model: v=" << system.v << " d=" << system.d << " q=" << system.q
        << " type=";
    for (std::size_t i = 0; i < system.type.dims.size(); ++i)
        out << (i ? "," : "") << system.type.dims[i];
    out << "\n";
    out << "Maximize\n obj:";
    std::size_t line = 5;
    for (std::size_t c = 0; c < system.column_count(); ++c) {
        std::string term;
        std::size_t w = system.flag_orbits.orbits[c].size();
        if (c) term += " +";
        term += " ";
        if (w != 1) term += std::to_string(w) + " ";
        term += "x" + std::to_string(c);
        if (line + term.size() > 200) {
            out << "\n ";
            line = 1;
        }
        out << term;
        line += term.size();
    }
    out << "\nSubject To\n";
    for (std::size_t r = 0; r < system.rows.size(); ++r) {
        out << " c" << r << ":";
        line = 0;
        for (std::size_t j = 0; j < system.rows[r].size(); ++j) {
            auto [col, mult] = system.rows[r][j];
            std::string term;
            if (j) term += " +";
            term += " ";
            if (mult != 1) term += std::to_string(mult) + " ";
            term += "x" + std::to_string(col);
            if (line + term.size() > 200) {
                out << "\n ";
                line = 1;
            }
            out << term;
            line += term.size();
        }
        out << " <= 1\n";
    }
    out << "Binary\n";
    for (std::size_t c = 0; c < system.column_count(); ++c) out << " x" << c << "\n";
    out << "End\n";
}

void export_ilp_file(const KramerMesnerSystem& system, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    export_ilp(system, out);
    if (!out) throw IoError("write failure on " + path);
}

LpModel parse_lp(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '\\') continue;  // comment
        std::istringstream ls(line);
        std::string t;
        while (ls >> t) tokens.push_back(t);
    }

    LpModel model;
    std::map<std::string, std::uint32_t> var_index;
    auto var_id = [&](const std::string& name) {
        auto it = var_index.find(name);
        if (it != var_index.end()) return it->second;
        std::uint32_t id = static_cast<std::uint32_t>(model.variables.size());
        var_index.emplace(name, id);
        model.variables.push_back(name);
        model.objective.emplace_back(0);
        return id;
    };
    auto is_number = [](const std::string& s) {
        if (s.empty()) return false;
        for (char ch : s)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };

    std::size_t i = 0;
    auto expect = [&](const std::string& s) {
        if (i >= tokens.size() || tokens[i] != s) throw ParseError("expected '" + s + "' in LP file");
        ++i;
    };
    expect("Maximize");
    if (i < tokens.size() && tokens[i].back() == ':') ++i;  // objective label
    // Objective terms until "Subject".
    while (i < tokens.size() && tokens[i] != "Subject") {
        if (tokens[i] == "+") {
            ++i;
            continue;
        }
        BigInt coeff = 1;
        if (is_number(tokens[i])) {
            coeff = BigInt(tokens[i]);
            ++i;
        }
        if (i >= tokens.size()) throw ParseError("dangling objective coefficient");
        model.objective[var_id(tokens[i])] = coeff;
        ++i;
    }
    expect("Subject");
    expect("To");
    while (i < tokens.size() && tokens[i] != "Binary" && tokens[i] != "End") {
        if (tokens[i].back() == ':') {
            ++i;
            continue;
        }
        std::vector<std::pair<std::uint32_t, BigInt>> row;
        while (i < tokens.size() && tokens[i] != "<=") {
            if (tokens[i] == "+") {
                ++i;
                continue;
            }
            BigInt coeff = 1;
            if (is_number(tokens[i])) {
                coeff = BigInt(tokens[i]);
                ++i;
            }
            if (i >= tokens.size()) throw ParseError("dangling row coefficient");
            row.emplace_back(var_id(tokens[i]), coeff);
            ++i;
        }
        expect("<=");
        if (i >= tokens.size() || !is_number(tokens[i])) throw ParseError("missing row bound");
        ++i;  // rhs (always 1 in our exports)
        model.rows.push_back(std::move(row));
    }
    if (i < tokens.size() && tokens[i] == "Binary") {
        ++i;
        while (i < tokens.size() && tokens[i] != "End") {
            var_id(tokens[i]);
            ++i;
        }
    }
    return model;
}

}  // namespace flagcodes
