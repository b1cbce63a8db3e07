#include "flagcodes/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <map>
#include <ostream>
#include <sstream>

#include "flagcodes/bounds.hpp"
#include "flagcodes/constructions.hpp"
#include "flagcodes/io.hpp"
#include "flagcodes/search.hpp"

namespace flagcodes::cli {

namespace {

using nlohmann::json;

std::vector<std::uint32_t> parse_type_list(const std::string& s) {
    std::vector<std::uint32_t> out;
    std::istringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    return out;
}

FlagType resolve_type(std::uint32_t v, const std::string& type_arg) {
    if (type_arg.empty()) return FlagType::full(v);
    return FlagType(v, parse_type_list(type_arg));
}

// q must be a prime power; make_field performs the full check.
std::uint32_t validated_q(std::int64_t q) {
    if (q < 2) throw InvalidParams("q must be a prime power >= 2");
    make_field(static_cast<std::uint32_t>(q));
    return static_cast<std::uint32_t>(q);
}

std::string type_suffix(const FlagType& t) {
    if (t.is_full()) return "";
    std::string s = ";{";
    for (std::size_t i = 0; i < t.dims.size(); ++i)
        s += (i ? "," : "") + std::to_string(t.dims[i]);
    return s + "}";
}

std::string cell_text(const TableCell& cell) {
    std::string up = cell.upper.value.str();
    if (cell.upper.exact) return up;
    if (cell.lower && *cell.lower < cell.upper.value) return cell.lower->str() + "-" + up;
    return "<=" + up;
}

void render_table_text(const BoundsTable& table, std::ostream& out) {
    std::map<std::uint32_t, std::map<std::uint32_t, const TableCell*>> grid;
    std::uint32_t dmax = 0;
    for (const auto& c : table.cells) {
        grid[c.v][c.d] = &c;
        dmax = std::max(dmax, c.d);
    }
    std::vector<std::size_t> width(dmax + 1, 1);
    for (const auto& c : table.cells) width[c.d] = std::max(width[c.d], cell_text(c).size());

    out << "v/d";
    for (std::uint32_t d = 1; d <= dmax; ++d) {
        out << "  ";
        std::string h = std::to_string(d);
        out << std::string(width[d] > h.size() ? width[d] - h.size() : 0, ' ') << h;
    }
    out << "\n";
    for (const auto& [v, row] : grid) {
        out << std::string(3 - std::to_string(v).size(), ' ') << v;
        for (std::uint32_t d = 1; d <= dmax; ++d) {
            out << "  ";
            std::string t = row.count(d) ? cell_text(*row.at(d)) : "";
            out << std::string(width[d] > t.size() ? width[d] - t.size() : 0, ' ') << t;
        }
        out << "\n";
    }
}

json cell_json(const TableCell& c) {
    json j;
    j["v"] = c.v;
    j["d"] = c.d;
    j["upper"] = c.upper.value.str();
    j["exact"] = c.upper.exact;
    if (c.lower) j["lower"] = c.lower->str();
    j["kind"] = to_string(c.upper.kind);
    j["provenance"] = c.upper.provenance;
    if (c.upper.symbolic) j["symbolic"] = c.upper.symbolic->to_string();
    return j;
}

int cmd_verify(const std::string& path, int d_required, bool json_mode, std::ostream& out) {
    CodeFile file = read_code_file(path);
    std::size_t size = file.words.size();
    MinDistanceResult md;
    if (file.cartesian) {
        md = min_distance_tuples(file.words);
    } else {
        md = min_distance(to_flag_code(file));
    }
    std::string dist = md.infinite ? "inf" : std::to_string(md.distance);
    bool ok = d_required < 0 || md.infinite ||
              md.distance >= static_cast<std::size_t>(d_required);
    if (json_mode) {
        json j;
        j["file"] = path;
        j["size"] = size;
        j["min_distance"] = dist;
        j["cartesian"] = file.cartesian;
        if (!md.infinite) j["witness"] = {md.witness_i, md.witness_j};
        if (d_required >= 0) j["satisfies"] = ok;
        out << j.dump(2) << "\n";
    } else {
        out << "size=" << size << " min_distance=" << dist;
        if (!md.infinite) out << " witness=(" << md.witness_i << "," << md.witness_j << ")";
        if (d_required >= 0) out << (ok ? " OK" : " FAIL");
        out << "\n";
    }
    return ok ? 0 : 3;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"flag code bounds, search and constructions"};
    app.require_subcommand(1);
    app.fallthrough();  // let --format appear after the subcommand

    std::string format = "text";
    app.add_option("--format", format, "output format: text, csv, json")
        ->check(CLI::IsMember({"text", "csv", "json", "lp"}));

    // gauss
    auto* gauss = app.add_subcommand("gauss", "Gaussian binomial [v k]_q");
    std::uint32_t g_v = 0, g_k = 0;
    std::int64_t g_q = -1;
    gauss->add_option("v", g_v)->required();
    gauss->add_option("k", g_k)->required();
    gauss->add_option("q", g_q);

    // count
    auto* count = app.add_subcommand("count", "number of flags of a type");
    std::uint32_t c_v = 0;
    std::int64_t c_q = -1;
    std::string c_type;
    count->add_option("v", c_v)->required();
    count->add_option("q", c_q);
    count->add_option("--type", c_type, "comma-separated dimensions (default: full)");

    // rset
    auto* rset = app.add_subcommand("rset", "minimal reduction vectors R_{v,d}");
    std::uint32_t r_v = 0, r_d = 0;
    std::string r_type;
    rset->add_option("v", r_v)->required();
    rset->add_option("d", r_d)->required();
    rset->add_option("--type", r_type);

    // bound
    auto* bound = app.add_subcommand("bound", "upper/lower bounds for A_q^f(v,d;T)");
    std::uint32_t b_v = 0, b_d = 0;
    std::int64_t b_q = -1;
    std::string b_type, b_method = "best";
    bound->add_option("v", b_v)->required();
    bound->add_option("d", b_d)->required();
    bound->add_option("q", b_q);
    bound->add_option("--type", b_type);
    bound->add_option("--method", b_method)
        ->check(CLI::IsMember({"anticode", "johnson", "cdc", "beta", "pack", "cover", "best"}));

    // table
    auto* table = app.add_subcommand("table", "bounds table over a v range");
    std::uint32_t t_vmax = 0, t_vmin = 2, t_q = 2;
    std::string t_cache;
    table->add_option("--v-max", t_vmax)->required();
    table->add_option("--v-min", t_vmin);
    table->add_option("--q", t_q)->required();
    table->add_option("--cache", t_cache, "results cache file for lower bounds");

    // construct
    auto* construct = app.add_subcommand("construct", "build a code");
    std::string cons_kind;
    std::vector<std::string> cons_args;
    std::string cons_out;
    std::int64_t cons_d = -1;
    std::string cons_type;
    construct->add_option("kind", cons_kind, "spread|pspread|singer|mrd-cartesian")->required();
    construct->add_option("params", cons_args, "numeric parameters");
    construct->add_option("-o,--out", cons_out, "write the code file here");
    construct->add_option("--d", cons_d, "distance target (singer seed search)");
    construct->add_option("--type", cons_type);

    // verify
    auto* verify = app.add_subcommand("verify", "check a code file");
    std::string vf_path;
    std::int64_t vf_d = -1;
    verify->add_option("file", vf_path)->required();
    verify->add_option("--d", vf_d, "required minimum distance");

    // search
    auto* search = app.add_subcommand("search", "clique-constraint ILP search");
    std::uint32_t s_v = 0, s_d = 0, s_q = 0;
    std::string s_type, s_group, s_lp, s_solution;
    std::uint64_t s_nodes = 50'000'000;
    double s_time = 0;
    bool s_no_solve = false;
    search->add_option("v", s_v)->required();
    search->add_option("d", s_d)->required();
    search->add_option("q", s_q)->required();
    search->add_option("--type", s_type);
    search->add_option("--group", s_group, "generator matrix file");
    search->add_option("--export-lp", s_lp, "write the LP model here");
    search->add_option("--node-limit", s_nodes);
    search->add_option("--time-limit", s_time, "seconds");
    search->add_flag("--no-solve", s_no_solve, "only build/export the model");
    search->add_option("--solution", s_solution, "write the best code found here");

    // fixture
    auto* fixture = app.add_subcommand("fixture", "embedded reference codes");
    std::string fx_name;
    std::string fx_out;
    fixture->add_option("name", fx_name, "155")->required();
    fixture->add_option("-o,--out", fx_out);

    std::vector<std::string> argv_copy = args;
    std::reverse(argv_copy.begin(), argv_copy.end());
    try {
        app.parse(argv_copy);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    bool json_mode = (format == "json");
    try {
        if (gauss->parsed()) {
            if (g_q >= 0) validated_q(g_q);
            const QPolynomial& p = gaussian_binomial(g_v, g_k);
            if (json_mode) {
                json j{{"v", g_v}, {"k", g_k}, {"polynomial", p.to_string()}};
                if (g_q >= 2) j["value"] = evaluate(p, static_cast<std::uint32_t>(g_q)).str();
                out << j.dump(2) << "\n";
            } else {
                out << "[" << g_v << " " << g_k << "]_q = " << p.to_string() << "\n";
                if (g_q >= 2)
                    out << "at q=" << g_q << ": "
                        << evaluate(p, static_cast<std::uint32_t>(g_q)).str() << "\n";
            }
            return 0;
        }
        if (count->parsed()) {
            if (c_q >= 0) validated_q(c_q);
            FlagType type = resolve_type(c_v, c_type);
            QPolynomial p = count_flags_symbolic(c_v, type);
            if (json_mode) {
                json j{{"v", c_v}, {"polynomial", p.to_string()}};
                j["type"] = type.dims;
                if (c_q >= 2) j["value"] = evaluate(p, static_cast<std::uint32_t>(c_q)).str();
                out << j.dump(2) << "\n";
            } else {
                out << "#F(" << c_v << ",q" << type_suffix(type) << ") = " << p.to_string() << "\n";
                if (c_q >= 2)
                    out << "at q=" << c_q << ": "
                        << evaluate(p, static_cast<std::uint32_t>(c_q)).str() << "\n";
            }
            return 0;
        }
        if (rset->parsed()) {
            FlagType type = resolve_type(r_v, r_type);
            auto R = compute_R(r_v, r_d, type);
            if (json_mode) {
                json arr = json::array();
                for (const auto& r : R) arr.push_back(r.entries);
                out << json{{"v", r_v}, {"d", r_d}, {"type", type.dims}, {"R", arr}}.dump(2)
                    << "\n";
            } else {
                out << "(" << r_v << "," << r_d << ")  { ";
                for (std::size_t i = 0; i < R.size(); ++i) {
                    if (i) out << ", ";
                    out << "(";
                    for (std::size_t j = 0; j < R[i].entries.size(); ++j)
                        out << (j ? "," : "") << R[i].entries[j];
                    out << ")";
                }
                out << " }\n";
            }
            return 0;
        }
        if (bound->parsed()) {
            FlagType type = resolve_type(b_v, b_type);
            std::uint32_t q = b_q >= 0 ? validated_q(b_q) : 2;
            std::string label = "A_" + std::to_string(q) + "^f(" + std::to_string(b_v) + "," +
                                std::to_string(b_d) + type_suffix(type) + ")";
            if (b_method == "beta") {
                std::uint32_t beta = beta_exponent(b_v, b_d);
                if (json_mode)
                    out << json{{"beta", beta}}.dump(2) << "\n";
                else
                    out << "A_q^f(" << b_v << "," << b_d << ") <= q^" << beta << " + O(q^"
                        << beta - 1 << ")\n";
                return 0;
            }
            if (b_method == "pack" || b_method == "cover") {
                if (b_q < 2) throw InvalidParams("sphere bounds need a concrete q");
                BigInt val = b_method == "pack" ? sphere_packing_bound(b_v, b_d, q, type)
                                                : sphere_covering_bound(b_v, b_d, q, type);
                if (json_mode)
                    out << json{{"method", b_method}, {"value", val.str()}}.dump(2) << "\n";
                else
                    out << label << (b_method == "pack" ? " <= " : " >= ") << val.str() << "  ["
                        << b_method << "]\n";
                return 0;
            }
            BoundResult res;
            if (b_method == "anticode") res = best_anticode_bound(b_v, b_d, type, q);
            else if (b_method == "johnson") res = johnson_bound_typed(b_v, b_d, type, q);
            else if (b_method == "cdc") res = cdc_bound_typed(b_v, b_d, type, q);
            else res = best_upper_bound_typed(b_v, b_d, type, q);
            if (json_mode) {
                json j{{"value", res.value.str()},
                       {"kind", to_string(res.kind)},
                       {"provenance", res.provenance},
                       {"exact", res.exact}};
                if (res.symbolic) j["symbolic"] = res.symbolic->to_string();
                out << j.dump(2) << "\n";
            } else {
                out << label << (res.exact ? " = " : " <= ") << res.value.str() << "  ["
                    << res.provenance << "]";
                if (res.symbolic) out << "  " << res.symbolic->to_string();
                out << "\n";
            }
            return 0;
        }
        if (table->parsed()) {
            std::vector<KnownValue> cache;
            if (!t_cache.empty()) cache = read_results_cache_file(t_cache);
            BoundsTable tab = bounds_table(t_vmin, t_vmax, validated_q(t_q), cache);
            if (format == "json") {
                json cells = json::array();
                for (const auto& c : tab.cells) cells.push_back(cell_json(c));
                out << json{{"q", tab.q}, {"cells", cells}}.dump(2) << "\n";
            } else if (format == "csv") {
                out << "v,d,upper,exact,lower,kind,provenance\n";
                for (const auto& c : tab.cells) {
                    out << c.v << "," << c.d << "," << c.upper.value.str() << ","
                        << (c.upper.exact ? 1 : 0) << ","
                        << (c.lower ? c.lower->str() : "") << "," << to_string(c.upper.kind)
                        << ",\"" << c.upper.provenance << "\"\n";
                }
            } else {
                render_table_text(tab, out);
            }
            return 0;
        }
        if (construct->parsed()) {
            auto num = [&](std::size_t i) {
                if (i >= cons_args.size()) throw InvalidParams("missing construct parameter");
                return static_cast<std::uint32_t>(std::stoul(cons_args[i]));
            };
            std::optional<FlagCode> flag_code;
            std::optional<CartesianCode> cart_code;
            if (cons_kind == "spread") {
                flag_code = spread_code(num(0), num(1));
            } else if (cons_kind == "pspread") {
                flag_code = partial_spread_flag_code(num(0), num(1));
            } else if (cons_kind == "singer") {
                std::uint32_t v = num(0), q = num(1);
                if (cons_d < 1) throw InvalidParams("singer construction needs --d");
                FlagType type = resolve_type(v, cons_type);
                flag_code = seed_search_singer(v, q, static_cast<std::uint32_t>(cons_d), type);
            } else if (cons_kind == "mrd-cartesian") {
                std::uint32_t d = num(0), q = num(1);
                if (d == 2) cart_code = cartesian_code_5_2(q);
                else if (d == 3) cart_code = cartesian_code_5_3(q);
                else throw InvalidParams("mrd-cartesian supports d=2 or d=3");
            } else {
                throw InvalidParams("unknown construction: " + cons_kind);
            }

            std::size_t size;
            MinDistanceResult md;
            if (flag_code) {
                size = flag_code->words.size();
                md = min_distance(*flag_code);
                if (!cons_out.empty()) write_code_file(cons_out, *flag_code);
            } else {
                size = cart_code->words.size();
                md = min_distance_tuples(cart_code->words);
                if (!cons_out.empty()) write_code_file(cons_out, *cart_code);
            }
            std::string dist = md.infinite ? "inf" : std::to_string(md.distance);
            if (json_mode)
                out << json{{"construction", cons_kind}, {"size", size}, {"min_distance", dist}}
                           .dump(2)
                    << "\n";
            else
                out << cons_kind << ": size=" << size << " min_distance=" << dist
                    << (cons_out.empty() ? "" : " written to " + cons_out) << "\n";
            return 0;
        }
        if (verify->parsed()) {
            return cmd_verify(vf_path, static_cast<int>(vf_d), json_mode, out);
        }
        if (search->parsed()) {
            validated_q(s_q);
            FlagType type = resolve_type(s_v, s_type);
            KramerMesnerSystem sys;
            if (!s_group.empty()) {
                auto gens = read_group_generators_file(s_group, s_q, s_v);
                GroupAction group = group_closure(gens);
                sys = kramer_mesner(group, s_v, s_q, s_d, type);
            } else {
                sys = unreduced_system(s_v, s_q, s_d, type);
            }
            if (!s_lp.empty()) export_ilp_file(sys, s_lp);
            if (json_mode && s_no_solve) {
                out << json{{"columns", sys.column_count()}, {"rows", sys.row_count()}}.dump(2)
                    << "\n";
                return 0;
            }
            if (s_no_solve) {
                out << "columns=" << sys.column_count() << " rows=" << sys.row_count()
                    << (s_lp.empty() ? "" : " lp=" + s_lp) << "\n";
                return 0;
            }
            SolveBudget budget;
            budget.node_limit = s_nodes;
            budget.time_limit_seconds = s_time;
            budget.upper_bound = best_upper_bound_typed(s_v, s_d, type, s_q).value;
            SolveReport rep = solve(sys, budget);
            FlagCode best = expand_solution(sys, rep.best_columns);
            if (!s_solution.empty() && !best.words.empty()) write_code_file(s_solution, best);
            std::string status = rep.status == SolveStatus::optimal ? "optimal"
                                 : rep.status == SolveStatus::feasible_aborted ? "feasible-aborted"
                                                                               : "infeasible";
            if (json_mode) {
                out << json{{"status", status},
                            {"best_value", rep.best_value.str()},
                            {"columns", sys.column_count()},
                            {"rows", sys.row_count()},
                            {"nodes", rep.nodes_explored},
                            {"wall_time_seconds", rep.wall_time_seconds}}
                           .dump(2)
                    << "\n";
            } else {
                out << "columns=" << sys.column_count() << " rows=" << sys.row_count()
                    << " status=" << status << " best=" << rep.best_value.str()
                    << " nodes=" << rep.nodes_explored << "\n";
            }
            return rep.status == SolveStatus::feasible_aborted ? 4 : 0;
        }
        if (fixture->parsed()) {
            if (fx_name != "155") throw InvalidParams("unknown fixture: " + fx_name);
            FlagCode code = fixture_155();
            auto md = min_distance(code);
            if (!fx_out.empty()) write_code_file(fx_out, code);
            if (json_mode)
                out << json{{"size", code.words.size()}, {"min_distance", md.distance}}.dump(2)
                    << "\n";
            else
                out << "fixture 155: size=" << code.words.size() << " min_distance=" << md.distance
                    << (fx_out.empty() ? "" : " written to " + fx_out) << "\n";
            return 0;
        }
    } catch (const Error& e) {
        if (json_mode) {
            out << json{{"error", e.what()}}.dump(2) << "\n";
        } else {
            err << "error: " << e.what() << "\n";
        }
        return 2;
    }
    return 2;
}

}  // namespace flagcodes::cli
