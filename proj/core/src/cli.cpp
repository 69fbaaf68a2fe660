#include "dichro/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dichro/chordal.hpp"
#include "dichro/coloring.hpp"
#include "dichro/graph_io.hpp"
#include "dichro/patterns.hpp"

namespace dichro::cli {

namespace {

int usage_error(std::ostream& err, const std::string& what) {
    err << "error: " << what << '\n';
    return kExitUsage;
}

/// A pattern argument is a graph file when one exists at that path,
/// otherwise a mini-language term.
Digraph pattern_or_file(const std::string& text) {
    if (std::filesystem::exists(text)) return read_digraph_file(text);
    return parse_pattern(text);
}

void print_budgets(std::ostream& out, const Budgets& budgets) {
    out << "budget: solver-nodes " << budgets.solver_nodes << ", enum-cap "
        << budgets.enum_cap << ", max-vertices " << budgets.max_vertices
        << '\n';
}

std::string join_ints(const std::vector<int>& xs, char sep) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) s += sep;
        s += std::to_string(xs[i]);
    }
    return s;
}

int color_count(const Dicoloring& coloring) {
    int used = 0;
    for (int c : coloring.color) used = std::max(used, c + 1);
    return used;
}

}  // namespace

int cmd_generate(const GenerateConfig& config, std::ostream& out,
                 std::ostream& err) {
    try {
        const Budgets& b = config.budgets;
        Digraph d;
        std::optional<Dicoloring> piecing;
        int level = config.k;
        if (config.family == "delta122") {
            d = delta122_witness(config.k, b.max_vertices);
            piecing = delta122_piecing_coloring(config.k, b.max_vertices);
        } else if (config.family == "c3k1") {
            d = c3k1_witness(config.k, b.enum_cap, b.max_vertices);
            piecing = c3k1_piecing_coloring(config.k, b.enum_cap, b.max_vertices);
        } else if (config.family == "amplifier") {
            Digraph base = c3k1_witness(config.k, b.enum_cap, b.max_vertices);
            Dicoloring base_coloring =
                c3k1_piecing_coloring(config.k, b.enum_cap, b.max_vertices);
            d = rainbow_amplifier(base, config.k, b.enum_cap, b.max_vertices);
            piecing = rainbow_amplifier_coloring(base, base_coloring, config.k,
                                                 b.enum_cap, b.max_vertices);
        } else if (config.family == "cograph") {
            d = cograph_witness(config.k, b.max_vertices);
            piecing = cograph_piecing_coloring(config.k, b.max_vertices);
        } else if (config.family == "random-chordal") {
            RandomChordalOptions options;
            Digraph avoid;
            if (!config.avoid.empty()) {
                avoid = pattern_or_file(config.avoid);
                options.avoid = &avoid;
            }
            d = random_chordal_orientation(config.n, config.seed, options);
            level = 0;
        } else {
            return usage_error(err, "unknown family \"" + config.family +
                                        "\"; expected delta122, c3k1, cograph, "
                                        "amplifier, or random-chordal");
        }
        if (config.out.empty())
            return usage_error(err, "generate needs an output path");
        write_digraph_file(config.out, d);
        if (!config.coloring_out.empty()) {
            if (!piecing)
                return usage_error(err, "family " + config.family +
                                            " has no construction coloring");
            if (!validate_dicoloring(d, *piecing).valid)
                return usage_error(err,
                                   "internal: construction coloring failed "
                                   "validation");
            write_coloring_file(config.coloring_out, *piecing);
        }
        VerifyBudget verify_budget;
        verify_budget.solver_nodes = b.solver_nodes;
        verify_budget.enum_cap = b.enum_cap;
        ConstructionReport report =
            verify_witness(d, config.family, level, verify_budget);
        if (config.format == ReportFormat::structured) {
            nlohmann::ordered_json j;
            j["budget"] = {{"solver_nodes", b.solver_nodes},
                           {"enum_cap", b.enum_cap},
                           {"max_vertices", b.max_vertices}};
            j["graph_file"] = config.out;
            j["report"] = nlohmann::ordered_json::parse(report.to_json());
            out << j.dump(2) << '\n';
        } else {
            print_budgets(out, b);
            out << "wrote " << config.out << " (" << d.vertex_count()
                << " vertices, " << d.arc_count() << " arcs)\n";
            if (!config.coloring_out.empty())
                out << "wrote " << config.coloring_out << '\n';
            out << report.to_text();
        }
        return kExitHolds;
    } catch (const Error& e) {
        return usage_error(err, e.what());
    }
}

int cmd_check(const CheckConfig& config, std::ostream& out,
              std::ostream& err) {
    try {
        const Digraph d = read_digraph_file(config.input);
        const std::string& what = config.what;
        if (what == "chordal") {
            ChordalityResult res = is_chordal(underlying_graph(d));
            if (const auto* peo = std::get_if<EliminationOrdering>(&res)) {
                out << "chordal: holds\n";
                out << "elimination order: " << join_ints(peo->order, ' ')
                    << '\n';
                return kExitHolds;
            }
            const auto& hole = std::get<HoleCertificate>(res);
            out << "chordal: fails\n";
            out << "hole: " << join_ints(hole.cycle, ' ') << '\n';
            return kExitRefuted;
        }
        if (what.starts_with("free:")) {
            const Digraph pattern = pattern_or_file(what.substr(5));
            if (std::optional<Embedding> e = contains_induced(d, pattern)) {
                out << "free: fails\n";
                out << "embedding: " << join_ints(e->image, ' ') << '\n';
                return kExitRefuted;
            }
            out << "free: holds\n";
            return kExitHolds;
        }
        if (what.starts_with("dicoloring:")) {
            const Dicoloring coloring =
                read_coloring_file(what.substr(11), d.vertex_count());
            DicoloringCheck check = validate_dicoloring(d, coloring);
            if (check.valid) {
                out << "dicoloring: holds (" << color_count(coloring)
                    << " colors)\n";
                return kExitHolds;
            }
            out << "dicoloring: fails\n";
            out << "monochromatic cycle: "
                << join_ints(check.monochromatic_cycle, ' ') << '\n';
            return kExitRefuted;
        }
        if (what.starts_with("unit-interval:")) {
            const UnitIntervalRepresentation rep =
                read_intervals_file(what.substr(14), d.vertex_count());
            try {
                validate_unit_intervals(d, rep);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::invalid_representation) throw;
                out << "unit-interval: fails\n";
                out << "reason: " << e.what() << '\n';
                return kExitRefuted;
            }
            out << "unit-interval: holds ("
                << layers_from_unit_intervals(d, rep).size() << " layers)\n";
            return kExitHolds;
        }
        return usage_error(err, "unknown check \"" + what +
                                    "\"; expected chordal, free:<pattern>, "
                                    "dicoloring:<path>, or "
                                    "unit-interval:<path>");
    } catch (const Error& e) {
        return usage_error(err, e.what());
    }
}

int cmd_color(const ColorConfig& config, std::ostream& out,
              std::ostream& err) {
    try {
        const Digraph d = read_digraph_file(config.input);
        const SolverOptions solver{config.budgets.solver_nodes, 1};
        Dicoloring coloring;
        if (config.method == "exact") {
            ChiResult res = dichromatic_number(d, solver);
            if (res.status == SolveStatus::budget_exceeded) {
                err << "error: node budget " << config.budgets.solver_nodes
                    << " exhausted; every k <= " << res.refuted_below
                    << " is refuted\n";
                return kExitBudget;
            }
            coloring = res.witness;
        } else if (config.method == "thm25") {
            coloring = color_delta11k_free_chordal(d, config.k, true);
        } else if (config.method == "ttk-free") {
            coloring = color_ttk_free_chordal(d, config.k, true);
        } else if (config.method == "unit-interval") {
            if (config.rep.empty())
                return usage_error(err,
                                   "unit-interval coloring needs --rep "
                                   "<interval file>");
            const UnitIntervalRepresentation rep =
                read_intervals_file(config.rep, d.vertex_count());
            validate_unit_intervals(d, rep);
            const TournamentColorer exact = [&](const Digraph& layer) {
                ChiResult res = dichromatic_number(layer, solver);
                if (res.status != SolveStatus::found)
                    throw Error(ErrorCode::cap_exceeded,
                                "layer solve ran out of nodes");
                return res.witness;
            };
            coloring = color_unit_interval(d, rep, exact).coloring;
        } else {
            return usage_error(err, "unknown method \"" + config.method +
                                        "\"; expected exact, thm25, ttk-free, "
                                        "or unit-interval");
        }
        if (!validate_dicoloring(d, coloring).valid)
            return usage_error(err, "internal: coloring failed validation");
        const std::string path =
            config.out.empty() ? config.input + ".col" : config.out;
        write_coloring_file(path, coloring);
        out << "colors: " << color_count(coloring) << '\n';
        out << "wrote " << path << '\n';
        return kExitHolds;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::cap_exceeded) {
            err << "error: " << e.what() << '\n';
            return kExitBudget;
        }
        return usage_error(err, e.what());
    }
}

int cmd_classify(const ClassifyConfig& config, std::ostream& out,
                 std::ostream& err) {
    try {
        const Digraph t = pattern_or_file(config.pattern);
        const std::optional<HeroExprPtr> derivation = is_hero_in_tournaments(t);
        if (derivation)
            out << "hero in tournaments: yes, derivation "
                << (*derivation)->to_string() << '\n';
        else
            out << "hero in tournaments: no\n";
        const ChordalHeroVerdict verdict = is_hero_in_chordal(t);
        out << "hero in chordal orientations: ";
        switch (verdict.reason) {
            case ChordalHeroReason::transitive:
                out << "yes, transitive\n";
                break;
            case ChordalHeroReason::delta_one_one_k:
                out << "yes, isomorphic to D(1,1," << verdict.k << ")\n";
                break;
            case ChordalHeroReason::not_hero:
                out << "no\n";
                break;
        }
        if (derivation) {
            const ObstructionReport report = minimal_obstruction_check(t);
            out << "obstruction: ";
            switch (report.kind) {
                case ObstructionKind::transitive:
                    out << "none, transitive\n";
                    break;
                case ObstructionKind::delta_one_one_k:
                    out << "none, isomorphic to D(1,1," << report.k << ")\n";
                    break;
                case ObstructionKind::obstructed:
                    out << "contains";
                    if (report.contains_delta122) out << " D(1,2,2)";
                    if (report.contains_c3_to_k1) out << " C3=>K1";
                    if (report.contains_k1_to_c3) out << " K1=>C3";
                    out << '\n';
                    break;
            }
        } else {
            out << "obstruction: not in the hero grammar\n";
        }
        return kExitHolds;
    } catch (const Error& e) {
        return usage_error(err, e.what());
    }
}

int cmd_verify(const VerifyConfig& config, std::ostream& out,
               std::ostream& err) {
    std::string resolved;
    try {
        const std::vector<std::string> names = registered_properties();
        std::vector<std::string> matches;
        for (const std::string& name : names) {
            if (name == config.property) {
                matches = {name};
                break;
            }
            if (name.starts_with(config.property)) matches.push_back(name);
        }
        if (matches.empty())
            return usage_error(err, "no property matches \"" +
                                        config.property + "\"");
        if (matches.size() > 1) {
            std::string list;
            for (const std::string& m : matches) list += " " + m;
            return usage_error(
                err, "\"" + config.property + "\" is ambiguous:" + list);
        }
        resolved = matches.front();
        PropertyResult result = check_property(resolved, config.budget);
        if (config.format == ReportFormat::structured) {
            nlohmann::ordered_json j;
            j["budget"] = {{"max_n", config.budget.max_n},
                           {"k", config.budget.k},
                           {"samples", config.budget.samples},
                           {"seed", config.budget.seed},
                           {"solver_nodes", config.budget.solver_nodes},
                           {"workers", config.budget.workers}};
            j["result"] = nlohmann::ordered_json::parse(result.to_json());
            out << j.dump(2) << '\n';
        } else {
            out << "property: " << result.name << '\n';
            out << "universe: " << result.universe << '\n';
            out << "budget: max-n " << config.budget.max_n << ", k "
                << config.budget.k << ", samples " << config.budget.samples
                << ", seed " << config.budget.seed << ", solver-nodes "
                << config.budget.solver_nodes << ", workers "
                << config.budget.workers << '\n';
            out << "instances checked: " << result.instances_checked << '\n';
            out << "counterexamples: " << result.counterexamples.size()
                << '\n';
            for (const std::string& path : result.counterexample_paths)
                out << "wrote " << path << '\n';
            if (!result.note.empty()) out << "note: " << result.note << '\n';
            out << (result.holds()
                        ? "holds\n"
                        : (result.truncated ? "truncated\n" : "refuted\n"));
        }
        if (result.truncated) return kExitBudget;
        if (!result.counterexamples.empty()) return kExitRefuted;
        return kExitHolds;
    } catch (const Error& e) {
        return usage_error(err, e.what());
    }
}

int cmd_export_dot(const ExportDotConfig& config, std::ostream& out,
                   std::ostream& err) {
    try {
        const Digraph d = read_digraph_file(config.input);
        std::optional<Dicoloring> coloring;
        if (!config.coloring.empty())
            coloring = read_coloring_file(config.coloring, d.vertex_count());
        const std::string dot =
            to_dot(d, coloring ? &*coloring : nullptr);
        if (config.out.empty()) {
            out << dot;
        } else {
            std::ofstream file(config.out);
            if (!file)
                throw Error(ErrorCode::io_error,
                            "cannot open " + config.out + " for writing");
            file << dot;
            out << "wrote " << config.out << '\n';
        }
        return kExitHolds;
    } catch (const Error& e) {
        return usage_error(err, e.what());
    }
}

}  // namespace dichro::cli
