#include <iostream>

#include <CLI11.hpp>

#include "dichro/cli.hpp"

namespace {

void add_budget_flags(CLI::App* cmd, dichro::cli::Budgets& budgets) {
    cmd->add_option("--node-budget", budgets.solver_nodes,
                    "search nodes before the exact solver gives up")
        ->envname("DICHRO_NODE_BUDGET");
    cmd->add_option("--enum-cap", budgets.enum_cap,
                    "transitive-set enumeration cap")
        ->envname("DICHRO_ENUM_CAP");
    cmd->add_option("--max-vertices", budgets.max_vertices,
                    "refuse to build witnesses past this order");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dichromatic numbers in orientations of chordal graphs"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from an ini file");

    using dichro::cli::ReportFormat;

    dichro::cli::GenerateConfig gen;
    CLI::App* generate =
        app.add_subcommand("generate", "build a witness and certify it");
    generate
        ->add_option("family", gen.family,
                     "delta122 | c3k1 | cograph | amplifier | random-chordal")
        ->required();
    generate->add_option("k", gen.k, "family level");
    generate->add_option("--n", gen.n, "order of random-chordal instances");
    generate->add_option("--seed", gen.seed, "generation seed");
    generate->add_option("--avoid", gen.avoid,
                         "pattern kept out of random-chordal instances");
    generate->add_option("-o,--out", gen.out, "graph file to write")
        ->required();
    generate->add_option("--coloring-out", gen.coloring_out,
                         "write the construction's own coloring here");
    generate->add_flag_callback(
        "--json", [&gen] { gen.format = ReportFormat::structured; },
        "structured report");
    add_budget_flags(generate, gen.budgets);

    dichro::cli::CheckConfig check;
    CLI::App* check_cmd =
        app.add_subcommand("check", "test a structural claim about a graph");
    check_cmd->add_option("graph", check.input, "graph file")->required();
    check_cmd
        ->add_option("what", check.what,
                     "chordal | free:<pattern> | dicoloring:<path> | "
                     "unit-interval:<path>")
        ->required();

    dichro::cli::ColorConfig color;
    CLI::App* color_cmd =
        app.add_subcommand("color", "color a digraph and validate the result");
    color_cmd->add_option("graph", color.input, "graph file")->required();
    color_cmd
        ->add_option("method", color.method,
                     "exact | thm25 | ttk-free | unit-interval")
        ->required();
    color_cmd->add_option("--k", color.k, "pattern level for thm25/ttk-free");
    color_cmd->add_option("--rep", color.rep,
                          "interval file for unit-interval");
    color_cmd->add_option("-o,--out", color.out,
                          "coloring file, defaults to <graph>.col");
    add_budget_flags(color_cmd, color.budgets);

    dichro::cli::ClassifyConfig classify;
    CLI::App* classify_cmd =
        app.add_subcommand("classify", "hero status of a tournament");
    classify_cmd
        ->add_option("pattern", classify.pattern,
                     "pattern term or graph file path")
        ->required();

    dichro::cli::VerifyConfig verify;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run a registered property sweep");
    verify_cmd
        ->add_option("property", verify.property,
                     "registered property name, or a unique prefix")
        ->required();
    verify_cmd->add_option("--n", verify.budget.max_n, "universe size");
    verify_cmd->add_option("--k", verify.budget.k, "pattern or level");
    verify_cmd->add_option("--samples", verify.budget.samples,
                           "sample count for randomized universes");
    verify_cmd->add_option("--seed", verify.budget.seed, "sampling seed");
    verify_cmd
        ->add_option("--node-budget", verify.budget.solver_nodes,
                     "search nodes before the exact solver gives up")
        ->envname("DICHRO_NODE_BUDGET");
    verify_cmd->add_option("--workers", verify.budget.workers,
                           "parallel sweep width, 0 = hardware");
    verify_cmd->add_option("--results-dir", verify.budget.results_dir,
                           "write counterexample graphs here");
    verify_cmd->add_flag_callback(
        "--json", [&verify] { verify.format = ReportFormat::structured; },
        "structured report");

    dichro::cli::ExportDotConfig export_dot;
    CLI::App* export_cmd =
        app.add_subcommand("export-dot", "Graphviz rendering of a graph file");
    export_cmd->add_option("graph", export_dot.input, "graph file")->required();
    export_cmd->add_option("--coloring", export_dot.coloring,
                           "coloring file used for fill colors");
    export_cmd->add_option("-o,--out", export_dot.out,
                           "output path, stdout when omitted");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : dichro::cli::kExitUsage;
    }

    if (generate->parsed())
        return dichro::cli::cmd_generate(gen, std::cout, std::cerr);
    if (check_cmd->parsed())
        return dichro::cli::cmd_check(check, std::cout, std::cerr);
    if (color_cmd->parsed())
        return dichro::cli::cmd_color(color, std::cout, std::cerr);
    if (classify_cmd->parsed())
        return dichro::cli::cmd_classify(classify, std::cout, std::cerr);
    if (verify_cmd->parsed())
        return dichro::cli::cmd_verify(verify, std::cout, std::cerr);
    if (export_cmd->parsed())
        return dichro::cli::cmd_export_dot(export_dot, std::cout, std::cerr);
    return dichro::cli::kExitUsage;
}
