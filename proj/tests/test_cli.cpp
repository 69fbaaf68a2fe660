#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "dichro/cli.hpp"
#include "dichro/coloring.hpp"
#include "dichro/constructions.hpp"
#include "dichro/graph_io.hpp"
#include "dichro/harness.hpp"
#include "dichro/patterns.hpp"

using namespace dichro;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "dichro-cli-test") {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const {
        return (path / name).string();
    }
};

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

}  // namespace

TEST_CASE("generate builds a witness, files and report included") {
    TempDir tmp;
    cli::GenerateConfig config;
    config.family = "delta122";
    config.k = 3;
    config.out = tmp.file("w.digraph");
    config.coloring_out = tmp.file("w.col");

    std::ostringstream out, err;
    CHECK(cli::cmd_generate(config, out, err) == cli::kExitHolds);
    CHECK(err.str().empty());

    const Digraph d = read_digraph_file(config.out);
    CHECK(d.vertex_count() == 12);
    CHECK(d.arc_count() == 30);

    std::ifstream col(config.coloring_out);
    REQUIRE(col.good());
    const Dicoloring c = read_coloring(col, d.vertex_count());
    CHECK(c.palette == 3);
    CHECK(validate_dicoloring(d, c).valid);

    const std::string text = out.str();
    CHECK(text.find("delta122") != std::string::npos);
    CHECK(text.find("12") != std::string::npos);
}

TEST_CASE("generate emits parseable structured reports, byte-identical per config") {
    TempDir tmp;
    cli::GenerateConfig config;
    config.family = "c3k1";
    config.k = 2;
    config.out = tmp.file("t.digraph");
    config.format = cli::ReportFormat::structured;

    std::ostringstream first, second, err;
    REQUIRE(cli::cmd_generate(config, first, err) == cli::kExitHolds);
    REQUIRE(cli::cmd_generate(config, second, err) == cli::kExitHolds);
    CHECK(first.str() == second.str());

    const nlohmann::json doc = nlohmann::json::parse(first.str());
    CHECK(doc.contains("report"));
    CHECK(doc["report"]["vertices"] == 3);
    CHECK(doc["report"]["chi"]["exact"] == true);
}

TEST_CASE("generate rejects unknown families and unwritable outputs") {
    TempDir tmp;
    std::ostringstream out, err;

    cli::GenerateConfig bad_family;
    bad_family.family = "no-such-family";
    bad_family.out = tmp.file("x.digraph");
    CHECK(cli::cmd_generate(bad_family, out, err) == cli::kExitUsage);
    CHECK_FALSE(err.str().empty());

    cli::GenerateConfig bad_out;
    bad_out.family = "delta122";
    bad_out.k = 2;
    bad_out.out = tmp.file("missing-dir") + "/x.digraph";
    std::ostringstream out2, err2;
    CHECK(cli::cmd_generate(bad_out, out2, err2) == cli::kExitUsage);
}

TEST_CASE("generate reports level-4 blowups as input errors, loudly") {
    TempDir tmp;
    cli::GenerateConfig config;
    config.family = "c3k1";
    config.k = 4;
    config.out = tmp.file("huge.digraph");

    std::ostringstream out, err;
    CHECK(cli::cmd_generate(config, out, err) == cli::kExitUsage);
    CHECK_FALSE(err.str().empty());
}

TEST_CASE("check recognizes chordality both ways") {
    TempDir tmp;
    const std::string chordal_path = tmp.file("tt4.digraph");
    write_digraph_file(chordal_path, tt(4));
    const std::string hole_path = tmp.file("hole.digraph");
    write_digraph_file(hole_path, Digraph::from_arcs(4, {Arc{0, 1}, Arc{1, 2},
                                                         Arc{0, 3}, Arc{3, 2}}));

    std::ostringstream out, err;
    CHECK(cli::cmd_check({chordal_path, "chordal"}, out, err) == cli::kExitHolds);
    CHECK(out.str().find("elimination") != std::string::npos);

    std::ostringstream out2, err2;
    CHECK(cli::cmd_check({hole_path, "chordal"}, out2, err2) == cli::kExitRefuted);
    CHECK(out2.str().find("hole") != std::string::npos);
}

TEST_CASE("check tests pattern freeness with embeddings as certificates") {
    TempDir tmp;
    const std::string path = tmp.file("d.digraph");
    write_digraph_file(path, delta1(1, 2));

    std::ostringstream out, err;
    CHECK(cli::cmd_check({path, "free:D 1 2 2"}, out, err) == cli::kExitHolds);

    std::ostringstream out2, err2;
    CHECK(cli::cmd_check({path, "free:C3"}, out2, err2) == cli::kExitRefuted);
    CHECK_FALSE(out2.str().empty());

    std::ostringstream out3, err3;
    CHECK(cli::cmd_check({path, "free:bogus"}, out3, err3) == cli::kExitUsage);
}

TEST_CASE("check validates dicolorings against the graph") {
    TempDir tmp;
    const std::string graph = tmp.file("c3.digraph");
    write_digraph_file(graph, c3());
    const std::string good = tmp.file("good.col");
    write_text(good, "0 0\n1 0\n2 1\n");
    const std::string bad = tmp.file("bad.col");
    write_text(bad, "0 0\n1 0\n2 0\n");

    std::ostringstream out, err;
    CHECK(cli::cmd_check({graph, "dicoloring:" + good}, out, err) ==
          cli::kExitHolds);

    std::ostringstream out2, err2;
    CHECK(cli::cmd_check({graph, "dicoloring:" + bad}, out2, err2) ==
          cli::kExitRefuted);
    CHECK(out2.str().find("cycle") != std::string::npos);
}

TEST_CASE("check validates unit-interval representations") {
    TempDir tmp;
    const std::string graph = tmp.file("ui.digraph");
    write_digraph_file(graph, Digraph::from_arcs(3, {Arc{0, 1}}));
    const std::string good = tmp.file("good.intervals");
    write_text(good, "0 0.5\n1 0.9\n2 2.2\n");
    const std::string bad = tmp.file("bad.intervals");
    write_text(bad, "0 0.5\n1 1.7\n2 2.2\n");

    std::ostringstream out, err;
    CHECK(cli::cmd_check({graph, "unit-interval:" + good}, out, err) ==
          cli::kExitHolds);
    std::ostringstream out2, err2;
    CHECK(cli::cmd_check({graph, "unit-interval:" + bad}, out2, err2) ==
          cli::kExitRefuted);
}

TEST_CASE("check rejects unknown modes and missing files") {
    TempDir tmp;
    const std::string graph = tmp.file("g.digraph");
    write_digraph_file(graph, c3());

    std::ostringstream out, err;
    CHECK(cli::cmd_check({graph, "nonsense"}, out, err) == cli::kExitUsage);
    std::ostringstream out2, err2;
    CHECK(cli::cmd_check({tmp.file("absent.digraph"), "chordal"}, out2, err2) ==
          cli::kExitUsage);
}

TEST_CASE("color writes validated colorings and reports the palette") {
    TempDir tmp;
    const std::string graph = tmp.file("w3.digraph");
    write_digraph_file(graph, delta122_witness(3));

    cli::ColorConfig config;
    config.input = graph;
    config.method = "exact";
    std::ostringstream out, err;
    CHECK(cli::cmd_color(config, out, err) == cli::kExitHolds);
    CHECK(out.str().find("3") != std::string::npos);

    std::ifstream col(graph + ".col");
    REQUIRE(col.good());
    const Dicoloring c = read_coloring(col, 12);
    CHECK(c.palette == 3);
    CHECK(validate_dicoloring(delta122_witness(3), c).valid);
}

TEST_CASE("color surfaces exhausted budgets as exit 3") {
    TempDir tmp;
    const std::string graph = tmp.file("w3.digraph");
    write_digraph_file(graph, delta122_witness(3));

    cli::ColorConfig config;
    config.input = graph;
    config.method = "exact";
    config.budgets.solver_nodes = 1;
    std::ostringstream out, err;
    CHECK(cli::cmd_color(config, out, err) == cli::kExitBudget);
    CHECK_FALSE(err.str().empty());
}

TEST_CASE("structural coloring methods enforce their preconditions") {
    TempDir tmp;
    const std::string hole = tmp.file("hole.digraph");
    write_digraph_file(hole, Digraph::from_arcs(4, {Arc{0, 1}, Arc{1, 2},
                                                    Arc{0, 3}, Arc{3, 2}}));

    cli::ColorConfig config;
    config.input = hole;
    config.method = "thm25";
    config.k = 2;
    std::ostringstream out, err;
    CHECK(cli::cmd_color(config, out, err) == cli::kExitUsage);
    CHECK_FALSE(err.str().empty());

    cli::ColorConfig no_rep;
    no_rep.input = hole;
    no_rep.method = "unit-interval";
    std::ostringstream out2, err2;
    CHECK(cli::cmd_color(no_rep, out2, err2) == cli::kExitUsage);
}

TEST_CASE("unit-interval coloring runs from a representation file") {
    TempDir tmp;
    const std::string graph = tmp.file("ui.digraph");
    write_digraph_file(graph, Digraph::from_arcs(3, {Arc{0, 1}}));
    const std::string rep = tmp.file("ui.intervals");
    write_text(rep, "0 0.5\n1 0.9\n2 2.2\n");

    cli::ColorConfig config;
    config.input = graph;
    config.method = "unit-interval";
    config.rep = rep;
    config.out = tmp.file("ui.col");
    std::ostringstream out, err;
    CHECK(cli::cmd_color(config, out, err) == cli::kExitHolds);

    std::ifstream col(config.out);
    REQUIRE(col.good());
    const Dicoloring c = read_coloring(col, 3);
    CHECK(validate_dicoloring(read_digraph_file(graph), c).valid);
}

TEST_CASE("classify explains tournaments and rejects everything else") {
    std::ostringstream out, err;
    CHECK(cli::cmd_classify({"D 1 1 2"}, out, err) == cli::kExitHolds);
    const std::string text = out.str();
    CHECK(text.find("hero") != std::string::npos);
    CHECK(text.find("chordal") != std::string::npos);

    TempDir tmp;
    const std::string nontournament = tmp.file("p2.digraph");
    write_digraph_file(nontournament, Digraph::from_arcs(3, {Arc{0, 1}}));
    std::ostringstream out2, err2;
    CHECK(cli::cmd_classify({nontournament}, out2, err2) == cli::kExitUsage);
    CHECK_FALSE(err2.str().empty());

    std::ostringstream out3, err3;
    CHECK(cli::cmd_classify({"gibberish"}, out3, err3) == cli::kExitUsage);
}

TEST_CASE("classify names the obstructions of non-heroes") {
    std::ostringstream out, err;
    CHECK(cli::cmd_classify({"D 1 2 2"}, out, err) == cli::kExitHolds);
    CHECK(out.str().find("no") != std::string::npos);
}

TEST_CASE("verify resolves unique prefixes and reports verdicts") {
    cli::VerifyConfig config;
    config.property = "lemma24";
    config.budget.max_n = 5;
    std::ostringstream out, err;
    CHECK(cli::cmd_verify(config, out, err) == cli::kExitHolds);
    CHECK(out.str().find("lemma24_bound") != std::string::npos);
    CHECK(out.str().find("holds") != std::string::npos);

    cli::VerifyConfig ambiguous;
    ambiguous.property = "t";
    std::ostringstream out2, err2;
    CHECK(cli::cmd_verify(ambiguous, out2, err2) == cli::kExitUsage);
    CHECK(err2.str().find("thm25_bound") != std::string::npos);
    CHECK(err2.str().find("thm31_bound") != std::string::npos);

    cli::VerifyConfig unknown;
    unknown.property = "zeta";
    std::ostringstream out3, err3;
    CHECK(cli::cmd_verify(unknown, out3, err3) == cli::kExitUsage);
}

TEST_CASE("verify reports truncated sweeps as exhausted budgets") {
    cli::VerifyConfig config;
    config.property = "thm31_bound";
    config.budget.max_n = 60;
    config.budget.samples = 3;
    config.budget.solver_nodes = 1;
    std::ostringstream out, err;
    CHECK(cli::cmd_verify(config, out, err) == cli::kExitBudget);
    CHECK(out.str().find("truncated") != std::string::npos);
}

TEST_CASE("verify reports refuted sweeps with counterexamples as exit 1") {
    register_property("cli_always_fails", "synthetic failing property",
                      [](const PropertyBudget&) {
                          PropertyResult r;
                          r.name = "cli_always_fails";
                          r.universe = "one triangle";
                          r.instances_checked = 1;
                          r.counterexamples.push_back(c3());
                          return r;
                      });
    cli::VerifyConfig config;
    config.property = "cli_always_fails";
    std::ostringstream out, err;
    CHECK(cli::cmd_verify(config, out, err) == cli::kExitRefuted);
    CHECK(out.str().find("refuted") != std::string::npos);
}

TEST_CASE("verify structured output is parseable and byte-stable") {
    cli::VerifyConfig config;
    config.property = "stearns_bound";
    config.budget.max_n = 5;
    config.budget.samples = 10;
    config.format = cli::ReportFormat::structured;

    std::ostringstream first, second, err;
    REQUIRE(cli::cmd_verify(config, first, err) == cli::kExitHolds);
    REQUIRE(cli::cmd_verify(config, second, err) == cli::kExitHolds);
    CHECK(first.str() == second.str());
    const nlohmann::json doc = nlohmann::json::parse(first.str());
    CHECK(doc["result"]["name"] == "stearns_bound");
    CHECK(doc["result"]["holds"] == true);
}

TEST_CASE("export-dot renders graphs with and without colorings") {
    TempDir tmp;
    const std::string graph = tmp.file("c3.digraph");
    write_digraph_file(graph, c3());
    const std::string col = tmp.file("c3.col");
    write_text(col, "0 0\n1 0\n2 1\n");

    std::ostringstream out, err;
    CHECK(cli::cmd_export_dot({graph, "", ""}, out, err) == cli::kExitHolds);
    CHECK(out.str().find("digraph") != std::string::npos);
    CHECK(out.str().find("->") != std::string::npos);

    cli::ExportDotConfig to_file{graph, col, tmp.file("c3.dot")};
    std::ostringstream out2, err2;
    CHECK(cli::cmd_export_dot(to_file, out2, err2) == cli::kExitHolds);
    std::ifstream dot(to_file.out);
    REQUIRE(dot.good());
    std::stringstream text;
    text << dot.rdbuf();
    CHECK(text.str().find("fillcolor") != std::string::npos);

    std::ostringstream out3, err3;
    CHECK(cli::cmd_export_dot({tmp.file("none.digraph"), "", ""}, out3, err3) ==
          cli::kExitUsage);
}
