#ifndef DICHRO_CLI_HPP
#define DICHRO_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "dichro/constructions.hpp"
#include "dichro/harness.hpp"

namespace dichro::cli {

/// Stable exit-code contract shared by every subcommand.
inline constexpr int kExitHolds = 0;    // success, claim holds
inline constexpr int kExitRefuted = 1;  // claim fails, certificate printed
inline constexpr int kExitUsage = 2;    // usage, parse, or input error
inline constexpr int kExitBudget = 3;   // a budget cut the computation short

enum class ReportFormat { text, structured };

struct Budgets {
    std::uint64_t solver_nodes = 20'000'000;
    std::size_t enum_cap = kDefaultEnumCap;
    int max_vertices = kDefaultMaxVertices;
};

/// generate <family> <k>: builds a witness, writes the graph file, runs the
/// structural certificate, and prints the report. Cap and limit errors exit 2.
struct GenerateConfig {
    std::string family;        // delta122 | c3k1 | cograph | amplifier | random-chordal
    int k = 2;
    int n = 20;                // order of random-chordal instances
    std::uint64_t seed = 1;
    std::string avoid;         // pattern kept out of random-chordal instances
    std::string out;           // graph file path
    std::string coloring_out;  // optional: the construction's own coloring
    ReportFormat format = ReportFormat::text;
    Budgets budgets;
};
int cmd_generate(const GenerateConfig& config, std::ostream& out,
                 std::ostream& err);

/// check <graph> <what>: chordal | free:<pattern> | dicoloring:<path> |
/// unit-interval:<path>. Exit 0 holds, 1 fails with certificate.
struct CheckConfig {
    std::string input;
    std::string what;
};
int cmd_check(const CheckConfig& config, std::ostream& out, std::ostream& err);

/// color <graph> <method>: exact | thm25 | ttk-free | unit-interval. Writes
/// the coloring file and prints the validated color count. Budget exit 3.
struct ColorConfig {
    std::string input;
    std::string method;
    int k = 2;        // pattern level for thm25 / ttk-free
    std::string rep;  // interval file, unit-interval only
    std::string out;  // coloring file; defaults to <input>.col
    Budgets budgets;
};
int cmd_color(const ColorConfig& config, std::ostream& out, std::ostream& err);

/// classify <pattern|path>: tournament membership in the hero grammar, the
/// chordal-orientation verdict, and the obstruction classification.
struct ClassifyConfig {
    std::string pattern;
};
int cmd_classify(const ClassifyConfig& config, std::ostream& out,
                 std::ostream& err);

/// verify <property>: runs a registered sweep. Exit 0 only when nothing was
/// refuted and nothing was truncated; truncation exits 3.
struct VerifyConfig {
    std::string property;  // registered name or a unique prefix of one
    PropertyBudget budget;
    ReportFormat format = ReportFormat::text;
};
int cmd_verify(const VerifyConfig& config, std::ostream& out,
               std::ostream& err);

/// export-dot <graph>: Graphviz text, optionally annotated with a coloring.
struct ExportDotConfig {
    std::string input;
    std::string coloring;  // optional coloring file
    std::string out;       // empty prints to stdout
};
int cmd_export_dot(const ExportDotConfig& config, std::ostream& out,
                   std::ostream& err);

}  // namespace dichro::cli

#endif
