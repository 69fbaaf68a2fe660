#ifndef DICHRO_HARNESS_HPP
#define DICHRO_HARNESS_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dichro/digraph.hpp"
#include "dichro/patterns.hpp"

namespace dichro {

/// Digraphs beyond this order have no canonical form here; callers fall
/// back to structural checks.
inline constexpr int kCanonicalMaxVertices = 8;

/// Lexicographically minimal row-major adjacency encoding over all vertex
/// permutations. n*n fits one word because n <= 8.
struct CanonicalForm {
    int n = 0;
    std::uint64_t code = 0;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Digraph& d);
bool canonically_equal(const Digraph& a, const Digraph& b);

/// Labeled tournament with this index: bit p of index orients pair p in
/// the lexicographic pair order (i<j), set meaning i -> j.
Digraph tournament_from_index(int n, std::uint64_t index);
std::uint64_t tournament_count(int n);  // 2^C(n,2); throws above n = 8

void for_each_labeled_tournament(int n, const std::function<void(const Digraph&)>& fn);

/// One representative per isomorphism class, ordered by canonical form.
std::vector<Digraph> tournament_classes(int n);

std::vector<Digraph> sample_tournaments(int n, int count, std::uint64_t seed);

/// Closure of the single vertex under full composition and transitive-side
/// apexing, restricted to at most max_vertices vertices.
struct HeroClosure {
    std::map<CanonicalForm, std::pair<Digraph, HeroExprPtr>> classes;
};

HeroClosure enumerate_heroes(int max_vertices);

struct PropertyBudget {
    int max_n = -1;        // universe size; property default when negative
    int k = -1;            // pattern or level parameter
    int samples = -1;      // sample count for randomized universes
    std::uint64_t seed = 1;
    std::uint64_t solver_nodes = 20'000'000;
    int workers = 0;       // 0 means hardware concurrency
    std::string results_dir;  // counterexample graphs are written here
};

struct PropertyResult {
    std::string name;
    std::string universe;
    std::uint64_t instances_checked = 0;
    std::vector<Digraph> counterexamples;
    std::vector<std::string> counterexample_paths;
    bool truncated = false;  // a budget or cap cut the sweep short
    std::string note;
    double elapsed_seconds = 0.0;

    bool holds() const { return counterexamples.empty() && !truncated; }

    /// Stable-key JSON. Timing is opt-in so identical runs serialize
    /// identically.
    std::string to_json(bool include_timing = false) const;
};

/// Data-driven registry; tests may add properties of their own.
std::vector<std::string> registered_properties();
std::string property_description(const std::string& name);
void register_property(const std::string& name, const std::string& description,
                       std::function<PropertyResult(const PropertyBudget&)> run);

/// Runs a registered property. Throws unknown_property for names outside
/// the registry.
PropertyResult check_property(const std::string& name,
                              const PropertyBudget& budget = {});

}  // namespace dichro

#endif
