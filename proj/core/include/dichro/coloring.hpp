#ifndef DICHRO_COLORING_HPP
#define DICHRO_COLORING_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dichro/chordal.hpp"
#include "dichro/digraph.hpp"

namespace dichro {

/// color[v] in 0..palette-1; a coloring is valid when every color class
/// induces an acyclic subdigraph.
struct Dicoloring {
    std::vector<int> color;
    int palette = 0;
};

struct DicoloringCheck {
    bool valid = false;
    std::vector<int> monochromatic_cycle;  // witness when invalid
};

/// Throws partial_coloring when colors are missing or out of range.
DicoloringCheck validate_dicoloring(const Digraph& d, const Dicoloring& c);

struct SolverOptions {
    std::uint64_t node_budget = 50'000'000;  // search nodes before giving up
    int threads = 1;                         // >1 splits top-level branches
};

enum class SolveStatus { found, infeasible, budget_exceeded };

struct SolveOutcome {
    SolveStatus status = SolveStatus::infeasible;
    Dicoloring coloring;  // set when status == found
    std::uint64_t nodes = 0;
};

/// Exact test via backtracking in degeneracy order with incremental
/// per-class acyclicity checks and canonical color symmetry breaking.
/// budget_exceeded is a distinct outcome, never conflated with
/// infeasible.
SolveOutcome is_k_dicolorable(const Digraph& d, int k,
                              const SolverOptions& options = {});

struct ChiResult {
    SolveStatus status = SolveStatus::found;
    int chi = 0;             // exact when status == found
    Dicoloring witness;      // valid chi-dicoloring when found
    int refuted_below = 0;   // every k <= this is proven infeasible
    std::uint64_t nodes = 0;
};

/// Iterates k = 1, 2, ... until a coloring exists.
ChiResult dichromatic_number(const Digraph& d, const SolverOptions& options = {});

/// Greedy transitive subtournament: repeatedly keeps a vertex of
/// out-degree at least (remaining-1)/2 and recurses into its
/// out-neighborhood. Returns at least floor(log2 n) + 1 vertices in
/// topological order.
std::vector<int> stearns_transitive(const Digraph& t);

/// Maximum number of directed triangles through x that are pairwise
/// disjoint apart from x, computed as a maximum matching between x's
/// out- and in-neighborhoods.
int triangle_degree(const Digraph& d, int x);

/// Colors an orientation of a chordal graph that has no induced
/// delta1(1,k), using at most 2^(2k-2) colors: simplicial vertices are
/// removed, then reinserted with the lowest color that closes no
/// monochromatic triangle. Set verify to have the preconditions checked.
Dicoloring color_delta11k_free_chordal(const Digraph& d, int k,
                                       bool verify = false);

/// Proper coloring of the underlying chordal graph by reverse elimination
/// greedy; without tt(k) the clique number stays under 2^(k-1), so at most
/// 2^(k-1)-1 colors are used. Throws clique_too_large past the bound.
Dicoloring color_ttk_free_chordal(const Digraph& d, int k,
                                  bool verify = false);

using TournamentColorer = std::function<Dicoloring(const Digraph&)>;

struct UnitIntervalColoring {
    Dicoloring coloring;    // palette 2 * layer_palette
    int layer_palette = 0;  // worst layer over the chosen sub-solver
};

/// Colors layer tournaments independently and alternates two disjoint
/// palettes between odd and even layers. Default sub-solver is the exact
/// one.
UnitIntervalColoring color_unit_interval(const Digraph& d,
                                         const UnitIntervalRepresentation& rep,
                                         const TournamentColorer& colorer = {});

}  // namespace dichro

#endif
