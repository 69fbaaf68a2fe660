#ifndef DICHRO_CONSTRUCTIONS_HPP
#define DICHRO_CONSTRUCTIONS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dichro/coloring.hpp"
#include "dichro/digraph.hpp"

namespace dichro {

inline constexpr int kDefaultMaxVertices = 200'000;
inline constexpr std::size_t kDefaultEnumCap = 1'000'000;

/// Level-k member of the triangle-expansion family: a transitive
/// tournament on k vertices where every arc (u,v) carries a fresh level-
/// (k-1) block y with arcs v->y and y->u. Vertex ids: the tournament in
/// topological order, then one block per arc in lexicographic arc order.
Digraph delta122_witness(int k, int max_vertices = kDefaultMaxVertices);

/// The recursive coloring that pieces blocks together: blocks reuse
/// colors 0..k-2, the top tournament takes color k-1. Uses exactly k
/// colors and matches delta122_witness numbering.
Dicoloring delta122_piecing_coloring(int k, int max_vertices = kDefaultMaxVertices);

/// Disjoint union of g and f plus every arc from the transitive set t
/// (vertices of g) to every vertex of f. f's ids shift by g's order.
Digraph glue_front(const Digraph& g, const Digraph& f, std::span<const int> t);

/// New vertex x beating the first split elements of the transitive chain t
/// and beaten by the rest. t must be listed in topological order; split
/// ranges over 1..|t|, where |t| means x sees the whole chain. x gets the
/// next free id.
Digraph insert_apex(const Digraph& g, std::span<const int> t, int split);

/// Every nonempty vertex set inducing a transitive tournament, found by
/// growing chains sink-first along out-arcs; each set appears once, listed
/// in topological order, in DFS discovery order.
struct TransitiveSetIndex {
    int host_vertices = 0;
    std::vector<std::vector<int>> sets;
};

/// size_filter keeps only sets of that size. Every chain visited counts
/// against cap; past it the enumeration throws cap_exceeded and names the
/// partial count.
TransitiveSetIndex enumerate_transitive_sets(const Digraph& d,
                                             std::optional<int> size_filter,
                                             std::size_t cap = kDefaultEnumCap);

/// k-1 rounds of hanging a fresh copy of g under every transitive set of
/// the current round's size: round i attaches one copy per transitive
/// i-set, with all arcs from the set into its copy. Ids: previous round
/// first, then copies in enumeration order.
Digraph rainbow_amplifier(const Digraph& g, int k,
                          std::size_t cap = kDefaultEnumCap,
                          int max_vertices = kDefaultMaxVertices);

/// Colors the amplifier by reusing a valid coloring of g on the base and
/// on every hung copy; no directed cycle leaves a copy, so validity is
/// preserved and the palette stays base.palette.
Dicoloring rainbow_amplifier_coloring(const Digraph& g, const Dicoloring& base,
                                      int k, std::size_t cap = kDefaultEnumCap,
                                      int max_vertices = kDefaultMaxVertices);

/// Level-k member of the dominated-triangle-free family. Level k+1 takes
/// the level-k amplifier F, hangs a copy of F under every transitive set T
/// of F, and adds an apex per pair (T, T') with T' read inside T's copy:
/// the apex is beaten by T' and beats T. Ids: F, then copies in set order,
/// then apexes in (T, T') lexicographic order.
Digraph c3k1_witness(int k, std::size_t cap = kDefaultEnumCap,
                     int max_vertices = kDefaultMaxVertices);

/// k colors: base and copies reuse the level-k coloring, apexes take the
/// new color.
Dicoloring c3k1_piecing_coloring(int k, std::size_t cap = kDefaultEnumCap,
                                 int max_vertices = kDefaultMaxVertices);

/// Level-k member of the cograph family: hub x, three level-(k-1) blocks
/// C1, C2, C3, complete arcs x->C1->C2->C3->x. Ids: hub 0, then the blocks.
Digraph cograph_witness(int k, int max_vertices = kDefaultMaxVertices);

/// Blocks share colors 0..k-2, the hub takes color k-1.
Dicoloring cograph_piecing_coloring(int k, int max_vertices = kDefaultMaxVertices);

/// Induced path on four vertices in cyclic order a-b-c-d, if any.
std::optional<std::array<int, 4>> find_induced_p4(const UndirectedGraph& g);

enum class Verdict { holds, fails, unchecked };
const char* to_string(Verdict v);

struct ChiBound {
    int value = 0;
    std::string method = "not-verified";
    bool verified = false;
};

struct ConstructionReport {
    std::string family;
    int level = 0;
    int vertices = 0;
    int arcs = 0;
    std::string numbering;

    Verdict chordal = Verdict::unchecked;
    std::string chordal_note;
    std::string pattern;
    Verdict pattern_free = Verdict::unchecked;
    std::string pattern_note;

    ChiBound lower, upper;
    bool chi_exact = false;
    std::uint64_t solver_nodes = 0;

    /// Stable key order; reports for equal inputs serialize identically.
    std::string to_json() const;
    std::string to_text() const;
};

struct VerifyBudget {
    std::uint64_t solver_nodes = 20'000'000;
    std::size_t enum_cap = kDefaultEnumCap;
    int exact_chi_max_vertices = 16;
    int lower_attempt_max_vertices = 120;
};

/// Certifies a generated witness: structural class membership, pattern
/// freeness, and dichromatic-number bounds. Budget exhaustion downgrades
/// the affected field instead of aborting; nothing unchecked is reported
/// as verified.
ConstructionReport verify_witness(const Digraph& d, const std::string& family,
                                  int k, const VerifyBudget& budget = {});

}  // namespace dichro

#endif
