#ifndef DICHRO_CHORDAL_HPP
#define DICHRO_CHORDAL_HPP

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "dichro/digraph.hpp"

namespace dichro {

/// order[0] is eliminated first. Perfect when every vertex's neighbors
/// among later-eliminated vertices form a clique.
struct EliminationOrdering {
    std::vector<int> order;
};

/// Chordless cycle on at least four vertices, listed in cyclic order.
struct HoleCertificate {
    std::vector<int> cycle;
};

using ChordalityResult = std::variant<EliminationOrdering, HoleCertificate>;

/// Visit order of maximum cardinality search: repeatedly takes an unvisited
/// vertex with the most visited neighbors, ties broken by lowest id.
std::vector<int> maximum_cardinality_search(const UndirectedGraph& g);

bool is_perfect_elimination_ordering(const UndirectedGraph& g,
                                     const EliminationOrdering& peo);

/// Runs MCS and checks the reversed visit order. Yields a perfect
/// elimination ordering, or a hole certificate when the graph is not
/// chordal. Both outcomes are verifiable in isolation.
ChordalityResult is_chordal(const UndirectedGraph& g);

inline bool chordal(const UndirectedGraph& g) {
    return std::holds_alternative<EliminationOrdering>(is_chordal(g));
}

/// Lowest-id vertex whose neighborhood is a clique. Throws not_chordal when
/// no vertex qualifies (never happens on a nonempty chordal graph).
int find_simplicial(const UndirectedGraph& g);

/// Identifies pairs.first in d1 with pairs.second in d2. The identified
/// vertices must induce tournaments with matching orientation in both
/// inputs. Result keeps d1's labels and appends the remaining d2 vertices
/// in ascending order.
struct VertexPairing {
    std::vector<std::pair<int, int>> pairs;
};

Digraph clique_glue(const Digraph& d1, const Digraph& d2,
                    const VertexPairing& identify);

/// Interval v is [left[v], left[v] + 1]; adjacency means intersection.
struct UnitIntervalRepresentation {
    std::vector<double> left;
};

/// Throws invalid_representation unless every endpoint is non-integral and
/// adjacency in d matches interval intersection exactly.
void validate_unit_intervals(const Digraph& d,
                             const UnitIntervalRepresentation& rep);

/// Vertices whose interval contains the integer point. Nonempty layers in
/// ascending point order; every vertex lands in exactly one layer and each
/// layer induces a tournament.
struct IntervalLayer {
    long long point = 0;
    VertexSet members;
};

std::vector<IntervalLayer> layers_from_unit_intervals(
    const Digraph& d, const UnitIntervalRepresentation& rep);

struct RandomChordalOptions {
    int max_clique = 5;      // attachment cliques are capped at this size
    int max_retries = 256;   // re-draws per vertex before giving up
    const Digraph* avoid = nullptr;  // pattern kept out as induced subdigraph
};

/// Grows an oriented chordal graph by attaching each new vertex to a random
/// clique with random arc directions. Same seed, same digraph. Throws
/// generation_budget_exceeded when rejection sampling stalls.
Digraph random_chordal_orientation(int n, std::uint64_t seed,
                                   const RandomChordalOptions& options = {});

struct RandomUnitIntervalInstance {
    Digraph digraph;
    UnitIntervalRepresentation rep;
};

/// Random unit-interval digraph: left endpoints drawn uniformly from
/// (0, spread) avoiding integers, edges oriented by coin flips.
RandomUnitIntervalInstance random_unit_interval_orientation(int n,
                                                            std::uint64_t seed,
                                                            double spread);

}  // namespace dichro

#endif
