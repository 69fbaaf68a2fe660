#ifndef DICHRO_DIGRAPH_HPP
#define DICHRO_DIGRAPH_HPP

#include <compare>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dichro/vertex_set.hpp"

namespace dichro {

enum class ErrorCode {
    loop_arc,
    digon_arc,
    duplicate_arc,
    duplicate_edge,
    vertex_out_of_range,
    not_a_tournament,
    not_transitive,
    not_chordal,
    not_a_hero,
    shared_set_not_clique,
    orientation_mismatch,
    invalid_representation,
    partial_coloring,
    no_free_color,
    clique_too_large,
    split_out_of_range,
    size_limit_exceeded,
    cap_exceeded,
    generation_budget_exceeded,
    universe_too_large,
    invalid_parameter,
    precondition_violated,
    parse_error,
    io_error,
    unknown_property,
};

const char* to_string(ErrorCode code);

/// Library error carrying a machine-readable code; messages name the
/// offending vertices or arcs where that helps diagnosis.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct Arc {
    int from = 0;
    int to = 0;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct Edge {
    int a = 0;
    int b = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple oriented graph on vertices 0..n-1: no loops, no pair with arcs
/// both ways. Immutable once built; adjacency kept as bit rows both ways.
class Digraph {
public:
    Digraph() = default;

    /// Validates every arc; rejects loops, digons, duplicates, and
    /// out-of-range endpoints.
    static Digraph from_arcs(int n, std::span<const Arc> arcs);
    static Digraph from_arcs(int n, std::initializer_list<Arc> arcs);

    int vertex_count() const noexcept { return n_; }
    int arc_count() const noexcept { return m_; }

    bool has_arc(int u, int v) const { return out_[check(u)].test(check(v)); }
    bool adjacent(int u, int v) const {
        return out_[check(u)].test(check(v)) || out_[v].test(u);
    }

    const VertexSet& out(int v) const { return out_[check(v)]; }
    const VertexSet& in(int v) const { return in_[check(v)]; }
    int out_degree(int v) const { return out(v).count(); }
    int in_degree(int v) const { return in(v).count(); }

    /// All arcs in ascending (from, to) order.
    std::vector<Arc> arcs() const;

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    friend class DigraphBuilder;
    int check(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> out_, in_;
};

/// Incremental construction with the same validity rules as
/// Digraph::from_arcs. Intended for generators that add arcs in bulk.
class DigraphBuilder {
public:
    explicit DigraphBuilder(int n);

    int vertex_count() const noexcept { return g_.vertex_count(); }
    bool has_arc(int u, int v) const { return g_.has_arc(u, v); }
    void add_arc(int u, int v);

    Digraph build() &&;

private:
    Digraph g_;
};

/// Simple undirected graph: no loops, no parallel edges.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    explicit UndirectedGraph(int n);

    static UndirectedGraph from_edges(int n, std::span<const Edge> edges);
    static UndirectedGraph from_edges(int n, std::initializer_list<Edge> edges);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return m_; }

    bool adjacent(int u, int v) const { return adj_[check(u)].test(check(v)); }
    const VertexSet& neighbors(int v) const { return adj_[check(v)]; }
    int degree(int v) const { return neighbors(v).count(); }

    void add_edge(int u, int v);

    friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

private:
    int check(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

bool is_tournament(const Digraph& d);
bool is_acyclic(const Digraph& d);

/// Subdigraph on the given vertices, relabeled 0..|s|-1 by ascending
/// original id.
Digraph induced(const Digraph& d, const VertexSet& s);
Digraph induced(const Digraph& d, std::span<const int> vertices);
UndirectedGraph induced(const UndirectedGraph& g, const VertexSet& s);

/// Same vertices, every arc flipped.
Digraph reverse(const Digraph& d);

/// If d is a tournament with a transitive orientation, its unique
/// topological order (sources first); otherwise nullopt.
std::optional<std::vector<int>> transitive_order(const Digraph& d);

inline bool is_transitive_tournament(const Digraph& d) {
    return transitive_order(d).has_value();
}

/// Strongly connected components in topological order of the condensation;
/// vertices inside each component ascend.
std::vector<std::vector<int>> strong_components(const Digraph& d);

/// Disjoint union of front and back plus every arc from front to back.
/// Vertices of back are shifted by front.vertex_count().
Digraph compose_all_arcs(const Digraph& front, const Digraph& back);

UndirectedGraph underlying_graph(const Digraph& d);

}  // namespace dichro

#endif
