#include "dichro/digraph.hpp"

#include <algorithm>

namespace dichro {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::loop_arc: return "loop_arc";
        case ErrorCode::digon_arc: return "digon_arc";
        case ErrorCode::duplicate_arc: return "duplicate_arc";
        case ErrorCode::duplicate_edge: return "duplicate_edge";
        case ErrorCode::vertex_out_of_range: return "vertex_out_of_range";
        case ErrorCode::not_a_tournament: return "not_a_tournament";
        case ErrorCode::not_transitive: return "not_transitive";
        case ErrorCode::not_chordal: return "not_chordal";
        case ErrorCode::not_a_hero: return "not_a_hero";
        case ErrorCode::shared_set_not_clique: return "shared_set_not_clique";
        case ErrorCode::orientation_mismatch: return "orientation_mismatch";
        case ErrorCode::invalid_representation: return "invalid_representation";
        case ErrorCode::partial_coloring: return "partial_coloring";
        case ErrorCode::no_free_color: return "no_free_color";
        case ErrorCode::clique_too_large: return "clique_too_large";
        case ErrorCode::split_out_of_range: return "split_out_of_range";
        case ErrorCode::size_limit_exceeded: return "size_limit_exceeded";
        case ErrorCode::cap_exceeded: return "cap_exceeded";
        case ErrorCode::generation_budget_exceeded: return "generation_budget_exceeded";
        case ErrorCode::universe_too_large: return "universe_too_large";
        case ErrorCode::invalid_parameter: return "invalid_parameter";
        case ErrorCode::precondition_violated: return "precondition_violated";
        case ErrorCode::parse_error: return "parse_error";
        case ErrorCode::io_error: return "io_error";
        case ErrorCode::unknown_property: return "unknown_property";
    }
    return "unknown";
}

namespace {

[[noreturn]] void bad_vertex(int v, int n) {
    throw Error(ErrorCode::vertex_out_of_range,
                "vertex " + std::to_string(v) + " outside universe of size " +
                    std::to_string(n));
}

}  // namespace

int Digraph::check(int v) const {
    if (v < 0 || v >= n_) bad_vertex(v, n_);
    return v;
}

Digraph Digraph::from_arcs(int n, std::span<const Arc> arcs) {
    if (n < 0)
        throw Error(ErrorCode::invalid_parameter, "negative vertex count");
    DigraphBuilder b(n);
    for (const Arc& a : arcs) b.add_arc(a.from, a.to);
    return std::move(b).build();
}

Digraph Digraph::from_arcs(int n, std::initializer_list<Arc> arcs) {
    return from_arcs(n, std::span<const Arc>(arcs.begin(), arcs.size()));
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        out_[u].for_each([&](int v) { out.push_back({u, v}); });
    return out;
}

DigraphBuilder::DigraphBuilder(int n) {
    if (n < 0)
        throw Error(ErrorCode::invalid_parameter, "negative vertex count");
    g_.n_ = n;
    g_.out_.assign(static_cast<std::size_t>(n), VertexSet(n));
    g_.in_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

void DigraphBuilder::add_arc(int u, int v) {
    const int n = g_.n_;
    if (u < 0 || u >= n) bad_vertex(u, n);
    if (v < 0 || v >= n) bad_vertex(v, n);
    const std::string pair =
        "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    if (u == v) throw Error(ErrorCode::loop_arc, "loop arc " + pair);
    if (g_.out_[v].test(u))
        throw Error(ErrorCode::digon_arc, "arc " + pair + " closes a digon");
    if (g_.out_[u].test(v))
        throw Error(ErrorCode::duplicate_arc, "arc " + pair + " added twice");
    g_.out_[u].set(v);
    g_.in_[v].set(u);
    ++g_.m_;
}

Digraph DigraphBuilder::build() && { return std::move(g_); }

UndirectedGraph::UndirectedGraph(int n) : n_(n) {
    if (n < 0)
        throw Error(ErrorCode::invalid_parameter, "negative vertex count");
    adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

int UndirectedGraph::check(int v) const {
    if (v < 0 || v >= n_) bad_vertex(v, n_);
    return v;
}

void UndirectedGraph::add_edge(int u, int v) {
    check(u);
    check(v);
    const std::string pair =
        "{" + std::to_string(u) + "," + std::to_string(v) + "}";
    if (u == v) throw Error(ErrorCode::loop_arc, "loop edge " + pair);
    if (adj_[u].test(v))
        throw Error(ErrorCode::duplicate_edge, "edge " + pair + " added twice");
    adj_[u].set(v);
    adj_[v].set(u);
    ++m_;
}

UndirectedGraph UndirectedGraph::from_edges(int n, std::span<const Edge> edges) {
    UndirectedGraph g(n);
    for (const Edge& e : edges) g.add_edge(e.a, e.b);
    return g;
}

UndirectedGraph UndirectedGraph::from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

bool is_tournament(const Digraph& d) {
    const int n = d.vertex_count();
    if (d.arc_count() * 2 != n * (n - 1)) return false;
    for (int v = 0; v < n; ++v)
        if (d.out_degree(v) + d.in_degree(v) != n - 1) return false;
    return true;
}

bool is_acyclic(const Digraph& d) {
    // Kahn's algorithm.
    const int n = d.vertex_count();
    std::vector<int> indeg(static_cast<std::size_t>(n));
    std::vector<int> stack;
    stack.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        indeg[v] = d.in_degree(v);
        if (indeg[v] == 0) stack.push_back(v);
    }
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        d.out(v).for_each([&](int w) {
            if (--indeg[w] == 0) stack.push_back(w);
        });
    }
    return seen == n;
}

Digraph induced(const Digraph& d, const VertexSet& s) {
    if (s.universe() != d.vertex_count())
        throw Error(ErrorCode::vertex_out_of_range,
                    "vertex set universe does not match digraph");
    const std::vector<int> ids = s.to_vector();
    std::vector<int> local(static_cast<std::size_t>(d.vertex_count()), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) local[ids[i]] = static_cast<int>(i);
    DigraphBuilder b(static_cast<int>(ids.size()));
    for (int u : ids) {
        VertexSet row = d.out(u) & s;
        row.for_each([&](int v) { b.add_arc(local[u], local[v]); });
    }
    return std::move(b).build();
}

Digraph induced(const Digraph& d, std::span<const int> vertices) {
    VertexSet s(d.vertex_count());
    for (int v : vertices) {
        if (v < 0 || v >= d.vertex_count()) bad_vertex(v, d.vertex_count());
        s.set(v);
    }
    return induced(d, s);
}

UndirectedGraph induced(const UndirectedGraph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count())
        throw Error(ErrorCode::vertex_out_of_range,
                    "vertex set universe does not match graph");
    const std::vector<int> ids = s.to_vector();
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) local[ids[i]] = static_cast<int>(i);
    UndirectedGraph out(static_cast<int>(ids.size()));
    for (int u : ids) {
        VertexSet row = g.neighbors(u) & s;
        row.for_each([&](int v) {
            if (u < v) out.add_edge(local[u], local[v]);
        });
    }
    return out;
}

Digraph reverse(const Digraph& d) {
    DigraphBuilder b(d.vertex_count());
    for (int u = 0; u < d.vertex_count(); ++u)
        d.out(u).for_each([&](int v) { b.add_arc(v, u); });
    return std::move(b).build();
}

std::optional<std::vector<int>> transitive_order(const Digraph& d) {
    if (!is_tournament(d)) return std::nullopt;
    const int n = d.vertex_count();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = d.out_degree(a), db = d.out_degree(b);
        return da != db ? da > db : a < b;
    });
    // In a transitive tournament position i beats exactly the n-1-i later
    // vertices, so out rows must equal the suffix sets.
    VertexSet suffix(n);
    for (int i = n - 1; i >= 0; --i) {
        if (!(d.out(order[i]) == suffix)) return std::nullopt;
        suffix.set(order[i]);
    }
    return order;
}

std::vector<std::vector<int>> strong_components(const Digraph& d) {
    // Iterative Tarjan; components pop in reverse topological order.
    const int n = d.vertex_count();
    std::vector<int> index(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<int> scc_stack;
    std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
    std::vector<std::vector<int>> components;
    int next_index = 0;

    struct Frame {
        int v;
        int next;
    };
    std::vector<Frame> call;

    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        call.push_back({root, -1});
        while (!call.empty()) {
            Frame& f = call.back();
            int v = f.v;
            if (f.next == -1) {
                index[v] = low[v] = next_index++;
                scc_stack.push_back(v);
                on_stack[v] = true;
            } else {
                low[v] = std::min(low[v], low[f.next]);
            }
            int w = d.out(v).next(f.next);
            bool descended = false;
            while (w != -1) {
                if (index[w] == -1) {
                    f.next = w;
                    call.push_back({w, -1});
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[v] = std::min(low[v], index[w]);
                w = d.out(v).next(w);
            }
            if (descended) continue;
            if (low[v] == index[v]) {
                std::vector<int> members;
                while (true) {
                    int u = scc_stack.back();
                    scc_stack.pop_back();
                    on_stack[u] = false;
                    comp[u] = static_cast<int>(components.size());
                    members.push_back(u);
                    if (u == v) break;
                }
                std::sort(members.begin(), members.end());
                components.push_back(std::move(members));
            }
            call.pop_back();
        }
    }
    std::reverse(components.begin(), components.end());
    return components;
}

Digraph compose_all_arcs(const Digraph& front, const Digraph& back) {
    const int nf = front.vertex_count();
    const int nb = back.vertex_count();
    DigraphBuilder b(nf + nb);
    for (const Arc& a : front.arcs()) b.add_arc(a.from, a.to);
    for (const Arc& a : back.arcs()) b.add_arc(nf + a.from, nf + a.to);
    for (int u = 0; u < nf; ++u)
        for (int v = 0; v < nb; ++v) b.add_arc(u, nf + v);
    return std::move(b).build();
}

UndirectedGraph underlying_graph(const Digraph& d) {
    UndirectedGraph g(d.vertex_count());
    for (const Arc& a : d.arcs()) g.add_edge(a.from, a.to);
    return g;
}

}  // namespace dichro
