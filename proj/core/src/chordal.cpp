#include "dichro/chordal.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "dichro/patterns.hpp"

namespace dichro {

std::vector<int> maximum_cardinality_search(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!visited[v] && (best == -1 || weight[v] > weight[best])) best = v;
        visited[best] = true;
        order.push_back(best);
        g.neighbors(best).for_each([&](int w) {
            if (!visited[w]) ++weight[w];
        });
    }
    return order;
}

bool is_perfect_elimination_ordering(const UndirectedGraph& g,
                                     const EliminationOrdering& peo) {
    const int n = g.vertex_count();
    if (static_cast<int>(peo.order.size()) != n) return false;
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int v = peo.order[i];
        if (v < 0 || v >= n || pos[v] != -1) return false;
        pos[v] = i;
    }
    VertexSet later = VertexSet::full(n);
    for (int i = 0; i < n; ++i) {
        int v = peo.order[i];
        later.reset(v);
        VertexSet s = g.neighbors(v) & later;
        // Later neighbors must be pairwise adjacent.
        bool ok = true;
        s.for_each([&](int w) {
            VertexSet rest = s;
            rest.reset(w);
            if (!rest.is_subset_of(g.neighbors(w))) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

namespace {

// First witness that the reversed MCS order is imperfect: a vertex v with
// two non-adjacent neighbors among the later-eliminated ones.
struct PeoFailure {
    int v, x, y;
};

std::optional<PeoFailure> first_peo_failure(const UndirectedGraph& g,
                                            const std::vector<int>& order) {
    const int n = g.vertex_count();
    VertexSet later = VertexSet::full(n);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        later.reset(v);
        VertexSet s = g.neighbors(v) & later;
        for (int x = s.first(); x != -1; x = s.next(x)) {
            VertexSet rest = s - g.neighbors(x);
            rest.reset(x);
            int y = rest.first();
            if (y != -1) return PeoFailure{v, x, y};
        }
    }
    return std::nullopt;
}

// Shortest x-y path avoiding N[v] \ {x,y}, then the cycle v,x,...,y. The
// path's interior is non-adjacent to v and chordless, so the cycle is a hole.
std::optional<HoleCertificate> hole_through(const UndirectedGraph& g, int v,
                                            int x, int y) {
    const int n = g.vertex_count();
    VertexSet allowed = VertexSet::full(n);
    allowed -= g.neighbors(v);
    allowed.reset(v);
    allowed.set(x);
    allowed.set(y);
    std::vector<int> parent(static_cast<std::size_t>(n), -2);
    std::vector<int> queue{x};
    parent[x] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        if (u == y) break;
        VertexSet next = g.neighbors(u) & allowed;
        next.for_each([&](int w) {
            if (parent[w] == -2) {
                parent[w] = u;
                queue.push_back(w);
            }
        });
    }
    if (parent[y] == -2) return std::nullopt;
    std::vector<int> cycle{v};
    for (int u = y; u != -1; u = parent[u]) cycle.push_back(u);
    std::reverse(cycle.begin() + 1, cycle.end());  // v, x, ..., y
    return HoleCertificate{std::move(cycle)};
}

// Fallback sweep over all (v, x, y) witnesses; reached only if the failing
// triple from the MCS order yields no path, which a hole always prevents.
std::optional<HoleCertificate> find_any_hole(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        const VertexSet& nb = g.neighbors(v);
        for (int x = nb.first(); x != -1; x = nb.next(x)) {
            VertexSet rest = nb - g.neighbors(x);
            rest.reset(x);
            for (int y = rest.next(x); y != -1; y = rest.next(y)) {
                if (auto h = hole_through(g, v, x, y)) return h;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

ChordalityResult is_chordal(const UndirectedGraph& g) {
    std::vector<int> visit = maximum_cardinality_search(g);
    std::vector<int> order(visit.rbegin(), visit.rend());
    auto failure = first_peo_failure(g, order);
    if (!failure) return EliminationOrdering{std::move(order)};
    if (auto hole = hole_through(g, failure->v, failure->x, failure->y))
        return *hole;
    if (auto hole = find_any_hole(g)) return *hole;
    throw Error(ErrorCode::not_chordal,
                "imperfect elimination ordering but no hole found");
}

int find_simplicial(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        const VertexSet& nb = g.neighbors(v);
        bool clique = true;
        nb.for_each([&](int w) {
            VertexSet rest = nb;
            rest.reset(w);
            if (!rest.is_subset_of(g.neighbors(w))) clique = false;
        });
        if (clique) return v;
    }
    throw Error(ErrorCode::not_chordal, "no simplicial vertex");
}

Digraph clique_glue(const Digraph& d1, const Digraph& d2,
                    const VertexPairing& identify) {
    const int n1 = d1.vertex_count();
    const int n2 = d2.vertex_count();
    std::vector<int> map2(static_cast<std::size_t>(n2), -1);
    std::vector<std::pair<int, int>> pairs = identify.pairs;
    std::vector<bool> used1(static_cast<std::size_t>(n1), false);
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= n1 || b < 0 || b >= n2)
            throw Error(ErrorCode::vertex_out_of_range,
                        "pairing (" + std::to_string(a) + "," +
                            std::to_string(b) + ") out of range");
        if (used1[a] || map2[b] != -1)
            throw Error(ErrorCode::invalid_parameter,
                        "vertex identified twice in pairing");
        used1[a] = true;
        map2[b] = a;
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            auto [a1, b1] = pairs[i];
            auto [a2, b2] = pairs[j];
            if (!d1.adjacent(a1, a2) || !d2.adjacent(b1, b2))
                throw Error(ErrorCode::shared_set_not_clique,
                            "identified vertices " + std::to_string(a1) + "," +
                                std::to_string(a2) +
                                " not pairwise adjacent in both inputs");
            if (d1.has_arc(a1, a2) != d2.has_arc(b1, b2))
                throw Error(ErrorCode::orientation_mismatch,
                            "shared arc between " + std::to_string(a1) +
                                " and " + std::to_string(a2) +
                                " oriented differently in the two inputs");
        }
    }
    int next = n1;
    for (int b = 0; b < n2; ++b)
        if (map2[b] == -1) map2[b] = next++;
    DigraphBuilder builder(next);
    for (const Arc& a : d1.arcs()) builder.add_arc(a.from, a.to);
    for (const Arc& a : d2.arcs()) {
        int u = map2[a.from], v = map2[a.to];
        if (u < n1 && v < n1) continue;  // shared arcs already present
        builder.add_arc(u, v);
    }
    return std::move(builder).build();
}

namespace {

bool integral(double x) { return std::nearbyint(x) == x; }

}  // namespace

void validate_unit_intervals(const Digraph& d,
                             const UnitIntervalRepresentation& rep) {
    const int n = d.vertex_count();
    if (static_cast<int>(rep.left.size()) != n)
        throw Error(ErrorCode::invalid_representation,
                    "representation covers " + std::to_string(rep.left.size()) +
                        " vertices, digraph has " + std::to_string(n));
    for (int v = 0; v < n; ++v)
        if (!std::isfinite(rep.left[v]) || integral(rep.left[v]))
            throw Error(ErrorCode::invalid_representation,
                        "endpoint of interval " + std::to_string(v) +
                            " is integral or not finite");
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool intersect = std::abs(rep.left[u] - rep.left[v]) <= 1.0;
            if (intersect != d.adjacent(u, v))
                throw Error(ErrorCode::invalid_representation,
                            "adjacency of " + std::to_string(u) + "," +
                                std::to_string(v) +
                                " disagrees with interval intersection");
        }
}

std::vector<IntervalLayer> layers_from_unit_intervals(
    const Digraph& d, const UnitIntervalRepresentation& rep) {
    validate_unit_intervals(d, rep);
    const int n = d.vertex_count();
    // l non-integral puts exactly one integer, ceil(l), inside (l, l+1).
    std::vector<std::pair<long long, int>> at;
    at.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        at.emplace_back(static_cast<long long>(std::ceil(rep.left[v])), v);
    std::sort(at.begin(), at.end());
    std::vector<IntervalLayer> layers;
    for (auto [point, v] : at) {
        if (layers.empty() || layers.back().point != point)
            layers.push_back({point, VertexSet(n)});
        layers.back().members.set(v);
    }
    return layers;
}

namespace {

std::vector<int> random_clique(const UndirectedGraph& g, int limit, int target,
                               std::mt19937_64& rng) {
    // Only vertices below limit are part of the graph grown so far.
    std::vector<int> pool(static_cast<std::size_t>(limit));
    for (int v = 0; v < limit; ++v) pool[v] = v;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> clique;
    for (int v : pool) {
        bool ok = true;
        for (int c : clique)
            if (!g.adjacent(v, c)) {
                ok = false;
                break;
            }
        if (ok) {
            clique.push_back(v);
            if (static_cast<int>(clique.size()) == target) break;
        }
    }
    return clique;
}

}  // namespace

Digraph random_chordal_orientation(int n, std::uint64_t seed,
                                   const RandomChordalOptions& options) {
    if (n < 1)
        throw Error(ErrorCode::invalid_parameter, "need at least one vertex");
    std::mt19937_64 rng(seed);
    std::vector<Arc> arcs;
    UndirectedGraph skeleton(n);  // grown alongside, used for clique picking
    for (int v = 1; v < n; ++v) {
        bool attached = false;
        for (int attempt = 0; attempt < options.max_retries; ++attempt) {
            int cap = std::min(v, options.max_clique);
            int target = std::uniform_int_distribution<int>(1, cap)(rng);
            std::vector<int> clique = random_clique(skeleton, v, target, rng);
            std::vector<Arc> added;
            for (int c : clique) {
                bool outward = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
                added.push_back(outward ? Arc{v, c} : Arc{c, v});
            }
            std::vector<Arc> candidate = arcs;
            candidate.insert(candidate.end(), added.begin(), added.end());
            Digraph trial = Digraph::from_arcs(v + 1, candidate);
            if (options.avoid != nullptr &&
                contains_induced(trial, *options.avoid))
                continue;
            arcs = std::move(candidate);
            for (int c : clique) skeleton.add_edge(v, c);
            attached = true;
            break;
        }
        if (!attached)
            throw Error(ErrorCode::generation_budget_exceeded,
                        "could not attach vertex " + std::to_string(v) +
                            " within " + std::to_string(options.max_retries) +
                            " retries");
    }
    return Digraph::from_arcs(n, arcs);
}

RandomUnitIntervalInstance random_unit_interval_orientation(int n,
                                                            std::uint64_t seed,
                                                            double spread) {
    if (n < 1)
        throw Error(ErrorCode::invalid_parameter, "need at least one vertex");
    if (!(spread > 0))
        throw Error(ErrorCode::invalid_parameter, "spread must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> pos(0.0, spread);
    UnitIntervalRepresentation rep;
    rep.left.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        double x = pos(rng);
        while (integral(x)) x = pos(rng);
        rep.left[v] = x;
    }
    DigraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (std::abs(rep.left[u] - rep.left[v]) > 1.0) continue;
            bool forward = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
            if (forward)
                b.add_arc(u, v);
            else
                b.add_arc(v, u);
        }
    return {std::move(b).build(), std::move(rep)};
}

}  // namespace dichro
