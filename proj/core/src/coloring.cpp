#include "dichro/coloring.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <string>

#include "dichro/patterns.hpp"

namespace dichro {

namespace {

// Directed cycle inside the subdigraph spanned by members, if any;
// vertices reported in cyclic order with original ids.
std::optional<std::vector<int>> directed_cycle_in(const Digraph& d,
                                                  const VertexSet& members) {
    const int n = d.vertex_count();
    enum : char { white, gray, black };
    std::vector<char> state(static_cast<std::size_t>(n), white);
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    std::vector<int> path;

    struct Frame {
        int v;
        int last;  // last out-neighbor tried
    };
    std::vector<Frame> stack;

    for (int s = members.first(); s != -1; s = members.next(s)) {
        if (state[s] != white) continue;
        stack.push_back({s, -1});
        state[s] = gray;
        pos[s] = 0;
        path.assign(1, s);
        while (!stack.empty()) {
            Frame& f = stack.back();
            int w = -1;
            for (int cand = d.out(f.v).next(f.last); cand != -1;
                 cand = d.out(f.v).next(cand)) {
                f.last = cand;
                if (!members.test(cand) || state[cand] == black) continue;
                w = cand;
                break;
            }
            if (w == -1) {
                state[f.v] = black;
                pos[f.v] = -1;
                path.pop_back();
                stack.pop_back();
                continue;
            }
            if (state[w] == gray)
                return std::vector<int>(path.begin() + pos[w], path.end());
            state[w] = gray;
            pos[w] = static_cast<int>(path.size());
            path.push_back(w);
            stack.push_back({w, -1});
        }
    }
    return std::nullopt;
}

}  // namespace

DicoloringCheck validate_dicoloring(const Digraph& d, const Dicoloring& c) {
    const int n = d.vertex_count();
    if (static_cast<int>(c.color.size()) != n)
        throw Error(ErrorCode::partial_coloring,
                    "coloring covers " + std::to_string(c.color.size()) +
                        " of " + std::to_string(n) + " vertices");
    for (int v = 0; v < n; ++v)
        if (c.color[v] < 0 || c.color[v] >= c.palette)
            throw Error(ErrorCode::partial_coloring,
                        "vertex " + std::to_string(v) +
                            " has no color inside the palette");
    for (int col = 0; col < c.palette; ++col) {
        VertexSet members(n);
        for (int v = 0; v < n; ++v)
            if (c.color[v] == col) members.set(v);
        if (auto cycle = directed_cycle_in(d, members))
            return {false, *cycle};
    }
    return {true, {}};
}

namespace {

std::vector<int> degeneracy_order(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    VertexSet alive = VertexSet::full(n);
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<int> removal;
    removal.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = alive.first(); v != -1; v = alive.next(v))
            if (best == -1 || deg[v] < deg[best]) best = v;
        removal.push_back(best);
        alive.reset(best);
        VertexSet nb = g.neighbors(best) & alive;
        nb.for_each([&](int w) { --deg[w]; });
    }
    // Coloring runs the removal backwards so every vertex meets few
    // already-colored neighbors.
    std::reverse(removal.begin(), removal.end());
    return removal;
}

struct SolverCore {
    const Digraph& d;
    int k;
    std::vector<int> order;
    std::vector<int> color;               // by vertex id, -1 unassigned
    std::vector<VertexSet> classes;       // colored members per class
    std::atomic<std::uint64_t>* nodes;    // shared across workers
    std::uint64_t budget;
    bool budget_hit = false;

    SolverCore(const Digraph& dig, int kk, std::vector<int> ord,
               std::atomic<std::uint64_t>* counter, std::uint64_t limit)
        : d(dig),
          k(kk),
          order(std::move(ord)),
          color(static_cast<std::size_t>(dig.vertex_count()), -1),
          classes(static_cast<std::size_t>(kk), VertexSet(dig.vertex_count())),
          nodes(counter),
          budget(limit) {}

    // Would assigning v color c close a directed cycle inside the class?
    bool closes_cycle(int v, int c) const {
        const VertexSet& cls = classes[static_cast<std::size_t>(c)];
        VertexSet targets = d.in(v) & cls;
        if (targets.empty()) return false;
        VertexSet frontier = d.out(v) & cls;
        if (frontier.empty()) return false;
        VertexSet seen = frontier;
        while (!frontier.empty()) {
            if (frontier.intersects(targets)) return true;
            VertexSet next(d.vertex_count());
            frontier.for_each([&](int u) { next |= d.out(u); });
            next &= cls;
            next -= seen;
            seen |= next;
            frontier = std::move(next);
        }
        return false;
    }

    bool search(std::size_t depth, int used) {
        if (nodes->fetch_add(1, std::memory_order_relaxed) >= budget) {
            budget_hit = true;
            return false;
        }
        if (depth == order.size()) return true;
        int v = order[depth];
        int limit = std::min(k - 1, used);  // new colors in first-use order
        for (int c = 0; c <= limit; ++c) {
            if (closes_cycle(v, c)) continue;
            color[v] = c;
            classes[static_cast<std::size_t>(c)].set(v);
            if (search(depth + 1, std::max(used, c + 1))) return true;
            classes[static_cast<std::size_t>(c)].reset(v);
            color[v] = -1;
            if (budget_hit) return false;
        }
        return false;
    }
};

struct Prefix {
    std::vector<int> color;  // by vertex id for the first t order positions
    int used = 0;
};

void enumerate_prefixes(const Digraph& d, int k, const std::vector<int>& order,
                        std::size_t depth_limit, SolverCore& scratch,
                        std::size_t depth, int used, std::vector<Prefix>& out) {
    if (depth == depth_limit) {
        out.push_back({scratch.color, used});
        return;
    }
    int v = order[depth];
    int limit = std::min(k - 1, used);
    for (int c = 0; c <= limit; ++c) {
        if (scratch.closes_cycle(v, c)) continue;
        scratch.color[v] = c;
        scratch.classes[static_cast<std::size_t>(c)].set(v);
        enumerate_prefixes(d, k, order, depth_limit, scratch, depth + 1,
                           std::max(used, c + 1), out);
        scratch.classes[static_cast<std::size_t>(c)].reset(v);
        scratch.color[v] = -1;
    }
}

SolveOutcome solve_sequential(const Digraph& d, int k,
                              const std::vector<int>& order,
                              std::uint64_t budget) {
    std::atomic<std::uint64_t> counter{0};
    SolverCore core(d, k, order, &counter, budget);
    bool ok = core.search(0, 0);
    SolveOutcome out;
    out.nodes = counter.load();
    if (ok) {
        out.status = SolveStatus::found;
        out.coloring = {core.color, k};
    } else {
        out.status = core.budget_hit ? SolveStatus::budget_exceeded
                                     : SolveStatus::infeasible;
    }
    return out;
}

SolveOutcome solve_parallel(const Digraph& d, int k,
                            const std::vector<int>& order, std::uint64_t budget,
                            int threads) {
    const int n = d.vertex_count();
    std::size_t split = 0;
    std::size_t want = static_cast<std::size_t>(threads) * 4;
    std::size_t frontier_bound = 1;
    while (split < static_cast<std::size_t>(std::min(n, 12)) &&
           frontier_bound < want) {
        frontier_bound *= static_cast<std::size_t>(k);
        ++split;
    }

    std::atomic<std::uint64_t> counter{0};
    SolverCore scratch(d, k, order, &counter, budget);
    std::vector<Prefix> prefixes;
    enumerate_prefixes(d, k, order, split, scratch, 0, 0, prefixes);
    if (prefixes.empty()) return {SolveStatus::infeasible, {}, counter.load()};

    std::atomic<bool> stop{false};
    std::atomic<std::size_t> cursor{0};
    struct WorkerResult {
        bool found = false;
        bool budget_hit = false;
        std::size_t prefix_index = 0;
        std::vector<int> color;
    };
    std::vector<std::future<std::vector<WorkerResult>>> futures;
    for (int w = 0; w < threads; ++w) {
        futures.push_back(std::async(std::launch::async, [&]() {
            std::vector<WorkerResult> results;
            while (!stop.load(std::memory_order_relaxed)) {
                std::size_t idx = cursor.fetch_add(1);
                if (idx >= prefixes.size()) break;
                const Prefix& p = prefixes[idx];
                SolverCore core(d, k, order, &counter, budget);
                core.color = p.color;
                for (int v = 0; v < n; ++v)
                    if (p.color[v] >= 0)
                        core.classes[static_cast<std::size_t>(p.color[v])].set(v);
                bool ok = core.search(split, p.used);
                if (ok) {
                    results.push_back({true, false, idx, core.color});
                    stop.store(true, std::memory_order_relaxed);
                    break;
                }
                if (core.budget_hit) {
                    results.push_back({false, true, idx, {}});
                    break;
                }
            }
            return results;
        }));
    }

    bool any_budget = false;
    std::optional<WorkerResult> best;
    for (auto& f : futures)
        for (WorkerResult& r : f.get()) {
            if (r.found && (!best || r.prefix_index < best->prefix_index))
                best = std::move(r);
            else if (r.budget_hit)
                any_budget = true;
        }

    SolveOutcome out;
    out.nodes = counter.load();
    if (best) {
        out.status = SolveStatus::found;
        out.coloring = {best->color, k};
    } else {
        out.status = any_budget ? SolveStatus::budget_exceeded
                                : SolveStatus::infeasible;
    }
    return out;
}

}  // namespace

SolveOutcome is_k_dicolorable(const Digraph& d, int k,
                              const SolverOptions& options) {
    if (k < 0) throw Error(ErrorCode::invalid_parameter, "negative palette");
    const int n = d.vertex_count();
    if (n == 0) return {SolveStatus::found, Dicoloring{{}, k}, 0};
    if (k == 0) return {SolveStatus::infeasible, {}, 0};

    std::vector<int> order = degeneracy_order(underlying_graph(d));
    SolveOutcome out =
        options.threads > 1
            ? solve_parallel(d, k, order, options.node_budget, options.threads)
            : solve_sequential(d, k, order, options.node_budget);
    return out;
}

ChiResult dichromatic_number(const Digraph& d, const SolverOptions& options) {
    ChiResult result;
    result.refuted_below = 0;
    const int n = d.vertex_count();
    if (n == 0) {
        result.status = SolveStatus::found;
        result.chi = 0;
        result.witness = {{}, 0};
        return result;
    }
    for (int k = 1; k <= n; ++k) {
        SolveOutcome attempt = is_k_dicolorable(d, k, options);
        result.nodes += attempt.nodes;
        if (attempt.status == SolveStatus::found) {
            result.status = SolveStatus::found;
            result.chi = k;
            result.witness = std::move(attempt.coloring);
            return result;
        }
        if (attempt.status == SolveStatus::budget_exceeded) {
            result.status = SolveStatus::budget_exceeded;
            return result;
        }
        result.refuted_below = k;
    }
    throw Error(ErrorCode::invalid_parameter,
                "vertex-count palette cannot be infeasible");
}

std::vector<int> stearns_transitive(const Digraph& t) {
    if (!is_tournament(t))
        throw Error(ErrorCode::not_a_tournament,
                    "transitive extraction needs a tournament");
    VertexSet remaining = VertexSet::full(t.vertex_count());
    std::vector<int> chain;
    while (!remaining.empty()) {
        int best = -1, best_deg = -1;
        for (int v = remaining.first(); v != -1; v = remaining.next(v)) {
            int deg = (t.out(v) & remaining).count();
            if (deg > best_deg) {
                best = v;
                best_deg = deg;
            }
        }
        // The average out-degree makes best_deg >= (|remaining|-1)/2.
        chain.push_back(best);
        remaining &= t.out(best);
    }
    return chain;
}

int triangle_degree(const Digraph& d, int x) {
    std::vector<int> a = d.out(x).to_vector();
    std::vector<int> b = d.in(x).to_vector();
    std::vector<std::vector<int>> adj(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (d.has_arc(a[i], b[j])) adj[i].push_back(static_cast<int>(j));

    std::vector<int> match_b(b.size(), -1);
    std::vector<bool> visited;
    // Kuhn's augmenting paths.
    std::function<bool(int)> augment = [&](int i) {
        for (int j : adj[i]) {
            if (visited[j]) continue;
            visited[j] = true;
            if (match_b[j] == -1 || augment(match_b[j])) {
                match_b[j] = i;
                return true;
            }
        }
        return false;
    };
    int size = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        visited.assign(b.size(), false);
        if (augment(static_cast<int>(i))) ++size;
    }
    return size;
}

namespace {

std::vector<int> simplicial_elimination(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    VertexSet alive = VertexSet::full(n);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int found = -1;
        for (int v = alive.first(); v != -1 && found == -1; v = alive.next(v)) {
            VertexSet nb = g.neighbors(v) & alive;
            bool clique = true;
            for (int w = nb.first(); w != -1 && clique; w = nb.next(w)) {
                VertexSet rest = nb;
                rest.reset(w);
                if (!rest.is_subset_of(g.neighbors(w))) clique = false;
            }
            if (clique) found = v;
        }
        if (found == -1)
            throw Error(ErrorCode::not_chordal,
                        "no simplicial vertex while eliminating");
        order.push_back(found);
        alive.reset(found);
    }
    return order;
}

}  // namespace

Dicoloring color_delta11k_free_chordal(const Digraph& d, int k, bool verify) {
    if (k < 1 || k > 16)
        throw Error(ErrorCode::invalid_parameter,
                    "pattern parameter out of range");
    if (verify) {
        if (!chordal(underlying_graph(d)))
            throw Error(ErrorCode::not_chordal, "underlying graph has a hole");
        if (contains_induced(d, delta1(1, k)))
            throw Error(ErrorCode::precondition_violated,
                        "input contains delta1(1," + std::to_string(k) + ")");
    }
    const int n = d.vertex_count();
    const int palette = 1 << (2 * k - 2);
    std::vector<int> elimination = simplicial_elimination(underlying_graph(d));
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<VertexSet> classes(static_cast<std::size_t>(palette),
                                   VertexSet(n));
    // Reinsert backwards; each vertex meets a clique of already-reinserted
    // neighbors, and some color closes no directed triangle through it.
    for (auto it = elimination.rbegin(); it != elimination.rend(); ++it) {
        int v = *it;
        int chosen = -1;
        for (int c = 0; c < palette && chosen == -1; ++c) {
            VertexSet heads = d.out(v) & classes[static_cast<std::size_t>(c)];
            VertexSet tails = d.in(v) & classes[static_cast<std::size_t>(c)];
            bool blocked = false;
            for (int a = heads.first(); a != -1 && !blocked; a = heads.next(a))
                if (d.out(a).intersects(tails)) blocked = true;
            if (!blocked) chosen = c;
        }
        if (chosen == -1)
            throw Error(ErrorCode::no_free_color,
                        "all " + std::to_string(palette) +
                            " colors closed a triangle at vertex " +
                            std::to_string(v) +
                            "; input violates the freeness precondition");
        color[v] = chosen;
        classes[static_cast<std::size_t>(chosen)].set(v);
    }
    Dicoloring result{std::move(color), palette};
    if (!validate_dicoloring(d, result).valid)
        throw Error(ErrorCode::precondition_violated,
                    "monochromatic cycle survived; input was not a chordal "
                    "orientation");
    return result;
}

Dicoloring color_ttk_free_chordal(const Digraph& d, int k, bool verify) {
    if (k < 1 || k > 30)
        throw Error(ErrorCode::invalid_parameter,
                    "pattern parameter out of range");
    UndirectedGraph g = underlying_graph(d);
    ChordalityResult chord = is_chordal(g);
    const auto* peo = std::get_if<EliminationOrdering>(&chord);
    if (peo == nullptr)
        throw Error(ErrorCode::not_chordal, "underlying graph has a hole");
    if (verify && contains_induced(d, tt(k)))
        throw Error(ErrorCode::precondition_violated,
                    "input contains tt(" + std::to_string(k) + ")");
    const int n = d.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    int used = 0;
    // Reverse elimination greedy proper coloring: exactly clique-number
    // many colors on a chordal graph.
    for (auto it = peo->order.rbegin(); it != peo->order.rend(); ++it) {
        int v = *it;
        std::vector<bool> taken(static_cast<std::size_t>(used + 1), false);
        g.neighbors(v).for_each([&](int w) {
            if (color[w] >= 0 && color[w] <= used) taken[color[w]] = true;
        });
        int c = 0;
        while (taken[c]) ++c;
        color[v] = c;
        used = std::max(used, c + 1);
    }
    const int bound = (1 << (k - 1)) - 1;
    if (used > bound)
        throw Error(ErrorCode::clique_too_large,
                    "clique number " + std::to_string(used) +
                        " exceeds the transitive-freeness bound " +
                        std::to_string(bound));
    return {std::move(color), std::max(used, 1)};
}

UnitIntervalColoring color_unit_interval(const Digraph& d,
                                         const UnitIntervalRepresentation& rep,
                                         const TournamentColorer& colorer) {
    std::vector<IntervalLayer> layers = layers_from_unit_intervals(d, rep);
    TournamentColorer solve = colorer;
    if (!solve) {
        solve = [](const Digraph& t) {
            ChiResult r = dichromatic_number(t);
            if (r.status != SolveStatus::found)
                throw Error(ErrorCode::cap_exceeded,
                            "layer solver ran out of budget");
            return r.witness;
        };
    }
    const int n = d.vertex_count();
    struct LayerColoring {
        std::vector<int> ids;
        Dicoloring coloring;
        bool odd = false;
    };
    std::vector<LayerColoring> colored;
    int worst = 0;
    for (const IntervalLayer& layer : layers) {
        Digraph t = induced(d, layer.members);
        Dicoloring lc = solve(t);
        DicoloringCheck check = validate_dicoloring(t, lc);
        if (!check.valid)
            throw Error(ErrorCode::precondition_violated,
                        "layer sub-solver produced an invalid coloring");
        int used = 0;
        for (int c : lc.color) used = std::max(used, c + 1);
        worst = std::max(worst, used);
        colored.push_back(
            {layer.members.to_vector(), std::move(lc), layer.point % 2 != 0});
    }
    Dicoloring out{std::vector<int>(static_cast<std::size_t>(n), -1),
                   2 * worst};
    for (const LayerColoring& lc : colored) {
        int base = lc.odd ? 0 : worst;
        for (std::size_t i = 0; i < lc.ids.size(); ++i)
            out.color[lc.ids[i]] = base + lc.coloring.color[i];
    }
    if (n > 0 && !validate_dicoloring(d, out).valid)
        throw Error(ErrorCode::precondition_violated,
                    "layer palettes interacted; representation was invalid");
    return {std::move(out), worst};
}

}  // namespace dichro
