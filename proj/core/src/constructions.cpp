#include "dichro/constructions.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

#include <json.hpp>

#include "dichro/chordal.hpp"
#include "dichro/patterns.hpp"

namespace dichro {

namespace {

constexpr long long kSizeGuard = 1LL << 40;

long long delta122_size(int k) {
    long long n = 1;
    for (int i = 2; i <= k; ++i) {
        long long copies = static_cast<long long>(i) * (i - 1) / 2;
        n = i + copies * n;
        if (n > kSizeGuard) return kSizeGuard;
    }
    return n;
}

void check_size(long long n, int max_vertices, const std::string& family) {
    if (n > max_vertices)
        throw Error(ErrorCode::size_limit_exceeded,
                    family + " witness needs " + std::to_string(n) +
                        " vertices, limit is " + std::to_string(max_vertices));
}

// Emits the level-k block at ids [base, base + size) into arcs/color.
void build_delta122(int k, int base, std::vector<Arc>& arcs,
                    std::vector<int>& color) {
    if (k == 1) {
        color[base] = 0;
        return;
    }
    const int sub = static_cast<int>(delta122_size(k - 1));
    for (int i = 0; i < k; ++i) color[base + i] = k - 1;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) arcs.push_back({base + i, base + j});
    int block = base + k;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) {
            build_delta122(k - 1, block, arcs, color);
            // Trap: a monochromatic arc u->v forces its block off that
            // color, else u -> v -> y -> u closes a triangle.
            for (int y = block; y < block + sub; ++y) {
                arcs.push_back({base + v, y});
                arcs.push_back({y, base + u});
            }
            block += sub;
        }
}

struct BuiltLevel {
    Digraph d;
    std::vector<int> color;
    int palette = 0;
};

BuiltLevel built_delta122(int k, int max_vertices) {
    if (k < 1)
        throw Error(ErrorCode::invalid_parameter, "level must be positive");
    long long n = delta122_size(k);
    check_size(n, max_vertices, "delta122");
    std::vector<Arc> arcs;
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    build_delta122(k, 0, arcs, color);
    return {Digraph::from_arcs(static_cast<int>(n), arcs), std::move(color), k};
}

}  // namespace

Digraph delta122_witness(int k, int max_vertices) {
    return built_delta122(k, max_vertices).d;
}

Dicoloring delta122_piecing_coloring(int k, int max_vertices) {
    BuiltLevel b = built_delta122(k, max_vertices);
    return {std::move(b.color), b.palette};
}

Digraph glue_front(const Digraph& g, const Digraph& f, std::span<const int> t) {
    const int ng = g.vertex_count();
    const int nf = f.vertex_count();
    if (!is_transitive_tournament(induced(g, t)))
        throw Error(ErrorCode::not_transitive,
                    "front set does not induce a transitive tournament");
    DigraphBuilder b(ng + nf);
    for (const Arc& a : g.arcs()) b.add_arc(a.from, a.to);
    for (const Arc& a : f.arcs()) b.add_arc(ng + a.from, ng + a.to);
    for (int u : t)
        for (int w = 0; w < nf; ++w) b.add_arc(u, ng + w);
    return std::move(b).build();
}

Digraph insert_apex(const Digraph& g, std::span<const int> t, int split) {
    const int ng = g.vertex_count();
    const int len = static_cast<int>(t.size());
    if (len < 1)
        throw Error(ErrorCode::invalid_parameter, "empty transitive chain");
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j)
            if (!g.has_arc(t[i], t[j]))
                throw Error(ErrorCode::not_transitive,
                            "chain is not in topological order at positions " +
                                std::to_string(i) + "," + std::to_string(j));
    if (split < 1 || split > len)
        throw Error(ErrorCode::split_out_of_range,
                    "split " + std::to_string(split) + " outside 1.." +
                        std::to_string(len));
    DigraphBuilder b(ng + 1);
    for (const Arc& a : g.arcs()) b.add_arc(a.from, a.to);
    const int x = ng;
    for (int i = 0; i < split; ++i) b.add_arc(x, t[i]);
    for (int i = split; i < len; ++i) b.add_arc(t[i], x);
    return std::move(b).build();
}

TransitiveSetIndex enumerate_transitive_sets(const Digraph& d,
                                             std::optional<int> size_filter,
                                             std::size_t cap) {
    TransitiveSetIndex index{d.vertex_count(), {}};
    if (size_filter && *size_filter < 1) return index;
    std::size_t visited = 0;
    std::vector<int> chain;

    // Chains grow by their unique next sink, so each transitive set is
    // visited exactly once, already in topological order.
    std::function<void(const VertexSet&)> extend = [&](const VertexSet& cands) {
        if (++visited > cap)
            throw Error(ErrorCode::cap_exceeded,
                        "transitive-set cap " + std::to_string(cap) +
                            " exceeded with " + std::to_string(index.sets.size()) +
                            " sets recorded");
        if (!size_filter || static_cast<int>(chain.size()) == *size_filter)
            index.sets.push_back(chain);
        if (size_filter && static_cast<int>(chain.size()) >= *size_filter)
            return;
        for (int v = cands.first(); v != -1; v = cands.next(v)) {
            chain.push_back(v);
            extend(cands & d.out(v));
            chain.pop_back();
        }
    };

    for (int v = 0; v < d.vertex_count(); ++v) {
        chain.assign(1, v);
        extend(d.out(v));
    }
    return index;
}

namespace {

BuiltLevel build_amplifier(const Digraph& g, const std::vector<int>& base_color,
                           int palette, int k, std::size_t cap,
                           int max_vertices) {
    if (k < 1)
        throw Error(ErrorCode::invalid_parameter, "level must be positive");
    const int ng = g.vertex_count();
    std::vector<Arc> arcs = g.arcs();
    std::vector<int> color = base_color;
    long long n = ng;
    for (int round = 1; round < k; ++round) {
        Digraph current = Digraph::from_arcs(static_cast<int>(n), arcs);
        TransitiveSetIndex sets = enumerate_transitive_sets(current, round, cap);
        check_size(n + static_cast<long long>(sets.sets.size()) * ng,
                   max_vertices, "amplifier");
        for (const std::vector<int>& s : sets.sets) {
            const int block = static_cast<int>(n);
            for (const Arc& a : g.arcs())
                arcs.push_back({block + a.from, block + a.to});
            for (int u : s)
                for (int w = 0; w < ng; ++w) arcs.push_back({u, block + w});
            color.insert(color.end(), base_color.begin(), base_color.end());
            n += ng;
        }
    }
    return {Digraph::from_arcs(static_cast<int>(n), arcs), std::move(color),
            palette};
}

}  // namespace

Digraph rainbow_amplifier(const Digraph& g, int k, std::size_t cap,
                          int max_vertices) {
    std::vector<int> zero(static_cast<std::size_t>(g.vertex_count()), 0);
    return build_amplifier(g, zero, 1, k, cap, max_vertices).d;
}

Dicoloring rainbow_amplifier_coloring(const Digraph& g, const Dicoloring& base,
                                      int k, std::size_t cap,
                                      int max_vertices) {
    DicoloringCheck check = validate_dicoloring(g, base);
    if (!check.valid)
        throw Error(ErrorCode::precondition_violated,
                    "base coloring is not a valid dicoloring");
    BuiltLevel b =
        build_amplifier(g, base.color, base.palette, k, cap, max_vertices);
    return {std::move(b.color), b.palette};
}

namespace {

BuiltLevel build_c3k1(int k, std::size_t cap, int max_vertices) {
    if (k < 1)
        throw Error(ErrorCode::invalid_parameter, "level must be positive");
    if (k == 1)
        return {Digraph::from_arcs(1, {}), {0}, 1};
    BuiltLevel prev = build_c3k1(k - 1, cap, max_vertices);
    BuiltLevel amp = build_amplifier(prev.d, prev.color, prev.palette, k - 1,
                                     cap, max_vertices);
    const int nf = amp.d.vertex_count();
    TransitiveSetIndex sets = enumerate_transitive_sets(amp.d, std::nullopt, cap);
    const long long tcount = static_cast<long long>(sets.sets.size());
    const long long total = nf * (1 + tcount) + tcount * tcount;
    check_size(total, max_vertices, "c3k1");

    std::vector<Arc> arcs = amp.d.arcs();
    const std::vector<Arc> amp_arcs = arcs;
    std::vector<int> color = amp.color;
    // Copies of the amplifier, one per transitive set, fed by their set.
    for (long long ti = 0; ti < tcount; ++ti) {
        const int block = static_cast<int>(nf * (1 + ti));
        for (const Arc& a : amp_arcs)
            arcs.push_back({block + a.from, block + a.to});
        for (int u : sets.sets[static_cast<std::size_t>(ti)])
            for (int w = 0; w < nf; ++w) arcs.push_back({u, block + w});
        color.insert(color.end(), amp.color.begin(), amp.color.end());
    }
    // One apex per (T, T'): beaten by T' inside T's copy, beats T itself.
    const long long apex0 = nf * (1 + tcount);
    for (long long ti = 0; ti < tcount; ++ti) {
        const int block = static_cast<int>(nf * (1 + ti));
        for (long long tj = 0; tj < tcount; ++tj) {
            const int apex = static_cast<int>(apex0 + ti * tcount + tj);
            for (int w : sets.sets[static_cast<std::size_t>(tj)])
                arcs.push_back({block + w, apex});
            for (int u : sets.sets[static_cast<std::size_t>(ti)])
                arcs.push_back({apex, u});
            color.push_back(prev.palette);
        }
    }
    return {Digraph::from_arcs(static_cast<int>(total), arcs), std::move(color),
            prev.palette + 1};
}

}  // namespace

Digraph c3k1_witness(int k, std::size_t cap, int max_vertices) {
    return build_c3k1(k, cap, max_vertices).d;
}

Dicoloring c3k1_piecing_coloring(int k, std::size_t cap, int max_vertices) {
    BuiltLevel b = build_c3k1(k, cap, max_vertices);
    return {std::move(b.color), b.palette};
}

namespace {

long long cograph_size(int k) {
    long long n = 1;
    for (int i = 2; i <= k; ++i) {
        n = 3 * n + 1;
        if (n > kSizeGuard) return kSizeGuard;
    }
    return n;
}

void build_cograph(int k, int base, std::vector<Arc>& arcs,
                   std::vector<int>& color) {
    if (k == 1) {
        color[base] = 0;
        return;
    }
    const int sub = static_cast<int>(cograph_size(k - 1));
    const int hub = base;
    color[hub] = k - 1;
    int blocks[3];
    for (int i = 0; i < 3; ++i) {
        blocks[i] = base + 1 + i * sub;
        build_cograph(k - 1, blocks[i], arcs, color);
    }
    for (int w = 0; w < sub; ++w) arcs.push_back({hub, blocks[0] + w});
    for (int a = 0; a < sub; ++a)
        for (int b = 0; b < sub; ++b) {
            arcs.push_back({blocks[0] + a, blocks[1] + b});
            arcs.push_back({blocks[1] + a, blocks[2] + b});
        }
    for (int w = 0; w < sub; ++w) arcs.push_back({blocks[2] + w, hub});
}

BuiltLevel built_cograph(int k, int max_vertices) {
    if (k < 1)
        throw Error(ErrorCode::invalid_parameter, "level must be positive");
    long long n = cograph_size(k);
    check_size(n, max_vertices, "cograph");
    std::vector<Arc> arcs;
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    build_cograph(k, 0, arcs, color);
    return {Digraph::from_arcs(static_cast<int>(n), arcs), std::move(color), k};
}

}  // namespace

Digraph cograph_witness(int k, int max_vertices) {
    return built_cograph(k, max_vertices).d;
}

Dicoloring cograph_piecing_coloring(int k, int max_vertices) {
    BuiltLevel b = built_cograph(k, max_vertices);
    return {std::move(b.color), b.palette};
}

std::optional<std::array<int, 4>> find_induced_p4(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    for (int b = 0; b < n; ++b) {
        const VertexSet& nb = g.neighbors(b);
        for (int c = nb.next(b); c != -1; c = nb.next(c)) {
            VertexSet as = nb - g.neighbors(c);
            as.reset(c);
            VertexSet ds = g.neighbors(c) - nb;
            ds.reset(b);
            for (int a = as.first(); a != -1; a = as.next(a)) {
                VertexSet tail = ds - g.neighbors(a);
                tail.reset(a);
                int dd = tail.first();
                if (dd != -1) return std::array<int, 4>{a, b, c, dd};
            }
        }
    }
    return std::nullopt;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::unchecked: return "unchecked";
    }
    return "unchecked";
}

std::string ConstructionReport::to_json() const {
    nlohmann::ordered_json j;
    j["family"] = family;
    j["level"] = level;
    j["vertices"] = vertices;
    j["arcs"] = arcs;
    j["numbering"] = numbering;
    j["chordal"] = {{"verdict", to_string(chordal)}, {"note", chordal_note}};
    j["pattern"] = {{"name", pattern},
                    {"verdict", to_string(pattern_free)},
                    {"note", pattern_note}};
    j["chi"] = {{"lower",
                 {{"value", lower.value},
                  {"method", lower.method},
                  {"verified", lower.verified}}},
                {"upper",
                 {{"value", upper.value},
                  {"method", upper.method},
                  {"verified", upper.verified}}},
                {"exact", chi_exact}};
    j["solver_nodes"] = solver_nodes;
    return j.dump(2) + "\n";
}

std::string ConstructionReport::to_text() const {
    std::string s;
    s += family + " level " + std::to_string(level) + ": " +
         std::to_string(vertices) + " vertices, " + std::to_string(arcs) +
         " arcs\n";
    s += "  numbering: " + numbering + "\n";
    s += std::string("  chordal: ") + to_string(chordal);
    if (!chordal_note.empty()) s += " (" + chordal_note + ")";
    s += "\n";
    s += "  pattern " + pattern + ": " + to_string(pattern_free);
    if (!pattern_note.empty()) s += " (" + pattern_note + ")";
    s += "\n";
    s += "  chi lower " + std::to_string(lower.value) + " [" + lower.method +
         "], upper " + std::to_string(upper.value) + " [" + upper.method +
         "], exact: " + (chi_exact ? "yes" : "no") + "\n";
    s += "  solver nodes: " + std::to_string(solver_nodes) + "\n";
    return s;
}

namespace {

void verify_chordal(const Digraph& d, ConstructionReport& r) {
    ChordalityResult res = is_chordal(underlying_graph(d));
    if (std::holds_alternative<EliminationOrdering>(res)) {
        r.chordal = Verdict::holds;
    } else {
        r.chordal = Verdict::fails;
        const auto& hole = std::get<HoleCertificate>(res);
        r.chordal_note = "hole on " + std::to_string(hole.cycle.size()) +
                         " vertices starting at " +
                         std::to_string(hole.cycle.front());
    }
}

void verify_chi(const Digraph& d, int expected, const VerifyBudget& budget,
                const std::function<Dicoloring()>& piecing,
                ConstructionReport& r) {
    SolverOptions opt{budget.solver_nodes, 1};
    const int n = d.vertex_count();
    if (n <= budget.exact_chi_max_vertices) {
        ChiResult res = dichromatic_number(d, opt);
        r.solver_nodes += res.nodes;
        if (res.status == SolveStatus::found) {
            r.lower = {res.chi, "solver-exact", true};
            r.upper = {res.chi, "solver-witness", true};
            r.chi_exact = true;
            return;
        }
    }
    try {
        Dicoloring col = piecing();
        if (validate_dicoloring(d, col).valid) {
            int used = 0;
            for (int c : col.color) used = std::max(used, c + 1);
            r.upper = {used, "constructed-coloring", true};
        } else {
            r.upper = {0, "constructed coloring invalid", false};
        }
    } catch (const Error& e) {
        r.upper = {0, std::string("piecing unavailable: ") + e.what(), false};
    }
    if (expected <= 1) {
        r.lower = {n > 0 ? 1 : 0, "trivial", true};
    } else if (n <= budget.lower_attempt_max_vertices) {
        SolveOutcome attempt = is_k_dicolorable(d, expected - 1, opt);
        r.solver_nodes += attempt.nodes;
        if (attempt.status == SolveStatus::infeasible) {
            r.lower = {expected, "solver-exact", true};
        } else if (attempt.status == SolveStatus::budget_exceeded) {
            r.lower = {expected,
                       "not verified: solver attempt stopped after " +
                           std::to_string(attempt.nodes) + " nodes",
                       false};
        } else {
            r.lower = {0, "refuted: a smaller valid coloring exists", false};
        }
    } else {
        r.lower = {expected, "not verified at this size", false};
    }
    r.chi_exact =
        r.lower.verified && r.upper.verified && r.lower.value == r.upper.value;
}

}  // namespace

ConstructionReport verify_witness(const Digraph& d, const std::string& family,
                                  int k, const VerifyBudget& budget) {
    ConstructionReport r;
    r.family = family;
    r.level = k;
    r.vertices = d.vertex_count();
    r.arcs = d.arc_count();

    if (family == "delta122") {
        r.numbering =
            "top tournament 0..k-1 in topological order, then one block per "
            "arc in lexicographic arc order";
        verify_chordal(d, r);
        r.pattern = "D(1,2,2)";
        if (auto e = contains_induced(d, delta1(2, 2))) {
            r.pattern_free = Verdict::fails;
            r.pattern_note = "embedding at " + std::to_string(e->image[0]);
        } else {
            r.pattern_free = Verdict::holds;
        }
        verify_chi(d, k, budget,
                   [&] { return delta122_piecing_coloring(k); }, r);
    } else if (family == "c3k1" || family == "amplifier") {
        r.numbering =
            family == "c3k1"
                ? "amplifier base, then copies in transitive-set order, then "
                  "apexes in (set, inner-set) lexicographic order"
                : "base digraph, then hung copies in enumeration order per "
                  "round";
        verify_chordal(d, r);
        r.pattern = "C3=>K1 (K1=>C3 after reversal)";
        auto fwd = find_c3_to_k1(d);
        auto bwd = find_k1_to_c3(reverse(d));
        if (fwd || bwd) {
            r.pattern_free = Verdict::fails;
            r.pattern_note = fwd ? "dominated triangle found"
                                 : "dominating triangle in the reverse";
        } else {
            r.pattern_free = Verdict::holds;
        }
        auto piecing = [&] {
            if (family == "c3k1")
                return c3k1_piecing_coloring(k, budget.enum_cap);
            return rainbow_amplifier_coloring(
                c3k1_witness(k, budget.enum_cap),
                c3k1_piecing_coloring(k, budget.enum_cap), k, budget.enum_cap);
        };
        verify_chi(d, k, budget, piecing, r);
    } else if (family == "cograph") {
        r.numbering = "hub 0, then three level-(k-1) blocks";
        r.chordal = Verdict::unchecked;
        r.chordal_note = "family lives in the cograph class";
        r.pattern = "P4 (underlying)";
        if (auto p4 = find_induced_p4(underlying_graph(d))) {
            r.pattern_free = Verdict::fails;
            r.pattern_note = "induced path " + std::to_string((*p4)[0]) + "-" +
                             std::to_string((*p4)[1]) + "-" +
                             std::to_string((*p4)[2]) + "-" +
                             std::to_string((*p4)[3]);
        } else {
            r.pattern_free = Verdict::holds;
        }
        verify_chi(d, k, budget, [&] { return cograph_piecing_coloring(k); },
                   r);
    } else if (family == "random-chordal") {
        r.numbering = "attachment order";
        verify_chordal(d, r);
        r.pattern = "none";
        r.lower = {0, "not applicable", false};
        r.upper = {0, "not applicable", false};
    } else {
        throw Error(ErrorCode::invalid_parameter,
                    "unknown family \"" + family + "\"");
    }
    return r;
}

}  // namespace dichro
