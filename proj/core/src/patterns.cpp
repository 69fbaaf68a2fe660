#include "dichro/patterns.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "dichro/harness.hpp"

namespace dichro {

Digraph tt(int k) {
    if (k < 0) throw Error(ErrorCode::invalid_parameter, "negative order");
    DigraphBuilder b(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) b.add_arc(i, j);
    return std::move(b).build();
}

Digraph delta(const Digraph& h1, const Digraph& h2) {
    if (!is_tournament(h1) || !is_tournament(h2))
        throw Error(ErrorCode::not_a_tournament,
                    "apex construction needs tournaments on both sides");
    const int n1 = h1.vertex_count();
    const int n2 = h2.vertex_count();
    if (n1 < 1 || n2 < 1)
        throw Error(ErrorCode::invalid_parameter,
                    "apex construction needs nonempty sides");
    DigraphBuilder b(1 + n1 + n2);
    for (const Arc& a : h1.arcs()) b.add_arc(1 + a.from, 1 + a.to);
    for (const Arc& a : h2.arcs()) b.add_arc(1 + n1 + a.from, 1 + n1 + a.to);
    for (int i = 0; i < n1; ++i) b.add_arc(0, 1 + i);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) b.add_arc(1 + i, 1 + n1 + j);
    for (int j = 0; j < n2; ++j) b.add_arc(1 + n1 + j, 0);
    return std::move(b).build();
}

Digraph c3_to_k1() { return compose_all_arcs(c3(), tt(1)); }
Digraph k1_to_c3() { return compose_all_arcs(tt(1), c3()); }

HeroExprPtr HeroExpr::leaf() {
    return std::make_shared<const HeroExpr>(Node{Leaf{}});
}

HeroExprPtr HeroExpr::seq(HeroExprPtr l, HeroExprPtr r) {
    return std::make_shared<const HeroExpr>(Node{Seq{std::move(l), std::move(r)}});
}

HeroExprPtr HeroExpr::delta_left(int k, HeroExprPtr inner) {
    return std::make_shared<const HeroExpr>(Node{DeltaLeft{k, std::move(inner)}});
}

HeroExprPtr HeroExpr::delta_right(HeroExprPtr inner, int k) {
    return std::make_shared<const HeroExpr>(Node{DeltaRight{std::move(inner), k}});
}

Digraph HeroExpr::eval() const {
    if (std::holds_alternative<Leaf>(node_)) return tt(1);
    if (const auto* s = std::get_if<Seq>(&node_))
        return compose_all_arcs(s->left->eval(), s->right->eval());
    if (const auto* dl = std::get_if<DeltaLeft>(&node_))
        return delta(tt(dl->k), dl->inner->eval());
    const auto& dr = std::get<DeltaRight>(node_);
    return delta(dr.inner->eval(), tt(dr.k));
}

std::string HeroExpr::to_string() const {
    if (std::holds_alternative<Leaf>(node_)) return "K1";
    if (const auto* s = std::get_if<Seq>(&node_))
        return "(" + s->left->to_string() + "=>" + s->right->to_string() + ")";
    if (const auto* dl = std::get_if<DeltaLeft>(&node_))
        return "D(1," + std::to_string(dl->k) + "," + dl->inner->to_string() + ")";
    const auto& dr = std::get<DeltaRight>(node_);
    return "D(1," + dr.inner->to_string() + "," + std::to_string(dr.k) + ")";
}

bool embedding_is_induced(const Digraph& host, const Digraph& pattern,
                          const Embedding& e) {
    const int np = pattern.vertex_count();
    if (static_cast<int>(e.image.size()) != np) return false;
    for (int i = 0; i < np; ++i) {
        if (e.image[i] < 0 || e.image[i] >= host.vertex_count()) return false;
        for (int j = 0; j < np; ++j) {
            if (i == j) continue;
            if (e.image[i] == e.image[j]) return false;
            if (pattern.has_arc(i, j) != host.has_arc(e.image[i], e.image[j]))
                return false;
        }
    }
    return true;
}

std::optional<Embedding> contains_induced(const Digraph& host,
                                          const Digraph& pattern) {
    const int np = pattern.vertex_count();
    const int nh = host.vertex_count();
    if (np == 0) return Embedding{};
    if (np > nh) return std::nullopt;

    std::vector<int> order(static_cast<std::size_t>(np));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = pattern.out_degree(a) + pattern.in_degree(a);
        int db = pattern.out_degree(b) + pattern.in_degree(b);
        return da != db ? da > db : a < b;
    });

    std::vector<int> image(static_cast<std::size_t>(np), -1);
    VertexSet used(nh);

    auto feasible = [&](int u, int v) {
        if (host.out_degree(v) < pattern.out_degree(u)) return false;
        if (host.in_degree(v) < pattern.in_degree(u)) return false;
        for (int q : order) {
            if (image[q] == -1) continue;
            if (pattern.has_arc(u, q) != host.has_arc(v, image[q])) return false;
            if (pattern.has_arc(q, u) != host.has_arc(image[q], v)) return false;
        }
        return true;
    };

    // Depth-first over positions in `order`; candidates ascend, so the
    // returned embedding is reproducible.
    std::vector<int> cursor(static_cast<std::size_t>(np), -1);
    int depth = 0;
    while (depth >= 0) {
        if (depth == np) {
            Embedding e;
            e.image = image;
            return e;
        }
        int u = order[depth];
        int v = cursor[depth];
        if (v >= 0) {
            used.reset(v);
            image[u] = -1;
        }
        int next = v + 1;
        for (; next < nh; ++next)
            if (!used.test(next) && feasible(u, next)) break;
        if (next >= nh) {
            cursor[depth] = -1;
            --depth;
            continue;
        }
        cursor[depth] = next;
        image[u] = next;
        used.set(next);
        ++depth;
    }
    return std::nullopt;
}

namespace {

// Triangle a -> b -> c -> a inside the given neighborhood of z.
std::optional<std::array<int, 3>> triangle_inside(const Digraph& host,
                                                  const VertexSet& around) {
    for (int a = around.first(); a != -1; a = around.next(a)) {
        VertexSet bs = around & host.out(a);
        for (int b = bs.first(); b != -1; b = bs.next(b)) {
            VertexSet cs = around & host.out(b) & host.in(a);
            int c = cs.first();
            if (c != -1) return std::array<int, 3>{a, b, c};
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Embedding> find_c3_to_k1(const Digraph& host) {
    const int n = host.vertex_count();
    for (int z = 0; z < n; ++z) {
        if (auto t = triangle_inside(host, host.in(z)))
            return Embedding{{(*t)[0], (*t)[1], (*t)[2], z}};
    }
    return std::nullopt;
}

std::optional<Embedding> find_k1_to_c3(const Digraph& host) {
    const int n = host.vertex_count();
    for (int z = 0; z < n; ++z) {
        if (auto t = triangle_inside(host, host.out(z)))
            return Embedding{{z, (*t)[0], (*t)[1], (*t)[2]}};
    }
    return std::nullopt;
}

namespace {

std::optional<HeroExprPtr> hero_rec(const Digraph& h);

struct HeroMemo {
    std::mutex mu;
    std::map<CanonicalForm, std::optional<HeroExprPtr>> cache;
};

HeroMemo& hero_memo() {
    static HeroMemo m;
    return m;
}

std::optional<HeroExprPtr> hero_strong(const Digraph& h) {
    const int n = h.vertex_count();
    // A strongly connected grammar member is an apex x over a complete
    // split x+ -> x-, with one side transitive and the other in the
    // grammar. The apex of that construction witnesses its own split, so
    // scanning every vertex is complete.
    for (int x = 0; x < n; ++x) {
        const VertexSet& a = h.out(x);
        const VertexSet& b = h.in(x);
        bool complete = true;
        for (int u = a.first(); u != -1 && complete; u = a.next(u))
            if (!b.is_subset_of(h.out(u))) complete = false;
        if (!complete) continue;
        Digraph da = induced(h, a);
        Digraph db = induced(h, b);
        if (is_transitive_tournament(da)) {
            if (auto inner = hero_rec(db))
                return HeroExpr::delta_left(da.vertex_count(), *inner);
        }
        if (is_transitive_tournament(db)) {
            if (auto inner = hero_rec(da))
                return HeroExpr::delta_right(*inner, db.vertex_count());
        }
    }
    return std::nullopt;
}

std::optional<HeroExprPtr> hero_rec(const Digraph& h) {
    const int n = h.vertex_count();
    if (n == 0) return std::nullopt;
    if (n == 1) return HeroExpr::leaf();

    std::optional<CanonicalForm> key;
    if (n <= kCanonicalMaxVertices) {
        key = canonical_form(h);
        std::lock_guard lock(hero_memo().mu);
        auto it = hero_memo().cache.find(*key);
        if (it != hero_memo().cache.end()) return it->second;
    }

    std::optional<HeroExprPtr> result;
    std::vector<std::vector<int>> comps = strong_components(h);
    if (comps.size() > 1) {
        // Condensation of a tournament is a total order; fold left.
        result = hero_rec(induced(h, comps[0]));
        for (std::size_t i = 1; result && i < comps.size(); ++i) {
            auto next = hero_rec(induced(h, comps[i]));
            if (!next)
                result = std::nullopt;
            else
                result = HeroExpr::seq(*result, *next);
        }
    } else {
        result = hero_strong(h);
    }

    if (key) {
        std::lock_guard lock(hero_memo().mu);
        hero_memo().cache.emplace(*key, result);
    }
    return result;
}

}  // namespace

std::optional<HeroExprPtr> is_hero_in_tournaments(const Digraph& h) {
    if (!is_tournament(h))
        throw Error(ErrorCode::not_a_tournament,
                    "hero classification is defined for tournaments only");
    return hero_rec(h);
}

ChordalHeroVerdict is_hero_in_chordal(const Digraph& h) {
    if (!is_tournament(h))
        throw Error(ErrorCode::not_a_tournament,
                    "hero classification is defined for tournaments only");
    if (is_transitive_tournament(h))
        return {true, ChordalHeroReason::transitive, 0};
    const int n = h.vertex_count();
    for (int x = 0; x < n; ++x) {
        if (h.out_degree(x) != 1) continue;
        int a = h.out(x).first();
        const VertexSet& b = h.in(x);
        if (!b.is_subset_of(h.out(a))) continue;
        if (is_transitive_tournament(induced(h, b)))
            return {true, ChordalHeroReason::delta_one_one_k, b.count()};
    }
    return {false, ChordalHeroReason::not_hero, 0};
}

ObstructionReport minimal_obstruction_check(const Digraph& h) {
    auto derivation = is_hero_in_tournaments(h);
    if (!derivation)
        throw Error(ErrorCode::not_a_hero, "input is outside the hero grammar");
    ObstructionReport r;
    r.contains_delta122 = contains_induced(h, delta1(2, 2)).has_value();
    r.contains_c3_to_k1 = find_c3_to_k1(h).has_value();
    r.contains_k1_to_c3 = find_k1_to_c3(h).has_value();
    ChordalHeroVerdict v = is_hero_in_chordal(h);
    if (v.hero) {
        r.kind = v.reason == ChordalHeroReason::transitive
                     ? ObstructionKind::transitive
                     : ObstructionKind::delta_one_one_k;
        r.k = v.k;
    } else {
        r.kind = ObstructionKind::obstructed;
    }
    return r;
}

namespace {

[[noreturn]] void bad_pattern(std::string_view text) {
    throw Error(ErrorCode::parse_error,
                "unrecognized pattern \"" + std::string(text) + "\"");
}

std::optional<int> parse_int(std::string_view s) {
    if (s.empty()) return std::nullopt;
    int value = 0;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
        if (value > 100000) return std::nullopt;
        value = value * 10 + (ch - '0');
    }
    return value;
}

}  // namespace

Digraph parse_pattern(std::string_view text) {
    std::string upper;
    for (char ch : text)
        upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    std::istringstream in(upper);
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (tokens.empty()) bad_pattern(text);

    if (tokens.size() == 1) {
        const std::string& t = tokens[0];
        if (t == "C3") return c3();
        if (t == "C3=>K1") return c3_to_k1();
        if (t == "K1=>C3") return k1_to_c3();
        if (t.size() > 2 && t.rfind("TT", 0) == 0) {
            if (auto k = parse_int(t.substr(2)); k && *k >= 1) return tt(*k);
        }
        // Compact apex form with single digits, e.g. D122.
        if (t.size() == 4 && t[0] == 'D' && t[1] == '1' &&
            std::isdigit(static_cast<unsigned char>(t[2])) &&
            std::isdigit(static_cast<unsigned char>(t[3]))) {
            int a = t[2] - '0', b = t[3] - '0';
            if (a >= 1 && b >= 1) return delta1(a, b);
        }
        bad_pattern(text);
    }
    if (tokens.size() == 2 && tokens[0] == "TT") {
        if (auto k = parse_int(tokens[1]); k && *k >= 1) return tt(*k);
    }
    if (tokens.size() == 4 && tokens[0] == "D" && tokens[1] == "1") {
        auto a = parse_int(tokens[2]);
        auto b = parse_int(tokens[3]);
        if (a && b && *a >= 1 && *b >= 1) return delta1(*a, *b);
    }
    bad_pattern(text);
}

}  // namespace dichro
