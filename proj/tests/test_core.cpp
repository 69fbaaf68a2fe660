#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "dichro/digraph.hpp"
#include "dichro/graph_io.hpp"
#include "dichro/patterns.hpp"
#include "oracles.hpp"

using namespace dichro;

TEST_CASE("vertex sets behave like bitsets over a fixed universe") {
    VertexSet s = VertexSet::of(70, {3, 64, 69});
    CHECK(s.count() == 3);
    CHECK(s.test(64));
    CHECK_FALSE(s.test(4));
    CHECK(s.first() == 3);
    CHECK(s.next(3) == 64);
    CHECK(s.next(64) == 69);
    CHECK(s.next(69) == -1);

    VertexSet t = VertexSet::of(70, {3, 5});
    CHECK(s.intersects(t));
    CHECK((s & t).count() == 1);
    CHECK((s | t).count() == 4);
    CHECK((s - t).count() == 2);
    CHECK(t.is_subset_of(s | t));

    VertexSet full = VertexSet::full(70);
    CHECK(full.count() == 70);
    int visited = 0;
    full.for_each([&](int) { ++visited; });
    CHECK(visited == 70);

    s.reset(64);
    CHECK(s.count() == 2);
    s.clear();
    CHECK(s.empty());
}

TEST_CASE("builder rejects malformed arcs") {
    DigraphBuilder b(3);
    b.add_arc(0, 1);
    CHECK_THROWS_WITH_AS(b.add_arc(1, 1), doctest::Contains("loop"), Error);
    CHECK_THROWS_AS(b.add_arc(1, 0), Error);   // digon
    CHECK_THROWS_AS(b.add_arc(0, 1), Error);   // duplicate
    CHECK_THROWS_AS(b.add_arc(0, 3), Error);   // out of range
    try {
        b.add_arc(1, 0);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::digon_arc);
    }
}

TEST_CASE("arc and degree bookkeeping") {
    const Digraph d = Digraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    CHECK(d.vertex_count() == 4);
    CHECK(d.arc_count() == 4);
    CHECK(d.has_arc(0, 1));
    CHECK_FALSE(d.has_arc(1, 0));
    CHECK(d.adjacent(1, 0));
    CHECK(d.out_degree(0) == 2);
    CHECK(d.in_degree(0) == 1);
    CHECK(d.out(0).test(3));
    CHECK(d.in(2).test(1));
    const std::vector<Arc> arcs = d.arcs();
    CHECK(arcs.size() == 4);
    CHECK(std::is_sorted(arcs.begin(), arcs.end()));
    CHECK(d == Digraph::from_arcs(4, {{0, 3}, {2, 0}, {1, 2}, {0, 1}}));
}

TEST_CASE("acyclicity matches the reference DFS") {
    CHECK(is_acyclic(tt(4)));
    CHECK_FALSE(is_acyclic(c3()));
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const Digraph d = oracles::random_digraph(7, seed);
        CHECK(is_acyclic(d) == oracles::acyclic(d));
    }
}

TEST_CASE("transitive orders exist exactly for acyclic tournaments") {
    const Digraph shuffled =
        Digraph::from_arcs(4, {{2, 0}, {2, 1}, {2, 3}, {0, 1}, {3, 0}, {3, 1}});
    const auto order = transitive_order(shuffled);
    REQUIRE(order.has_value());
    CHECK(*order == std::vector<int>{2, 3, 0, 1});
    CHECK(is_transitive_tournament(tt(6)));
    CHECK_FALSE(transitive_order(c3()).has_value());
    CHECK_FALSE(transitive_order(Digraph::from_arcs(3, {{0, 1}})).has_value());
}

TEST_CASE("tournament recognition") {
    CHECK(is_tournament(tt(5)));
    CHECK(is_tournament(c3()));
    CHECK_FALSE(is_tournament(Digraph::from_arcs(3, {{0, 1}, {1, 2}})));
    CHECK(is_tournament(Digraph::from_arcs(0, {})));
}

TEST_CASE("strong components come out in condensation order") {
    const Digraph d = c3_to_k1();
    const std::vector<std::vector<int>> comps = strong_components(d);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1, 2});
    CHECK(comps[1] == std::vector<int>{3});

    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const Digraph g = oracles::random_digraph(8, seed * 7);
        const std::vector<std::vector<int>> parts = strong_components(g);
        std::vector<int> part_of(8, -1);
        int covered = 0;
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (int v : parts[i]) {
                part_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
                ++covered;
            }
        CHECK(covered == 8);
        for (const Arc& a : g.arcs())
            CHECK(part_of[static_cast<std::size_t>(a.from)] <=
                  part_of[static_cast<std::size_t>(a.to)]);
    }
}

TEST_CASE("full composition adds every cross arc") {
    const Digraph k = compose_all_arcs(tt(2), c3());
    CHECK(k.vertex_count() == 5);
    CHECK(k.arc_count() == 1 + 3 + 6);
    for (int u = 0; u < 2; ++u)
        for (int v = 2; v < 5; ++v) CHECK(k.has_arc(u, v));
}

TEST_CASE("reversal is an involution that flips arcs") {
    const Digraph d = oracles::random_digraph(9, 5);
    const Digraph r = reverse(d);
    CHECK(r.arc_count() == d.arc_count());
    for (const Arc& a : d.arcs()) CHECK(r.has_arc(a.to, a.from));
    CHECK(reverse(r) == d);
}

TEST_CASE("induced subdigraphs keep exactly the selected relations") {
    const Digraph d = c3_to_k1();
    const Digraph tri = induced(d, VertexSet::of(4, {0, 1, 2}));
    CHECK(tri == c3());
    const Digraph pair = induced(d, std::vector<int>{1, 3});
    CHECK(pair.vertex_count() == 2);
    CHECK(pair.has_arc(0, 1));
}

TEST_CASE("underlying graph forgets orientation") {
    const UndirectedGraph g = underlying_graph(c3());
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.adjacent(0, 2));
    CHECK(g.degree(1) == 2);
}

TEST_CASE("graph files round trip") {
    const Digraph d = oracles::random_digraph(12, 99);
    std::stringstream io;
    write_digraph(io, d);
    CHECK(read_digraph(io) == d);
}

TEST_CASE("graph parser reports precise failures") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_digraph(in);
    };
    CHECK(parse("# c\n\n 2 1 \n0 1\n").vertex_count() == 2);
    CHECK(parse("2 1\n0 1 # trailing comment\n").arc_count() == 1);
    CHECK_THROWS_WITH_AS(parse(""), doctest::Contains("empty"), Error);
    CHECK_THROWS_WITH_AS(parse("2 2\n0 1\n"), doctest::Contains("1 of 2"),
                         Error);
    CHECK_THROWS_WITH_AS(parse("2 1\n0 1\n1 0\n"), doctest::Contains("line 3"),
                         Error);
    CHECK_THROWS_WITH_AS(parse("2 1\n0 1 junk\n"),
                         doctest::Contains("trailing"), Error);
    CHECK_THROWS_WITH_AS(parse("2 1\n1 1\n"), doctest::Contains("loop"), Error);
    CHECK_THROWS_WITH_AS(parse("x y\n"), doctest::Contains("line 1"), Error);
    try {
        parse("2 1\n0 2\n");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::parse_error);
    }
    CHECK_THROWS_AS(read_digraph_file("/nonexistent/l.graph"), Error);
}

TEST_CASE("coloring files round trip and validate input") {
    Dicoloring c{{2, 0, 1}, 3};
    std::stringstream io;
    write_coloring(io, c);
    const Dicoloring back = read_coloring(io, 3);
    CHECK(back.color == c.color);
    CHECK(back.palette == 3);

    auto parse = [](const std::string& text, int n) {
        std::istringstream in(text);
        return read_coloring(in, n);
    };
    CHECK_THROWS_WITH_AS(parse("0 0\n", 2), doctest::Contains("1 of 2"), Error);
    CHECK_THROWS_WITH_AS(parse("0 0\n0 1\n", 2), doctest::Contains("twice"),
                         Error);
    CHECK_THROWS_WITH_AS(parse("5 0\n", 2), doctest::Contains("outside"),
                         Error);
    CHECK_THROWS_WITH_AS(parse("0 -1\n1 0\n", 2),
                         doctest::Contains("negative"), Error);
}

TEST_CASE("interval files round trip") {
    const UnitIntervalRepresentation rep{{0.25, 1.5, 0.125}};
    std::stringstream io;
    write_intervals(io, rep);
    const UnitIntervalRepresentation back = read_intervals(io, 3);
    CHECK(back.left == rep.left);
    std::istringstream missing("0 0.5\n");
    CHECK_THROWS_WITH_AS(read_intervals(missing, 2),
                         doctest::Contains("no interval"), Error);
}

TEST_CASE("dot export lists vertices, arcs, and colors") {
    const Dicoloring c{{0, 1, 0}, 2};
    const std::string plain = to_dot(c3());
    CHECK(plain.find("0 -> 1;") != std::string::npos);
    CHECK(plain.find("fillcolor") == std::string::npos);
    const std::string filled = to_dot(c3(), &c);
    CHECK(filled.find("fillcolor") != std::string::npos);
    CHECK(filled.find("\"1:1\"") != std::string::npos);
}
