#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <doctest.h>

#include "dichro/chordal.hpp"
#include "dichro/coloring.hpp"
#include "dichro/constructions.hpp"
#include "dichro/harness.hpp"
#include "dichro/patterns.hpp"
#include "oracles.hpp"

using namespace dichro;

namespace {

// A monochromatic cycle certificate must be a directed cycle in one class.
void check_cycle_certificate(const Digraph& d, const Dicoloring& c,
                             const std::vector<int>& cycle) {
    REQUIRE(cycle.size() >= 3);
    const int color = c.color[cycle[0]];
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        CHECK(c.color[cycle[i]] == color);
        CHECK(d.has_arc(cycle[i], cycle[(i + 1) % cycle.size()]));
    }
}

}  // namespace

TEST_CASE("valid and invalid dicolorings are told apart with certificates") {
    const Digraph t = tt(5);
    DicoloringCheck all_one = validate_dicoloring(t, {{0, 0, 0, 0, 0}, 1});
    CHECK(all_one.valid);
    CHECK(all_one.monochromatic_cycle.empty());

    const Digraph tri = c3();
    DicoloringCheck mono = validate_dicoloring(tri, {{0, 0, 0}, 1});
    CHECK_FALSE(mono.valid);
    check_cycle_certificate(tri, {{0, 0, 0}, 1}, mono.monochromatic_cycle);

    CHECK(validate_dicoloring(tri, {{0, 0, 1}, 2}).valid);
    CHECK(validate_dicoloring(tri, {{1, 0, 1}, 2}).valid);
}

TEST_CASE("partial or out-of-range colorings are rejected") {
    const Digraph tri = c3();
    CHECK_THROWS_AS(validate_dicoloring(tri, {{0, 0}, 1}), Error);
    CHECK_THROWS_AS(validate_dicoloring(tri, {{0, 0, 1}, 1}), Error);
    CHECK_THROWS_AS(validate_dicoloring(tri, {{0, 0, -1}, 2}), Error);
    try {
        validate_dicoloring(tri, {{0, 0}, 1});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::partial_coloring);
    }
}

TEST_CASE("the exact solver separates infeasible from found") {
    const Digraph tri = c3();
    SolveOutcome one = is_k_dicolorable(tri, 1);
    CHECK(one.status == SolveStatus::infeasible);

    SolveOutcome two = is_k_dicolorable(tri, 2);
    REQUIRE(two.status == SolveStatus::found);
    CHECK(validate_dicoloring(tri, two.coloring).valid);
    CHECK(two.coloring.palette == 2);
    CHECK(two.nodes > 0);
}

TEST_CASE("an exhausted node budget is a distinct outcome, not a verdict") {
    const Digraph d = delta122_witness(3);
    SolverOptions tiny;
    tiny.node_budget = 1;
    SolveOutcome out = is_k_dicolorable(d, 2, tiny);
    CHECK(out.status == SolveStatus::budget_exceeded);

    // The same question answered in full: 2 colors are provably not enough.
    SolveOutcome full = is_k_dicolorable(d, 2);
    CHECK(full.status == SolveStatus::infeasible);
}

TEST_CASE("dichromatic number of transitive tournaments is one") {
    for (int k = 1; k <= 6; ++k) {
        ChiResult r = dichromatic_number(tt(k));
        REQUIRE(r.status == SolveStatus::found);
        CHECK(r.chi == 1);
        CHECK(validate_dicoloring(tt(k), r.witness).valid);
    }
}

TEST_CASE("dichromatic number of small named digraphs") {
    ChiResult tri = dichromatic_number(c3());
    REQUIRE(tri.status == SolveStatus::found);
    CHECK(tri.chi == 2);
    CHECK(tri.refuted_below == 1);

    ChiResult w3 = dichromatic_number(delta122_witness(3));
    REQUIRE(w3.status == SolveStatus::found);
    CHECK(w3.chi == 3);
    CHECK(w3.refuted_below == 2);
    CHECK(validate_dicoloring(delta122_witness(3), w3.witness).valid);
}

TEST_CASE("solver agrees with brute force on every labeled tournament up to n=4") {
    for (int n = 1; n <= 4; ++n) {
        for_each_labeled_tournament(n, [&](const Digraph& t) {
            ChiResult r = dichromatic_number(t);
            REQUIRE(r.status == SolveStatus::found);
            CHECK(r.chi == oracles::chi(t));
        });
    }
}

TEST_CASE("solver agrees with brute force on sampled digraphs up to n=6") {
    std::mt19937_64 rng(0xC01u);
    for (int n = 5; n <= 6; ++n) {
        for (int trial = 0; trial < 25; ++trial) {
            const Digraph d = oracles::random_digraph(n, rng());
            ChiResult r = dichromatic_number(d);
            REQUIRE(r.status == SolveStatus::found);
            CHECK(r.chi == oracles::chi(d));
            CHECK(validate_dicoloring(d, r.witness).valid);
        }
    }
}

TEST_CASE("parallel solve returns the same verdict and the same witness") {
    std::mt19937_64 rng(0xBEEFu);
    SolverOptions par;
    par.threads = 4;
    for (int trial = 0; trial < 20; ++trial) {
        const Digraph d = oracles::random_digraph(12, rng());
        ChiResult seq_chi = dichromatic_number(d);
        ChiResult par_chi = dichromatic_number(d, par);
        REQUIRE(seq_chi.status == SolveStatus::found);
        REQUIRE(par_chi.status == SolveStatus::found);
        CHECK(seq_chi.chi == par_chi.chi);
        CHECK(seq_chi.witness.color == par_chi.witness.color);

        SolveOutcome seq_try = is_k_dicolorable(d, seq_chi.chi);
        SolveOutcome par_try = is_k_dicolorable(d, seq_chi.chi, par);
        REQUIRE(seq_try.status == SolveStatus::found);
        REQUIRE(par_try.status == SolveStatus::found);
        CHECK(seq_try.coloring.color == par_try.coloring.color);
    }
}

TEST_CASE("greedy transitive subtournament meets the logarithmic floor") {
    std::vector<int> full = stearns_transitive(tt(8));
    REQUIRE(full.size() == 8);
    for (std::size_t i = 0; i < full.size(); ++i) CHECK(full[i] == int(i));

    std::vector<int> tri = stearns_transitive(c3());
    CHECK(tri.size() == 2);

    for (const Digraph& t : sample_tournaments(32, 10, 0x5EEDu)) {
        std::vector<int> chain = stearns_transitive(t);
        CHECK(chain.size() >= 6);  // floor(log2 32) + 1
        std::set<int> distinct(chain.begin(), chain.end());
        CHECK(distinct.size() == chain.size());
        for (std::size_t i = 0; i < chain.size(); ++i)
            for (std::size_t j = i + 1; j < chain.size(); ++j)
                CHECK(t.has_arc(chain[i], chain[j]));
    }
}

TEST_CASE("triangle degree counts disjoint triangles through a vertex") {
    // Apex of delta1(1,2): both triangles share the inner vertex.
    CHECK(triangle_degree(delta1(1, 2), 0) == 1);
    // Apex of delta1(2,2): two disjoint triangles fit.
    CHECK(triangle_degree(delta1(2, 2), 0) == 2);
    // Transitive tournaments have no directed triangles at all.
    for (int v = 0; v < 6; ++v) CHECK(triangle_degree(tt(6), v) == 0);
}

TEST_CASE("triangle degree matches the brute-force packing oracle") {
    std::mt19937_64 rng(0x7D1u);
    for (int n = 4; n <= 7; ++n) {
        for (int trial = 0; trial < 15; ++trial) {
            const Digraph d = oracles::random_digraph(n, rng());
            for (int v = 0; v < n; ++v)
                CHECK(triangle_degree(d, v) == oracles::triangle_degree(d, v));
        }
    }
}

TEST_CASE("simplicial reinsertion colors apex-free chordal orientations") {
    const Digraph pattern = delta1(1, 2);
    RandomChordalOptions opts;
    opts.avoid = &pattern;
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const Digraph d = random_chordal_orientation(30, seed, opts);
        Dicoloring c = color_delta11k_free_chordal(d, 2, true);
        CHECK(c.palette <= 4);  // 2^(2k-2) at k=2
        CHECK(validate_dicoloring(d, c).valid);
    }
}

TEST_CASE("simplicial reinsertion rejects bad inputs when asked to verify") {
    // An oriented four-cycle is not chordal.
    const Digraph hole = Digraph::from_arcs(
        4, {Arc{0, 1}, Arc{1, 2}, Arc{0, 3}, Arc{3, 2}});
    CHECK_THROWS_AS(color_delta11k_free_chordal(hole, 2, true), Error);
    try {
        color_delta11k_free_chordal(hole, 2, true);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_chordal);
    }

    // The forbidden pattern itself is a chordal orientation, so only the
    // freeness precondition can reject it.
    try {
        color_delta11k_free_chordal(delta1(1, 2), 2, true);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::precondition_violated);
    }
}

TEST_CASE("proper coloring handles transitive-tournament-free chordal orientations") {
    const Digraph pattern = tt(3);
    RandomChordalOptions opts;
    opts.avoid = &pattern;
    opts.max_clique = 2;  // any 3-clique orientation contains tt(3) or c3
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const Digraph d = random_chordal_orientation(30, seed, opts);
        Dicoloring c = color_ttk_free_chordal(d, 3, true);
        CHECK(c.palette <= 3);  // 2^(k-1) - 1 at k=3
        CHECK(validate_dicoloring(d, c).valid);
    }
}

TEST_CASE("proper coloring refuses cliques past the guaranteed bound") {
    try {
        color_ttk_free_chordal(tt(4), 3);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::clique_too_large);
    }
    // At k=4 the bound is 8, so tt(4) is fine and takes 4 colors.
    Dicoloring c = color_ttk_free_chordal(tt(4), 4);
    CHECK(c.palette <= 7);
    CHECK(validate_dicoloring(tt(4), c).valid);
}

TEST_CASE("interval layers alternate two palettes") {
    // Intervals [0.5,1.5], [0.9,1.9], [2.2,3.2]: the first two meet.
    const Digraph d = Digraph::from_arcs(3, {Arc{0, 1}});
    UnitIntervalRepresentation rep{{0.5, 0.9, 2.2}};
    validate_unit_intervals(d, rep);

    UnitIntervalColoring out = color_unit_interval(d, rep);
    CHECK(out.layer_palette == 1);
    CHECK(out.coloring.palette == 2);
    CHECK(validate_dicoloring(d, out.coloring).valid);
}

TEST_CASE("interval coloring stays within twice the worst layer") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto [d, rep] = random_unit_interval_orientation(40, seed, 6.0);
        UnitIntervalColoring out = color_unit_interval(d, rep);
        CHECK(validate_dicoloring(d, out.coloring).valid);
        CHECK(out.coloring.palette == 2 * out.layer_palette);

        // The reported layer palette is the exact worst layer.
        int worst = 0;
        for (const IntervalLayer& layer : layers_from_unit_intervals(d, rep)) {
            const Digraph sub = induced(d, layer.members);
            ChiResult r = dichromatic_number(sub);
            REQUIRE(r.status == SolveStatus::found);
            worst = std::max(worst, r.chi);
        }
        CHECK(out.layer_palette == worst);
    }
}

TEST_CASE("a custom layer colorer is honored") {
    auto [d, rep] = random_unit_interval_orientation(24, 3, 4.0);
    int biggest = 0;
    for (const IntervalLayer& layer : layers_from_unit_intervals(d, rep))
        biggest = std::max(biggest, layer.members.count());

    TournamentColorer rainbow = [](const Digraph& t) {
        Dicoloring c;
        c.color.resize(t.vertex_count());
        std::iota(c.color.begin(), c.color.end(), 0);
        c.palette = t.vertex_count();
        return c;
    };
    UnitIntervalColoring out = color_unit_interval(d, rep, rainbow);
    CHECK(out.layer_palette == biggest);
    CHECK(out.coloring.palette == 2 * biggest);
    CHECK(validate_dicoloring(d, out.coloring).valid);
}
