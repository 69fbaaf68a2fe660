#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "dichro/coloring.hpp"
#include "dichro/harness.hpp"
#include "dichro/patterns.hpp"
#include "oracles.hpp"

using namespace dichro;

TEST_CASE("canonical forms are permutation invariants") {
    std::mt19937_64 rng(0xCAFEu);
    for (int trial = 0; trial < 30; ++trial) {
        const Digraph d = oracles::random_digraph(6, rng());
        std::vector<int> perm(6);
        for (int i = 0; i < 6; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        DigraphBuilder b(6);
        for (const Arc& a : d.arcs()) b.add_arc(perm[a.from], perm[a.to]);
        const Digraph relabeled = std::move(b).build();
        CHECK(canonical_form(d) == canonical_form(relabeled));
        CHECK(canonically_equal(d, relabeled));
    }

    CHECK(canonical_form(c3()) != canonical_form(tt(3)));
    CHECK_FALSE(canonically_equal(c3(), tt(3)));
    CHECK_FALSE(canonically_equal(tt(3), tt(4)));
}

TEST_CASE("canonical forms stop at eight vertices") {
    try {
        canonical_form(tt(9));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::universe_too_large);
    }
}

TEST_CASE("labeled tournaments are enumerated completely") {
    CHECK(tournament_count(3) == 8);
    CHECK(tournament_count(5) == 1024);
    CHECK_THROWS_AS(tournament_count(9), Error);

    int seen = 0;
    for_each_labeled_tournament(3, [&](const Digraph& t) {
        CHECK(is_tournament(t));
        CHECK(t.vertex_count() == 3);
        ++seen;
    });
    CHECK(seen == 8);

    // Index bits orient lexicographic pairs: pair order (0,1),(0,2),(1,2).
    const Digraph t5 = tournament_from_index(3, 0b101);
    CHECK(t5.has_arc(0, 1));
    CHECK(t5.has_arc(2, 0));
    CHECK(t5.has_arc(1, 2));
}

TEST_CASE("isomorphism classes of small tournaments are counted") {
    CHECK(tournament_classes(3).size() == 2);
    CHECK(tournament_classes(4).size() == 4);
    CHECK(tournament_classes(5).size() == 12);
    for (const Digraph& t : tournament_classes(4)) CHECK(is_tournament(t));
}

TEST_CASE("tournament sampling is deterministic in the seed") {
    const auto a = sample_tournaments(10, 5, 77);
    const auto b = sample_tournaments(10, 5, 77);
    const auto c = sample_tournaments(10, 5, 78);
    REQUIRE(a.size() == 5);
    CHECK(a[0] == b[0]);
    CHECK(a[4] == b[4]);
    CHECK(a[0] != c[0]);
    for (const Digraph& t : a) CHECK(is_tournament(t));
}

TEST_CASE("the hero closure reproduces its own derivations") {
    const HeroClosure closure = enumerate_heroes(5);
    CHECK_FALSE(closure.classes.empty());
    for (const auto& [form, entry] : closure.classes) {
        const auto& [d, expr] = entry;
        CHECK(canonical_form(d) == form);
        CHECK(canonically_equal(expr->eval(), d));
        CHECK(is_tournament(d));
    }

    // Every tournament on up to four vertices is in the closure.
    int four = 0;
    for (const auto& [form, entry] : closure.classes)
        if (form.n == 4) ++four;
    CHECK(four == 4);

    // On five vertices some classes are absent: not every tournament is
    // reachable by the two composition rules.
    int five = 0;
    for (const auto& [form, entry] : closure.classes)
        if (form.n == 5) ++five;
    CHECK(five > 0);
    CHECK(five < 12);
}

TEST_CASE("property results serialize with stable keys") {
    PropertyResult r;
    r.name = "demo";
    r.universe = "nothing";
    r.instances_checked = 3;
    r.note = "fine";
    r.elapsed_seconds = 1.5;

    const std::string plain = r.to_json();
    CHECK(plain.find("\"name\"") != std::string::npos);
    CHECK(plain.find("\"universe\"") != std::string::npos);
    CHECK(plain.find("\"instances_checked\"") != std::string::npos);
    CHECK(plain.find("\"holds\"") != std::string::npos);
    CHECK(plain.find("elapsed_seconds") == std::string::npos);
    CHECK(r.to_json(true).find("elapsed_seconds") != std::string::npos);

    PropertyResult again = r;
    again.elapsed_seconds = 99.0;  // timing differences never leak
    CHECK(r.to_json() == again.to_json());
}

TEST_CASE("the registry lists every built-in property") {
    const std::vector<std::string> names = registered_properties();
    for (const char* expected :
         {"lemma24_bound", "stearns_bound", "hero_recognizer_complete",
          "trichotomy", "rainbow_exhaustive", "thm25_bound", "thm31_bound",
          "reversal_duality"}) {
        CHECK(std::find(names.begin(), names.end(), expected) != names.end());
        CHECK_FALSE(property_description(expected).empty());
    }
    CHECK_THROWS_AS(check_property("no_such_property"), Error);
    try {
        check_property("no_such_property");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::unknown_property);
    }
}

TEST_CASE("registered properties hold at reduced budgets") {
    PropertyBudget small;
    small.max_n = 5;
    small.samples = 20;

    for (const char* name :
         {"lemma24_bound", "stearns_bound", "hero_recognizer_complete",
          "trichotomy", "reversal_duality"}) {
        PropertyResult r = check_property(name, small);
        CHECK(r.holds());
        CHECK(r.instances_checked > 0);
        CHECK(r.name == name);
        CHECK_FALSE(r.universe.empty());
    }

    PropertyBudget tiny_samples;
    tiny_samples.max_n = 16;
    tiny_samples.samples = 5;
    tiny_samples.k = 2;
    CHECK(check_property("thm25_bound", tiny_samples).holds());
    CHECK(check_property("thm31_bound", tiny_samples).holds());

    PropertyBudget rainbow;
    rainbow.k = 2;
    CHECK(check_property("rainbow_exhaustive", rainbow).holds());
}

TEST_CASE("the apex-free tournament census is stable at defaults") {
    const PropertyResult r = check_property("lemma24_bound");
    CHECK(r.holds());
    CHECK(r.instances_checked == 33867);  // all labeled tournaments, n <= 6
    CHECK(r.note.find("2051") != std::string::npos);  // the pattern-free ones
}

TEST_CASE("identical budgets give byte-identical reports") {
    PropertyBudget b;
    b.max_n = 5;
    const std::string once = check_property("lemma24_bound", b).to_json();
    const std::string twice = check_property("lemma24_bound", b).to_json();
    CHECK(once == twice);
}

TEST_CASE("custom properties can be registered and report counterexamples") {
    const std::string dir =
        (std::filesystem::temp_directory_path() / "dichro-harness-test").string();
    std::filesystem::remove_all(dir);

    register_property("always_fails_demo", "synthetic failing property",
                      [](const PropertyBudget& budget) {
                          PropertyResult r;
                          r.name = "always_fails_demo";
                          r.universe = "one hard-wired triangle";
                          r.instances_checked = 1;
                          r.counterexamples.push_back(c3());
                          if (!budget.results_dir.empty()) {
                              namespace fs = std::filesystem;
                              fs::create_directories(budget.results_dir);
                              const std::string path =
                                  budget.results_dir + "/always_fails_demo-0.digraph";
                              r.counterexample_paths.push_back(path);
                          }
                          return r;
                      });

    PropertyBudget budget;
    budget.results_dir = dir;
    PropertyResult r = check_property("always_fails_demo", budget);
    CHECK_FALSE(r.holds());
    REQUIRE(r.counterexamples.size() == 1);
    CHECK(canonically_equal(r.counterexamples[0], c3()));
    REQUIRE(r.counterexample_paths.size() == 1);
    CHECK(r.elapsed_seconds >= 0.0);
    CHECK(r.to_json().find("counterexample_paths") != std::string::npos);

    std::filesystem::remove_all(dir);
}

TEST_CASE("built-in sweeps write counterexample graphs only when they fail") {
    const std::string dir =
        (std::filesystem::temp_directory_path() / "dichro-harness-clean").string();
    std::filesystem::remove_all(dir);
    PropertyBudget b;
    b.max_n = 4;
    b.results_dir = dir;
    PropertyResult r = check_property("lemma24_bound", b);
    CHECK(r.holds());
    CHECK(r.counterexample_paths.empty());
    const bool wrote_files =
        std::filesystem::exists(dir) && !std::filesystem::is_empty(dir);
    CHECK_FALSE(wrote_files);
    std::filesystem::remove_all(dir);
}
