#include <doctest.h>

#include "circletk/families.hpp"
#include "circletk/oracle.hpp"

using namespace circletk;

TEST_CASE("chord model verification") {
    Graph edge(2);
    edge.add_edge(0, 1);
    CHECK(verify_chord_model(edge, {{0, 1, 0, 1}}));
    Graph two(2);
    CHECK(verify_chord_model(two, {{0, 0, 1, 1}}));
    CHECK_FALSE(verify_chord_model(two, {{0, 1, 0, 1}}));
    // the tent has the documented twelve-endpoint model
    Graph t = tent(); // clique 0,1,2; 3 ~ 0,1; 4 ~ 1,2; 5 ~ 2,0
    ChordModel m{{3, 0, 1, 3, 5, 2, 0, 5, 4, 1, 2, 4}};
    CHECK(verify_chord_model(t, m));
}

TEST_CASE("tent model is unique up to rotation and reflection") {
    auto res = brute_force_is_circle(tent(), 9);
    REQUIRE(res.verdict == OracleVerdict::Circle);
    ChordModel documented{{3, 0, 1, 3, 5, 2, 0, 5, 4, 1, 2, 4}};
    CHECK(canonical_chord_word(*res.model) == canonical_chord_word(documented));
}

TEST_CASE("brute force circle decisions") {
    CHECK(brute_force_is_circle(cycle_graph(5), 9).verdict == OracleVerdict::Circle);
    CHECK(brute_force_is_circle(wheel(5), 9).verdict == OracleVerdict::NotCircle);
    CHECK(brute_force_is_circle(join_k1(tent()), 9).verdict == OracleVerdict::NotCircle);
    CHECK(brute_force_is_circle(path_graph(4), 9).verdict == OracleVerdict::Circle);
    auto big = brute_force_is_circle(complete_graph(15), 9);
    CHECK(big.verdict == OracleVerdict::Inconclusive);
    // every yes verdict carries a verified model
    for (auto g : {tent(), net(), cycle_graph(6), path_graph(7)}) {
        auto r = brute_force_is_circle(g, 9);
        REQUIRE(r.verdict == OracleVerdict::Circle);
        CHECK(verify_chord_model(g, *r.model));
    }
}

TEST_CASE("bouchet orbit check") {
    auto bw = bouchet_orbit_check(bw3(), 50000);
    CHECK(bw.verdict == OracleVerdict::NotCircle);
    CHECK(bw.complement_sequence.empty());

    auto sun = bouchet_orbit_check(k_sun_with_center(3), 50000);
    CHECK(sun.verdict == OracleVerdict::NotCircle);

    auto p4 = bouchet_orbit_check(path_graph(4), 50000);
    CHECK(p4.verdict == OracleVerdict::Circle);
}

TEST_CASE("oracle and orbit check agree on small graphs") {
    uint64_t state = 99;
    auto rnd = [&]() { return state = state * 6364136223846793005ULL + 1442695040888963407ULL; };
    for (int t = 0; t < 60; t++) {
        int n = 4 + int(rnd() % 5);
        Graph g(n);
        for (int a = 0; a < n; a++)
            for (int b = a + 1; b < n; b++)
                if (rnd() % 2) g.add_edge(a, b);
        auto words = brute_force_is_circle(g, 9);
        auto orbit = bouchet_orbit_check(g, 100000);
        if (orbit.verdict == OracleVerdict::Inconclusive) continue;
        CHECK(words.verdict == orbit.verdict);
    }
}

TEST_CASE("circle-ness is preserved by local complementation") {
    uint64_t state = 7;
    auto rnd = [&]() { return state = state * 6364136223846793005ULL + 1442695040888963407ULL; };
    for (int t = 0; t < 40; t++) {
        int n = 4 + int(rnd() % 4);
        Graph g(n);
        for (int a = 0; a < n; a++)
            for (int b = a + 1; b < n; b++)
                if (rnd() % 2) g.add_edge(a, b);
        int v = int(rnd() % n);
        auto before = brute_force_is_circle(g, 9).verdict;
        auto after = brute_force_is_circle(local_complement(g, v), 9).verdict;
        CHECK(before == after);
    }
}

TEST_CASE("scripted complementation regressions") {
    for (auto name : {"tentK1", "F0", "MV", "MIV", "sun-center-3", "sun-center-5", "sun-4",
                      "MII-4", "MIII-3", "F1-5", "F2-5"}) {
        auto rep = replay_appendix_sequence(name);
        INFO(name);
        CHECK(rep.ok);
    }
}
