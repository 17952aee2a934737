#include <doctest.h>

#include "circletk/patterns.hpp"
#include "circletk/two_nested.hpp"

using namespace circletk;

namespace {

EnrichedMatrix em(const std::string& text) { return parse_enriched_matrix(text); }

} // namespace

TEST_CASE("tucker generators have the documented shapes") {
    auto m1 = tucker_mi(3);
    CHECK(m1.rows.size() == 3);
    CHECK(m1.cols == 3);
    auto m3 = tucker_miii(3);
    CHECK(m3.cols == 4);
    CHECK(m3.rows[2].bits == std::vector<uint8_t>{0, 1, 0, 1});
    auto f1 = pattern_f1(5);
    CHECK(f1.rows.size() == 5);
    CHECK(f1.cols == 4);
    auto s1o = pattern_s1(3);
    CHECK(s1o.rows.size() == 4);
    auto s1e = pattern_s1(4);
    CHECK(s1e.rows.size() == 4);
    CHECK(s1e.cols == 2);
}

TEST_CASE("subconfiguration matching with label classes") {
    // M_I(3) as plain rows
    auto m = em("3 3\nU - 110\nU - 011\nU - 101\n");
    CHECK(contains_subconfiguration(m, tucker_mi(3)).has_value());
    // unmarked pattern rows match labeled rows too
    auto lab = em("3 3\nL - 110\nR - 011\nU - 101\n");
    CHECK(contains_subconfiguration(lab, tucker_mi(3)).has_value());
    // D0 wants same-letter rows
    auto d0yes = em("2 2\nL red 10\nL blue 01\n");
    CHECK(contains_family(d0yes, pattern_d(0)).has_value());
    auto d0dual = em("2 2\nR - 10\nR - 01\n");
    CHECK(contains_family(d0dual, pattern_d(0)).has_value());
    auto d0no = em("2 2\nL - 10\nR - 01\n");
    CHECK_FALSE(contains_family(d0no, pattern_d(0)).has_value());
    // D1 wants one consistent color assignment
    auto d1yes = em("2 1\nL red 1\nR red 1\n");
    CHECK(contains_family(d1yes, pattern_d(1)).has_value());
    auto d1blue = em("2 1\nL blue 1\nR blue 1\n");
    CHECK(contains_family(d1blue, pattern_d(1)).has_value());
    auto d1no = em("2 1\nL red 1\nR blue 1\n");
    CHECK_FALSE(contains_family(d1no, pattern_d(1)).has_value());
    // uncolored labeled rows do not satisfy green/orange requirements
    auto d1un = em("2 1\nL - 1\nR - 1\n");
    CHECK_FALSE(contains_family(d1un, pattern_d(1)).has_value());
    // single row is too small for any D pattern
    auto tiny = em("1 4\nU - 1111\n");
    for (int d = 0; d <= 13; d++) CHECK_FALSE(contains_family(tiny, pattern_d(d)).has_value());
}

TEST_CASE("admissibility witnesses") {
    auto d0 = em("2 2\nL red 10\nL blue 01\n");
    auto w = find_admissibility_witness(d0);
    REQUIRE(w);
    CHECK(w->family == "D0");
    // same-colored single-column L/R pair is D1
    auto d1 = em("2 1\nL red 1\nR red 1\n");
    auto w1 = find_admissibility_witness(d1);
    REQUIRE(w1);
    CHECK(w1->family == "D1");
    // all-U matrices are admissible (family patterns need labeled rows);
    // exhaustive over small all-U matrices
    for (uint32_t mask = 0; mask < (1u << 9); mask++) {
        EnrichedMatrix m(3, 3);
        for (int i = 0; i < 3; i++)
            for (int j = 0; j < 3; j++) m.a[i][j] = (mask >> (3 * i + j)) & 1;
        CHECK_FALSE(find_admissibility_witness(m).has_value());
    }
}

TEST_CASE("tagged M witnesses carry tag columns") {
    // M_II(4) with its first column pinned on a tag column
    TaggedMatrix t;
    t.rows = 4;
    t.cols = 5;
    t.tag_l = 0;
    t.tag_r = 4;
    // columns: tag, c1, c2, c3, tag; embed M_II(4) using the left tag column
    auto mii = tucker_mii(4);
    t.a.assign(4, std::vector<uint8_t>(5, 0));
    for (int i = 0; i < 4; i++)
        for (int j = 0; j < 4; j++) t.a[i][j] = mii.rows[i].bits[j];
    CHECK(contains_subconfiguration_tagged(t, pattern_m2_prime(4)).has_value());
    // without any tag column available the tagged pattern cannot embed
    TaggedMatrix t2 = t;
    t2.tag_l = 4;
    t2.tag_r = 4; // only the (zero) last column is tagged
    CHECK_FALSE(contains_subconfiguration_tagged(t2, pattern_m2_prime(4)).has_value());
}

TEST_CASE("S2 color parity") {
    // odd k: end rows distinctly colored
    auto s2odd = em("3 2\nL red 10\nU - 11\nL blue 10\n");
    CHECK(contains_family(s2odd, pattern_s2(3)).has_value());
    auto s2same = em("3 2\nL red 10\nU - 11\nL red 10\n");
    CHECK_FALSE(contains_family(s2same, pattern_s2(3)).has_value());
}
