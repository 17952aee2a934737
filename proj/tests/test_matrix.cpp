#include <doctest.h>

#include "circletk/c1p.hpp"
#include "circletk/enriched_matrix.hpp"
#include "circletk/refcheck.hpp"

#include <algorithm>

using namespace circletk;

namespace {

EnrichedMatrix em(const std::string& text) { return parse_enriched_matrix(text); }

} // namespace

TEST_CASE("enriched matrix text format round trip") {
    auto m = em("3 4\nU - 1100\nL red 1110\nLR - 0000\n");
    CHECK(m.rows == 3);
    CHECK(m.label[1] == RowLabel::L);
    CHECK(m.color[1] == RowColor::Red);
    CHECK(format_enriched_matrix(m) == "3 4\nU - 1100\nL red 1110\nLR - 0000\n");
    // colored U row violates the invariant
    CHECK_THROWS(em("1 2\nU red 11\n"));
    // two all-zero LR-rows with distinct colors violate the invariant
    CHECK_THROWS(em("2 2\nLR red 00\nLR blue 00\n"));
}

TEST_CASE("row spans") {
    auto m = em("3 4\nU - 0110\nU - 0000\nU - 1011\n");
    auto s0 = row_span(m, 0);
    CHECK(s0.l == 1);
    CHECK(s0.r == 2);
    CHECK(row_span(m, 1).empty);
    auto s2 = row_span(m, 2);
    CHECK(s2.l == 0);
    CHECK(s2.r == 3);
}

TEST_CASE("dual is an involution") {
    auto m = em("3 2\nL red 10\nR blue 01\nLR - 11\n");
    auto d = dual(m);
    CHECK(d.label[0] == RowLabel::R);
    CHECK(d.label[1] == RowLabel::L);
    CHECK(d.label[2] == RowLabel::LR);
    CHECK(d.color[0] == RowColor::Red);
    CHECK(dual(d).label == m.label);
    auto plain = em("2 2\nU - 10\nU - 01\n");
    CHECK(dual(plain).label == plain.label);
}

TEST_CASE("a_star and tagged") {
    auto m = em("1 3\nLR - 101\n");
    auto star = a_star(m);
    REQUIRE(star.rows == 3);
    CHECK(star.a[0] == std::vector<uint8_t>{0, 1, 0});
    CHECK(star.label[1] == RowLabel::L);
    CHECK(star.label[2] == RowLabel::R);
    CHECK(star.a[1] == std::vector<uint8_t>{1, 1, 1});

    auto none = em("1 2\nU - 10\n");
    auto star2 = a_star(none);
    CHECK(star2.rows == 3);
    CHECK(star2.a[0] == std::vector<uint8_t>{1, 0});

    auto t = tagged(em("3 2\nL - 10\nR - 01\nLR - 11\n"));
    CHECK(t.cols == 4);
    CHECK(t.a[0][0] == 1);
    CHECK(t.a[0][3] == 0);
    CHECK(t.a[1][0] == 0);
    CHECK(t.a[1][3] == 1);
    CHECK(t.a[2][0] == 1);
    CHECK(t.a[2][3] == 1);
    // no labeled rows: both tag columns all zero
    auto t2 = tagged(em("1 2\nU - 11\n"));
    CHECK(t2.a[0][0] == 0);
    CHECK(t2.a[0][3] == 0);
}

TEST_CASE("consecutive ones with certificates") {
    Matrix01 good = {{1, 1, 0, 0}, {1, 1, 1, 0}, {0, 1, 1, 0}, {1, 0, 0, 0}};
    auto res = has_c1p(good);
    REQUIRE(res.order);
    CHECK(refcheck::ordering_consecutive(good, *res.order));

    Matrix01 miv = {{1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1},
                    {0, 1, 0, 1, 0, 1}};
    auto bad = has_c1p(miv);
    REQUIRE_FALSE(bad.order);
    CHECK(bad.tucker->family == "Tucker_IV");

    Matrix01 zero(3, std::vector<uint8_t>(3, 0));
    auto z = has_c1p(zero);
    REQUIRE(z.order);
    CHECK(*z.order == std::vector<int>{0, 1, 2});
}

TEST_CASE("nested matrices") {
    Matrix01 gem = {{1, 1, 0}, {0, 1, 1}};
    auto r1 = is_nested(gem);
    CHECK_FALSE(r1.nested);
    CHECK(r1.gem_rows.size() == 2);

    CHECK(is_nested({{1, 1, 0}, {1, 0, 0}}).nested);
    CHECK(is_nested({{1, 1, 0, 0}, {0, 0, 1, 1}}).nested);
}

TEST_CASE("dual, a_star and tagged commute with row permutations") {
    uint64_t state = 555;
    auto rnd = [&]() { return state = state * 6364136223846793005ULL + 1442695040888963407ULL; };
    for (int t = 0; t < 100; t++) {
        int r = 2 + int(rnd() % 4), c = 1 + int(rnd() % 5);
        EnrichedMatrix m(r, c);
        for (int i = 0; i < r; i++) {
            int pick = int(rnd() % 4);
            m.label[i] = pick == 0 ? RowLabel::U
                       : pick == 1 ? RowLabel::L
                       : pick == 2 ? RowLabel::R
                                   : RowLabel::LR;
            for (int j = 0; j < c; j++) m.a[i][j] = rnd() % 2;
        }
        std::vector<int> perm(r);
        for (int i = 0; i < r; i++) perm[i] = i;
        for (int i = r - 1; i > 0; i--) std::swap(perm[i], perm[int(rnd() % (i + 1))]);
        auto lhs = format_enriched_matrix(dual(permute_rows(m, perm)));
        auto rhs = format_enriched_matrix(permute_rows(dual(m), perm));
        CHECK(lhs == rhs);
        // a_star appends its two anchors after the permuted rows
        auto star_perm = a_star(permute_rows(m, perm));
        auto perm_star = permute_rows(a_star(m), [&] {
            auto p = perm;
            p.push_back(r);
            p.push_back(r + 1);
            return p;
        }());
        CHECK(format_enriched_matrix(star_perm) == format_enriched_matrix(perm_star));
        auto t1 = tagged(permute_rows(m, perm));
        auto t2 = tagged(m);
        for (int i = 0; i < r; i++) CHECK(t1.a[i] == t2.a[perm[i]]);
    }
}
