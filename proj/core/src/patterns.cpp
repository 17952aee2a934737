#include "circletk/patterns.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace circletk {

namespace {

std::vector<uint8_t> bitsrun(int cols, int from, int to) { // 1s on [from, to]
    std::vector<uint8_t> v(cols, 0);
    for (int c = from; c <= to && c < cols; c++)
        if (c >= 0) v[c] = 1;
    return v;
}
std::vector<uint8_t> bitsof(int cols, std::initializer_list<int> ones) {
    std::vector<uint8_t> v(cols, 0);
    for (int c : ones) v[c] = 1;
    return v;
}
std::vector<uint8_t> allones(int cols) { return std::vector<uint8_t>(cols, 1); }
std::vector<uint8_t> complement_of(std::vector<uint8_t> v) {
    for (auto& x : v) x = !x;
    return v;
}

PatternRow prow(std::vector<uint8_t> bits, PatternLabel lab = PatternLabel::Any,
                PatternColor col = PatternColor::Any) {
    return PatternRow{std::move(bits), lab, col};
}

Pattern make(std::string family, int k, int l, int cols, std::vector<PatternRow> rows,
             bool agnostic = false) {
    Pattern p;
    p.family = std::move(family);
    p.k = k;
    p.l = l;
    p.cols = cols;
    p.rows = std::move(rows);
    p.tag_col.assign(cols, 0);
    p.label_agnostic = agnostic;
    return p;
}

} // namespace

Pattern tucker_mi(int k) {
    if (k < 3) throw std::invalid_argument("M_I needs k >= 3");
    std::vector<PatternRow> rows;
    for (int i = 0; i < k - 1; i++) rows.push_back(prow(bitsof(k, {i, i + 1})));
    rows.push_back(prow(bitsof(k, {0, k - 1})));
    return make("Tucker_I", k, -1, k, rows, true);
}

Pattern tucker_mii(int k) {
    if (k < 4) throw std::invalid_argument("M_II needs k >= 4");
    std::vector<PatternRow> rows;
    rows.push_back(prow(bitsrun(k, 1, k - 1)));
    for (int i = 0; i < k - 2; i++) rows.push_back(prow(bitsof(k, {i, i + 1})));
    auto last = allones(k);
    last[k - 2] = 0;
    rows.push_back(prow(last));
    return make("Tucker_II", k, -1, k, rows, true);
}

Pattern tucker_miii(int k) {
    if (k < 3) throw std::invalid_argument("M_III needs k >= 3");
    std::vector<PatternRow> rows;
    for (int i = 0; i < k - 1; i++) rows.push_back(prow(bitsof(k + 1, {i, i + 1})));
    auto last = bitsrun(k + 1, 1, k - 2);
    last[k] = 1;
    rows.push_back(prow(last));
    return make("Tucker_III", k, -1, k + 1, rows, true);
}

Pattern tucker_miv() {
    std::vector<PatternRow> rows = {
        prow({1, 1, 0, 0, 0, 0}),
        prow({0, 0, 1, 1, 0, 0}),
        prow({0, 0, 0, 0, 1, 1}),
        prow({0, 1, 0, 1, 0, 1}),
    };
    return make("Tucker_IV", 0, -1, 6, rows, true);
}

Pattern tucker_mv() {
    std::vector<PatternRow> rows = {
        prow({1, 1, 0, 0, 0}),
        prow({0, 0, 1, 1, 0}),
        prow({1, 1, 1, 1, 0}),
        prow({1, 0, 0, 1, 1}),
    };
    return make("Tucker_V", 0, -1, 5, rows, true);
}

Pattern pattern_d(int which) {
    using PL = PatternLabel;
    using PC = PatternColor;
    switch (which) {
        case 0:
            return make("D0", 0, -1, 2, {prow({1, 0}, PL::L), prow({0, 1}, PL::L)});
        case 1:
            return make("D1", 0, -1, 1,
                        {prow({1}, PL::L, PC::Green), prow({1}, PL::R, PC::Green)});
        case 2:
            return make("D2", 0, -1, 2,
                        {prow({1, 0}, PL::L, PC::Green), prow({1, 0}, PL::R, PC::Orange)});
        case 3:
            return make("D3", 0, -1, 3,
                        {prow({1, 0, 0}, PL::L, PC::Green), prow({0, 0, 1}, PL::R, PC::Orange),
                         prow({0, 1, 0}, PL::LR)});
        case 4:
            return make("D4", 0, -1, 1,
                        {prow({1}, PL::L, PC::Green), prow({1}, PL::L, PC::Orange),
                         prow({0}, PL::LR)});
        case 5:
            return make("D5", 0, -1, 1,
                        {prow({1}, PL::L, PC::Green), prow({1}, PL::R, PC::Orange),
                         prow({1}, PL::LR)});
        case 6:
            // the two-column print is degenerate (an all-zero LR-row poses no
            // block constraints); the obstructing form needs the LR-row
            // nonempty on both flanks, verified by the exhaustive recognizer
            return make("D6", 0, -1, 4,
                        {prow({0, 1, 0, 0}, PL::L, PC::Green), prow({0, 0, 1, 0}, PL::R, PC::Green),
                         prow({1, 0, 0, 1}, PL::LR)});
        case 7:
            return make("D7", 0, -1, 3,
                        {prow({1, 0, 0}, PL::L), prow({0, 1, 0}, PL::LR), prow({0, 0, 1}, PL::LR)});
        case 8:
            return make("D8", 0, -1, 3,
                        {prow({1, 1, 0}, PL::L), prow({1, 0, 1}, PL::LR), prow({0, 1, 1}, PL::LR)});
        case 9:
            return make("D9", 0, -1, 4,
                        {prow({1, 1, 1, 0}, PL::L), prow({1, 1, 0, 0}, PL::LR),
                         prow({1, 0, 0, 1}, PL::LR)});
        case 10:
            return make("D10", 0, -1, 4,
                        {prow({1, 1, 0, 0}, PL::L, PC::Green), prow({0, 0, 1, 1}, PL::R, PC::Orange),
                         prow({1, 0, 1, 1}, PL::LR), prow({1, 1, 0, 1}, PL::LR)});
        case 11:
            return make("D11", 0, -1, 3,
                        {prow({1, 0, 0}, PL::LR), prow({0, 1, 0}, PL::LR), prow({0, 0, 1}, PL::LR)});
        case 12:
            return make("D12", 0, -1, 3,
                        {prow({1, 0, 1}, PL::LR), prow({1, 1, 0}, PL::LR), prow({0, 1, 1}, PL::LR)});
        case 13:
            return make("D13", 0, -1, 4,
                        {prow({1, 1, 0, 0}, PL::LR), prow({0, 1, 1, 0}, PL::LR),
                         prow({0, 0, 1, 1}, PL::LR)});
    }
    throw std::invalid_argument("D index out of range");
}

Pattern pattern_d6_anchored() {
    using PL = PatternLabel;
    using PC = PatternColor;
    return make("D6", 0, -1, 4,
                {prow({1, 1, 0, 0}, PL::L, PC::Green), prow({0, 0, 1, 1}, PL::R, PC::Green),
                 prow({1, 0, 0, 1}, PL::LR)});
}

Pattern pattern_s1(int k) {
    using PL = PatternLabel;
    std::vector<PatternRow> rows;
    if (k % 2 == 1) {
        if (k < 3) throw std::invalid_argument("S1 odd needs k >= 3");
        // (k+1) x k
        rows.push_back(prow(bitsof(k, {0}), PL::L));
        for (int i = 0; i < k - 1; i++) rows.push_back(prow(bitsof(k, {i, i + 1})));
        rows.push_back(prow(bitsof(k, {k - 1}), PL::LR));
        return make("S1", k, -1, k, rows);
    }
    if (k < 4) throw std::invalid_argument("S1 even needs k >= 4");
    // k x (k-2)
    int c = k - 2;
    rows.push_back(prow(bitsof(c, {0}), PL::L));
    for (int i = 0; i < k - 3; i++) rows.push_back(prow(bitsof(c, {i, i + 1})));
    rows.push_back(prow(bitsof(c, {c - 1}), PL::LR));
    rows.push_back(prow(allones(c), PL::L));
    return make("S1", k, -1, c, rows);
}

Pattern pattern_s2(int k) {
    using PL = PatternLabel;
    using PC = PatternColor;
    if (k < 3) throw std::invalid_argument("S2 needs k >= 3");
    int c = k - 1;
    std::vector<PatternRow> rows;
    // odd k: end rows colored with distinct colors; even k: the same color
    rows.push_back(prow(bitsof(c, {0}), PL::L, PC::Green));
    for (int i = 0; i < k - 2; i++) rows.push_back(prow(bitsof(c, {i, i + 1})));
    rows.push_back(prow(bitsrun(c, 0, c - 2), PL::L, k % 2 ? PC::Orange : PC::Green));
    return make("S2", k, -1, c, rows);
}

Pattern pattern_s3(int k) {
    using PL = PatternLabel;
    using PC = PatternColor;
    if (k < 3) throw std::invalid_argument("S3 needs k >= 3");
    int c = k - 1;
    std::vector<PatternRow> rows;
    rows.push_back(prow(bitsof(c, {0}), PL::L, PC::Green));
    for (int i = 0; i < k - 2; i++) rows.push_back(prow(bitsof(c, {i, i + 1})));
    rows.push_back(prow(bitsof(c, {c - 1}), PL::R, k % 2 ? PC::Orange : PC::Green));
    return make("S3", k, -1, c, rows);
}

Pattern pattern_s4(int k) {
    using PL = PatternLabel;
    using PC = PatternColor;
    if (k < 3) throw std::invalid_argument("S4 needs k >= 3");
    int c = k - 1;
    std::vector<PatternRow> rows;
    rows.push_back(prow(allones(c), PL::LR));
    rows.push_back(prow(bitsof(c, {0}), PL::L, PC::Green));
    for (int i = 0; i < k - 3; i++) rows.push_back(prow(bitsof(c, {i, i + 1})));
    rows.push_back(prow(bitsof(c, {c - 1}), PL::R, k % 2 == 0 ? PC::Orange : PC::Green));
    return make("S4", k, -1, c, rows);
}

Pattern pattern_s5(int k) {
    using PL = PatternLabel;
    using PC = PatternColor;
    if (k < 4) throw std::invalid_argument("S5 needs k >= 4");
    int c = k - 2;
    std::vector<PatternRow> rows;
    rows.push_back(prow(bitsof(c, {0}), PL::L, PC::Green));
    for (int i = 0; i < k - 3; i++) rows.push_back(prow(bitsof(c, {i, i + 1})));
    rows.push_back(prow(bitsrun(c, 0, c - 2), PL::LR));
    // calibrated against the exhaustive recognizer: same color for even k,
    // distinct colors for odd k
    rows.push_back(prow(allones(c), PL::L, k % 2 == 0 ? PC::Green : PC::Orange));
    return make("S5", k, -1, c, rows);
}

Pattern pattern_s6(int k) {
    using PL = PatternLabel;
    if (k < 3) throw std::invalid_argument("S6 needs k >= 3");
    std::vector<PatternRow> rows;
    rows.push_back(prow(bitsrun(k, 0, k - 2), PL::LR));
    rows.push_back(prow(bitsrun(k, 1, k - 1), PL::R));
    for (int i = 0; i < k - 2; i++) rows.push_back(prow(bitsof(k, {i, i + 1})));
    return make("S6", k, -1, k, rows);
}

Pattern pattern_s6_prime() {
    using PL = PatternLabel;
    return make("S6'", 3, -1, 3,
                {prow({1, 1, 0}, PL::LR), prow({0, 1, 1}, PL::R), prow({1, 1, 1})});
}

Pattern pattern_s7(int k) {
    using PL = PatternLabel;
    if (k == 3) {
        return make("S7", 3, -1, 5,
                    {prow({1, 1, 0, 0, 1}, PL::LR), prow({1, 0, 0, 1, 1}, PL::LR),
                     prow({1, 1, 1, 0, 0})});
    }
    if (k < 4 || k % 2) throw std::invalid_argument("S7 needs k = 3 or even k >= 4");
    int c = k + 1;
    std::vector<PatternRow> rows;
    rows.push_back(prow(bitsof(c, {0, 1}), PL::LR));
    rows.push_back(prow(bitsof(c, {0, c - 1}), PL::LR));
    for (int i = 1; i < c - 1; i++) rows.push_back(prow(bitsof(c, {i, i + 1})));
    return make("S7", k, -1, c, rows);
}

Pattern pattern_s8(int k) {
    using PL = PatternLabel;
    if (k < 4 || k % 2) throw std::invalid_argument("S8 needs even k >= 4");
    std::vector<PatternRow> rows;
    rows.push_back(prow(bitsof(k, {0, k - 1}), PL::LR));
    for (int i = 0; i < k - 1; i++) rows.push_back(prow(bitsof(k, {i, i + 1})));
    return make("S8", k, -1, k, rows);
}

Pattern pattern_s0(int k) {
    if (k < 4 || k % 2) throw std::invalid_argument("S0 needs even k >= 4");
    std::vector<PatternRow> rows;
    rows.push_back(prow(allones(k)));
    for (int i = 0; i < k - 1; i++) rows.push_back(prow(bitsof(k, {i, i + 1})));
    rows.push_back(prow(bitsof(k, {0, k - 1})));
    return make("S0", k, -1, k, rows, true);
}

Pattern pattern_m0() {
    return make("M0", 0, -1, 4,
                {prow({1, 0, 1, 1}), prow({1, 1, 1, 0}), prow({0, 1, 1, 1})}, true);
}

Pattern pattern_f0() {
    return make("F0", 0, -1, 5,
                {prow({1, 1, 1, 0, 0}), prow({0, 1, 1, 1, 0}), prow({0, 0, 1, 1, 1})});
}

Pattern pattern_f1(int k) {
    if (k < 5 || k % 2 == 0) throw std::invalid_argument("F1 needs odd k >= 5");
    int c = k - 1;
    std::vector<PatternRow> rows;
    rows.push_back(prow(bitsrun(c, 1, c - 1)));
    rows.push_back(prow(bitsrun(c, 0, c - 2)));
    for (int i = c - 2; i >= 0; i--) rows.push_back(prow(bitsof(c, {i, i + 1})));
    return make("F1", k, -1, c, rows);
}

Pattern pattern_f2(int k) {
    if (k < 5 || k % 2 == 0) throw std::invalid_argument("F2 needs odd k >= 5");
    std::vector<PatternRow> rows;
    rows.push_back(prow(bitsrun(k, 1, k - 2)));
    for (int i = 0; i < k - 1; i++) rows.push_back(prow(bitsof(k, {i, i + 1})));
    return make("F2", k, -1, k, rows);
}

Pattern pattern_f0_prime() {
    using PL = PatternLabel;
    return make("F0'", 0, -1, 4,
                {prow({1, 1, 0, 0}, PL::LorLR), prow({1, 1, 1, 0}), prow({0, 1, 1, 1})});
}

Pattern pattern_f0_doubleprime() {
    using PL = PatternLabel;
    return make("F0''", 0, -1, 3,
                {prow({1, 1, 0}, PL::L), prow({1, 1, 1}), prow({0, 1, 1}, PL::R)});
}

Pattern pattern_f1_prime(int k) {
    using PL = PatternLabel;
    if (k < 5 || k % 2 == 0) throw std::invalid_argument("F1' needs odd k >= 5");
    int c = k - 2;
    std::vector<PatternRow> rows;
    rows.push_back(prow(allones(c)));
    rows.push_back(prow(bitsrun(c, 0, c - 2), PL::LorLR));
    for (int i = c - 2; i >= 0; i--) rows.push_back(prow(bitsof(c, {i, i + 1})));
    rows.push_back(prow(bitsof(c, {0}), PL::LorLR));
    return make("F1'", k, -1, c, rows);
}

Pattern pattern_p0(int k, int l) {
    using PL = PatternLabel;
    using PC = PatternColor;
    PatternColor last = k % 2 ? PC::Green : PC::Orange;
    std::vector<PatternRow> rows;
    if (l == 0) {
        if (k < 4) throw std::invalid_argument("P0(k,0) needs k >= 4");
        int c = k;
        rows.push_back(prow(bitsof(c, {0, 1}), PL::L, PC::Green));
        auto lr = bitsof(c, {0});
        for (int j = 3; j < c; j++) lr[j] = 1;
        rows.push_back(prow(lr, PL::LR));
        for (int i = 2; i <= c - 2; i++) rows.push_back(prow(bitsof(c, {i, i + 1})));
        rows.push_back(prow(bitsof(c, {c - 1}), PL::R, last));
        return make("P0", k, 0, c, rows);
    }
    if (k < 5 || l < 1 || l > k - 4) throw std::invalid_argument("P0(k,l) out of range");
    int c = k - 1;
    rows.push_back(prow(bitsof(c, {0}), PL::L, PC::Green));
    for (int i = 0; i < l; i++) rows.push_back(prow(bitsof(c, {i, i + 1})));
    auto lr = allones(c);
    lr[l] = 0;
    lr[l + 1] = 0;
    rows.push_back(prow(lr, PL::LR));
    for (int i = l + 1; i <= c - 2; i++) rows.push_back(prow(bitsof(c, {i, i + 1})));
    rows.push_back(prow(bitsof(c, {c - 1}), PL::R, last));
    return make("P0", k, l, c, rows);
}

Pattern pattern_p1(int k, int l) {
    using PL = PatternLabel;
    using PC = PatternColor;
    PatternColor last = k % 2 ? PC::Green : PC::Orange;
    std::vector<PatternRow> rows;
    if (l == 0) {
        if (k < 5) throw std::invalid_argument("P1(k,0) needs k >= 5");
        int c = k - 1;
        rows.push_back(prow(bitsof(c, {0, 1}), PL::L, PC::Green));
        rows.push_back(prow(complement_of(bitsof(c, {1})), PL::LR));
        rows.push_back(prow(complement_of(bitsof(c, {2})), PL::LR));
        for (int i = 2; i <= c - 2; i++) rows.push_back(prow(bitsof(c, {i, i + 1})));
        rows.push_back(prow(bitsof(c, {c - 1}), PL::R, last));
        return make("P1", k, 0, c, rows);
    }
    if (k < 6 || l < 1 || l > k - 5) throw std::invalid_argument("P1(k,l) out of range");
    int c = k - 2;
    rows.push_back(prow(bitsof(c, {0}), PL::L, PC::Green));
    for (int i = 0; i < l; i++) rows.push_back(prow(bitsof(c, {i, i + 1})));
    rows.push_back(prow(complement_of(bitsof(c, {l})), PL::LR));
    rows.push_back(prow(complement_of(bitsof(c, {l + 1})), PL::LR));
    for (int i = l + 1; i <= c - 2; i++) rows.push_back(prow(bitsof(c, {i, i + 1})));
    rows.push_back(prow(bitsof(c, {c - 1}), PL::R, last));
    return make("P1", k, l, c, rows);
}

Pattern pattern_p2(int k, int l) {
    using PL = PatternLabel;
    using PC = PatternColor;
    PatternColor last = k % 2 ? PC::Green : PC::Orange;
    std::vector<PatternRow> rows;
    if (l == 0) {
        if (k < 7) throw std::invalid_argument("P2(k,0) needs k >= 7");
        int c = k - 1;
        rows.push_back(prow(bitsof(c, {0, 1}), PL::L, PC::Green));
        rows.push_back(prow(complement_of(bitsof(c, {1})), PL::LR));
        rows.push_back(prow(complement_of(bitsof(c, {3})), PL::LR));
        rows.push_back(prow(complement_of(bitsof(c, {2})), PL::LR));
        rows.push_back(prow(complement_of(bitsof(c, {3, 4})), PL::LR));
        for (int i = 4; i <= c - 2; i++) rows.push_back(prow(bitsof(c, {i, i + 1})));
        rows.push_back(prow(bitsof(c, {c - 1}), PL::R, last));
        return make("P2", k, 0, c, rows);
    }
    if (k < 8 || l < 1 || l > k - 7) throw std::invalid_argument("P2(k,l) out of range");
    int c = k - 2;
    rows.push_back(prow(bitsof(c, {0}), PL::L, PC::Green));
    for (int i = 0; i < l; i++) rows.push_back(prow(bitsof(c, {i, i + 1})));
    rows.push_back(prow(complement_of(bitsof(c, {l, l + 1})), PL::LR));
    rows.push_back(prow(complement_of(bitsof(c, {l + 2})), PL::LR));
    rows.push_back(prow(complement_of(bitsof(c, {l + 1})), PL::LR));
    rows.push_back(prow(complement_of(bitsof(c, {l + 1, l + 2})), PL::LR));
    for (int i = l + 3; i <= c - 2; i++) rows.push_back(prow(bitsof(c, {i, i + 1})));
    rows.push_back(prow(bitsof(c, {c - 1}), PL::R, last));
    return make("P2", k, l, c, rows);
}

Pattern pattern_f2_prime(int k) {
    using PL = PatternLabel;
    if (k < 5 || k % 2 == 0) throw std::invalid_argument("F2' needs odd k >= 5");
    int c = k - 1;
    std::vector<PatternRow> rows;
    rows.push_back(prow(bitsrun(c, 0, c - 2)));
    rows.push_back(prow(bitsof(c, {0}), PL::LorLR));
    for (int i = 0; i < c - 1; i++) rows.push_back(prow(bitsof(c, {i, i + 1})));
    return make("F2'", k, -1, c, rows);
}

namespace {

Pattern with_tags(Pattern p, std::string name, std::initializer_list<int> tags) {
    p.family = std::move(name);
    for (int t : tags) p.tag_col[t] = 1;
    return p;
}

} // namespace

Pattern pattern_m2_prime(int k) { return with_tags(tucker_mii(k), "M2'", {0}); }
Pattern pattern_m2_doubleprime(int k) { return with_tags(tucker_mii(k), "M2''", {0, k - 2}); }
Pattern pattern_m3_prime(int k) { return with_tags(tucker_miii(k), "M3'", {0}); }
Pattern pattern_m3_doubleprime(int k) { return with_tags(tucker_miii(k), "M3''", {k}); }
Pattern pattern_m4_prime() { return with_tags(tucker_miv(), "M4'", {0}); }
Pattern pattern_m4_doubleprime() { return with_tags(tucker_miv(), "M4''", {0, 2}); }
Pattern pattern_m5_prime() { return with_tags(tucker_mv(), "M5'", {4}); }
Pattern pattern_m5_doubleprime() { return with_tags(tucker_mv(), "M5''", {1}); }

Pattern dual_pattern(const Pattern& p) {
    Pattern d = p;
    for (auto& r : d.rows) {
        switch (r.label) {
            case PatternLabel::L: r.label = PatternLabel::R; break;
            case PatternLabel::R: r.label = PatternLabel::L; break;
            case PatternLabel::LorLR: r.label = PatternLabel::RorLR; break;
            case PatternLabel::RorLR: r.label = PatternLabel::LorLR; break;
            default: break;
        }
    }
    return d;
}

namespace {

bool label_matches(PatternLabel pl, RowLabel rl, bool agnostic) {
    switch (pl) {
        case PatternLabel::Any: return agnostic || rl == RowLabel::U;
        case PatternLabel::L: return rl == RowLabel::L;
        case PatternLabel::R: return rl == RowLabel::R;
        case PatternLabel::LR: return rl == RowLabel::LR;
        case PatternLabel::LorLR: return rl == RowLabel::L || rl == RowLabel::LR;
        case PatternLabel::RorLR: return rl == RowLabel::R || rl == RowLabel::LR;
    }
    return false;
}

bool color_matches(PatternColor pc, RowColor rc, RowColor green) {
    RowColor orange = green == RowColor::Red ? RowColor::Blue : RowColor::Red;
    switch (pc) {
        case PatternColor::Any: return true;
        case PatternColor::Green: return rc == green;
        case PatternColor::Orange: return rc == orange;
    }
    return false;
}

struct MatchContext {
    const std::vector<std::vector<uint8_t>>* mat;
    std::vector<RowLabel> labels;
    std::vector<RowColor> colors;
    std::vector<uint8_t> is_tag; // per matrix column
    int mrows = 0, mcols = 0;
};

// After all pattern rows are mapped, match pattern columns to matrix columns:
// group by the bit vector over the selected rows; tag-required columns must
// take tag matrix columns.
bool assign_columns(const MatchContext& cx, const Pattern& p, const std::vector<int>& rowmap,
                    std::vector<int>& colmap_out) {
    std::map<std::vector<uint8_t>, std::pair<std::vector<int>, std::vector<int>>> pat_groups;
    for (int j = 0; j < p.cols; j++) {
        std::vector<uint8_t> key(p.rows.size());
        for (size_t i = 0; i < p.rows.size(); i++) key[i] = p.rows[i].bits[j];
        if (p.tag_col[j]) pat_groups[key].second.push_back(j);
        else pat_groups[key].first.push_back(j);
    }
    std::map<std::vector<uint8_t>, std::pair<std::vector<int>, std::vector<int>>> mat_groups;
    for (int j = 0; j < cx.mcols; j++) {
        std::vector<uint8_t> key(rowmap.size());
        for (size_t i = 0; i < rowmap.size(); i++) key[i] = (*cx.mat)[rowmap[i]][j];
        if (cx.is_tag[j]) mat_groups[key].second.push_back(j);
        else mat_groups[key].first.push_back(j);
    }
    colmap_out.assign(p.cols, -1);
    for (auto& [key, pg] : pat_groups) {
        auto it = mat_groups.find(key);
        size_t have_plain = it == mat_groups.end() ? 0 : it->second.first.size();
        size_t have_tag = it == mat_groups.end() ? 0 : it->second.second.size();
        if (pg.second.size() > have_tag) return false;
        if (pg.first.size() + pg.second.size() > have_plain + have_tag) return false;
        // tag-required first onto tag columns, the rest fill deterministically
        size_t ti = 0, pi = 0;
        for (int pj : pg.second) colmap_out[pj] = it->second.second[ti++];
        for (int pj : pg.first) {
            if (pi < have_plain) colmap_out[pj] = it->second.first[pi++];
            else colmap_out[pj] = it->second.second[ti++];
        }
    }
    return true;
}

// Quick feasibility prune on a partial row map: only the first `assigned`
// pattern rows are mapped.
bool columns_feasible(const MatchContext& cx, const Pattern& p, const std::vector<int>& rowmap,
                      size_t assigned) {
    std::map<std::vector<uint8_t>, std::pair<int, int>> need; // plain, tagged
    for (int j = 0; j < p.cols; j++) {
        std::vector<uint8_t> key(assigned);
        for (size_t i = 0; i < assigned; i++) key[i] = p.rows[i].bits[j];
        if (p.tag_col[j]) need[key].second++;
        else need[key].first++;
    }
    std::map<std::vector<uint8_t>, std::pair<int, int>> have;
    for (int j = 0; j < cx.mcols; j++) {
        std::vector<uint8_t> key(assigned);
        for (size_t i = 0; i < assigned; i++) key[i] = (*cx.mat)[rowmap[i]][j];
        if (cx.is_tag[j]) have[key].second++;
        else have[key].first++;
    }
    for (auto& [key, n] : need) {
        auto it = have.find(key);
        int hp = it == have.end() ? 0 : it->second.first;
        int ht = it == have.end() ? 0 : it->second.second;
        if (n.second > ht) return false;
        if (n.first + n.second > hp + ht) return false;
    }
    return true;
}

bool match_rows(const MatchContext& cx, const Pattern& p, RowColor green, size_t next,
                std::vector<int>& rowmap, std::vector<bool>& used,
                std::vector<int>& colmap_out) {
    if (next == p.rows.size()) return assign_columns(cx, p, rowmap, colmap_out);
    for (int r = 0; r < cx.mrows; r++) {
        if (used[r]) continue;
        if (!label_matches(p.rows[next].label, cx.labels[r], p.label_agnostic)) continue;
        if (!color_matches(p.rows[next].color, cx.colors[r], green)) continue;
        rowmap[next] = r;
        used[r] = true;
        if (columns_feasible(cx, p, rowmap, next + 1) &&
            match_rows(cx, p, green, next + 1, rowmap, used, colmap_out))
            return true;
        used[r] = false;
    }
    return false;
}

std::optional<PatternWitness> run_match(const MatchContext& cx, const Pattern& p) {
    if (int(p.rows.size()) > cx.mrows || p.cols > cx.mcols) return std::nullopt;
    bool has_colors = false;
    for (auto& r : p.rows)
        if (r.color != PatternColor::Any) has_colors = true;
    std::vector<RowColor> greens = has_colors
                                       ? std::vector<RowColor>{RowColor::Red, RowColor::Blue}
                                       : std::vector<RowColor>{RowColor::Red};
    for (RowColor g : greens) {
        std::vector<int> rowmap(p.rows.size(), -1), colmap;
        std::vector<bool> used(cx.mrows, false);
        if (match_rows(cx, p, g, 0, rowmap, used, colmap)) {
            PatternWitness w;
            w.family = p.family;
            w.k = p.k;
            w.l = p.l;
            w.rows = rowmap;
            w.cols = colmap;
            return w;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<PatternWitness> contains_subconfiguration(const EnrichedMatrix& m,
                                                        const Pattern& p) {
    MatchContext cx;
    cx.mat = &m.a;
    cx.labels = m.label;
    cx.colors = m.color;
    cx.is_tag.assign(m.cols, 0);
    cx.mrows = m.rows;
    cx.mcols = m.cols;
    return run_match(cx, p);
}

std::optional<PatternWitness> contains_subconfiguration_tagged(const TaggedMatrix& m,
                                                               const Pattern& p) {
    MatchContext cx;
    cx.mat = &m.a;
    cx.labels.assign(m.rows, RowLabel::U);
    cx.colors.assign(m.rows, RowColor::None);
    cx.is_tag.assign(m.cols, 0);
    cx.is_tag[m.tag_l] = 1;
    cx.is_tag[m.tag_r] = 1;
    cx.mrows = m.rows;
    cx.mcols = m.cols;
    return run_match(cx, p);
}

std::optional<PatternWitness> contains_family(const EnrichedMatrix& m, const Pattern& p) {
    if (auto w = contains_subconfiguration(m, p)) return w;
    Pattern d = dual_pattern(p);
    if (auto w = contains_subconfiguration(m, d)) {
        w->family = p.family;
        return w;
    }
    return std::nullopt;
}

std::optional<PatternWitness> contains_family_tagged(const TaggedMatrix& m, const Pattern& p) {
    if (auto w = contains_subconfiguration_tagged(m, p)) return w;
    Pattern d = dual_pattern(p);
    if (auto w = contains_subconfiguration_tagged(m, d)) {
        w->family = p.family;
        return w;
    }
    return std::nullopt;
}

std::optional<Pattern> pattern_by_name(const std::string& family, int k, int l) {
    try {
        if (family == "Tucker_I") return tucker_mi(k);
        if (family == "Tucker_II") return tucker_mii(k);
        if (family == "Tucker_III") return tucker_miii(k);
        if (family == "Tucker_IV") return tucker_miv();
        if (family == "Tucker_V") return tucker_mv();
        if (family.size() >= 2 && family[0] == 'D') {
            int idx = std::stoi(family.substr(1));
            return pattern_d(idx);
        }
        if (family == "S0") return pattern_s0(k);
        if (family == "S1") return pattern_s1(k);
        if (family == "S2") return pattern_s2(k);
        if (family == "S3") return pattern_s3(k);
        if (family == "S4") return pattern_s4(k);
        if (family == "S5") return pattern_s5(k);
        if (family == "S6") return pattern_s6(k);
        if (family == "S6'") return pattern_s6_prime();
        if (family == "S7") return pattern_s7(k);
        if (family == "S8") return pattern_s8(k);
        if (family == "M0") return pattern_m0();
        if (family == "P0") return pattern_p0(k, l);
        if (family == "P1") return pattern_p1(k, l);
        if (family == "P2") return pattern_p2(k, l);
        if (family == "F0") return pattern_f0();
        if (family == "F1") return pattern_f1(k);
        if (family == "F2") return pattern_f2(k);
        if (family == "F0'") return pattern_f0_prime();
        if (family == "F0''") return pattern_f0_doubleprime();
        if (family == "F1'") return pattern_f1_prime(k);
        if (family == "F2'") return pattern_f2_prime(k);
        if (family == "M2'") return pattern_m2_prime(k);
        if (family == "M2''") return pattern_m2_doubleprime(k);
        if (family == "M3'") return pattern_m3_prime(k);
        if (family == "M3''") return pattern_m3_doubleprime(k);
        if (family == "M4'") return pattern_m4_prime();
        if (family == "M4''") return pattern_m4_doubleprime();
        if (family == "M5'") return pattern_m5_prime();
        if (family == "M5''") return pattern_m5_doubleprime();
        (void)l;
    } catch (...) {
        return std::nullopt;
    }
    return std::nullopt;
}

} // namespace circletk
