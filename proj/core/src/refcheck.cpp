#include "circletk/refcheck.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>

namespace circletk::refcheck {

bool has_zero_gem(const std::vector<std::vector<uint8_t>>& m) {
    int rows = int(m.size());
    int cols = rows ? int(m[0].size()) : 0;
    for (int r1 = 0; r1 < rows; r1++)
        for (int r2 = 0; r2 < rows; r2++) {
            if (r1 == r2) continue;
            for (int c1 = 0; c1 < cols; c1++)
                for (int c2 = 0; c2 < cols; c2++)
                    for (int c3 = 0; c3 < cols; c3++) {
                        if (c1 == c2 || c2 == c3 || c1 == c3) continue;
                        if (m[r1][c1] == 1 && m[r1][c2] == 1 && m[r1][c3] == 0 &&
                            m[r2][c1] == 0 && m[r2][c2] == 1 && m[r2][c3] == 1)
                            return true;
                    }
        }
    return false;
}

bool coloring_extendable_exhaustive(const Graph& g, const std::vector<RowColor>& precolor) {
    std::vector<int> free_vs;
    for (int v = 0; v < g.n; v++)
        if (precolor[v] == RowColor::None) free_vs.push_back(v);
    if (free_vs.size() > 30) return false;
    for (uint64_t mask = 0; mask < (uint64_t(1) << free_vs.size()); mask++) {
        std::vector<RowColor> col = precolor;
        for (size_t i = 0; i < free_vs.size(); i++)
            col[free_vs[i]] = ((mask >> i) & 1) ? RowColor::Red : RowColor::Blue;
        bool proper = true;
        for (auto [a, b] : g.edges())
            if (col[a] == col[b]) proper = false;
        if (proper) return true;
    }
    return false;
}

bool ordering_consecutive(const std::vector<std::vector<uint8_t>>& m,
                          const std::vector<int>& order) {
    for (auto& row : m) {
        int first = -1, last = -1, cnt = 0;
        for (size_t p = 0; p < order.size(); p++)
            if (row[order[p]]) {
                if (first < 0) first = int(p);
                last = int(p);
                cnt++;
            }
        if (cnt && last - first + 1 != cnt) return false;
    }
    return true;
}

namespace {

// Block description for the literal condition check: per row, one or two
// intervals in ordered position space tagged with a side letter.
struct RBlock {
    int row;
    char side; // 'L', 'R', 'U'
    int from, to;
    int color = 0; // 1 red, 2 blue
};

bool check_nine_conditions(const EnrichedMatrix& m, const std::vector<RBlock>& blocks,
                           const std::vector<int>& block_of_row_l,
                           const std::vector<int>& block_of_row_r) {
    auto disjoint = [](const RBlock& a, const RBlock& b) { return a.to < b.from || b.to < a.from; };
    auto inside = [](const RBlock& inner, const RBlock& outer) {
        return outer.from <= inner.from && inner.to <= outer.to;
    };
    // condition 1
    for (int i = 0; i < m.rows; i++)
        if (m.label[i] == RowLabel::LR && block_of_row_l[i] >= 0 && block_of_row_r[i] >= 0 &&
            blocks[block_of_row_l[i]].color == blocks[block_of_row_r[i]].color)
            return false;
    // condition 2
    for (int i = 0; i < m.rows; i++) {
        if (m.color[i] == RowColor::None) continue;
        int want = m.color[i] == RowColor::Red ? 1 : 2;
        if (block_of_row_l[i] >= 0 && blocks[block_of_row_l[i]].color != want) return false;
        if (block_of_row_r[i] >= 0 && blocks[block_of_row_r[i]].color != want) return false;
    }
    for (auto& a : blocks)
        for (auto& b : blocks) {
            if (&a == &b) continue;
            bool a_lr = m.label[a.row] == RowLabel::LR;
            bool b_lr = m.label[b.row] == RowLabel::LR;
            // condition 3 (and its mirror)
            if (a_lr && !b_lr && a.side == b.side && a.side != 'U' && inside(a, b) &&
                !(a.from == b.from && a.to == b.to) && a.color == b.color)
                return false;
            // condition 4
            if (a_lr && a.row != b.row) {
                if (a.side == 'L' && b.side == 'R' && !disjoint(a, b)) return false;
                if (a.side == 'R' && b.side == 'L' && !disjoint(a, b)) return false;
            }
            // condition 5
            if (a.side == 'L' && b.side == 'R' && !disjoint(a, b) && a.color == b.color)
                return false;
            // condition 6
            if (a.side == 'U' && b.side == 'U' && a.color == b.color && !disjoint(a, b) &&
                !inside(a, b) && !inside(b, a))
                return false;
            // condition 7
            if (a.side != 'U' && b.side == 'U' && a.color == b.color && !disjoint(a, b) &&
                !inside(b, a))
                return false;
        }
    // condition 8
    {
        std::set<int> lcols, rcols;
        for (int i = 0; i < m.rows; i++) {
            if (m.label[i] == RowLabel::L && block_of_row_l[i] >= 0)
                lcols.insert(blocks[block_of_row_l[i]].color);
            if (m.label[i] == RowLabel::R && block_of_row_r[i] >= 0)
                rcols.insert(blocks[block_of_row_r[i]].color);
        }
        for (int i = 0; i < m.rows; i++) {
            if (m.label[i] != RowLabel::LR) continue;
            if (lcols.size() >= 2 && block_of_row_l[i] < 0) return false;
            if (rcols.size() >= 2 && block_of_row_r[i] < 0) return false;
        }
    }
    // condition 9
    for (int i = 0; i < m.rows; i++) {
        if (m.label[i] != RowLabel::LR) continue;
        for (int j = 0; j < m.rows; j++) {
            if (j == i || m.label[j] != RowLabel::LR) continue;
            if (!m.rows_overlap(i, j)) continue;
            if (block_of_row_l[i] >= 0 && block_of_row_r[j] >= 0 &&
                blocks[block_of_row_l[i]].color != blocks[block_of_row_r[j]].color)
                return false;
        }
    }
    return true;
}

} // namespace

bool two_nested_exhaustive(const EnrichedMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return true;
    std::vector<int> perm(m.cols);
    std::iota(perm.begin(), perm.end(), 0);
    std::set<std::string> tried_block_shapes;
    do {
        // validity of the ordering for the labels
        bool ok = true;
        // per row: runs of ones in permuted space
        std::vector<std::array<int, 4>> runs(m.rows, {-1, -1, -1, -1}); // lfrom,lto,rfrom,rto
        std::vector<int> urun_from(m.rows, -1), urun_to(m.rows, -1);
        for (int i = 0; i < m.rows && ok; i++) {
            std::vector<uint8_t> bits(m.cols);
            int cnt = 0;
            for (int p = 0; p < m.cols; p++) {
                bits[p] = m.a[i][perm[p]];
                cnt += bits[p];
            }
            if (cnt == 0) continue;
            int first = 0;
            while (!bits[first]) first++;
            int last = m.cols - 1;
            while (!bits[last]) last--;
            bool contiguous = (last - first + 1) == cnt;
            switch (m.label[i]) {
                case RowLabel::U:
                    if (!contiguous) ok = false;
                    else {
                        urun_from[i] = first;
                        urun_to[i] = last;
                    }
                    break;
                case RowLabel::L:
                    if (!contiguous || first != 0) ok = false;
                    else {
                        runs[i][0] = first;
                        runs[i][1] = last;
                    }
                    break;
                case RowLabel::R:
                    if (!contiguous || last != m.cols - 1) ok = false;
                    else {
                        runs[i][2] = first;
                        runs[i][3] = last;
                    }
                    break;
                case RowLabel::LR: {
                    if (cnt == m.cols) break; // split chosen later
                    // zeros must be contiguous and ones touch an end
                    int zfirst = 0;
                    while (bits[zfirst]) zfirst++;
                    int zlast = m.cols - 1;
                    while (bits[zlast]) zlast--;
                    if ((zlast - zfirst + 1) != m.cols - cnt) {
                        ok = false;
                        break;
                    }
                    if (zfirst > 0) {
                        runs[i][0] = 0;
                        runs[i][1] = zfirst - 1;
                    }
                    if (zlast < m.cols - 1) {
                        runs[i][2] = zlast + 1;
                        runs[i][3] = m.cols - 1;
                    }
                    break;
                }
            }
        }
        if (!ok) continue;
        // enumerate splits of the all-ones LR-rows
        std::vector<int> full_rows;
        for (int i = 0; i < m.rows; i++)
            if (m.label[i] == RowLabel::LR && m.row_ones(i) == m.cols && m.cols > 0)
                full_rows.push_back(i);
        std::vector<int> split(full_rows.size(), 0);
        for (;;) {
            auto runs2 = runs;
            for (size_t t = 0; t < full_rows.size(); t++) {
                int i = full_rows[t];
                int s = split[t];
                runs2[i] = {-1, -1, -1, -1};
                if (s > 0) {
                    runs2[i][0] = 0;
                    runs2[i][1] = s - 1;
                }
                if (s < m.cols) {
                    runs2[i][2] = s;
                    runs2[i][3] = m.cols - 1;
                }
            }
            // build block list
            std::vector<RBlock> blocks;
            std::vector<int> bl(m.rows, -1), br(m.rows, -1);
            for (int i = 0; i < m.rows; i++) {
                if (urun_from[i] >= 0) {
                    bl[i] = int(blocks.size());
                    blocks.push_back({i, 'U', urun_from[i], urun_to[i], 0});
                }
                if (runs2[i][0] >= 0) {
                    bl[i] = int(blocks.size());
                    blocks.push_back({i, 'L', runs2[i][0], runs2[i][1], 0});
                }
                if (runs2[i][2] >= 0) {
                    br[i] = int(blocks.size());
                    blocks.push_back({i, 'R', runs2[i][2], runs2[i][3], 0});
                }
            }
            std::string shape;
            for (auto& b : blocks)
                shape += std::to_string(b.row) + b.side + std::to_string(b.from) + "," +
                         std::to_string(b.to) + ";";
            if (tried_block_shapes.insert(shape).second) {
                // condition 4 is structural, so discard the shape early
                bool structural_ok = true;
                for (auto& a : blocks)
                    for (auto& b : blocks) {
                        if (&a == &b || m.label[a.row] != RowLabel::LR || a.row == b.row) continue;
                        if (((a.side == 'L' && b.side == 'R') || (a.side == 'R' && b.side == 'L')) &&
                            !(a.to < b.from || b.to < a.from))
                            structural_ok = false;
                    }
                if (structural_ok) {
                    int nb = int(blocks.size());
                    // DFS over colors with incremental pairwise pruning;
                    // conditions 8 and 9 are confirmed at the leaves
                    std::function<bool(int)> assign = [&](int t) -> bool {
                        if (t == nb) return check_nine_conditions(m, blocks, bl, br);
                        for (int col = 1; col <= 2; col++) {
                            blocks[t].color = col;
                            bool ok2 = true;
                            if (m.color[blocks[t].row] != RowColor::None) {
                                int want = m.color[blocks[t].row] == RowColor::Red ? 1 : 2;
                                if (col != want) ok2 = false;
                            }
                            for (int u = 0; u < t && ok2; u++) {
                                const RBlock& a = blocks[u];
                                const RBlock& b = blocks[t];
                                if (a.color != b.color) {
                                    // condition 1 needs distinct colors, never violated here
                                    continue;
                                }
                                auto disjoint = a.to < b.from || b.to < a.from;
                                auto a_in_b = b.from <= a.from && a.to <= b.to;
                                auto b_in_a = a.from <= b.from && b.to <= a.to;
                                bool a_lr = m.label[a.row] == RowLabel::LR;
                                bool b_lr = m.label[b.row] == RowLabel::LR;
                                if (a.row == b.row && a_lr) ok2 = false; // condition 1
                                else if (a.side == 'U' && b.side == 'U' && !disjoint && !a_in_b &&
                                         !b_in_a)
                                    ok2 = false; // condition 6
                                else if (((a.side == 'L' && b.side == 'R') ||
                                          (a.side == 'R' && b.side == 'L')) &&
                                         !disjoint)
                                    ok2 = false; // condition 5
                                else if (a.side != 'U' && b.side == 'U' && !disjoint && !b_in_a)
                                    ok2 = false; // condition 7
                                else if (b.side != 'U' && a.side == 'U' && !disjoint && !a_in_b)
                                    ok2 = false;
                                else if (a.side == b.side && a.side != 'U' && a_lr != b_lr) {
                                    const RBlock& lr = a_lr ? a : b;
                                    const RBlock& lab = a_lr ? b : a;
                                    if (lab.from <= lr.from && lr.to <= lab.to &&
                                        !(lab.from == lr.from && lab.to == lr.to))
                                        ok2 = false; // condition 3
                                }
                            }
                            if (ok2 && assign(t + 1)) return true;
                        }
                        return false;
                    };
                    if (assign(0)) return true;
                }
            }
            // next split combination
            size_t t = 0;
            while (t < full_rows.size()) {
                split[t]++;
                if (split[t] <= m.cols) break;
                split[t] = 0;
                t++;
            }
            if (full_rows.empty() || t == full_rows.size()) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace circletk::refcheck
