#include "circletk/two_nested.hpp"

#include "circletk/coloring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace circletk {

namespace {

struct Run {
    bool empty = true;
    int from = -1, to = -1; // inclusive positions
    int count = 0;
};

Run positions_run(const EnrichedMatrix& m, const std::vector<int>& order, int row) {
    Run r;
    for (size_t p = 0; p < order.size(); p++) {
        if (m.a[row][order[p]]) {
            if (r.empty) {
                r.empty = false;
                r.from = int(p);
            }
            r.to = int(p);
            r.count++;
        }
    }
    return r;
}

bool contiguous(const Run& r) { return r.empty || (r.to - r.from + 1 == r.count); }

} // namespace

RowBlocks row_blocks(const EnrichedMatrix& m, const LROrdering& ord, int row) {
    RowBlocks b;
    int cols = int(ord.order.size());
    Run run = positions_run(m, ord.order, row);
    switch (m.label[row]) {
        case RowLabel::U:
            if (!contiguous(run)) { b.valid = false; return b; }
            if (!run.empty) { b.has_u = true; b.u_from = run.from; b.u_to = run.to; }
            return b;
        case RowLabel::L:
            if (!contiguous(run) || (!run.empty && run.from != 0)) { b.valid = false; return b; }
            if (!run.empty) { b.has_l = true; b.l_from = 0; b.l_to = run.to; }
            return b;
        case RowLabel::R:
            if (!contiguous(run) || (!run.empty && run.to != cols - 1)) { b.valid = false; return b; }
            if (!run.empty) { b.has_r = true; b.r_from = run.from; b.r_to = cols - 1; }
            return b;
        case RowLabel::LR: {
            if (run.empty) return b;
            if (run.count == cols) {
                int split = row < int(ord.full_lr_split.size()) ? ord.full_lr_split[row] : -1;
                if (split < 0) split = cols; // single L-block by default
                if (split > 0) { b.has_l = true; b.l_from = 0; b.l_to = split - 1; }
                if (split < cols) { b.has_r = true; b.r_from = split; b.r_to = cols - 1; }
                return b;
            }
            // the complement must be contiguous: ones form a prefix, a suffix,
            // or both
            bool prefix = m.a[row][ord.order[0]];
            bool suffix = m.a[row][ord.order[cols - 1]];
            if (!prefix && !suffix) { b.valid = false; return b; }
            if (prefix) {
                int t = 0;
                while (t < cols && m.a[row][ord.order[t]]) t++;
                b.has_l = true;
                b.l_from = 0;
                b.l_to = t - 1;
            }
            if (suffix) {
                int t = cols - 1;
                while (t >= 0 && m.a[row][ord.order[t]]) t--;
                b.has_r = true;
                b.r_from = t + 1;
                b.r_to = cols - 1;
            }
            int covered = (b.has_l ? b.l_to - b.l_from + 1 : 0) +
                          (b.has_r ? b.r_to - b.r_from + 1 : 0);
            if (covered != run.count) b.valid = false; // interior ones remain
            return b;
        }
    }
    b.valid = false;
    return b;
}

bool is_lr_ordering(const EnrichedMatrix& m, const std::vector<int>& order) {
    if (int(order.size()) != m.cols) return false;
    LROrdering ord;
    ord.order = order;
    ord.full_lr_split.assign(m.rows, -1);
    for (int i = 0; i < m.rows; i++)
        if (!row_blocks(m, ord, i).valid) return false;
    return true;
}

bool is_suitable(const EnrichedMatrix& m, const LROrdering& ord) {
    std::vector<RowBlocks> bs(m.rows);
    for (int i = 0; i < m.rows; i++) {
        bs[i] = row_blocks(m, ord, i);
        if (!bs[i].valid) return false;
    }
    auto disjoint = [](int a1, int a2, int b1, int b2) { return a2 < b1 || b2 < a1; };
    // all-ones LR-rows have no block structure until a split is chosen, so
    // they stay out of the disjointness clauses here
    auto is_full_lr = [&](int i) { return m.label[i] == RowLabel::LR && m.cols > 0 && m.row_full(i); };
    for (int i = 0; i < m.rows; i++) {
        if (m.label[i] != RowLabel::LR || is_full_lr(i)) continue;
        bool two = bs[i].has_l && bs[i].has_r;
        if (two) {
            for (int j = 0; j < m.rows; j++) {
                if (j == i || is_full_lr(j)) continue;
                if (bs[j].has_r &&
                    !disjoint(bs[i].l_from, bs[i].l_to, bs[j].r_from, bs[j].r_to))
                    return false;
                if (bs[j].has_l &&
                    !disjoint(bs[i].r_from, bs[i].r_to, bs[j].l_from, bs[j].l_to))
                    return false;
            }
        }
        if (bs[i].has_l || bs[i].has_r) {
            for (int j = 0; j < m.rows; j++) {
                if (!bs[j].has_u) continue;
                bool meets_l = bs[i].has_l &&
                               !disjoint(bs[i].l_from, bs[i].l_to, bs[j].u_from, bs[j].u_to);
                bool meets_r = bs[i].has_r &&
                               !disjoint(bs[i].r_from, bs[i].r_to, bs[j].u_from, bs[j].u_to);
                if (meets_l && meets_r) return false;
            }
        }
    }
    return true;
}

std::optional<PatternWitness> find_admissibility_witness(const EnrichedMatrix& m) {
    int r = m.rows, c = m.cols;
    // D13 as printed is satisfiable (a chain of overlapping LR-rows with
    // disjoint extremes bi-colors once ordered end-anchored), so it is not
    // scanned; the same calibration covers the D6 variants below
    for (int d = 0; d <= 12; d++)
        if (auto w = contains_family(m, pattern_d(d))) return w;
    if (auto w = contains_family(m, pattern_d6_anchored())) return w;
    for (int k = 3; k <= r; k++) {
        // the odd S1 shape is satisfiable as printed; only the even members
        // obstruct (exhaustive calibration)
        if (k % 2 == 0 && k >= 4 && k <= r && k - 2 <= c)
            if (auto w = contains_family(m, pattern_s1(k))) return w;
        if (k - 1 <= c) {
            if (auto w = contains_family(m, pattern_s2(k))) return w;
            if (auto w = contains_family(m, pattern_s3(k))) return w;
            // S4 as printed is not an obstruction (its connector row is
            // disjoint from the R-row); the exhaustive recognizer confirms
            // matrices matching it can still be bi-colored, so it is not
            // scanned here
        }
        if (k >= 4 && k - 2 <= c)
            if (auto w = contains_family(m, pattern_s5(k))) return w;
        if (k <= c)
            if (auto w = contains_family(m, pattern_s6(k))) return w;
        if (k == 3 && c >= 3)
            if (auto w = contains_family(m, pattern_s6_prime())) return w;
        if (k == 3 && c >= 5)
            if (auto w = contains_family(m, pattern_s7(3))) return w;
        // the even S7 members are satisfiable as printed and are not scanned
        if (k % 2 == 0 && k >= 4 && k <= c)
            if (auto w = contains_family(m, pattern_s8(k))) return w;
    }
    for (int k = 4; k <= r; k++) {
        if (k <= c)
            if (auto w = contains_family(m, pattern_p0(k, 0))) return w;
        for (int l = 1; l <= k - 4 && k - 1 <= c; l++)
            if (auto w = contains_family(m, pattern_p0(k, l))) return w;
        if (k >= 5 && k - 1 <= c)
            if (auto w = contains_family(m, pattern_p1(k, 0))) return w;
        for (int l = 1; k >= 6 && l <= k - 5 && k - 2 <= c; l++)
            if (auto w = contains_family(m, pattern_p1(k, l))) return w;
        if (k >= 7 && k - 1 <= c)
            if (auto w = contains_family(m, pattern_p2(k, 0))) return w;
        for (int l = 1; k >= 8 && l <= k - 7 && k - 2 <= c; l++)
            if (auto w = contains_family(m, pattern_p2(k, l))) return w;
    }
    return std::nullopt;
}

namespace {

// Tagged A* obstructions: Tucker matrices plus the pinned-tag variants.
std::optional<PatternWitness> find_tagged_witness(const TaggedMatrix& t) {
    int r = t.rows, c = t.cols;
    for (int k = 4; k <= std::min(r, c); k++) {
        if (auto w = contains_family_tagged(t, pattern_m2_prime(k))) return w;
        if (auto w = contains_family_tagged(t, pattern_m2_doubleprime(k))) return w;
    }
    for (int k = 3; k <= r && k + 1 <= c; k++) {
        if (auto w = contains_family_tagged(t, pattern_m3_prime(k))) return w;
        if (auto w = contains_family_tagged(t, pattern_m3_doubleprime(k))) return w;
    }
    if (r >= 4 && c >= 6) {
        if (auto w = contains_family_tagged(t, pattern_m4_prime())) return w;
        if (auto w = contains_family_tagged(t, pattern_m4_doubleprime())) return w;
    }
    if (r >= 4 && c >= 5) {
        if (auto w = contains_family_tagged(t, pattern_m5_prime())) return w;
        if (auto w = contains_family_tagged(t, pattern_m5_doubleprime())) return w;
    }
    if (auto w = find_tucker(t.a)) return w;
    return std::nullopt;
}

// Enumerate the LR-orderings of m (via C1P orders of the tagged A*), calling
// cb until it returns false. Orders are deduplicated.
void enumerate_lr_orderings(const EnrichedMatrix& m,
                            const std::function<bool(const std::vector<int>&)>& cb) {
    EnrichedMatrix star = a_star(m);
    TaggedMatrix t = tagged(star);
    std::set<std::vector<int>> seen;
    enumerate_c1p_orders(t.a, [&](const std::vector<int>& tagged_order) {
        std::vector<int> order = tagged_order;
        auto pos_of = [&](int col) {
            for (size_t p = 0; p < order.size(); p++)
                if (order[p] == col) return int(p);
            return -1;
        };
        if (pos_of(t.tag_l) > pos_of(t.tag_r)) std::reverse(order.begin(), order.end());
        if (order.front() != t.tag_l || order.back() != t.tag_r) return true; // keep going
        std::vector<int> real;
        for (int colv : order)
            if (colv != t.tag_l && colv != t.tag_r) real.push_back(colv - 1);
        if (!seen.insert(real).second) return true;
        if (!is_lr_ordering(m, real)) return true;
        return cb(real);
    });
}

} // namespace

LROrderResult is_lr_orderable(const EnrichedMatrix& m) {
    LROrderResult res;
    bool found = false;
    enumerate_lr_orderings(m, [&](const std::vector<int>& order) {
        LROrdering ord;
        ord.order = order;
        ord.full_lr_split.assign(m.rows, -1);
        res.ordering = ord;
        found = true;
        return false;
    });
    if (found) return res;
    res.witness = find_tagged_witness(tagged(a_star(m)));
    if (!res.witness)
        throw std::logic_error("not LR-orderable but no Tucker/M witness in tagged A*");
    return res;
}

std::optional<PatternWitness> find_m_group_witness(const EnrichedMatrix& m) {
    if (auto w = contains_subconfiguration(m, pattern_m0())) return w;
    if (m.rows >= 4 && m.cols >= 4)
        if (auto w = contains_subconfiguration(m, tucker_mii(4))) return w;
    if (m.rows >= 4 && m.cols >= 5)
        if (auto w = contains_subconfiguration(m, tucker_mv())) return w;
    for (int k = 4; k + 1 <= m.rows && k <= m.cols; k += 2)
        if (auto w = contains_subconfiguration(m, pattern_s0(k))) return w;
    return std::nullopt;
}

std::optional<GemWitness> find_precolor_gem(const EnrichedMatrix& m) {
    // colored rows are L-rows, R-rows and all-zero LR-rows; a monochromatic gem
    // needs two same-colored properly overlapping rows
    for (int i = 0; i < m.rows; i++) {
        if (m.color[i] == RowColor::None || m.label[i] == RowLabel::LR) continue;
        for (int j = i + 1; j < m.rows; j++) {
            if (m.color[j] != m.color[i] || m.label[j] == RowLabel::LR) continue;
            if (!m.rows_overlap(i, j)) continue;
            GemWitness g;
            g.kind = "monochromatic gem";
            g.row1 = i;
            g.row2 = j;
            int ca = -1, cb = -1, cc = -1;
            for (int c = 0; c < m.cols; c++) {
                if (m.a[i][c] && m.a[j][c]) cb = c;
                else if (m.a[i][c]) ca = c;
                else if (m.a[j][c]) cc = c;
            }
            g.cols = {ca, cb, cc};
            return g;
        }
    }
    return std::nullopt;
}

PartialCheck is_partially_2nested(const EnrichedMatrix& m) {
    PartialCheck res;
    if (auto err = m.invariant_violation())
        throw std::invalid_argument("enriched matrix invariant: " + *err);
    if (auto w = find_admissibility_witness(m)) {
        res.fail = MatrixCheckFail{w, std::nullopt, "not admissible"};
        return res;
    }
    if (auto w = find_m_group_witness(m)) {
        res.fail = MatrixCheckFail{w, std::nullopt, "contains M0/M_II(4)/M_V/S0"};
        return res;
    }
    auto lr = is_lr_orderable(m);
    if (!lr.ordering) {
        res.fail = MatrixCheckFail{lr.witness, std::nullopt, "not LR-orderable"};
        return res;
    }
    if (auto g = find_precolor_gem(m)) {
        res.fail = MatrixCheckFail{std::nullopt, g, "pre-coloring gem"};
        return res;
    }
    res.ok = true;
    return res;
}

std::optional<LROrdering> find_suitable_lr_ordering(const EnrichedMatrix& m) {
    std::optional<LROrdering> best;
    long tried = 0;
    const long cap = 200000;
    enumerate_lr_orderings(m, [&](const std::vector<int>& order) {
        LROrdering ord;
        ord.order = order;
        ord.full_lr_split.assign(m.rows, -1);
        tried++;
        if (is_suitable(m, ord)) {
            ord.suitable = true;
            best = ord;
            return false;
        }
        return tried < cap;
    });
    return best;
}

APlusResult a_plus(const EnrichedMatrix& m, const LROrdering& ord) {
    APlusResult out;
    int cols = m.cols;
    // maximum L-block end (exclusive position) among labeled rows, for the
    // all-ones LR-row split
    bool any_lr_label = false;
    int max_l_end = 0;
    std::vector<RowBlocks> bs(m.rows);
    for (int i = 0; i < m.rows; i++) {
        bs[i] = row_blocks(m, ord, i);
        if (!bs[i].valid) throw std::invalid_argument("a_plus: not an LR-ordering");
        if (m.label[i] == RowLabel::L || m.label[i] == RowLabel::R) any_lr_label = true;
        if (m.label[i] == RowLabel::L && bs[i].has_l) max_l_end = std::max(max_l_end, bs[i].l_to + 1);
        if (m.label[i] == RowLabel::LR && bs[i].has_l && !m.row_full(i))
            max_l_end = std::max(max_l_end, bs[i].l_to + 1);
    }

    struct NewRow {
        std::vector<uint8_t> bits; // over ordered positions
        RowLabel label;
        RowColor color;
        APlusRow origin;
        int link = -1; // pending link column id
    };
    std::vector<NewRow> rows;
    int links = 0;
    for (int i = 0; i < m.rows; i++) {
        if (m.row_empty(i)) continue; // empty rows deleted
        std::vector<uint8_t> bits(cols, 0);
        for (int p = 0; p < cols; p++) bits[p] = m.a[i][ord.order[p]];
        if (m.label[i] != RowLabel::LR) {
            rows.push_back({bits, m.label[i], m.color[i], {i, APlusRow::Whole}, -1});
            continue;
        }
        RowBlocks b = bs[i];
        if (m.row_full(i)) {
            int split = ord.full_lr_split.size() > size_t(i) && ord.full_lr_split[i] >= 0
                            ? ord.full_lr_split[i]
                            : (any_lr_label ? max_l_end : cols);
            b.has_l = split > 0;
            b.l_from = 0;
            b.l_to = split - 1;
            b.has_r = split < cols;
            b.r_from = split;
            b.r_to = cols - 1;
        }
        if (b.has_l && b.has_r) {
            std::vector<uint8_t> lb(cols, 0), rb(cols, 0);
            for (int p = b.l_from; p <= b.l_to; p++) lb[p] = 1;
            for (int p = b.r_from; p <= b.r_to; p++) rb[p] = 1;
            int link = links++;
            rows.push_back({lb, RowLabel::L, RowColor::None, {i, APlusRow::LPart}, link});
            rows.push_back({rb, RowLabel::R, RowColor::None, {i, APlusRow::RPart}, link});
        } else if (b.has_l) {
            rows.push_back({bits, RowLabel::L, RowColor::None, {i, APlusRow::LPart}, -1});
        } else {
            rows.push_back({bits, RowLabel::R, RowColor::None, {i, APlusRow::RPart}, -1});
        }
    }
    out.plus = EnrichedMatrix(int(rows.size()), cols + links);
    for (size_t i = 0; i < rows.size(); i++) {
        for (int p = 0; p < cols; p++) out.plus.a[i][p] = rows[i].bits[p];
        if (rows[i].link >= 0) out.plus.a[i][cols + rows[i].link] = 1;
        out.plus.label[i] = rows[i].label;
        out.plus.color[i] = rows[i].color;
        out.row_origin.push_back(rows[i].origin);
    }
    out.col_origin.assign(cols + links, -1);
    out.link_owner.assign(cols + links, -1);
    for (int p = 0; p < cols; p++) out.col_origin[p] = ord.order[p];
    for (size_t i = 0; i < rows.size(); i++)
        if (rows[i].link >= 0) out.link_owner[cols + rows[i].link] = rows[i].origin.source_row;
    return out;
}

namespace {

struct Interval {
    int from, to; // inclusive; to == INT_MAX/2 not used here
};
bool iv_disjoint(const Interval& a, const Interval& b) { return a.to < b.from || b.to < a.from; }
bool iv_contains(const Interval& outer, const Interval& inner) {
    return outer.from <= inner.from && inner.to <= outer.to;
}

struct ConstraintVertex {
    int row;          // source row in m
    char side;        // 'L', 'R', 'U'
    Interval iv;
    RowColor fixed;   // pre-color, None when free
};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; i++) parent[i] = i;
    }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Attempt a total block bi-coloring for a fixed ordering + splits. Returns the
// coloring or nothing.
std::optional<BlockBicoloring> try_coloring(const EnrichedMatrix& m, const LROrdering& ord) {
    std::vector<RowBlocks> bs(m.rows);
    for (int i = 0; i < m.rows; i++) {
        bs[i] = row_blocks(m, ord, i);
        if (!bs[i].valid) return std::nullopt;
    }
    std::vector<ConstraintVertex> verts;
    std::vector<int> lvert(m.rows, -1), rvert(m.rows, -1), uvert(m.rows, -1);
    for (int i = 0; i < m.rows; i++) {
        if (bs[i].has_l) {
            lvert[i] = int(verts.size());
            verts.push_back({i, 'L', {bs[i].l_from, bs[i].l_to}, m.color[i]});
        }
        if (bs[i].has_r) {
            rvert[i] = int(verts.size());
            verts.push_back({i, 'R', {bs[i].r_from, bs[i].r_to}, m.color[i]});
        }
        if (bs[i].has_u) {
            uvert[i] = int(verts.size());
            verts.push_back({i, 'U', {bs[i].u_from, bs[i].u_to}, m.color[i]});
        }
    }
    // condition 4 is structural: LR L-blocks disjoint from every R-block and
    // symmetrically (can fail for a chosen all-ones split)
    for (int i = 0; i < m.rows; i++) {
        if (m.label[i] != RowLabel::LR) continue;
        for (int j = 0; j < m.rows; j++) {
            if (j == i) continue;
            if (bs[i].has_l && bs[j].has_r &&
                !(bs[i].l_to < bs[j].r_from || bs[j].r_to < bs[i].l_from))
                return std::nullopt;
            if (bs[i].has_r && bs[j].has_l &&
                !(bs[i].r_to < bs[j].l_from || bs[j].l_to < bs[i].r_from))
                return std::nullopt;
        }
    }

    int nv = int(verts.size());
    UnionFind uf(nv);

    // condition 9 equalities: overlapping LR-rows pair L-block of one with
    // R-block of the other
    for (int i = 0; i < m.rows; i++) {
        if (m.label[i] != RowLabel::LR || m.row_empty(i)) continue;
        for (int j = i + 1; j < m.rows; j++) {
            if (m.label[j] != RowLabel::LR || m.row_empty(j)) continue;
            if (!m.rows_overlap(i, j)) continue;
            if (lvert[i] >= 0 && rvert[j] >= 0) uf.unite(lvert[i], rvert[j]);
            if (lvert[j] >= 0 && rvert[i] >= 0) uf.unite(lvert[j], rvert[i]);
        }
    }
    // condition 8 equalities: an LR-row lacking an L-block forces all non-LR
    // L-blocks onto one color (same with R)
    bool lr_missing_l = false, lr_missing_r = false;
    for (int i = 0; i < m.rows; i++) {
        if (m.label[i] != RowLabel::LR) continue;
        if (!bs[i].has_l) lr_missing_l = true;
        if (!bs[i].has_r) lr_missing_r = true;
    }
    int prev = -1;
    if (lr_missing_l) {
        for (int i = 0; i < m.rows; i++)
            if (m.label[i] == RowLabel::L && lvert[i] >= 0) {
                if (prev >= 0) uf.unite(prev, lvert[i]);
                prev = lvert[i];
            }
    }
    prev = -1;
    if (lr_missing_r) {
        for (int i = 0; i < m.rows; i++)
            if (m.label[i] == RowLabel::R && rvert[i] >= 0) {
                if (prev >= 0) uf.unite(prev, rvert[i]);
                prev = rvert[i];
            }
    }

    // difference edges from the pairwise conditions
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < nv; x++) {
        for (int y = x + 1; y < nv; y++) {
            const auto& a = verts[x];
            const auto& b = verts[y];
            bool diff = false;
            if (a.row == b.row && m.label[a.row] == RowLabel::LR) diff = true; // cond 1
            else if (a.side == 'U' && b.side == 'U') {                         // cond 6
                if (!iv_disjoint(a.iv, b.iv) && !iv_contains(a.iv, b.iv) &&
                    !iv_contains(b.iv, a.iv))
                    diff = true;
            } else if ((a.side == 'L' && b.side == 'R') || (a.side == 'R' && b.side == 'L')) {
                if (!iv_disjoint(a.iv, b.iv)) diff = true; // cond 5
            } else if (a.side != 'U' && b.side == 'U') {   // cond 7
                if (!iv_disjoint(a.iv, b.iv) && !iv_contains(a.iv, b.iv)) diff = true;
            } else if (b.side != 'U' && a.side == 'U') {
                if (!iv_disjoint(a.iv, b.iv) && !iv_contains(b.iv, a.iv)) diff = true;
            } else if (a.side == b.side) { // cond 3 (both directions of containment)
                bool a_lr = m.label[a.row] == RowLabel::LR;
                bool b_lr = m.label[b.row] == RowLabel::LR;
                if (a_lr != b_lr) {
                    const auto& lrv = a_lr ? a : b;
                    const auto& labv = a_lr ? b : a;
                    if (iv_contains(labv.iv, lrv.iv) &&
                        !(labv.iv.from == lrv.iv.from && labv.iv.to == lrv.iv.to))
                        diff = true;
                }
            }
            if (diff) edges.push_back({x, y});
        }
    }

    // quotient graph plus fixed colors
    std::vector<int> rep(nv, -1);
    std::vector<int> rep_index;
    for (int x = 0; x < nv; x++) {
        int r = uf.find(x);
        if (rep[r] == -1) {
            rep[r] = int(rep_index.size());
            rep_index.push_back(r);
        }
    }
    int nq = int(rep_index.size());
    Graph q(nq);
    std::vector<RowColor> fixed(nq, RowColor::None);
    for (int x = 0; x < nv; x++) {
        if (verts[x].fixed == RowColor::None) continue;
        int r = rep[uf.find(x)];
        if (fixed[r] != RowColor::None && fixed[r] != verts[x].fixed) return std::nullopt;
        fixed[r] = verts[x].fixed;
    }
    for (auto [x, y] : edges) {
        int a = rep[uf.find(x)], b = rep[uf.find(y)];
        if (a == b) return std::nullopt; // must differ but merged equal
        if (a != b) q.add_edge(a, b);
    }
    ColoringOutcome oc;
    try {
        oc = extend_partial_2coloring(q, fixed);
    } catch (const std::invalid_argument&) {
        return std::nullopt; // adjacent fixed colors clash
    }
    if (!oc.coloring) return std::nullopt;

    BlockBicoloring col;
    col.left.assign(m.rows, RowColor::None);
    col.right.assign(m.rows, RowColor::None);
    for (int i = 0; i < m.rows; i++) {
        if (lvert[i] >= 0) col.left[i] = (*oc.coloring)[rep[uf.find(lvert[i])]];
        if (uvert[i] >= 0) col.left[i] = (*oc.coloring)[rep[uf.find(uvert[i])]];
        if (rvert[i] >= 0) {
            RowColor c = (*oc.coloring)[rep[uf.find(rvert[i])]];
            if (m.label[i] == RowLabel::LR) col.right[i] = c;
            else col.left[i] = c;
        }
    }
    return col;
}

// Candidate split points for all-ones LR-rows: the maximum-L-block rule first,
// then the remaining split positions.
std::vector<std::vector<int>> split_candidates(const EnrichedMatrix& m, const LROrdering& ord) {
    std::vector<int> full_rows;
    for (int i = 0; i < m.rows; i++)
        if (m.label[i] == RowLabel::LR && m.cols > 0 && m.row_full(i)) full_rows.push_back(i);
    std::vector<std::vector<int>> combos;
    std::vector<int> base(m.rows, -1);
    if (full_rows.empty()) {
        combos.push_back(base);
        return combos;
    }
    bool any_label = false;
    int max_l_end = 0;
    for (int i = 0; i < m.rows; i++) {
        if (m.label[i] == RowLabel::L || m.label[i] == RowLabel::R) any_label = true;
        RowBlocks b = row_blocks(m, ord, i);
        if (m.label[i] == RowLabel::L && b.has_l) max_l_end = std::max(max_l_end, b.l_to + 1);
        if (m.label[i] == RowLabel::LR && !m.row_full(i) && b.has_l)
            max_l_end = std::max(max_l_end, b.l_to + 1);
    }
    int preferred = any_label ? max_l_end : m.cols;
    std::vector<int> options = {preferred};
    for (int t = 0; t <= m.cols; t++)
        if (t != preferred) options.push_back(t);
    // product over full rows; once the cap is reached the remaining rows take
    // the preferred split only, so every combo assigns every full row
    combos.push_back(base);
    const size_t cap = 128;
    for (int row : full_rows) {
        std::vector<std::vector<int>> next;
        bool overflow = combos.size() * options.size() > cap;
        for (auto& cmb : combos) {
            if (overflow) {
                auto c2 = cmb;
                c2[row] = preferred;
                next.push_back(c2);
            } else {
                for (int t : options) {
                    auto c2 = cmb;
                    c2[row] = t;
                    next.push_back(c2);
                }
            }
        }
        combos = next;
    }
    return combos;
}

} // namespace

TwoNestedResult is_2nested(const EnrichedMatrix& m) {
    TwoNestedResult res;
    if (auto err = m.invariant_violation())
        throw std::invalid_argument("enriched matrix invariant: " + *err);
    if (m.rows == 0 || m.cols == 0) {
        res.two_nested = true;
        res.ordering.order.resize(m.cols);
        for (int i = 0; i < m.cols; i++) res.ordering.order[i] = i;
        res.ordering.full_lr_split.assign(m.rows, -1);
        res.coloring.left.assign(m.rows, RowColor::None);
        res.coloring.right.assign(m.rows, RowColor::None);
        return res;
    }
    auto partial = is_partially_2nested(m);
    if (!partial.ok) {
        res.fail = partial.fail;
        return res;
    }
    long tried = 0;
    const long cap = 5000;
    bool done = false;
    enumerate_lr_orderings(m, [&](const std::vector<int>& order) {
        LROrdering ord;
        ord.order = order;
        ord.full_lr_split.assign(m.rows, -1);
        tried++;
        if (!is_suitable(m, ord)) return tried < cap;
        ord.suitable = true;
        for (auto& splits : split_candidates(m, ord)) {
            ord.full_lr_split = splits;
            if (auto col = try_coloring(m, ord)) {
                if (auto viol = verify_bicoloring(m, ord, *col))
                    throw std::logic_error("2-nested certificate failed verification: condition " +
                                           std::to_string(viol->condition) + " " + viol->detail);
                res.two_nested = true;
                res.ordering = ord;
                res.coloring = *col;
                done = true;
                return false;
            }
        }
        return tried < cap;
    });
    if (done) return res;
    res.fail = find_two_nested_witness(m);
    if (!res.fail)
        res.fail = MatrixCheckFail{std::nullopt, std::nullopt,
                                   "no block bi-coloring under any suitable ordering"};
    return res;
}

std::optional<ConditionViolation> verify_bicoloring(const EnrichedMatrix& m,
                                                    const LROrdering& ord,
                                                    const BlockBicoloring& col) {
    if (int(ord.order.size()) != m.cols)
        return ConditionViolation{0, -1, -1, "ordering is not a column permutation"};
    std::vector<RowBlocks> bs(m.rows);
    for (int i = 0; i < m.rows; i++) {
        bs[i] = row_blocks(m, ord, i);
        if (!bs[i].valid)
            return ConditionViolation{0, i, -1, "row has no block shape under the ordering"};
    }
    struct Blk {
        int row;
        char side;
        int from, to;
        RowColor color;
    };
    std::vector<Blk> blocks;
    for (int i = 0; i < m.rows; i++) {
        bool is_lr = m.label[i] == RowLabel::LR;
        if (bs[i].has_l)
            blocks.push_back({i, 'L', bs[i].l_from, bs[i].l_to,
                              is_lr || m.label[i] == RowLabel::L ? col.left[i] : col.left[i]});
        if (bs[i].has_r)
            blocks.push_back({i, 'R', bs[i].r_from, bs[i].r_to,
                              is_lr ? col.right[i] : col.left[i]});
        if (bs[i].has_u) blocks.push_back({i, 'U', bs[i].u_from, bs[i].u_to, col.left[i]});
    }
    for (auto& b : blocks)
        if (b.color == RowColor::None)
            return ConditionViolation{0, b.row, -1, "uncolored block"};
    auto disj = [](const Blk& a, const Blk& b) { return a.to < b.from || b.to < a.from; };
    auto contains = [](const Blk& o, const Blk& i) { return o.from <= i.from && i.to <= o.to; };

    // 1: both blocks of an LR-row differ
    for (int i = 0; i < m.rows; i++)
        if (m.label[i] == RowLabel::LR && bs[i].has_l && bs[i].has_r &&
            col.left[i] == col.right[i])
            return ConditionViolation{1, i, -1, "LR-row blocks share a color"};
    // 2: blocks of a colored row carry the row color
    for (int i = 0; i < m.rows; i++) {
        if (m.color[i] == RowColor::None) continue;
        if ((bs[i].has_l || bs[i].has_u) && col.left[i] != m.color[i])
            return ConditionViolation{2, i, -1, "block contradicts the row pre-color"};
        if (bs[i].has_r && m.label[i] == RowLabel::LR && col.right[i] != m.color[i])
            return ConditionViolation{2, i, -1, "block contradicts the row pre-color"};
        if (bs[i].has_r && m.label[i] == RowLabel::R && col.left[i] != m.color[i])
            return ConditionViolation{2, i, -1, "block contradicts the row pre-color"};
    }
    for (auto& a : blocks)
        for (auto& b : blocks) {
            if (&a == &b) continue;
            bool a_lr = m.label[a.row] == RowLabel::LR;
            bool b_lr = m.label[b.row] == RowLabel::LR;
            // 3: LR block properly inside the same-side block of a labeled row
            if (a_lr && !b_lr && a.side == b.side && a.side != 'U' && a.row != b.row) {
                if (contains(b, a) && !(a.from == b.from && a.to == b.to) && a.color == b.color)
                    return ConditionViolation{3, a.row, b.row, "nested LR block shares the color"};
            }
            // 4: LR L-blocks disjoint from every R-block and symmetrically
            if (a_lr && a.side == 'L' && b.side == 'R' && a.row != b.row && !disj(a, b))
                return ConditionViolation{4, a.row, b.row, "LR L-block meets an R-block"};
            if (a_lr && a.side == 'R' && b.side == 'L' && a.row != b.row && !disj(a, b))
                return ConditionViolation{4, a.row, b.row, "LR R-block meets an L-block"};
            // 5: intersecting L-block and R-block differ
            if (a.side == 'L' && b.side == 'R' && !disj(a, b) && a.color == b.color)
                return ConditionViolation{5, a.row, b.row, "same-colored L and R blocks meet"};
            // 6: same-colored U-blocks nested or disjoint
            if (a.side == 'U' && b.side == 'U' && a.color == b.color && !disj(a, b) &&
                !contains(a, b) && !contains(b, a))
                return ConditionViolation{6, a.row, b.row, "same-colored U-blocks overlap"};
            // 7: same-colored L/R-block and U-block: disjoint or U inside
            if (a.side != 'U' && b.side == 'U' && a.color == b.color && !disj(a, b) &&
                !contains(a, b))
                return ConditionViolation{7, a.row, b.row, "U-block escapes a same-colored block"};
        }
    // 8: distinct-colored L-blocks of non-LR rows force an L-block on every LR-row
    {
        std::set<RowColor> lcolors, rcolors;
        for (int i = 0; i < m.rows; i++) {
            if (m.label[i] == RowLabel::L && bs[i].has_l) lcolors.insert(col.left[i]);
            if (m.label[i] == RowLabel::R && bs[i].has_r) rcolors.insert(col.left[i]);
        }
        for (int i = 0; i < m.rows; i++) {
            if (m.label[i] != RowLabel::LR) continue;
            if (lcolors.size() >= 2 && !bs[i].has_l)
                return ConditionViolation{8, i, -1, "LR-row lacks an L-block"};
            if (rcolors.size() >= 2 && !bs[i].has_r)
                return ConditionViolation{8, i, -1, "LR-row lacks an R-block"};
        }
    }
    // 9: overlapping LR-rows pair L with R colors
    for (int i = 0; i < m.rows; i++) {
        if (m.label[i] != RowLabel::LR || m.row_empty(i)) continue;
        for (int j = i + 1; j < m.rows; j++) {
            if (m.label[j] != RowLabel::LR || m.row_empty(j)) continue;
            if (!m.rows_overlap(i, j)) continue;
            if (bs[i].has_l && bs[j].has_r && col.left[i] != col.right[j])
                return ConditionViolation{9, i, j, "overlapping LR-rows mismatch L/R colors"};
            if (bs[j].has_l && bs[i].has_r && col.left[j] != col.right[i])
                return ConditionViolation{9, i, j, "overlapping LR-rows mismatch L/R colors"};
        }
    }
    return std::nullopt;
}

std::optional<MatrixCheckFail> find_two_nested_witness(const EnrichedMatrix& m) {
    if (auto w = find_admissibility_witness(m))
        return MatrixCheckFail{w, std::nullopt, "not admissible"};
    if (auto w = find_m_group_witness(m))
        return MatrixCheckFail{w, std::nullopt, "contains M0/M_II(4)/M_V/S0"};
    {
        TaggedMatrix t = tagged(a_star(m));
        auto c1p = has_c1p(t.a);
        if (!c1p.order)
            if (auto w = find_tagged_witness(t))
                return MatrixCheckFail{w, std::nullopt, "not LR-orderable"};
    }
    if (auto g = find_precolor_gem(m))
        return MatrixCheckFail{std::nullopt, g, "pre-coloring gem"};
    // F families close the characterization
    int r = m.rows, c = m.cols;
    if (r >= 3 && c >= 5)
        if (auto w = contains_family(m, pattern_f0()))
            return MatrixCheckFail{w, std::nullopt, "contains F0"};
    if (r >= 3 && c >= 4)
        if (auto w = contains_family(m, pattern_f0_prime()))
            return MatrixCheckFail{w, std::nullopt, "contains F0'"};
    if (r >= 3 && c >= 3)
        if (auto w = contains_family(m, pattern_f0_doubleprime()))
            return MatrixCheckFail{w, std::nullopt, "contains F0''"};
    for (int k = 5; k <= r; k += 2) {
        if (k - 1 <= c)
            if (auto w = contains_family(m, pattern_f1(k)))
                return MatrixCheckFail{w, std::nullopt, "contains F1"};
        if (k <= c)
            if (auto w = contains_family(m, pattern_f2(k)))
                return MatrixCheckFail{w, std::nullopt, "contains F2"};
        if (k - 2 <= c)
            if (auto w = contains_family(m, pattern_f1_prime(k)))
                return MatrixCheckFail{w, std::nullopt, "contains F1'"};
        if (k - 1 <= c)
            if (auto w = contains_family(m, pattern_f2_prime(k)))
                return MatrixCheckFail{w, std::nullopt, "contains F2'"};
    }
    return std::nullopt;
}

} // namespace circletk
