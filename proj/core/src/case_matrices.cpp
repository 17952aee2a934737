#include "circletk/recognizer.hpp"

#include <algorithm>
#include <stdexcept>

namespace circletk {

namespace {

int mod1(int x, int m) { return ((x - 1) % m + m) % m + 1; } // 1-based modulo

// Pre-color of the row of a cell (i,j) in the matrix of its end class `c`.
RowColor end_color(const std::string& kind, const SCellEntry& cell, int c) {
    int i = cell.i, j = cell.j;
    if (i == j) return RowColor::None;
    if (kind == "tent") {
        if (c % 2 == 1) return c == i ? RowColor::Red : RowColor::Blue;
        int other = c == i ? j : i;
        bool near = other == mod1(c + 1, 6) || other == mod1(c - 1, 6);
        return near ? RowColor::Red : RowColor::Blue;
    }
    if (kind == "4-tent") {
        bool red = false;
        switch (c) {
            case 1: red = (i == 1 && j == 2); break;
            case 2: red = (j == 2 && i == 1); break;
            case 3: red = (i == 3 && (j == 5 || j == 6)) || (j == 3 && i == 1); break;
            case 4: red = (i == 4 && j == 5); break;
            case 5: red = (j == 5 && i == 4); break;
            case 6: red = (i == 6 && (j == 1 || j == 4 || j == 5)) || (j == 6 && (i == 3 || i == 4));
                break;
        }
        return red ? RowColor::Red : RowColor::Blue;
    }
    if (kind == "co-4-tent") {
        bool red = false;
        switch (c) {
            case 1: red = (i == 1 && j == 2); break;
            case 2: red = (j == 2 && i == 1); break;
            case 3: red = (j == 3 && i == 1) || (i == 3 && j == 4); break;
            case 4: red = (i == 4 && j == 5); break;
            case 5: red = (j == 5 && i == 4); break;
            case 6: red = (i == 7 || i == 8); break;
            case 7: red = false; break;
            case 8: red = (j == 3 || j == 6 || j == 7); break;
        }
        return red ? RowColor::Red : RowColor::Blue;
    }
    throw std::logic_error("end_color: unknown case kind");
}

// The per-class colors encode the circle side relative to each class portion;
// these classes read flipped when a single global side labeling is needed.
bool side_flipped(const std::string& kind, int c) {
    if (kind == "tent") return c == 3 || c == 4;
    if (kind == "co-4-tent") return c == 4 || c == 5;
    return false;
}

// Global side of an end: true = the side grouped into the red union matrix.
bool global_red(const std::string& kind, const SCellEntry& cell, int c) {
    bool red = end_color(kind, cell, c) == RowColor::Red;
    return side_flipped(kind, c) ? !red : red;
}

} // namespace

CaseMatrices build_case_matrices(const CasePartition& cp, const Graph& g) {
    CaseMatrices cm;
    int m = cp.num_classes;
    cm.per_class.resize(m);
    cm.row_vertex.resize(m);
    cm.col_vertex.resize(m);

    bool co_case = cp.kind == "co-4-tent";
    for (int c = 1; c <= m; c++) {
        std::vector<std::tuple<int, RowLabel, RowColor>> rows;
        for (auto& [v, cell] : cp.s_cell) {
            if (cell.i == c && cell.j == c) {
                rows.push_back({v, RowLabel::U, RowColor::None});
            } else if (cell.i == c && !cell.complete_i) {
                RowLabel lab = co_case ? RowLabel::L : RowLabel::R;
                rows.push_back({v, lab, end_color(cp.kind, cell, c)});
            } else if (cell.j == c && !cell.complete_j) {
                RowLabel lab = co_case ? RowLabel::R : RowLabel::L;
                rows.push_back({v, lab, end_color(cp.kind, cell, c)});
            }
        }
        if (c == cp.gap_class) {
            for (int v : cp.lr_vertices) rows.push_back({v, RowLabel::LR, RowColor::None});
            // all-zero LR-rows share one color, fixed by the labeled rows seen
            bool red_l = false, blue_r = false, blue_l = false, red_r = false;
            for (auto& [v, lab, col] : rows) {
                (void)v;
                if (lab == RowLabel::L && col == RowColor::Red) red_l = true;
                if (lab == RowLabel::R && col == RowColor::Blue) blue_r = true;
                if (lab == RowLabel::L && col == RowColor::Blue) blue_l = true;
                if (lab == RowLabel::R && col == RowColor::Red) red_r = true;
            }
            RowColor empty_color = RowColor::Blue;
            if ((blue_l || red_r) && !(red_l || blue_r)) empty_color = RowColor::Red;
            for (int v : cp.empty_lr_vertices) rows.push_back({v, RowLabel::LR, empty_color});
        }
        EnrichedMatrix mtx(int(rows.size()), int(cp.k_cells[c - 1].size()));
        cm.col_vertex[c - 1] = cp.k_cells[c - 1];
        for (size_t r = 0; r < rows.size(); r++) {
            auto [v, lab, col] = rows[r];
            cm.row_vertex[c - 1].push_back(v);
            mtx.label[r] = lab;
            mtx.color[r] = col;
            for (size_t q = 0; q < cp.k_cells[c - 1].size(); q++)
                mtx.a[r][q] = g.has_edge(v, cp.k_cells[c - 1][q]) ? 1 : 0;
        }
        if (auto err = mtx.invariant_violation())
            throw std::logic_error("case matrix invariant: " + *err);
        cm.per_class[c - 1] = mtx;
    }

    // union matrices over all K columns plus the two tag slots (c_L first,
    // c_R last)
    std::vector<int> all_k;
    for (int c = 1; c <= m; c++)
        for (int k : cp.k_cells[c - 1]) all_k.push_back(k);
    std::vector<int> class_of_col(all_k.size());
    {
        int idx = 0;
        for (int c = 1; c <= m; c++)
            for (size_t q = 0; q < cp.k_cells[c - 1].size(); q++) class_of_col[idx++] = c;
    }
    int width = int(all_k.size()) + 2;
    auto full_row = [&](int v) {
        std::vector<uint8_t> row(width, 0);
        for (size_t q = 0; q < all_k.size(); q++)
            row[q + 1] = g.has_edge(v, all_k[q]) ? 1 : 0;
        return row;
    };
    auto range_row = [&](int v, int lo_class, int hi_class, bool tag_l, bool tag_r) {
        std::vector<uint8_t> row(width, 0);
        for (size_t q = 0; q < all_k.size(); q++)
            if (class_of_col[q] >= lo_class && class_of_col[q] <= hi_class)
                row[q + 1] = g.has_edge(v, all_k[q]) ? 1 : 0;
        if (tag_l) row[0] = 1;
        if (tag_r) row[width - 1] = 1;
        return row;
    };
    for (auto& [v, cell] : cp.s_cell) {
        if (cell.i == cell.j) continue;
        bool side_i = global_red(cp.kind, cell, cell.i);
        bool side_j = global_red(cp.kind, cell, cell.j);
        if (cell.i < cell.j) {
            // sides computed from either end must agree when neither end is
            // pinned by a completeness coincidence
            if (!cell.complete_i && !cell.complete_j && side_i != side_j)
                throw std::logic_error("case matrices: inconsistent side tables for a cell");
            bool red = cell.complete_i && !cell.complete_j ? side_j : side_i;
            auto& mat = red ? cm.union_red : cm.union_blue;
            auto& rows = red ? cm.union_red_rows : cm.union_blue_rows;
            mat.push_back(full_row(v));
            rows.push_back(v);
        } else {
            // wrap cell: the class-i..m half carries c_R, the 1..j half c_L,
            // and the two halves sit on opposite sides
            bool red_i = cell.complete_i && !cell.complete_j ? !side_j : side_i;
            bool red_j = !red_i;
            if (!cell.complete_i && !cell.complete_j && side_i == side_j)
                throw std::logic_error("case matrices: wrap cell with equal side tables");
            {
                auto& mat = red_i ? cm.union_red : cm.union_blue;
                auto& rows = red_i ? cm.union_red_rows : cm.union_blue_rows;
                mat.push_back(range_row(v, cell.i, m, false, true));
                rows.push_back(v);
            }
            {
                auto& mat = red_j ? cm.union_red : cm.union_blue;
                auto& rows = red_j ? cm.union_red_rows : cm.union_blue_rows;
                mat.push_back(range_row(v, 1, cell.j, true, false));
                rows.push_back(v);
            }
            auto& fmat = red_i ? cm.union_rb : cm.union_br;
            auto& frows = red_i ? cm.union_rb_rows : cm.union_br_rows;
            fmat.push_back(full_row(v));
            frows.push_back(v);
        }
    }
    return cm;
}

} // namespace circletk
