#include "circletk/enriched_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace circletk {

std::string to_string(RowLabel l) {
    switch (l) {
        case RowLabel::U: return "U";
        case RowLabel::L: return "L";
        case RowLabel::R: return "R";
        case RowLabel::LR: return "LR";
    }
    return "?";
}

std::string to_string(RowColor c) {
    switch (c) {
        case RowColor::None: return "-";
        case RowColor::Red: return "red";
        case RowColor::Blue: return "blue";
    }
    return "?";
}

bool EnrichedMatrix::row_empty(int i) const {
    for (uint8_t v : a[i])
        if (v) return false;
    return true;
}

bool EnrichedMatrix::row_full(int i) const {
    for (uint8_t v : a[i])
        if (!v) return false;
    return true;
}

int EnrichedMatrix::row_ones(int i) const {
    int c = 0;
    for (uint8_t v : a[i]) c += v;
    return c;
}

bool EnrichedMatrix::rows_disjoint(int i, int j) const {
    for (int c = 0; c < cols; c++)
        if (a[i][c] && a[j][c]) return false;
    return true;
}

bool EnrichedMatrix::row_contained(int i, int j) const {
    for (int c = 0; c < cols; c++)
        if (a[i][c] && !a[j][c]) return false;
    return true;
}

bool EnrichedMatrix::rows_nested(int i, int j) const {
    return row_contained(i, j) || row_contained(j, i);
}

bool EnrichedMatrix::rows_overlap(int i, int j) const {
    return !rows_disjoint(i, j) && !rows_nested(i, j);
}

std::optional<std::string> EnrichedMatrix::invariant_violation() const {
    RowColor empty_lr_color = RowColor::None;
    for (int i = 0; i < rows; i++) {
        if (color[i] == RowColor::None) continue;
        bool colorable = label[i] == RowLabel::L || label[i] == RowLabel::R ||
                         (label[i] == RowLabel::LR && row_empty(i));
        if (!colorable)
            return "row " + std::to_string(i) + " is colored but is neither an L-row, an R-row nor an all-zero LR-row";
        if (label[i] == RowLabel::LR) {
            if (empty_lr_color == RowColor::None)
                empty_lr_color = color[i];
            else if (empty_lr_color != color[i])
                return "all-zero LR-rows carry two distinct colors";
        }
    }
    return std::nullopt;
}

RowSpan row_span(const EnrichedMatrix& m, int i) {
    RowSpan s;
    for (int c = 0; c < m.cols; c++)
        if (m.a[i][c]) {
            if (s.empty) {
                s.empty = false;
                s.l = c;
            }
            s.r = c;
        }
    return s;
}

EnrichedMatrix parse_enriched_matrix(const std::string& text) {
    std::istringstream in(text);
    int r, c;
    if (!(in >> r >> c)) throw std::runtime_error("enriched matrix: missing 'rows cols' header");
    if (r < 0 || c < 0) throw std::runtime_error("enriched matrix: negative dimensions");
    EnrichedMatrix m(r, c);
    for (int i = 0; i < r; i++) {
        std::string lab, col, bits;
        if (!(in >> lab >> col >> bits))
            throw std::runtime_error("enriched matrix: truncated at row " + std::to_string(i));
        if (lab == "U") m.label[i] = RowLabel::U;
        else if (lab == "L") m.label[i] = RowLabel::L;
        else if (lab == "R") m.label[i] = RowLabel::R;
        else if (lab == "LR") m.label[i] = RowLabel::LR;
        else throw std::runtime_error("enriched matrix: bad label '" + lab + "'");
        if (col == "-") m.color[i] = RowColor::None;
        else if (col == "red") m.color[i] = RowColor::Red;
        else if (col == "blue") m.color[i] = RowColor::Blue;
        else throw std::runtime_error("enriched matrix: bad color '" + col + "'");
        if (int(bits.size()) != c)
            throw std::runtime_error("enriched matrix: row " + std::to_string(i) + " has wrong width");
        for (int j = 0; j < c; j++) {
            if (bits[j] != '0' && bits[j] != '1')
                throw std::runtime_error("enriched matrix: bad bit in row " + std::to_string(i));
            m.a[i][j] = bits[j] == '1';
        }
    }
    if (auto err = m.invariant_violation())
        throw std::runtime_error("enriched matrix: " + *err);
    return m;
}

std::string format_enriched_matrix(const EnrichedMatrix& m) {
    std::ostringstream out;
    out << m.rows << " " << m.cols << "\n";
    for (int i = 0; i < m.rows; i++) {
        out << to_string(m.label[i]) << " " << to_string(m.color[i]) << " ";
        for (int j = 0; j < m.cols; j++) out << int(m.a[i][j]);
        out << "\n";
    }
    return out.str();
}

EnrichedMatrix dual(const EnrichedMatrix& m) {
    EnrichedMatrix d = m;
    for (int i = 0; i < m.rows; i++) {
        if (m.label[i] == RowLabel::L) d.label[i] = RowLabel::R;
        else if (m.label[i] == RowLabel::R) d.label[i] = RowLabel::L;
    }
    return d;
}

EnrichedMatrix a_star(const EnrichedMatrix& m) {
    EnrichedMatrix s(m.rows + 2, m.cols);
    for (int i = 0; i < m.rows; i++) {
        if (m.label[i] == RowLabel::LR) {
            for (int j = 0; j < m.cols; j++) s.a[i][j] = !m.a[i][j];
            s.label[i] = RowLabel::U; // complement rows are plain C1P constraints
        } else {
            s.a[i] = m.a[i];
            s.label[i] = m.label[i];
            s.color[i] = m.color[i];
        }
    }
    for (int j = 0; j < m.cols; j++) {
        s.a[m.rows][j] = 1;
        s.a[m.rows + 1][j] = 1;
    }
    s.label[m.rows] = RowLabel::L;
    s.label[m.rows + 1] = RowLabel::R;
    return s;
}

TaggedMatrix tagged(const EnrichedMatrix& m) {
    TaggedMatrix t;
    t.rows = m.rows;
    t.cols = m.cols + 2;
    t.tag_l = 0;
    t.tag_r = m.cols + 1;
    t.a.assign(m.rows, std::vector<uint8_t>(m.cols + 2, 0));
    for (int i = 0; i < m.rows; i++) {
        t.a[i][0] = (m.label[i] == RowLabel::L || m.label[i] == RowLabel::LR) ? 1 : 0;
        t.a[i][m.cols + 1] = (m.label[i] == RowLabel::R || m.label[i] == RowLabel::LR) ? 1 : 0;
        for (int j = 0; j < m.cols; j++) t.a[i][j + 1] = m.a[i][j];
    }
    return t;
}

EnrichedMatrix submatrix(const EnrichedMatrix& m, const std::vector<int>& row_sel,
                         const std::vector<int>& col_sel) {
    EnrichedMatrix s(int(row_sel.size()), int(col_sel.size()));
    for (size_t i = 0; i < row_sel.size(); i++) {
        s.label[i] = m.label[row_sel[i]];
        s.color[i] = m.color[row_sel[i]];
        for (size_t j = 0; j < col_sel.size(); j++) s.a[i][j] = m.a[row_sel[i]][col_sel[j]];
    }
    return s;
}

EnrichedMatrix permute_rows(const EnrichedMatrix& m, const std::vector<int>& order) {
    std::vector<int> cols(m.cols);
    for (int j = 0; j < m.cols; j++) cols[j] = j;
    return submatrix(m, order, cols);
}

EnrichedMatrix permute_cols(const EnrichedMatrix& m, const std::vector<int>& order) {
    std::vector<int> rows(m.rows);
    for (int i = 0; i < m.rows; i++) rows[i] = i;
    return submatrix(m, rows, order);
}

} // namespace circletk
