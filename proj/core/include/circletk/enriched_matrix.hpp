#ifndef CIRCLETK_ENRICHED_MATRIX_HPP
#define CIRCLETK_ENRICHED_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace circletk {

enum class RowLabel : uint8_t { U, L, R, LR };
enum class RowColor : uint8_t { None, Red, Blue };

std::string to_string(RowLabel l);
std::string to_string(RowColor c);

// 0/1 matrix whose rows carry U/L/R/LR labels and optional red/blue colors.
// Only L-rows, R-rows and all-zero LR-rows may be colored; all colored
// all-zero LR-rows share one color.
struct EnrichedMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<uint8_t>> a;
    std::vector<RowLabel> label;
    std::vector<RowColor> color;

    EnrichedMatrix() = default;
    EnrichedMatrix(int r, int c)
        : rows(r), cols(c), a(r, std::vector<uint8_t>(c, 0)),
          label(r, RowLabel::U), color(r, RowColor::None) {}

    bool row_empty(int i) const;
    bool row_full(int i) const;
    int row_ones(int i) const;
    // set-relations between rows viewed as column sets
    bool rows_disjoint(int i, int j) const;
    bool row_contained(int i, int j) const; // row i subset of row j
    bool rows_nested(int i, int j) const;
    bool rows_overlap(int i, int j) const; // non-disjoint, non-nested

    // invariant check; returns an error message or nullopt
    std::optional<std::string> invariant_violation() const;
};

struct RowSpan {
    bool empty = true;
    int l = -1; // first column with a 1
    int r = -1; // last column with a 1
};
RowSpan row_span(const EnrichedMatrix& m, int i);

// Text format: header "rows cols", then per row: label (U|L|R|LR),
// color (-|red|blue), and the 0/1 string.
EnrichedMatrix parse_enriched_matrix(const std::string& text);
std::string format_enriched_matrix(const EnrichedMatrix& m);

EnrichedMatrix dual(const EnrichedMatrix& m); // L <-> R, involution

// A*: LR-rows replaced by their (unlabeled, uncolored) complements; two
// all-ones rows appended, labeled L and R.
EnrichedMatrix a_star(const EnrichedMatrix& m);

// Tagged matrix: column c_L first (1 on rows labeled L or LR), c_R last
// (1 on rows labeled R or LR).
struct TaggedMatrix {
    std::vector<std::vector<uint8_t>> a; // rows x (cols + 2)
    int rows = 0;
    int cols = 0; // including the two tag columns
    int tag_l = 0;
    int tag_r = 0;
};
TaggedMatrix tagged(const EnrichedMatrix& m);

EnrichedMatrix submatrix(const EnrichedMatrix& m, const std::vector<int>& row_sel,
                         const std::vector<int>& col_sel);
EnrichedMatrix permute_rows(const EnrichedMatrix& m, const std::vector<int>& order);
EnrichedMatrix permute_cols(const EnrichedMatrix& m, const std::vector<int>& order);

} // namespace circletk

#endif
