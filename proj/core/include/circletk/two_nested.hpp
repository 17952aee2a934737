#ifndef CIRCLETK_TWO_NESTED_HPP
#define CIRCLETK_TWO_NESTED_HPP

#include "circletk/c1p.hpp"
#include "circletk/enriched_matrix.hpp"
#include "circletk/patterns.hpp"

#include <optional>
#include <string>
#include <vector>

namespace circletk {

// Column ordering certificate for an enriched matrix. Columns are ordered by
// `order`; all-ones LR-rows additionally carry a chosen split point
// (positions [0, split) form the L-block).
struct LROrdering {
    std::vector<int> order;
    std::vector<int> full_lr_split; // per row; -1 when not an all-ones LR-row
    bool suitable = false;
};

// Block extents of one row in ordered position space.
struct RowBlocks {
    bool valid = true;      // 1s shaped correctly for the label under the order
    bool has_l = false, has_r = false, has_u = false;
    int l_from = -1, l_to = -1; // inclusive positions
    int r_from = -1, r_to = -1;
    int u_from = -1, u_to = -1;
};
RowBlocks row_blocks(const EnrichedMatrix& m, const LROrdering& ord, int row);

bool is_lr_ordering(const EnrichedMatrix& m, const std::vector<int>& order);
bool is_suitable(const EnrichedMatrix& m, const LROrdering& ord);

struct BlockBicoloring {
    // per row: color of the L-side block (or the row's only block) and of the
    // R-side block of LR-rows; None when the block is absent
    std::vector<RowColor> left;
    std::vector<RowColor> right;
};

struct GemWitness {
    std::string kind; // "monochromatic gem", "monochromatic weak gem",
                      // "badly-colored doubly-weak gem", "0-gem"
    int row1 = -1, row2 = -1;
    std::vector<int> cols;
};

struct MatrixCheckFail {
    std::optional<PatternWitness> pattern;
    std::optional<GemWitness> gem;
    std::string detail;
};

// Admissible = {D, S, P}-free (including dual matrices).
std::optional<PatternWitness> find_admissibility_witness(const EnrichedMatrix& m);
inline bool is_admissible(const EnrichedMatrix& m) {
    return !find_admissibility_witness(m).has_value();
}

struct LROrderResult {
    std::optional<LROrdering> ordering;      // not necessarily suitable
    std::optional<PatternWitness> witness;   // Tucker or M2'..M5'' in tagged A*
};
LROrderResult is_lr_orderable(const EnrichedMatrix& m);

// M0 / M_II(4) / M_V / S0(k) scan over the enriched matrix itself.
std::optional<PatternWitness> find_m_group_witness(const EnrichedMatrix& m);

// Monochromatic gem among the pre-colored rows.
std::optional<GemWitness> find_precolor_gem(const EnrichedMatrix& m);

struct PartialCheck {
    bool ok = false;
    std::optional<MatrixCheckFail> fail;
};
PartialCheck is_partially_2nested(const EnrichedMatrix& m);

// Requires the partial checks to hold; enumerates C1P orders of the tagged A*
// until a suitable one appears.
std::optional<LROrdering> find_suitable_lr_ordering(const EnrichedMatrix& m);

// A+ with provenance.
struct APlusRow {
    int source_row;
    enum Part { Whole, LPart, RPart } part = Whole;
};
struct APlusResult {
    EnrichedMatrix plus;              // columns ordered by ord.order, link columns appended
    std::vector<APlusRow> row_origin; // per plus row
    std::vector<int> col_origin;      // per plus column: source column, or -1 for a link column
    std::vector<int> link_owner;      // per plus column: owning source row for link columns, else -1
};
APlusResult a_plus(const EnrichedMatrix& m, const LROrdering& ord);

struct TwoNestedResult {
    bool two_nested = false;
    LROrdering ordering;
    BlockBicoloring coloring;
    std::optional<MatrixCheckFail> fail;
};
TwoNestedResult is_2nested(const EnrichedMatrix& m);

// Literal check of the nine block bi-coloring conditions; returns the violated
// condition id (1..9, 0 for a malformed ordering/blocks) or nullopt.
struct ConditionViolation {
    int condition = 0;
    int row1 = -1, row2 = -1;
    std::string detail;
};
std::optional<ConditionViolation> verify_bicoloring(const EnrichedMatrix& m,
                                                    const LROrdering& ord,
                                                    const BlockBicoloring& col);

// Full witness hunt across every family of the characterization (used when the
// coloring stage fails and by the CLI).
std::optional<MatrixCheckFail> find_two_nested_witness(const EnrichedMatrix& m);

} // namespace circletk

#endif
