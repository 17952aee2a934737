#ifndef CIRCLETK_REFCHECK_HPP
#define CIRCLETK_REFCHECK_HPP

#include "circletk/coloring.hpp"
#include "circletk/enriched_matrix.hpp"
#include "circletk/graph.hpp"

#include <cstdint>
#include <vector>

namespace circletk::refcheck {

// Independent brute-force reference procedures used by the verification
// suites. These deliberately avoid the algorithms and helpers of the main
// implementation paths they are checked against.

// Literal 2x3 zero-gem submatrix scan.
bool has_zero_gem(const std::vector<std::vector<uint8_t>>& m);

// Exhaustive proper-2-coloring extension over all assignments of the
// uncolored vertices.
bool coloring_extendable_exhaustive(const Graph& g, const std::vector<RowColor>& precolor);

// Exhaustive 2-nested decision: all column permutations, all-ones LR splits
// and block bi-colorings, checked against the nine conditions written out
// literally.
bool two_nested_exhaustive(const EnrichedMatrix& m);

// Direct consecutiveness check of an explicit ordering.
bool ordering_consecutive(const std::vector<std::vector<uint8_t>>& m, const std::vector<int>& order);

} // namespace circletk::refcheck

#endif
