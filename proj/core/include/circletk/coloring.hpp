#ifndef CIRCLETK_COLORING_HPP
#define CIRCLETK_COLORING_HPP

#include "circletk/enriched_matrix.hpp"
#include "circletk/graph.hpp"

#include <optional>
#include <vector>

namespace circletk {

// Obstructions to extending a partial proper 2-coloring, in the order:
// 1 even path (vertex count) with same-colored endpoints, only they colored
// 2 odd path (vertex count) with distinct-colored endpoints, only they colored
// 3 uncolored induced odd cycle
// 4 induced odd cycle with exactly one colored vertex
// 5 triangle with exactly one uncolored vertex
struct ColoringObstruction {
    int kind = 0;
    std::vector<int> vertices; // path or cycle, in order
};

struct ColoringOutcome {
    std::optional<std::vector<RowColor>> coloring;
    std::optional<ColoringObstruction> obstruction;
};

// Throws std::invalid_argument when the precoloring itself is improper.
ColoringOutcome extend_partial_2coloring(const Graph& g, const std::vector<RowColor>& precolor);

} // namespace circletk

#endif
