#ifndef CIRCLETK_COMPLETION_HPP
#define CIRCLETK_COMPLETION_HPP

#include "circletk/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace circletk {

struct IntervalCheck {
    bool interval = false;
    std::vector<int> hole; // when chordality fails
    std::optional<std::array<int, 3>> at;
};
IntervalCheck is_interval(const Graph& g);

struct ProperIntervalCheck {
    bool proper_interval = false;
    std::vector<int> hole;
    std::optional<std::array<int, 3>> at;
    std::vector<int> claw; // center first
};
ProperIntervalCheck is_proper_interval(const Graph& g);

struct MinimalSeparator {
    std::vector<int> separator;
    std::vector<std::vector<int>> full_components; // components C with N(C) = S
    std::vector<std::vector<int>> components;      // all components of G - S
};
// All minimal separators with their components (exhaustive; desk scale).
std::vector<MinimalSeparator> minimal_separators(const Graph& g);

// Nucleus of a separator side: vertices of the component with a neighbor in S.
std::vector<int> nucleus(const Graph& g, const std::vector<int>& separator,
                         const std::vector<int>& component);

// Ordering of the nucleus by inclusion of S-neighborhoods, or nullopt.
std::optional<std::vector<int>> nuclear_ordering(const Graph& g, const std::vector<int>& nucleus_set,
                                                 const std::vector<int>& separator);

// Ordering of S simultaneously decreasing toward A1 and increasing toward A2.
std::optional<std::vector<int>> bi_ordering(const Graph& g, const std::vector<int>& separator,
                                            const std::vector<int>& a1, const std::vector<int>& a2);

struct CompletionInstance {
    Graph g;
    Graph h;                               // supergraph on the same vertices
    std::vector<std::pair<int, int>> fill; // E(h) \ E(g), sorted
};
CompletionInstance make_completion(const Graph& g, const Graph& h); // validates E(g) subset E(h)

struct FillEdgeType {
    int type = 0; // 1..4
    std::vector<int> separator; // supporting evidence for types I-III
    std::vector<int> nucleus_set;
};
FillEdgeType classify_fill_edge(const CompletionInstance& inst, std::pair<int, int> e);

struct NecessaryConditionReport {
    bool pass = false;
    std::optional<std::pair<int, int>> failing_edge;
    int failing_type = 0;
};
NecessaryConditionReport check_necessary_condition(const CompletionInstance& inst);

struct MinimalityReport {
    bool minimal = false;
    std::vector<std::pair<int, int>> removable; // proper subset keeping H proper interval
};
MinimalityReport is_minimal_completion(const CompletionInstance& inst, int budget = 20);

} // namespace circletk

#endif
