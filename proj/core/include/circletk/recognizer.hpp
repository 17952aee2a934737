#ifndef CIRCLETK_RECOGNIZER_HPP
#define CIRCLETK_RECOGNIZER_HPP

#include "circletk/graph.hpp"
#include "circletk/oracle.hpp"
#include "circletk/two_nested.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace circletk {

struct BaseSubgraph {
    std::string kind; // "tent", "4-tent", "co-4-tent", "net", "none"
    std::vector<int> embedding;
};
// Priority tent > 4-tent > co-4-tent > net.
BaseSubgraph find_base_subgraph(const Graph& g, const SplitPartition& p);

struct SCellEntry {
    int i = 0, j = 0; // 1-based endpoint classes, window i -> j clockwise
    bool complete_i = false, complete_j = false;
};

struct PartitionObstruction {
    std::string reason;
    int vertex = -1;
};

struct CasePartition {
    std::string kind;
    int num_classes = 0;
    int gap_class = 0; // class whose matrix carries LR-rows, 0 when none
    std::vector<std::vector<int>> k_cells;   // [class-1]
    std::map<int, SCellEntry> s_cell;        // vertex -> cell
    std::vector<int> lr_vertices;            // wrap-complete rows of the gap class
    std::vector<int> empty_lr_vertices;      // complete except anticomplete at gap
    std::vector<int> isolated;
    std::optional<PartitionObstruction> obstruction;
    bool needs_decomposition = false; // co-4-tent primality branch
    int decompose_class = 0;          // factor across this class
};

CasePartition partition_tent(const Graph& g, const SplitPartition& p,
                             const std::vector<int>& emb);
CasePartition partition_4tent(const Graph& g, const SplitPartition& p,
                              const std::vector<int>& emb);
CasePartition partition_co4tent(const Graph& g, const SplitPartition& p,
                                const std::vector<int>& emb);
CasePartition partition_net(const Graph& g, const SplitPartition& p,
                            const std::vector<int>& emb);

struct CaseMatrices {
    std::vector<EnrichedMatrix> per_class;    // [class-1]
    std::vector<std::vector<int>> row_vertex; // per class
    std::vector<std::vector<int>> col_vertex; // per class (fixed input order)
    Matrix01 union_red, union_blue, union_rb, union_br;
    std::vector<int> union_red_rows, union_blue_rows, union_rb_rows, union_br_rows;
};
CaseMatrices build_case_matrices(const CasePartition& cp, const Graph& g);

struct RecognizeOptions {
    int oracle_budget = 9;
};

struct CircleCertificate {
    std::string verdict; // "circle", "not_circle"
    std::optional<ChordModel> model;
    std::string model_note; // "model unavailable" cases
    std::string witness_family;
    int witness_k = 0;
    std::vector<int> witness_vertices;
};

struct NotSplitError : std::runtime_error {
    SplitObstruction witness;
    explicit NotSplitError(SplitObstruction w)
        : std::runtime_error("input graph is not split (" + w.kind + ")"), witness(std::move(w)) {}
};

CircleCertificate recognize(const Graph& g, const RecognizeOptions& opts = {});

// Geometric chord-model assembly from the per-class orderings; the result is
// always checked with verify_chord_model before being returned.
std::optional<ChordModel> build_circle_model(const Graph& g, const SplitPartition& p,
                                             const CasePartition& cp, const CaseMatrices& cm,
                                             const std::vector<LROrdering>& orders);

// Ordered catalog search for a verified forbidden induced subgraph.
std::optional<std::pair<std::string, std::vector<int>>> find_forbidden_witness(const Graph& g);

} // namespace circletk

#endif
