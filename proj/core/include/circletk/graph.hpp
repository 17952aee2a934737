#ifndef CIRCLETK_GRAPH_HPP
#define CIRCLETK_GRAPH_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace circletk {

// Simple undirected graph over dense vertex ids 0..n-1.
// Adjacency is kept as bitset rows; irreflexive and symmetric by construction.
struct Graph {
    int n = 0;
    std::vector<std::vector<uint64_t>> adj; // n rows of ceil(n/64) words

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(n_, std::vector<uint64_t>((n_ + 63) / 64, 0)) {}

    bool has_edge(int a, int b) const {
        return (adj[a][b >> 6] >> (b & 63)) & 1;
    }
    void add_edge(int a, int b) {
        if (a == b) throw std::invalid_argument("loop edge");
        adj[a][b >> 6] |= uint64_t(1) << (b & 63);
        adj[b][a >> 6] |= uint64_t(1) << (a & 63);
    }
    void remove_edge(int a, int b) {
        adj[a][b >> 6] &= ~(uint64_t(1) << (b & 63));
        adj[b][a >> 6] &= ~(uint64_t(1) << (a & 63));
    }
    void toggle_edge(int a, int b) {
        adj[a][b >> 6] ^= uint64_t(1) << (b & 63);
        adj[b][a >> 6] ^= uint64_t(1) << (a & 63);
    }
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const; // lexicographically sorted

    bool operator==(const Graph& o) const { return n == o.n && adj == o.adj; }
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Edge-list text format: first token n, then lines "u v".
// Duplicate edges collapse; loops and out-of-range ids are parse errors.
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);
std::string graph_to_json(const Graph& g);

Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);
Graph local_complement(const Graph& g, int v);
Graph disjoint_union(const Graph& a, const Graph& b);

bool is_connected(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);

// Split partition certificate: K a clique, S independent, K disjoint-union S = V.
struct SplitPartition {
    std::vector<int> clique;      // K
    std::vector<int> independent; // S
};

struct SplitObstruction {
    std::string kind;          // "2K2", "C4" or "C5"
    std::vector<int> vertices; // the induced copy, in pattern order
};

struct SplitResult {
    std::optional<SplitPartition> partition;
    std::optional<SplitObstruction> obstruction;
    bool is_split() const { return partition.has_value(); }
};

// Deterministic: largest clique side, ties by lexicographically smallest vertex set.
SplitResult split_partition(const Graph& g);

// Injective map preserving adjacency and non-adjacency; first witness in
// lexicographic order of the image tuple, or nullopt.
std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& pattern);

struct ChordalityResult {
    bool chordal = false;
    std::vector<int> elimination_order; // perfect elimination ordering when chordal
    std::vector<int> hole;              // induced cycle of length >= 4 otherwise
};
ChordalityResult is_chordal(const Graph& g);

// Pairwise nonadjacent triple such that each pair is joined by a path avoiding
// the closed neighborhood of the third.
std::optional<std::array<int, 3>> find_asteroidal_triple(const Graph& g);

// 0/1 matrix of S x K adjacencies under the given orders.
std::vector<std::vector<uint8_t>> adjacency_matrix_sk(const Graph& g,
                                                      const std::vector<int>& row_order,
                                                      const std::vector<int>& col_order);

// Canonical adjacency string under vertex relabeling (exact, for small n).
std::string canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

} // namespace circletk

#endif
