#ifndef CIRCLETK_FAMILIES_HPP
#define CIRCLETK_FAMILIES_HPP

#include "circletk/c1p.hpp"
#include "circletk/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace circletk {

// Split-graph realization of a 0/1 matrix: one clique vertex per column
// (vertices 0..cols-1), one independent vertex per row (cols..cols+rows-1).
Graph split_graph_of(const Matrix01& m);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph wheel(int k);   // C_k plus a hub; hub is vertex k
Graph bw3();          // C6 plus a hub adjacent to alternating vertices
Graph co_c6();
Graph claw();
Graph tent();         // 3-sun
Graph four_tent();
Graph co_four_tent();
Graph net();
Graph join_k1(const Graph& g); // g plus a universal vertex (the last one)

Graph k_sun(int k);             // clique 0..k-1, petal k+i adjacent to i, i+1 mod k
Graph k_sun_with_center(int k); // plus a vertex adjacent to the whole clique (last)

// Minimally non-circle catalog from the T and F families.
// kind: tentK1, k-sun (even k), k-sun-center (odd k), netK1, F0, F1, F2,
// MII, MIII, MIV, MV.
std::optional<Graph> forbidden_family_catalog(const std::string& kind, int k);
// All family instances with at most max_n vertices, in search order
// (small patterns first); pairs of (label, graph).
std::vector<std::pair<std::string, Graph>> forbidden_catalog_upto(int max_n);

// Chordal, not split, minimally non-comparability witness graph used by the
// local-complementation regression suite; 9 vertices labeled 0..8.
Graph a_double_prime_3();

} // namespace circletk

#endif
