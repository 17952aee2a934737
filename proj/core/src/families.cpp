#include "circletk/families.hpp"

#include "circletk/patterns.hpp"

#include <stdexcept>

namespace circletk {

Graph split_graph_of(const Matrix01& m) {
    int rows = int(m.size());
    int cols = rows ? int(m[0].size()) : 0;
    Graph g(rows + cols);
    for (int a = 0; a < cols; a++)
        for (int b = a + 1; b < cols; b++) g.add_edge(a, b);
    for (int i = 0; i < rows; i++)
        for (int j = 0; j < cols; j++)
            if (m[i][j]) g.add_edge(cols + i, j);
    return g;
}

namespace {

Matrix01 pattern_bits(const Pattern& p) {
    Matrix01 m;
    for (auto& r : p.rows) m.push_back(r.bits);
    return m;
}

} // namespace

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; i++) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; i++) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) g.add_edge(i, j);
    return g;
}

Graph wheel(int k) {
    Graph g(k + 1);
    for (int i = 0; i < k; i++) {
        g.add_edge(i, (i + 1) % k);
        g.add_edge(i, k);
    }
    return g;
}

Graph bw3() {
    Graph g(7);
    for (int i = 0; i < 6; i++) g.add_edge(i, (i + 1) % 6);
    g.add_edge(6, 0);
    g.add_edge(6, 2);
    g.add_edge(6, 4);
    return g;
}

Graph co_c6() { return complement(cycle_graph(6)); }

Graph claw() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    return g;
}

Graph k_sun(int k) {
    Graph g(2 * k);
    for (int i = 0; i < k; i++)
        for (int j = i + 1; j < k; j++) g.add_edge(i, j);
    for (int i = 0; i < k; i++) {
        g.add_edge(k + i, i);
        g.add_edge(k + i, (i + 1) % k);
    }
    return g;
}

Graph k_sun_with_center(int k) {
    Graph sun = k_sun(k);
    Graph g(2 * k + 1);
    for (auto [a, b] : sun.edges()) g.add_edge(a, b);
    for (int i = 0; i < k; i++) g.add_edge(2 * k, i);
    return g;
}

Graph tent() { return k_sun(3); }

Graph net() {
    Graph g(6);
    for (int i = 0; i < 3; i++)
        for (int j = i + 1; j < 3; j++) g.add_edge(i, j);
    for (int i = 0; i < 3; i++) g.add_edge(i, 3 + i);
    return g;
}

Graph four_tent() {
    // clique k1 k2 k4 k5 (0..3) and s12 ~ k1,k2; s24 ~ k2,k4; s45 ~ k4,k5
    Graph g(7);
    for (int i = 0; i < 4; i++)
        for (int j = i + 1; j < 4; j++) g.add_edge(i, j);
    g.add_edge(4, 0);
    g.add_edge(4, 1);
    g.add_edge(5, 1);
    g.add_edge(5, 2);
    g.add_edge(6, 2);
    g.add_edge(6, 3);
    return g;
}

Graph co_four_tent() {
    // clique k1 k3 k5 (0,1,2); s13 ~ k1,k3; s35 ~ k3,k5; s1 ~ k1; s5 ~ k5
    Graph g(7);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 0);
    g.add_edge(3, 1);
    g.add_edge(4, 1);
    g.add_edge(4, 2);
    g.add_edge(5, 0);
    g.add_edge(6, 2);
    return g;
}

Graph join_k1(const Graph& g) {
    Graph h(g.n + 1);
    for (auto [a, b] : g.edges()) h.add_edge(a, b);
    for (int v = 0; v < g.n; v++) h.add_edge(v, g.n);
    return h;
}

std::optional<Graph> forbidden_family_catalog(const std::string& kind, int k) {
    if (kind == "tentK1") return join_k1(tent());
    if (kind == "netK1") return join_k1(net());
    if (kind == "k-sun") {
        if (k < 4 || k % 2) return std::nullopt; // even suns only
        return k_sun(k);
    }
    if (kind == "k-sun-center") {
        if (k < 3 || k % 2 == 0) return std::nullopt; // odd suns with center
        return k_sun_with_center(k);
    }
    if (kind == "F0") return split_graph_of(pattern_bits(pattern_f0()));
    if (kind == "F1") {
        if (k < 5 || k % 2 == 0) return std::nullopt;
        return split_graph_of(pattern_bits(pattern_f1(k)));
    }
    if (kind == "F2") {
        if (k < 5 || k % 2 == 0) return std::nullopt;
        return split_graph_of(pattern_bits(pattern_f2(k)));
    }
    if (kind == "MII") {
        if (k < 4) return std::nullopt;
        return split_graph_of(pattern_bits(tucker_mii(k)));
    }
    if (kind == "MIII") {
        // the odd members >= 5 are excluded from the family
        if (k < 3 || (k % 2 == 1 && k >= 5)) return std::nullopt;
        return split_graph_of(pattern_bits(tucker_miii(k)));
    }
    if (kind == "MIV") return split_graph_of(pattern_bits(tucker_miv()));
    if (kind == "MV") return split_graph_of(pattern_bits(tucker_mv()));
    return std::nullopt;
}

std::vector<std::pair<std::string, Graph>> forbidden_catalog_upto(int max_n) {
    std::vector<std::pair<std::string, Graph>> out;
    auto add = [&](const std::string& label, std::optional<Graph> g) {
        if (g && g->n <= max_n) out.push_back({label, *g});
    };
    add("tentK1", forbidden_family_catalog("tentK1", 0));
    add("3-sun-center", forbidden_family_catalog("k-sun-center", 3));
    add("netK1", forbidden_family_catalog("MIII", 3)); // net v K1 = the M_III(3) graph
    add("4-sun", forbidden_family_catalog("k-sun", 4));
    add("MII(4)", forbidden_family_catalog("MII", 4)); // co-4-tent v K1
    add("F0", forbidden_family_catalog("F0", 0));      // 4-tent v K1
    for (int k = 5; 2 * k - 1 <= max_n; k += 2) add("F1(" + std::to_string(k) + ")",
                                                    forbidden_family_catalog("F1", k));
    for (int k = 4; k + k + 1 <= max_n; k++) add("MIII(" + std::to_string(k) + ")",
                                                 forbidden_family_catalog("MIII", k));
    add("MV", forbidden_family_catalog("MV", 0));
    for (int k = 5; 2 * k <= max_n; k += 2) add("F2(" + std::to_string(k) + ")",
                                                forbidden_family_catalog("F2", k));
    add("MIV", forbidden_family_catalog("MIV", 0));
    for (int k = 5; 2 * k + 1 <= max_n; k += 2)
        add(std::to_string(k) + "-sun-center", forbidden_family_catalog("k-sun-center", k));
    for (int k = 6; 2 * k <= max_n; k += 2)
        add(std::to_string(k) + "-sun", forbidden_family_catalog("k-sun", k));
    for (int k = 5; 2 * k <= max_n; k++)
        add("MII(" + std::to_string(k) + ")", forbidden_family_catalog("MII", k));
    return out;
}

Graph a_double_prime_3() {
    // reconstructed 9-vertex witness; 0-indexed from the 1-indexed drawing
    Graph g(9);
    int edges[][2] = {{1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}, {1, 9},
                      {2, 3}, {2, 9}, {3, 8}, {3, 9}, {4, 5}, {5, 6}, {5, 9},
                      {6, 7}, {6, 9}, {7, 8}, {7, 9}, {8, 9}};
    for (auto& e : edges) g.add_edge(e[0] - 1, e[1] - 1);
    return g;
}

} // namespace circletk
