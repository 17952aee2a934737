#include "circletk/graph.hpp"

#include <algorithm>
#include <sstream>

namespace circletk {

int Graph::degree(int v) const {
    int d = 0;
    for (uint64_t w : adj[v]) d += __builtin_popcountll(w);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (size_t w = 0; w < adj[v].size(); w++) {
        uint64_t word = adj[v][w];
        while (word) {
            int b = __builtin_ctzll(word);
            word &= word - 1;
            out.push_back(int(w * 64) + b);
        }
    }
    return out;
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n; v++) total += degree(v);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n; a++)
        for (int b : neighbors(a))
            if (a < b) out.push_back({a, b});
    return out;
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    Graph g;
    while (std::getline(in, line)) {
        lineno++;
        std::istringstream ls(line);
        if (n < 0) {
            std::string tok;
            if (!(ls >> tok)) continue; // skip leading blank lines
            try {
                size_t pos = 0;
                n = std::stoi(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument(tok);
            } catch (...) {
                throw ParseError(lineno, "expected vertex count, got '" + tok + "'");
            }
            if (n < 0) throw ParseError(lineno, "negative vertex count");
            g = Graph(n);
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "trailing token '" + extra + "' after vertex count");
            continue;
        }
        std::string ta, tb;
        if (!(ls >> ta)) continue; // blank line
        if (!(ls >> tb)) throw ParseError(lineno, "edge line needs two endpoints");
        std::string extra;
        if (ls >> extra) throw ParseError(lineno, "trailing token '" + extra + "' on edge line");
        int a, b;
        try {
            size_t pa = 0, pb = 0;
            a = std::stoi(ta, &pa);
            b = std::stoi(tb, &pb);
            if (pa != ta.size() || pb != tb.size()) throw std::invalid_argument("");
        } catch (...) {
            throw ParseError(lineno, "malformed edge tokens '" + ta + " " + tb + "'");
        }
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw ParseError(lineno, "vertex out of range");
        if (a == b) throw ParseError(lineno, "loop edge " + std::to_string(a));
        g.add_edge(a, b);
    }
    if (n < 0) throw ParseError(lineno ? lineno : 1, "empty input");
    return g;
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << g.n << "\n";
    for (auto [a, b] : g.edges()) out << a << " " << b << "\n";
    return out.str();
}

std::string graph_to_json(const Graph& g) {
    std::ostringstream out;
    out << "{\"n\": " << g.n << ", \"edges\": [";
    bool first = true;
    for (auto [a, b] : g.edges()) {
        if (!first) out << ", ";
        first = false;
        out << "[" << a << ", " << b << "]";
    }
    out << "]}";
    return out.str();
}

Graph complement(const Graph& g) {
    Graph h(g.n);
    for (int a = 0; a < g.n; a++)
        for (int b = a + 1; b < g.n; b++)
            if (!g.has_edge(a, b)) h.add_edge(a, b);
    return h;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    Graph h(int(vertices.size()));
    for (size_t i = 0; i < vertices.size(); i++)
        for (size_t j = i + 1; j < vertices.size(); j++)
            if (g.has_edge(vertices[i], vertices[j])) h.add_edge(int(i), int(j));
    return h;
}

Graph local_complement(const Graph& g, int v) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("vertex out of range");
    Graph h = g;
    auto nb = g.neighbors(v);
    for (size_t i = 0; i < nb.size(); i++)
        for (size_t j = i + 1; j < nb.size(); j++)
            h.toggle_edge(nb[i], nb[j]);
    return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.n + b.n);
    for (auto [x, y] : a.edges()) g.add_edge(x, y);
    for (auto [x, y] : b.edges()) g.add_edge(a.n + x, a.n + y);
    return g;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(g.n, false);
    for (int s = 0; s < g.n; s++) {
        if (seen[s]) continue;
        std::vector<int> comp, stack = {s};
        seen[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : g.neighbors(v))
                if (!seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(comp);
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return g.n <= 1 || connected_components(g).size() == 1;
}

std::vector<std::vector<uint8_t>> adjacency_matrix_sk(const Graph& g,
                                                      const std::vector<int>& row_order,
                                                      const std::vector<int>& col_order) {
    std::vector<std::vector<uint8_t>> m(row_order.size(),
                                        std::vector<uint8_t>(col_order.size(), 0));
    for (size_t i = 0; i < row_order.size(); i++)
        for (size_t j = 0; j < col_order.size(); j++)
            m[i][j] = g.has_edge(row_order[i], col_order[j]) ? 1 : 0;
    return m;
}

} // namespace circletk
