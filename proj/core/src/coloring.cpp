#include "circletk/coloring.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace circletk {

namespace {

// Enumerate induced cycles, shortest first, matching a predicate on the vertex
// list; bounded exhaustive search.
std::optional<std::vector<int>> find_induced_cycle(
    const Graph& g, const std::function<bool(const std::vector<int>&)>& pred) {
    int n = g.n;
    for (int len = 3; len <= n; len++) {
        std::vector<int> cyc;
        std::function<bool(int)> go = [&](int depth) -> bool {
            if (depth == len)
                return g.has_edge(cyc[len - 1], cyc[0]) && pred(cyc);
            for (int v = 0; v < n; v++) {
                if (depth > 0 && v <= cyc[0]) continue; // canonical start
                if (std::find(cyc.begin(), cyc.end(), v) != cyc.end()) continue;
                if (depth > 0 && !g.has_edge(cyc[depth - 1], v)) continue;
                bool induced = true;
                for (int t = 0; t + 1 < depth && induced; t++) {
                    if (t == 0 && depth == len - 1) continue; // closing edge
                    if (g.has_edge(cyc[t], v)) induced = false;
                }
                if (!induced) continue;
                cyc.push_back(v);
                if (go(depth + 1)) return true;
                cyc.pop_back();
            }
            return false;
        };
        for (int s = 0; s < n; s++) {
            cyc = {s};
            if (go(1)) return cyc;
        }
    }
    return std::nullopt;
}

// Enumerate induced paths whose internal vertices are uncolored and whose
// endpoints are colored, shortest first.
std::optional<std::vector<int>> find_bad_path(const Graph& g,
                                              const std::vector<RowColor>& color) {
    int n = g.n;
    for (int len = 2; len <= n; len++) {
        std::vector<int> path;
        std::function<bool(int)> go = [&](int depth) -> bool {
            if (depth == len) {
                int u = path.front(), v = path.back();
                if (color[v] == RowColor::None) return false;
                bool even = len % 2 == 0;
                if (even && color[u] == color[v]) return true;
                if (!even && color[u] != color[v]) return true;
                return false;
            }
            for (int v = 0; v < n; v++) {
                if (std::find(path.begin(), path.end(), v) != path.end()) continue;
                if (!g.has_edge(path[depth - 1], v)) continue;
                if (depth < len - 1 && color[v] != RowColor::None) continue;
                bool induced = true;
                for (int t = 0; t + 1 < depth && induced; t++)
                    if (g.has_edge(path[t], v)) induced = false;
                if (!induced) continue;
                path.push_back(v);
                if (go(depth + 1)) return true;
                path.pop_back();
            }
            return false;
        };
        for (int s = 0; s < n; s++) {
            if (color[s] == RowColor::None) continue;
            path = {s};
            if (go(1)) return path;
        }
    }
    return std::nullopt;
}

int count_colored(const std::vector<int>& vs, const std::vector<RowColor>& color) {
    int c = 0;
    for (int v : vs)
        if (color[v] != RowColor::None) c++;
    return c;
}

} // namespace

ColoringOutcome extend_partial_2coloring(const Graph& g, const std::vector<RowColor>& precolor) {
    if (int(precolor.size()) != g.n)
        throw std::invalid_argument("precolor size mismatch");
    for (auto [a, b] : g.edges())
        if (precolor[a] != RowColor::None && precolor[a] == precolor[b])
            throw std::invalid_argument("improper precoloring: adjacent vertices share a color");

    ColoringOutcome out;
    std::vector<int> side(g.n, -1);
    std::vector<RowColor> result = precolor;
    bool feasible = true;

    for (auto& comp : connected_components(g)) {
        // bipartition by BFS
        std::vector<int> queue = {comp[0]};
        side[comp[0]] = 0;
        bool bipartite = true;
        for (size_t qi = 0; qi < queue.size() && bipartite; qi++) {
            int v = queue[qi];
            for (int u : g.neighbors(v)) {
                if (side[u] == -1) {
                    side[u] = side[v] ^ 1;
                    queue.push_back(u);
                } else if (side[u] == side[v]) {
                    bipartite = false;
                }
            }
        }
        if (!bipartite) {
            feasible = false;
            continue;
        }
        // colors per side must be consistent with the precoloring
        RowColor side_color[2] = {RowColor::None, RowColor::None};
        for (int v : comp) {
            if (precolor[v] == RowColor::None) continue;
            RowColor& sc = side_color[side[v]];
            if (sc == RowColor::None) sc = precolor[v];
            else if (sc != precolor[v]) feasible = false;
            RowColor other = precolor[v] == RowColor::Red ? RowColor::Blue : RowColor::Red;
            RowColor& oc = side_color[side[v] ^ 1];
            if (oc == RowColor::None) oc = other;
            else if (oc != other) feasible = false;
        }
        if (!feasible) continue;
        if (side_color[0] == RowColor::None) {
            side_color[0] = RowColor::Red;
            side_color[1] = RowColor::Blue;
        }
        for (int v : comp) result[v] = side_color[side[v]];
    }

    if (feasible) {
        out.coloring = result;
        return out;
    }

    // Obstruction extraction in the order of the five certified shapes that is
    // cheapest to check first.
    // 5: triangle with exactly one uncolored vertex
    if (auto c = find_induced_cycle(g, [&](const std::vector<int>& vs) {
            return vs.size() == 3 && count_colored(vs, precolor) == 2;
        })) {
        out.obstruction = ColoringObstruction{5, *c};
        return out;
    }
    // 1 / 2: bad induced path
    if (auto p = find_bad_path(g, precolor)) {
        int kind = (p->size() % 2 == 0) ? 1 : 2;
        out.obstruction = ColoringObstruction{kind, *p};
        return out;
    }
    // 3: uncolored induced odd cycle
    if (auto c = find_induced_cycle(g, [&](const std::vector<int>& vs) {
            return vs.size() % 2 == 1 && count_colored(vs, precolor) == 0;
        })) {
        out.obstruction = ColoringObstruction{3, *c};
        return out;
    }
    // 4: induced odd cycle with exactly one colored vertex
    if (auto c = find_induced_cycle(g, [&](const std::vector<int>& vs) {
            return vs.size() % 2 == 1 && count_colored(vs, precolor) == 1;
        })) {
        out.obstruction = ColoringObstruction{4, *c};
        return out;
    }
    throw std::logic_error("2-coloring infeasible but no certified obstruction shape found");
}

} // namespace circletk
