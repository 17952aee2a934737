#include "circletk/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace circletk {

namespace {

// Backtracking search for an induced embedding of pattern into g.
// Maps pattern vertices 0..k-1 in order; image tuple grows lexicographically,
// so the first full map found is the lexicographically least witness.
bool extend_embedding(const Graph& g, const Graph& p, std::vector<int>& map,
                      std::vector<bool>& used, int next) {
    if (next == p.n) return true;
    for (int cand = 0; cand < g.n; cand++) {
        if (used[cand]) continue;
        bool ok = true;
        for (int prev = 0; prev < next && ok; prev++)
            if (p.has_edge(prev, next) != g.has_edge(map[prev], cand)) ok = false;
        if (!ok) continue;
        if (g.degree(cand) < p.degree(next)) continue;
        map[next] = cand;
        used[cand] = true;
        if (extend_embedding(g, p, map, used, next + 1)) return true;
        used[cand] = false;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& pattern) {
    if (pattern.n > g.n) return std::nullopt;
    std::vector<int> map(pattern.n, -1);
    std::vector<bool> used(g.n, false);
    if (extend_embedding(g, pattern, map, used, 0)) return map;
    return std::nullopt;
}

namespace {

Graph pattern_2k2() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    return g;
}
Graph pattern_cycle(int k) {
    Graph g(k);
    for (int i = 0; i < k; i++) g.add_edge(i, (i + 1) % k);
    return g;
}

// Lexicographically least clique side of the given size, if the complement side
// is independent.
std::optional<SplitPartition> split_with_clique_size(const Graph& g, int m) {
    std::vector<int> clique;
    std::vector<bool> in_clique(g.n, false);
    std::function<bool(int, int)> go = [&](int start, int remaining) -> bool {
        if (remaining == 0) {
            for (int a = 0; a < g.n; a++) {
                if (in_clique[a]) continue;
                for (int b = a + 1; b < g.n; b++)
                    if (!in_clique[b] && g.has_edge(a, b)) return false;
            }
            return true;
        }
        for (int v = start; v + remaining <= g.n; v++) {
            bool ok = true;
            for (int c : clique)
                if (!g.has_edge(c, v)) { ok = false; break; }
            if (!ok) continue;
            clique.push_back(v);
            in_clique[v] = true;
            if (go(v + 1, remaining - 1)) return true;
            clique.pop_back();
            in_clique[v] = false;
        }
        return false;
    };
    if (!go(0, m)) return std::nullopt;
    SplitPartition p;
    p.clique = clique;
    for (int v = 0; v < g.n; v++)
        if (!in_clique[v]) p.independent.push_back(v);
    return p;
}

} // namespace

SplitResult split_partition(const Graph& g) {
    SplitResult res;
    // Degree-sequence test (Hammer-Simeone) decides splitness cheaply.
    std::vector<int> deg(g.n);
    for (int v = 0; v < g.n; v++) deg[v] = g.degree(v);
    std::vector<int> sorted = deg;
    std::sort(sorted.rbegin(), sorted.rend());
    int m = 0;
    for (int i = 0; i < g.n; i++)
        if (sorted[i] >= i) m = i + 1;
    long lhs = 0, rhs = 0;
    for (int i = 0; i < m; i++) lhs += sorted[i];
    for (int i = m; i < g.n; i++) rhs += sorted[i];
    bool split = (lhs == long(m) * (m - 1) + rhs);

    if (split) {
        // Largest clique side preferred; a maximum clique side has size m when
        // S is maximal-independent-compatible, but a vertex swap can matter, so
        // probe m then m-1.
        for (int size = m; size >= 0; size--) {
            auto p = split_with_clique_size(g, size);
            if (p) {
                res.partition = *p;
                return res;
            }
        }
    }
    // Witness: an induced 2K2, C4 or C5 (classical obstruction set).
    for (auto& [kind, pat] : std::vector<std::pair<std::string, Graph>>{
             {"2K2", pattern_2k2()}, {"C4", pattern_cycle(4)}, {"C5", pattern_cycle(5)}}) {
        if (auto w = find_induced(g, pat)) {
            res.obstruction = SplitObstruction{kind, *w};
            return res;
        }
    }
    throw std::logic_error("split degree test failed but no 2K2/C4/C5 witness found");
}

namespace {

// Shrink a cycle (as vertex list) to an induced cycle of length >= 4 containing
// at least one chordless stretch; standard chord-splitting.
std::vector<int> shrink_to_hole(const Graph& g, std::vector<int> cycle) {
    for (;;) {
        int k = int(cycle.size());
        bool changed = false;
        for (int i = 0; i < k && !changed; i++) {
            for (int j = i + 2; j < k && !changed; j++) {
                if (i == 0 && j == k - 1) continue; // cycle edge
                if (!g.has_edge(cycle[i], cycle[j])) continue;
                // chord splits cycle into two; keep a part that is still a cycle
                // of length >= 4 (one of the two always is, since k >= 4 and the
                // chord is not an edge of the cycle)
                std::vector<int> part1(cycle.begin() + i, cycle.begin() + j + 1);
                std::vector<int> part2;
                for (int t = j; t < k; t++) part2.push_back(cycle[t]);
                for (int t = 0; t <= i; t++) part2.push_back(cycle[t]);
                if (part1.size() >= 4)
                    cycle = part1;
                else
                    cycle = part2;
                changed = true;
            }
        }
        if (!changed) return cycle;
    }
}

} // namespace

ChordalityResult is_chordal(const Graph& g) {
    ChordalityResult res;
    int n = g.n;
    // Maximum cardinality search; reversed visit order is a candidate PEO.
    std::vector<int> weight(n, 0), order;
    std::vector<bool> used(n, false);
    for (int it = 0; it < n; it++) {
        int best = -1;
        for (int v = 0; v < n; v++)
            if (!used[v] && (best < 0 || weight[v] > weight[best])) best = v;
        used[best] = true;
        order.push_back(best);
        for (int u : g.neighbors(best))
            if (!used[u]) weight[u]++;
    }
    std::reverse(order.begin(), order.end());
    std::vector<int> pos(n);
    for (int i = 0; i < n; i++) pos[order[i]] = i;

    for (int i = 0; i < n; i++) {
        int v = order[i];
        std::vector<int> later;
        for (int u : g.neighbors(v))
            if (pos[u] > i) later.push_back(u);
        if (later.empty()) continue;
        int first = later[0];
        for (int u : later)
            if (pos[u] < pos[first]) first = u;
        for (int u : later) {
            if (u == first || g.has_edge(first, u)) continue;
            // u, v, first plus a path from u to first avoiding N[v] closes a hole
            std::vector<int> allowed;
            std::vector<int> blocked(n, 0);
            blocked[v] = 1;
            for (int w : g.neighbors(v)) blocked[w] = 1;
            blocked[u] = 0;
            blocked[first] = 0;
            // BFS from u to first within allowed vertices
            std::vector<int> parent(n, -1);
            std::vector<int> queue = {u};
            parent[u] = u;
            for (size_t qi = 0; qi < queue.size(); qi++) {
                int x = queue[qi];
                for (int y : g.neighbors(x)) {
                    if (blocked[y] || parent[y] != -1) continue;
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
            if (parent[first] == -1) continue; // try another pair
            std::vector<int> path;
            for (int x = first; x != u; x = parent[x]) path.push_back(x);
            path.push_back(u);
            path.push_back(v);
            res.chordal = false;
            res.hole = shrink_to_hole(g, path);
            if (res.hole.size() >= 4) return res;
        }
    }
    // Fallback: exhaustive hole scan in case the pair search found no path
    // (possible when every candidate pair is separated by N[v]).
    res.chordal = true;
    res.elimination_order = order;
    for (int i = 0; i < n && res.chordal; i++) {
        int v = order[i];
        std::vector<int> later;
        for (int u : g.neighbors(v))
            if (pos[u] > i) later.push_back(u);
        for (size_t a = 0; a < later.size(); a++)
            for (size_t b = a + 1; b < later.size(); b++)
                if (!g.has_edge(later[a], later[b])) res.chordal = false;
    }
    if (!res.chordal) {
        // Exhaustive: find a shortest induced cycle >= 4 directly.
        res.elimination_order.clear();
        for (int len = 4; len <= n; len++) {
            std::vector<int> cyc;
            std::function<bool(int)> go = [&](int depth) -> bool {
                if (depth == len) {
                    if (!g.has_edge(cyc[len - 1], cyc[0])) return false;
                    return true;
                }
                for (int v = (depth == 0 ? 0 : 0); v < n; v++) {
                    if (std::find(cyc.begin(), cyc.end(), v) != cyc.end()) continue;
                    if (depth > 0 && !g.has_edge(cyc[depth - 1], v)) continue;
                    bool induced = true;
                    for (int t = 0; t + 1 < depth; t++)
                        if (g.has_edge(cyc[t], v) && !(t == 0 && depth == len - 1)) induced = false;
                    if (!induced) continue;
                    cyc.push_back(v);
                    if (go(depth + 1)) return true;
                    cyc.pop_back();
                }
                return false;
            };
            if (go(0)) {
                res.hole = cyc;
                return res;
            }
        }
        throw std::logic_error("non-chordal by PEO check but no hole found");
    }
    return res;
}

std::optional<std::array<int, 3>> find_asteroidal_triple(const Graph& g) {
    int n = g.n;
    // reach[c][v] = component id of v in G - N[c]
    std::vector<std::vector<int>> comp_id(n, std::vector<int>(n, -1));
    for (int c = 0; c < n; c++) {
        std::vector<int> blocked(n, 0);
        blocked[c] = 1;
        for (int u : g.neighbors(c)) blocked[u] = 1;
        int cid = 0;
        for (int s = 0; s < n; s++) {
            if (blocked[s] || comp_id[c][s] != -1) continue;
            std::vector<int> stack = {s};
            comp_id[c][s] = cid;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int u : g.neighbors(v))
                    if (!blocked[u] && comp_id[c][u] == -1) {
                        comp_id[c][u] = cid;
                        stack.push_back(u);
                    }
            }
            cid++;
        }
    }
    for (int a = 0; a < n; a++)
        for (int b = a + 1; b < n; b++) {
            if (g.has_edge(a, b)) continue;
            for (int c = b + 1; c < n; c++) {
                if (g.has_edge(a, c) || g.has_edge(b, c)) continue;
                bool ab = comp_id[c][a] != -1 && comp_id[c][a] == comp_id[c][b];
                bool ac = comp_id[b][a] != -1 && comp_id[b][a] == comp_id[b][c];
                bool bc = comp_id[a][b] != -1 && comp_id[a][b] == comp_id[a][c];
                if (ab && ac && bc) return std::array<int, 3>{a, b, c};
            }
        }
    return std::nullopt;
}

namespace {

void canonical_search(const Graph& g, std::vector<int>& perm, std::vector<bool>& used,
                      std::string& best, std::string& cur) {
    int placed = int(perm.size());
    if (placed == g.n) {
        if (best.empty() || cur < best) best = cur;
        return;
    }
    // Only vertices whose adjacency string to the placed prefix is minimal can
    // lie on a lexicographically least completion.
    std::string min_ext;
    std::vector<std::pair<std::string, int>> cands;
    for (int v = 0; v < g.n; v++) {
        if (used[v]) continue;
        std::string ext;
        ext.reserve(placed);
        for (int i = 0; i < placed; i++) ext.push_back(g.has_edge(perm[i], v) ? '1' : '0');
        if (min_ext.empty() || ext < min_ext) min_ext = ext;
        cands.push_back({std::move(ext), v});
    }
    std::vector<int> tried; // twin dedup: swapping true twins is an automorphism
    for (auto& [ext, v] : cands) {
        if (ext != min_ext) continue;
        bool twin_seen = false;
        for (int u : tried) {
            bool twins = true;
            for (int w = 0; w < g.n && twins; w++) {
                if (w == u || w == v) continue;
                if (g.has_edge(u, w) != g.has_edge(v, w)) twins = false;
            }
            if (twins && g.has_edge(u, v) == false) twin_seen = true;      // false twins
            if (twins && g.has_edge(u, v) == true) twin_seen = true;       // true twins
            if (twin_seen) break;
        }
        if (twin_seen) continue;
        tried.push_back(v);
        std::string next = cur + ext;
        if (!best.empty() && next > best.substr(0, next.size())) continue;
        perm.push_back(v);
        used[v] = true;
        canonical_search(g, perm, used, best, next);
        used[v] = false;
        perm.pop_back();
    }
}

} // namespace

std::string canonical_form(const Graph& g) {
    int m = g.edge_count();
    if (m == 0 || m == g.n * (g.n - 1) / 2) {
        std::string row(g.n ? g.n - 1 : 0, m == 0 ? '0' : '1');
        std::string s;
        for (int i = 1; i < g.n; i++) s += row.substr(0, i);
        return std::to_string(g.n) + ":" + s;
    }
    std::vector<int> perm;
    std::vector<bool> used(g.n, false);
    std::string best, cur;
    canonical_search(g, perm, used, best, cur);
    return std::to_string(g.n) + ":" + best;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace circletk
