#include "circletk/recognizer.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace circletk {

namespace {

// The clique chords force the endpoint layout [K_1..K_m][K_1..K_m] (every two
// clique chords must interleave), so the circle is 2M gap positions: gap g
// precedes the +copy of position g (g < M) or the -copy of position g-M.
// An independent vertex whose neighborhood occupies the cyclic window
// [w1..w2] of clique positions is crossed out by a chord with endpoints at
// gaps p in {w1, w1+M} and q in {w2+1, w2+1+M}: each window boundary lifts
// independently to either copy. Full-window vertices take endpoints (t, t+M).
struct ChordVar {
    int vertex;
    std::vector<std::pair<int, int>> modes; // candidate endpoint gap pairs
    int chosen = -1;
};

// strict cyclic interleaving of {a1,b1} and {a2,b2} over the 2M cycle
bool strictly_interleaved(int a1, int b1, int a2, int b2, int cyc) {
    auto inside = [&](int x, int from, int to) {
        // x strictly inside the arc from->to clockwise
        int len = (to - from + cyc) % cyc;
        int off = (x - from + cyc) % cyc;
        return off > 0 && off < len;
    };
    if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) return false; // shared gaps stack
    bool a2_in = inside(a2, a1, b1), b2_in = inside(b2, a1, b1);
    return a2_in != b2_in;
}

} // namespace

std::optional<ChordModel> build_circle_model(const Graph& g, const SplitPartition& p,
                                             const CasePartition& cp, const CaseMatrices& cm,
                                             const std::vector<LROrdering>& orders) {
    (void)p;
    int m = cp.num_classes;
    std::vector<std::vector<int>> ordered(m);
    for (int c = 0; c < m; c++)
        for (int pos : orders[c].order) ordered[c].push_back(cm.col_vertex[c][pos]);

    std::vector<int> s_all;
    for (auto& [v, cell] : cp.s_cell) {
        (void)cell;
        s_all.push_back(v);
    }
    for (int v : cp.lr_vertices) s_all.push_back(v);
    for (int v : cp.empty_lr_vertices) s_all.push_back(v);
    std::sort(s_all.begin(), s_all.end());

    // per-class orientation so every neighborhood is circularly contiguous:
    // a window entering class c from the i-end must leave through the edge
    // toward the next class, so its class part anchors at the matching side
    for (int c = 0; c < m; c++) {
        int len = int(ordered[c].size());
        if (len <= 1) continue;
        int vote = 0;
        for (int v : s_all) {
            int cnt = 0;
            std::vector<uint8_t> hit(len, 0);
            for (int q = 0; q < len; q++)
                if (g.has_edge(v, ordered[c][q])) {
                    hit[q] = 1;
                    cnt++;
                }
            if (cnt == 0 || cnt == len) continue;
            bool prefix = hit[0] && !hit[len - 1];
            bool suffix = hit[len - 1] && !hit[0];
            int want = 0;
            auto it = cp.s_cell.find(v);
            if (it != cp.s_cell.end() && it->second.i != it->second.j) {
                if (it->second.i == c + 1) want = 1;
                else if (it->second.j == c + 1) want = -1;
            } else if (it == cp.s_cell.end() && c + 1 == cp.gap_class) {
                if (prefix) want = -1;
                else if (suffix) want = 1;
            }
            if (want == 0) continue;
            int dir = suffix ? 1 : (prefix ? -1 : 0);
            if (dir == 0) continue; // two-block gap rows carry no orientation
            int v_vote = want * dir;
            if (vote == 0) vote = v_vote;
            else if (vote != v_vote) return std::nullopt;
        }
        if (vote == -1) std::reverse(ordered[c].begin(), ordered[c].end());
    }

    std::vector<int> global;
    for (int c = 0; c < m; c++)
        for (int k : ordered[c]) global.push_back(k);
    int M = int(global.size());
    if (M == 0) {
        // edgeless split side: emit trivial pairs
        ChordModel model;
        for (int v = 0; v < g.n; v++) {
            model.word.push_back(v);
            model.word.push_back(v);
        }
        if (!verify_chord_model(g, model)) return std::nullopt;
        return model;
    }
    int CYC = 2 * M;

    std::vector<ChordVar> vars;
    std::vector<int> trivial = cp.isolated;
    for (int v : s_all) {
        std::vector<uint8_t> hit(M, 0);
        int cnt = 0;
        for (int q = 0; q < M; q++)
            if (g.has_edge(v, global[q])) {
                hit[q] = 1;
                cnt++;
            }
        if (cnt == 0) {
            trivial.push_back(v);
            continue;
        }
        ChordVar var;
        var.vertex = v;
        // all gap pairs whose crossing set equals the neighborhood: gap g sits
        // before the +copy (g < M) or -copy (g >= M) of a clique position; the
        // chord crosses exactly the clique chords with one endpoint inside
        for (int a = 0; a < CYC; a++) {
            for (int b = a + 1; b < CYC; b++) {
                bool match = true;
                for (int k = 0; k < M && match; k++) {
                    int plus = k, minus = k + M; // token after gap index
                    auto in_arc = [&](int token) { return token >= a && token < b; };
                    bool crossed = in_arc(plus) != in_arc(minus);
                    if (crossed != (hit[k] != 0)) match = false;
                }
                if (match) var.modes.push_back({a, b});
            }
        }
        if (var.modes.empty()) return std::nullopt; // window not realizable
        vars.push_back(var);
    }

    // exact search over endpoint lifts; pairwise strict interleaving is the
    // only hard conflict (shared gaps stack without crossing)
    int nv = int(vars.size());
    std::function<bool(int)> assign = [&](int idx) -> bool {
        if (idx == nv) return true;
        for (size_t mo = 0; mo < vars[idx].modes.size(); mo++) {
            auto [a, b] = vars[idx].modes[mo];
            bool ok = true;
            for (int prev = 0; prev < idx && ok; prev++) {
                auto [c, d] = vars[prev].modes[vars[prev].chosen];
                if (strictly_interleaved(a, b, c, d, CYC)) ok = false;
            }
            if (!ok) continue;
            vars[idx].chosen = int(mo);
            if (assign(idx + 1)) return true;
        }
        vars[idx].chosen = -1;
        return false;
    };
    if (!assign(0)) return std::nullopt;

    // emission: within a gap, chords with farther (clockwise) partners come
    // first; parallel chords reverse their tie order at the second gap
    std::vector<std::vector<int>> gap_tokens(CYC); // chord indices per gap
    for (int i = 0; i < nv; i++) {
        auto [a, b] = vars[i].modes[vars[i].chosen];
        gap_tokens[a].push_back(i);
        gap_tokens[b].push_back(i);
    }
    ChordModel model;
    for (int gpos = 0; gpos < CYC; gpos++) {
        auto& toks = gap_tokens[gpos];
        std::sort(toks.begin(), toks.end(), [&](int x, int y) {
            auto [ax, bx] = vars[x].modes[vars[x].chosen];
            auto [ay, by] = vars[y].modes[vars[y].chosen];
            int px = (ax == gpos) ? bx : ax;
            int py = (ay == gpos) ? by : ay;
            int dx = (px - gpos + CYC) % CYC;
            int dy = (py - gpos + CYC) % CYC;
            if (dx != dy) return dx > dy;
            // parallel chords: ascending ids at the anchor gap, descending at
            // the other
            int anchor_x = std::min(ax, bx);
            bool at_anchor = anchor_x == gpos;
            return at_anchor ? vars[x].vertex < vars[y].vertex
                             : vars[x].vertex > vars[y].vertex;
        });
        for (int i : toks) model.word.push_back(vars[i].vertex);
        model.word.push_back(global[gpos % M]);
    }
    for (int v : trivial) {
        model.word.push_back(v);
        model.word.push_back(v);
    }
    if (!verify_chord_model(g, model)) return std::nullopt;
    return model;
}

} // namespace circletk
