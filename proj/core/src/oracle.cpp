#include "circletk/oracle.hpp"

#include "circletk/families.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace circletk {

bool verify_chord_model(const Graph& g, const ChordModel& m) {
    if (int(m.word.size()) != 2 * g.n) return false;
    std::vector<int> first(g.n, -1), second(g.n, -1), count(g.n, 0);
    for (size_t p = 0; p < m.word.size(); p++) {
        int v = m.word[p];
        if (v < 0 || v >= g.n) return false;
        if (count[v] == 0) first[v] = int(p);
        else if (count[v] == 1) second[v] = int(p);
        count[v]++;
    }
    for (int v = 0; v < g.n; v++)
        if (count[v] != 2) return false;
    for (int a = 0; a < g.n; a++)
        for (int b = a + 1; b < g.n; b++) {
            bool b_inside = (first[b] > first[a] && first[b] < second[a]);
            bool b2_inside = (second[b] > first[a] && second[b] < second[a]);
            bool cross = b_inside != b2_inside;
            if (cross != g.has_edge(a, b)) return false;
        }
    return true;
}

std::vector<int> canonical_chord_word(const ChordModel& m) {
    // canonical under rotation, reflection and symbol renaming by first
    // occurrence
    auto canon_of = [](const std::vector<int>& w) {
        std::map<int, int> rename;
        std::vector<int> out;
        for (int v : w) {
            auto it = rename.find(v);
            if (it == rename.end()) {
                int id = int(rename.size());
                rename[v] = id;
                out.push_back(id);
            } else {
                out.push_back(it->second);
            }
        }
        return out;
    };
    std::vector<int> best;
    int len = int(m.word.size());
    for (int rot = 0; rot < len; rot++) {
        for (int refl = 0; refl < 2; refl++) {
            std::vector<int> w(len);
            for (int i = 0; i < len; i++) {
                int idx = refl ? (rot - i + 2 * len) % len : (rot + i) % len;
                w[i] = m.word[idx];
            }
            auto c = canon_of(w);
            if (best.empty() || c < best) best = c;
        }
    }
    return best;
}

namespace {

struct WordSearch {
    const Graph* g;
    int n;
    std::vector<int> word;
    std::vector<int> open_at;  // position of first occurrence, -1 if not open
    std::vector<int> state;    // 0 unseen, 1 open, 2 closed
    std::vector<int> close_at; // position of second occurrence
    bool found = false;
    ChordModel model;

    bool can_open(int v, int pos) {
        (void)pos;
        // v must be non-adjacent to every already closed vertex (their chords
        // can no longer cross v's)
        for (int u = 0; u < n; u++)
            if (state[u] == 2 && g->has_edge(u, v)) return false;
        return true;
    }

    bool can_close(int v, int pos) {
        int from = open_at[v];
        // relation to every started vertex becomes final
        for (int u = 0; u < n; u++) {
            if (u == v || state[u] == 0) continue;
            bool crossing;
            if (state[u] == 1) {
                crossing = open_at[u] > from; // exactly one occurrence inside
            } else {
                bool in1 = open_at[u] > from && open_at[u] < pos;
                bool in2 = close_at[u] > from && close_at[u] < pos;
                crossing = in1 != in2;
            }
            if (crossing != g->has_edge(u, v)) return false;
        }
        return true;
    }

    void dfs(int pos) {
        if (found) return;
        if (pos == 2 * n) {
            found = true;
            model.word = word;
            return;
        }
        // close an open vertex
        for (int v = 0; v < n && !found; v++) {
            if (state[v] != 1) continue;
            if (!can_close(v, pos)) continue;
            state[v] = 2;
            close_at[v] = pos;
            word.push_back(v);
            dfs(pos + 1);
            word.pop_back();
            state[v] = 1;
            close_at[v] = -1;
        }
        // open the smallest unseen vertex or any later one; opening order of
        // new symbols can be restricted to the smallest unseen id only when
        // all are interchangeable, which they are not, so try each
        for (int v = 0; v < n && !found; v++) {
            if (state[v] != 0) continue;
            if (!can_open(v, pos)) continue;
            state[v] = 1;
            open_at[v] = pos;
            word.push_back(v);
            dfs(pos + 1);
            word.pop_back();
            state[v] = 0;
            open_at[v] = -1;
        }
    }
};

} // namespace

OracleResult brute_force_is_circle(const Graph& g, int budget) {
    OracleResult res;
    if (g.n > budget) {
        res.verdict = OracleVerdict::Inconclusive;
        res.note = "vertex count exceeds the word-search budget";
        return res;
    }
    if (g.n == 0) {
        res.verdict = OracleVerdict::Circle;
        res.model = ChordModel{};
        return res;
    }
    WordSearch s;
    s.g = &g;
    s.n = g.n;
    s.open_at.assign(g.n, -1);
    s.close_at.assign(g.n, -1);
    s.state.assign(g.n, 0);
    // canonical start: vertex 0 opens at position 0
    s.state[0] = 1;
    s.open_at[0] = 0;
    s.word.push_back(0);
    s.dfs(1);
    if (s.found) {
        res.verdict = OracleVerdict::Circle;
        res.model = s.model;
        return res;
    }
    res.verdict = OracleVerdict::NotCircle;
    return res;
}

namespace {

std::optional<std::pair<std::string, std::vector<int>>> find_bouchet_target(const Graph& g) {
    if (g.n >= 6)
        if (auto w = find_induced(g, wheel(5))) return std::make_pair(std::string("W5"), *w);
    if (g.n >= 7)
        if (auto w = find_induced(g, bw3())) return std::make_pair(std::string("BW3"), *w);
    if (g.n >= 8)
        if (auto w = find_induced(g, wheel(7))) return std::make_pair(std::string("W7"), *w);
    return std::nullopt;
}

} // namespace

OracleResult bouchet_orbit_check(const Graph& g, long state_budget) {
    OracleResult res;
    std::set<std::string> seen;
    struct State {
        Graph g;
        std::vector<int> seq;
    };
    std::vector<State> queue;
    queue.push_back({g, {}});
    seen.insert(canonical_form(g));
    for (size_t qi = 0; qi < queue.size(); qi++) {
        if (long(seen.size()) > state_budget) {
            res.verdict = OracleVerdict::Inconclusive;
            res.note = "orbit budget exceeded";
            return res;
        }
        const State cur = queue[qi];
        if (auto hit = find_bouchet_target(cur.g)) {
            res.verdict = OracleVerdict::NotCircle;
            res.complement_sequence = cur.seq;
            res.forbidden_target = hit->first;
            res.forbidden_vertices = hit->second;
            return res;
        }
        for (int v = 0; v < g.n; v++) {
            Graph h = local_complement(cur.g, v);
            auto cf = canonical_form(h);
            if (seen.insert(cf).second) {
                auto seq = cur.seq;
                seq.push_back(v);
                queue.push_back({h, seq});
            }
        }
    }
    res.verdict = OracleVerdict::Circle;
    return res;
}

namespace {

ReplayStage stage_of(std::vector<int> seq, std::string target,
                     std::vector<int> pinned = {}) {
    ReplayStage s;
    s.sequence = std::move(seq);
    s.target = std::move(target);
    s.pinned_set = std::move(pinned);
    return s;
}

struct ReplaySpec {
    std::string name;
    Graph start;
    std::vector<ReplayStage> stages; // sequences use start-graph vertex ids
};

// Appendix-style vertex naming for the split-graph realizations: clique
// vertices come first, independent rows after.
int cliquev(int /*cols*/, int i) { return i - 1; }             // v_i, 1-indexed
int rowv(int cols, int i) { return cols + i - 1; }             // w_i / row i, 1-indexed

std::optional<ReplaySpec> build_replay(const std::string& name) {
    auto wheel_stage = [](std::vector<int> seq, int k) {
        return stage_of(std::move(seq), "W" + std::to_string(k));
    };
    if (name == "tentK1") {
        Graph g = join_k1(tent());
        // tent: clique 0,1,2 = v1,v2,v3; petals 3=s12, 4=s23, 5=s31; 6 = apex
        ReplaySpec r{name, g, {}};
        r.stages.push_back(stage_of({3, 4, 1, 6}, "coC6"));
        return r;
    }
    if (name == "F0") {
        Graph g = *forbidden_family_catalog("F0", 0);
        ReplaySpec r{name, g, {}};
        r.stages.push_back(stage_of({2}, "MII4graph")); // complement at v3
        return r;
    }
    if (name == "MV") {
        Graph g = *forbidden_family_catalog("MV", 0);
        int c = 5;
        ReplaySpec r{name, g, {}};
        r.stages.push_back(
            stage_of({rowv(c, 3), cliquev(c, 3), cliquev(c, 2), rowv(c, 2), rowv(c, 1)}, "BW3",
                     {rowv(c, 1), rowv(c, 3), rowv(c, 2), cliquev(c, 4), rowv(c, 4),
                      cliquev(c, 1), cliquev(c, 5)}));
        return r;
    }
    if (name == "MIV") {
        Graph g = *forbidden_family_catalog("MIV", 0);
        int c = 6;
        ReplaySpec r{name, g, {}};
        r.stages.push_back(stage_of({cliquev(c, 6), rowv(c, 4), cliquev(c, 3), cliquev(c, 4),
                                     cliquev(c, 6), rowv(c, 3), rowv(c, 1)},
                                    "W5",
                                    {cliquev(c, 6), cliquev(c, 5), cliquev(c, 3), cliquev(c, 1),
                                     cliquev(c, 2), rowv(c, 2)}));
        return r;
    }
    auto starts_with = [&](const std::string& p) {
        return name.size() > p.size() && name.compare(0, p.size(), p) == 0;
    };
    if (starts_with("sun-center-")) {
        int k = std::stoi(name.substr(11));
        if (k < 3 || k % 2 == 0) return std::nullopt;
        Graph g = k_sun_with_center(k);
        int center = 2 * k;
        ReplaySpec r{name, g, {}};
        if (k == 3) {
            r.stages.push_back(stage_of({center}, "BW3"));
            return r;
        }
        std::vector<int> seq = {center};
        for (int i = 0; i < k; i++) seq.push_back(k + i); // petals w_1..w_k
        r.stages.push_back(wheel_stage(seq, k));
        if (k == 9) {
            r.stages.push_back(stage_of({0, 1, 8}, "W6")); // v1, v2, v9
            r.stages.push_back(stage_of({2, 5, center}, "coC6"));
        }
        return r;
    }
    if (starts_with("sun-")) {
        int k = std::stoi(name.substr(4));
        if (k < 4 || k % 2) return std::nullopt;
        Graph g = k_sun(k);
        auto v = [&](int i) { return i - 1; };
        auto w = [&](int i) { return k + i - 1; };
        ReplaySpec r{name, g, {}};
        if (k == 4) {
            r.stages.push_back(stage_of(
                {w(1), w(2), w(3), w(4), v(1), w(4), w(1), w(3), v(3), w(2), v(1)}, "coC6"));
            return r;
        }
        if (k == 6) {
            r.stages.push_back(stage_of({w(1), w(2), w(3), w(4), w(5), w(6)}, "coC6"));
            return r;
        }
        // even k >= 8: complementing every petal leaves the complement of C_k
        // on the clique; then v_1, v_{j+1}, v_2, v_k, ..., v_{2+l}, v_{k-l}
        // with j = k/2, l = (k-8)/2 reaches W5 or W7 by k mod 4
        std::vector<int> petals;
        for (int i = 1; i <= k; i++) petals.push_back(w(i));
        r.stages.push_back(stage_of(petals, "coC" + std::to_string(k)));
        int j = k / 2, l = (k - 8) / 2;
        std::vector<int> seq = {v(1), v(j + 1)};
        for (int t = 0; t <= l; t++) {
            seq.push_back(v(2 + t));
            seq.push_back(v(k - t));
        }
        r.stages.push_back(stage_of(seq, k % 4 == 2 ? "W5" : "W7"));
        return r;
    }
    if (starts_with("MII-")) {
        int k = std::stoi(name.substr(4));
        if (k < 4 || k % 2) return std::nullopt;
        Graph g = *forbidden_family_catalog("MII", k);
        int c = k;
        auto v = [&](int i) { return cliquev(c, i); };
        auto w = [&](int i) { return rowv(c, i + 1); }; // rows: x1, w_1..w_{k-2}, x2
        int x1 = rowv(c, 1), x2 = rowv(c, k);
        ReplaySpec r{name, g, {}};
        if (k == 4) {
            r.stages.push_back(stage_of({x1, x2, w(1), w(2)}, "W5",
                                        {v(1), v(2), v(3), v(4), x1, x2}));
            return r;
        }
        std::vector<int> seq = {v(k)};
        for (int i = 1; i <= k - 2; i++) seq.push_back(w(i));
        r.stages.push_back(wheel_stage(seq, k + 1));
        return r;
    }
    if (starts_with("MIII-")) {
        int k = std::stoi(name.substr(5));
        Graph g0 = split_graph_of(Matrix01{}); // placeholder
        auto built = forbidden_family_catalog("MIII", k);
        if (!built) return std::nullopt;
        Graph g = *built;
        (void)g0;
        int c = k + 1;
        auto v = [&](int i) { return cliquev(c, i); };
        auto w = [&](int i) { return rowv(c, i); }; // rows: w_1..w_{k-1}, x
        ReplaySpec r{name, g, {}};
        if (k == 3) {
            r.stages.push_back(stage_of({v(2)}, "tentK1graph"));
            return r;
        }
        std::vector<int> seq = {v(k + 1)};
        for (int i = 1; i <= k - 1; i++) seq.push_back(w(i));
        r.stages.push_back(wheel_stage(seq, k + 1));
        return r;
    }
    if (starts_with("F1-")) {
        int k = std::stoi(name.substr(3));
        if (k < 5 || k % 2 == 0) return std::nullopt;
        Graph g = *forbidden_family_catalog("F1", k);
        int c = k - 1;
        auto v = [&](int i) { return cliquev(c, i); };
        // rows of F1: x1, x2, then petals w_{k-2} .. w_1 (descending)
        int x1 = rowv(c, 1);
        auto w = [&](int i) { return rowv(c, k + 1 - i); };
        ReplaySpec r{name, g, {}};
        if (k == 5) {
            int x2 = rowv(c, 2);
            r.stages.push_back(stage_of({v(4), x1, w(2), w(3), w(1)}, "W5",
                                        {v(1), v(2), v(3), v(4), x1, x2}));
            return r;
        }
        std::vector<int> seq;
        for (int i = 1; i <= k - 2; i++) seq.push_back(w(i));
        r.stages.push_back(stage_of(seq, "coC" + std::to_string(k + 1)));
        return r;
    }
    if (starts_with("F2-")) {
        int k = std::stoi(name.substr(3));
        if (k < 5 || k % 2 == 0) return std::nullopt;
        Graph g = *forbidden_family_catalog("F2", k);
        int c = k;
        auto w = [&](int i) { return rowv(c, i + 1); }; // rows: x, w_1..w_{k-1}
        ReplaySpec r{name, g, {}};
        std::vector<int> seq;
        for (int i = 1; i <= k - 1; i++) seq.push_back(w(i));
        r.stages.push_back(stage_of(seq, "coC" + std::to_string(k + 1)));
        return r;
    }
    return std::nullopt;
}

Graph target_graph(const std::string& t) {
    if (t == "BW3") return bw3();
    if (t == "coC6") return co_c6();
    if (t == "MII4graph") return *forbidden_family_catalog("MII", 4);
    if (t == "tentK1graph") return join_k1(tent());
    if (t.size() > 1 && t[0] == 'W') return wheel(std::stoi(t.substr(1)));
    if (t.size() > 3 && t.compare(0, 3, "coC") == 0)
        return complement(cycle_graph(std::stoi(t.substr(3))));
    throw std::invalid_argument("unknown replay target " + t);
}

} // namespace

ReplayReport replay_appendix_sequence(const std::string& name) {
    ReplayReport rep;
    rep.name = name;
    auto spec = build_replay(name);
    if (!spec) {
        rep.note = "unknown catalog entry";
        return rep;
    }
    Graph cur = spec->start;
    rep.ok = true;
    for (auto stage : spec->stages) {
        for (int v : stage.sequence) {
            if (v < 0 || v >= cur.n) {
                rep.ok = false;
                rep.note = "sequence index out of range";
                rep.stages.push_back(stage);
                return rep;
            }
            cur = local_complement(cur, v);
        }
        Graph tgt = target_graph(stage.target);
        auto emb = find_induced(cur, tgt);
        stage.found = emb.has_value();
        if (emb) stage.embedding = *emb;
        if (!stage.pinned_set.empty()) {
            Graph sub = induced_subgraph(cur, stage.pinned_set);
            if (!isomorphic(sub, tgt)) stage.found = false;
        }
        if (!stage.found) rep.ok = false;
        rep.stages.push_back(stage);
    }
    return rep;
}

std::vector<std::string> replay_catalog_names(int max_k) {
    std::vector<std::string> names = {"tentK1", "F0", "MV", "MIV"};
    for (int k = 3; k <= max_k; k += 2) names.push_back("sun-center-" + std::to_string(k));
    for (int k = 4; k <= max_k; k += 2) names.push_back("sun-" + std::to_string(k));
    for (int k = 4; k <= max_k; k += 2) names.push_back("MII-" + std::to_string(k));
    names.push_back("MIII-3");
    for (int k = 4; k <= max_k; k += 2) names.push_back("MIII-" + std::to_string(k));
    for (int k = 5; k <= max_k; k += 2) names.push_back("F1-" + std::to_string(k));
    for (int k = 5; k <= max_k; k += 2) names.push_back("F2-" + std::to_string(k));
    return names;
}

} // namespace circletk
