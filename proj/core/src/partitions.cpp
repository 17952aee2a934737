#include "circletk/recognizer.hpp"

#include "circletk/families.hpp"

#include <algorithm>
#include <set>

namespace circletk {

BaseSubgraph find_base_subgraph(const Graph& g, const SplitPartition& p) {
    (void)p;
    if (auto w = find_induced(g, tent())) return {"tent", *w};
    if (auto w = find_induced(g, four_tent())) return {"4-tent", *w};
    if (auto w = find_induced(g, co_four_tent())) return {"co-4-tent", *w};
    if (auto w = find_induced(g, net())) return {"net", *w};
    return {"none", {}};
}

namespace {

struct CellRule {
    bool allowed = false;
    bool force_ci = false, force_cj = false;
};

struct ClassSpec {
    int num_classes = 0;
    int gap_class = 0;
    std::map<std::vector<int>, int> k_signature; // base-S adjacency -> class
    std::vector<int> base_s;
    std::map<std::pair<int, int>, CellRule> cells;
};

void allow(ClassSpec& spec, int i, int j, bool fci = false, bool fcj = false) {
    spec.cells[{i, j}] = {true, fci, fcj};
}

std::vector<int> class_relations(const Graph& g, const CasePartition& cp, int s) {
    std::vector<int> rel(cp.num_classes + 1, -1);
    for (int c = 1; c <= cp.num_classes; c++) {
        const auto& cell = cp.k_cells[c - 1];
        if (cell.empty()) continue;
        int cnt = 0;
        for (int k : cell)
            if (g.has_edge(s, k)) cnt++;
        rel[c] = cnt == 0 ? 0 : (cnt == int(cell.size()) ? 2 : 1);
    }
    return rel;
}

bool accept_cell(const ClassSpec& spec, CasePartition& cp, int s, SCellEntry cell) {
    auto it = spec.cells.find({cell.i, cell.j});
    if (it == spec.cells.end() || !it->second.allowed) {
        cp.obstruction = PartitionObstruction{"no cell for the adjacency window", s};
        return false;
    }
    if (it->second.force_ci && !cell.complete_i) {
        cp.obstruction = PartitionObstruction{"cell requires completeness at its first class", s};
        return false;
    }
    if (it->second.force_cj && !cell.complete_j) {
        cp.obstruction = PartitionObstruction{"cell requires completeness at its last class", s};
        return false;
    }
    cp.s_cell[s] = cell;
    return true;
}

bool classify_vertex(const Graph& g, CasePartition& cp, const ClassSpec& spec, int s) {
    auto rel = class_relations(g, cp, s);
    std::vector<int> live;
    for (int c = 1; c <= cp.num_classes; c++)
        if (rel[c] >= 0) live.push_back(c);
    int nl = int(live.size());
    std::vector<int> with;
    for (int c : live)
        if (rel[c] >= 1) with.push_back(c);
    if (with.empty()) {
        cp.isolated.push_back(s);
        return true;
    }
    bool gap_live = spec.gap_class != 0 && rel[spec.gap_class] >= 0;

    if (int(with.size()) == nl) {
        // the window covers every nonempty class
        std::vector<int> partial;
        for (int c : live)
            if (rel[c] == 1) partial.push_back(c);
        if (partial.empty()) {
            if (spec.gap_class == 0) {
                cp.obstruction = PartitionObstruction{"independent vertex complete to K", s};
                return false;
            }
            if (gap_live) cp.lr_vertices.push_back(s); // all-ones LR-row
            else cp.empty_lr_vertices.push_back(s);
            return true;
        }
        if (partial.size() == 1) {
            int pc = partial[0];
            if (gap_live && pc == spec.gap_class) {
                cp.lr_vertices.push_back(s); // one-block LR-row
                return true;
            }
            // the window admits two descriptions: wrapping from the partial
            // class, or ending at it; take whichever the case tables allow
            int t = 0;
            while (live[t] != pc) t++;
            int j = live[(t - 1 + nl) % nl];
            int i2 = live[(t + 1) % nl];
            auto saved = cp.obstruction;
            if (accept_cell(spec, cp, s, {pc, j, false, true})) return true;
            cp.obstruction = saved;
            return accept_cell(spec, cp, s, {i2, pc, true, false});
        }
        if (partial.size() == 2) {
            // two partial ends are fine when cyclically adjacent
            int ta = 0, tb = 0;
            while (live[ta] != partial[0]) ta++;
            while (live[tb] != partial[1]) tb++;
            if ((ta + 1) % nl == tb)
                return accept_cell(spec, cp, s, {live[tb], live[ta], false, false});
            if ((tb + 1) % nl == ta)
                return accept_cell(spec, cp, s, {live[ta], live[tb], false, false});
        }
        cp.obstruction =
            PartitionObstruction{"window covers every class with scattered partial classes", s};
        return false;
    }

    // proper circular window: contiguous within the nonempty classes
    int start = -1;
    for (int t = 0; t < nl; t++) {
        int prev = live[(t - 1 + nl) % nl];
        if (rel[live[t]] >= 1 && rel[prev] == 0) {
            if (start != -1) {
                cp.obstruction =
                    PartitionObstruction{"adjacency window is not circularly contiguous", s};
                return false;
            }
            start = t;
        }
    }
    if (start == -1) {
        cp.obstruction = PartitionObstruction{"adjacency window is not circularly contiguous", s};
        return false;
    }
    int len = int(with.size());
    bool all_complete = true;
    for (int t = 0; t < len; t++) {
        int c = live[(start + t) % nl];
        if (rel[c] == 0) {
            cp.obstruction =
                PartitionObstruction{"adjacency window is not circularly contiguous", s};
            return false;
        }
        if (rel[c] != 2) all_complete = false;
        if (t > 0 && t < len - 1 && rel[c] != 2) {
            cp.obstruction = PartitionObstruction{"interior class of the window is not complete", s};
            return false;
        }
    }
    int ci = live[start];
    int cj = live[(start + len - 1) % nl];
    // complete on everything except the (anticomplete) gap class: empty LR-row
    if (gap_live && rel[spec.gap_class] == 0 && all_complete && len == nl - 1) {
        cp.empty_lr_vertices.push_back(s);
        return true;
    }
    return accept_cell(spec, cp, s, {ci, cj, rel[ci] == 2, rel[cj] == 2});
}

CasePartition run_partition(const Graph& g, const SplitPartition& p, ClassSpec& spec,
                            const std::string& kind,
                            const std::function<void(ClassSpec&, const CasePartition&)>& adjust) {
    CasePartition cp;
    cp.kind = kind;
    cp.num_classes = spec.num_classes;
    cp.gap_class = spec.gap_class;
    cp.k_cells.assign(spec.num_classes, {});
    for (int k : p.clique) {
        std::vector<int> sig;
        for (size_t t = 0; t < spec.base_s.size(); t++)
            if (g.has_edge(k, spec.base_s[t])) sig.push_back(int(t));
        auto it = spec.k_signature.find(sig);
        if (it == spec.k_signature.end() || it->second <= 0) {
            cp.obstruction = PartitionObstruction{"clique vertex fits no class", k};
            return cp;
        }
        cp.k_cells[it->second - 1].push_back(k);
    }
    if (adjust) adjust(spec, cp);
    for (int s : p.independent)
        if (!classify_vertex(g, cp, spec, s)) return cp;
    return cp;
}

} // namespace

CasePartition partition_tent(const Graph& g, const SplitPartition& p, const std::vector<int>& emb) {
    // tent() = k_sun(3): clique v0,v1,v2 = k1,k3,k5; petals 3 = s13 (v0 v1),
    // 4 = s35 (v1 v2), 5 = s51 (v2 v0)
    ClassSpec spec;
    spec.num_classes = 6;
    spec.gap_class = 0;
    spec.base_s = {emb[3], emb[4], emb[5]};
    spec.k_signature[{0, 2}] = 1;
    spec.k_signature[{0}] = 2;
    spec.k_signature[{0, 1}] = 3;
    spec.k_signature[{1}] = 4;
    spec.k_signature[{1, 2}] = 5;
    spec.k_signature[{2}] = 6;
    allow(spec, 1, 1); allow(spec, 1, 2); allow(spec, 1, 3); allow(spec, 1, 4, true, false);
    allow(spec, 2, 2); allow(spec, 2, 3); allow(spec, 2, 5, false, true); allow(spec, 2, 6);
    allow(spec, 3, 3); allow(spec, 3, 4); allow(spec, 3, 5); allow(spec, 3, 6, true, false);
    allow(spec, 4, 1, false, true); allow(spec, 4, 2); allow(spec, 4, 4); allow(spec, 4, 5);
    allow(spec, 5, 1); allow(spec, 5, 2, true, false); allow(spec, 5, 5); allow(spec, 5, 6);
    allow(spec, 6, 1); allow(spec, 6, 3, false, true); allow(spec, 6, 4); allow(spec, 6, 6);
    return run_partition(g, p, spec, "tent", nullptr);
}

CasePartition partition_4tent(const Graph& g, const SplitPartition& p, const std::vector<int>& emb) {
    // four_tent(): clique 0..3 = k1,k2,k4,k5; rows 4 = s12, 5 = s24, 6 = s45
    ClassSpec spec;
    spec.num_classes = 6;
    spec.gap_class = 6;
    spec.base_s = {emb[4], emb[5], emb[6]};
    spec.k_signature[{0}] = 1;
    spec.k_signature[{0, 1}] = 2;
    spec.k_signature[{1}] = 3;
    spec.k_signature[{1, 2}] = 4;
    spec.k_signature[{2}] = 5;
    spec.k_signature[{}] = 6;
    allow(spec, 1, 1); allow(spec, 1, 2);
    allow(spec, 1, 3, true, false);  // complete at K_1
    allow(spec, 1, 4, false, true);  // complete at K_4
    allow(spec, 1, 5); allow(spec, 1, 6);
    allow(spec, 2, 2); allow(spec, 2, 3); allow(spec, 2, 4);
    allow(spec, 2, 5, true, false); allow(spec, 2, 6, true, false);
    allow(spec, 3, 3); allow(spec, 3, 4); allow(spec, 3, 5, false, true); allow(spec, 3, 6);
    allow(spec, 4, 4); allow(spec, 4, 5); allow(spec, 4, 6, true, false);
    allow(spec, 5, 5); allow(spec, 5, 6);
    allow(spec, 6, 1); allow(spec, 6, 2, false, true); allow(spec, 6, 3);
    allow(spec, 6, 4, false, true); allow(spec, 6, 5); allow(spec, 6, 6);
    return run_partition(g, p, spec, "4-tent", nullptr);
}

CasePartition partition_co4tent(const Graph& g, const SplitPartition& p,
                                const std::vector<int>& emb) {
    // co_four_tent(): clique 0,1,2 = k1,k3,k5; rows 3 = s13, 4 = s35, 5 = s1,
    // 6 = s5
    ClassSpec spec;
    spec.num_classes = 8;
    spec.gap_class = 7;
    spec.base_s = {emb[3], emb[4], emb[5], emb[6]};
    spec.k_signature[{0, 2}] = 1;
    spec.k_signature[{0, 1, 2}] = 2;
    spec.k_signature[{0, 1}] = 3;
    spec.k_signature[{0, 1, 3}] = 4;
    spec.k_signature[{1, 3}] = 5;
    spec.k_signature[{1}] = 6;
    spec.k_signature[{}] = 7;
    spec.k_signature[{0}] = 8;
    auto adjust = [](ClassSpec& sp, const CasePartition& cp) {
        bool e6 = cp.k_cells[5].empty();
        bool e8 = cp.k_cells[7].empty();
        allow(sp, 1, 1); allow(sp, 1, 2);
        allow(sp, 1, 3, true, false);
        allow(sp, 1, 4, true, false);
        if (e6 || e8) allow(sp, 1, 5, !e8, !e6);
        allow(sp, 1, 6, e8, !e8); // S_16] when K_8 exists, S_[16 otherwise
        allow(sp, 1, 7);
        allow(sp, 2, 2); allow(sp, 2, 3);
        allow(sp, 2, 5, false, true);
        allow(sp, 2, 6);
        allow(sp, 2, 7, true, false);
        allow(sp, 3, 3); allow(sp, 3, 4);
        allow(sp, 3, 5, false, true);
        allow(sp, 3, 6);
        allow(sp, 4, 4); allow(sp, 4, 5);
        allow(sp, 4, 6, true, false);
        allow(sp, 5, 5);
        allow(sp, 6, 6);
        allow(sp, 7, 4, false, true);
        allow(sp, 7, 5); allow(sp, 7, 6); allow(sp, 7, 7);
        allow(sp, 8, 2, false, true);
        allow(sp, 8, 3); allow(sp, 8, 4);
        allow(sp, 8, 5, true, false);
        allow(sp, 8, 6); allow(sp, 8, 7); allow(sp, 8, 8);
    };
    // primality convention first: the partition lemmas assume K_2 and K_4
    // nonempty, so a missing one short-circuits into the split decomposition
    // before any independent vertex is classified
    CasePartition probe;
    probe.kind = "co-4-tent";
    probe.num_classes = 8;
    probe.gap_class = 7;
    probe.k_cells.assign(8, {});
    for (int k : p.clique) {
        std::vector<int> sig;
        for (size_t t = 0; t < spec.base_s.size(); t++)
            if (g.has_edge(k, spec.base_s[t])) sig.push_back(int(t));
        auto it = spec.k_signature.find(sig);
        if (it == spec.k_signature.end() || it->second <= 0) {
            probe.obstruction = PartitionObstruction{"clique vertex fits no class", k};
            return probe;
        }
        probe.k_cells[it->second - 1].push_back(k);
    }
    if (probe.k_cells[3].empty()) {
        probe.needs_decomposition = true;
        probe.decompose_class = 5; // K_4 empty: factor across K_5
        return probe;
    }
    if (probe.k_cells[1].empty()) {
        probe.needs_decomposition = true;
        probe.decompose_class = 1; // K_2 empty: factor across K_1
        return probe;
    }
    return run_partition(g, p, spec, "co-4-tent", adjust);
}

CasePartition partition_net(const Graph& g, const SplitPartition& p, const std::vector<int>& emb) {
    // net(): clique 0,1,2; pendants 3 ~ 0 (s1), 4 ~ 1 (s3), 5 ~ 2 (s5)
    ClassSpec spec;
    spec.num_classes = 7;
    spec.gap_class = 0;
    spec.base_s = {emb[3], emb[4], emb[5]};
    spec.k_signature[{0}] = 1;
    spec.k_signature[{0, 1}] = 2;
    spec.k_signature[{1}] = 3;
    spec.k_signature[{1, 2}] = 4;
    spec.k_signature[{2}] = 5;
    spec.k_signature[{0, 2}] = 6;
    spec.k_signature[{}] = 7;
    CasePartition cp;
    cp.kind = "net";
    cp.num_classes = 7;
    cp.k_cells.assign(7, {});
    for (int k : p.clique) {
        std::vector<int> sig;
        for (size_t t = 0; t < spec.base_s.size(); t++)
            if (g.has_edge(k, spec.base_s[t])) sig.push_back(int(t));
        auto it = spec.k_signature.find(sig);
        if (it == spec.k_signature.end()) {
            cp.obstruction = PartitionObstruction{"clique vertex fits no net class", k};
            return cp;
        }
        cp.k_cells[it->second - 1].push_back(k);
    }
    return cp;
}

} // namespace circletk
