#include "circletk/completion.hpp"

#include "circletk/families.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace circletk {

IntervalCheck is_interval(const Graph& g) {
    IntervalCheck res;
    auto ch = is_chordal(g);
    if (!ch.chordal) {
        res.hole = ch.hole;
        return res;
    }
    if (auto at = find_asteroidal_triple(g)) {
        res.at = at;
        return res;
    }
    res.interval = true;
    return res;
}

ProperIntervalCheck is_proper_interval(const Graph& g) {
    ProperIntervalCheck res;
    auto iv = is_interval(g);
    if (!iv.interval) {
        res.hole = iv.hole;
        res.at = iv.at;
        return res;
    }
    if (auto w = find_induced(g, claw())) {
        res.claw = *w;
        return res;
    }
    res.proper_interval = true;
    return res;
}

std::vector<MinimalSeparator> minimal_separators(const Graph& g) {
    std::vector<MinimalSeparator> out;
    int n = g.n;
    // exhaustive over vertex subsets, deduplicated; a subset S is a minimal
    // separator iff G-S has >= 2 components whose neighborhood is all of S
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); mask++) {
        if (mask + 1 == (uint32_t(1) << n)) continue; // everything removed
        std::vector<int> sep;
        std::vector<int> rest;
        for (int v = 0; v < n; v++)
            ((mask >> v) & 1 ? sep : rest).push_back(v);
        if (rest.empty()) continue;
        // components of G - S
        std::vector<int> comp_id(n, -1);
        int cid = 0;
        for (int s : rest) {
            if (comp_id[s] != -1) continue;
            std::vector<int> stack = {s};
            comp_id[s] = cid;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int u : g.neighbors(v))
                    if (comp_id[u] == -1 && !((mask >> u) & 1)) {
                        comp_id[u] = cid;
                        stack.push_back(u);
                    }
            }
            cid++;
        }
        if (cid < 2) continue;
        std::vector<std::vector<int>> comps(cid);
        for (int v : rest) comps[comp_id[v]].push_back(v);
        int full = 0;
        std::vector<std::vector<int>> full_comps;
        for (auto& comp : comps) {
            std::set<int> nb;
            for (int v : comp)
                for (int u : g.neighbors(v))
                    if ((mask >> u) & 1) nb.insert(u);
            if (int(nb.size()) == int(sep.size())) {
                full++;
                full_comps.push_back(comp);
            }
        }
        if (full >= 2) out.push_back({sep, full_comps, comps});
    }
    return out;
}

std::vector<int> nucleus(const Graph& g, const std::vector<int>& separator,
                         const std::vector<int>& component) {
    std::set<int> sep(separator.begin(), separator.end());
    std::vector<int> out;
    for (int v : component) {
        bool hit = false;
        for (int u : g.neighbors(v))
            if (sep.count(u)) hit = true;
        if (hit) out.push_back(v);
    }
    return out;
}

namespace {

std::vector<int> s_neighborhood(const Graph& g, int v, const std::vector<int>& separator) {
    std::vector<int> out;
    for (int s : separator)
        if (g.has_edge(v, s)) out.push_back(s);
    return out;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

std::optional<std::vector<int>> nuclear_ordering(const Graph& g, const std::vector<int>& nucleus_set,
                                                 const std::vector<int>& separator) {
    std::vector<std::pair<std::vector<int>, int>> items;
    for (int v : nucleus_set) items.push_back({s_neighborhood(g, v, separator), v});
    // comparability of all pairs, then sort by inclusion (ties lexicographic)
    for (auto& a : items)
        for (auto& b : items)
            if (&a != &b && !subset_of(a.first, b.first) && !subset_of(b.first, a.first))
                return std::nullopt;
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    std::vector<int> order;
    for (auto& it : items) order.push_back(it.second);
    return order;
}

std::optional<std::vector<int>> bi_ordering(const Graph& g, const std::vector<int>& separator,
                                            const std::vector<int>& a1, const std::vector<int>& a2) {
    // decreasing neighborhoods toward A1 and increasing toward A2
    struct Item {
        std::vector<int> n1, n2;
        int v;
    };
    std::vector<Item> items;
    for (int s : separator) items.push_back({s_neighborhood(g, s, a1), s_neighborhood(g, s, a2), s});
    for (auto& a : items)
        for (auto& b : items) {
            if (&a == &b) continue;
            bool le = subset_of(b.n1, a.n1) && subset_of(a.n2, b.n2); // a before b
            bool ge = subset_of(a.n1, b.n1) && subset_of(b.n2, a.n2);
            if (!le && !ge) return std::nullopt;
        }
    std::vector<Item> sorted = items;
    std::stable_sort(sorted.begin(), sorted.end(), [&](const Item& a, const Item& b) {
        if (a.n1.size() != b.n1.size()) return a.n1.size() > b.n1.size();
        if (a.n2.size() != b.n2.size()) return a.n2.size() < b.n2.size();
        return a.v < b.v;
    });
    // validate the sorted sequence satisfies both chains
    for (size_t i = 0; i + 1 < sorted.size(); i++) {
        if (!subset_of(sorted[i + 1].n1, sorted[i].n1)) return std::nullopt;
        if (!subset_of(sorted[i].n2, sorted[i + 1].n2)) return std::nullopt;
    }
    std::vector<int> order;
    for (auto& it : sorted) order.push_back(it.v);
    return order;
}

CompletionInstance make_completion(const Graph& g, const Graph& h) {
    if (g.n != h.n) throw std::invalid_argument("completion: vertex counts differ");
    CompletionInstance inst;
    inst.g = g;
    inst.h = h;
    for (auto [a, b] : h.edges()) {
        if (!g.has_edge(a, b)) inst.fill.push_back({a, b});
    }
    for (auto [a, b] : g.edges())
        if (!h.has_edge(a, b))
            throw std::invalid_argument("completion: H is missing an edge of G");
    return inst;
}

FillEdgeType classify_fill_edge(const CompletionInstance& inst, std::pair<int, int> e) {
    auto seps = minimal_separators(inst.h);
    auto [v, w] = e;
    // type I: some nucleus contains both endpoints
    for (auto& ms : seps) {
        for (auto& comp : ms.components) {
            auto nuc = nucleus(inst.h, ms.separator, comp);
            std::set<int> ns(nuc.begin(), nuc.end());
            if (ns.count(v) && ns.count(w)) return {1, ms.separator, nuc};
        }
    }
    // spanning pairs: one endpoint in S, the other in a nucleus of S
    bool any_span = false;
    bool all_survive = true;
    FillEdgeType second_witness;
    Graph h_minus = inst.h;
    h_minus.remove_edge(v, w);
    for (auto& ms : seps) {
        std::set<int> sep(ms.separator.begin(), ms.separator.end());
        for (auto& comp : ms.components) {
            auto nuc = nucleus(inst.h, ms.separator, comp);
            std::set<int> ns(nuc.begin(), nuc.end());
            bool span = (sep.count(v) && ns.count(w)) || (sep.count(w) && ns.count(v));
            if (!span) continue;
            any_span = true;
            // nuclear orderability of this nucleus after deleting e, with S and
            // A fixed from H
            if (!nuclear_ordering(h_minus, nuc, ms.separator)) {
                all_survive = false;
                second_witness = {2, ms.separator, nuc};
            }
        }
    }
    if (any_span && !all_survive) return second_witness;
    if (any_span) return {3, {}, {}};
    return {4, {}, {}};
}

NecessaryConditionReport check_necessary_condition(const CompletionInstance& inst) {
    NecessaryConditionReport rep;
    for (auto& e : inst.fill) {
        auto t = classify_fill_edge(inst, e);
        if (t.type != 1 && t.type != 2) {
            rep.failing_edge = e;
            rep.failing_type = t.type;
            return rep;
        }
    }
    rep.pass = true;
    return rep;
}

MinimalityReport is_minimal_completion(const CompletionInstance& inst, int budget) {
    MinimalityReport rep;
    int f = int(inst.fill.size());
    if (f > budget) throw std::invalid_argument("fill set exceeds the minimality budget");
    if (!is_proper_interval(inst.h).proper_interval)
        throw std::invalid_argument("H is not a proper interval completion");
    // increasing-cardinality subsets of F, early exit on the first proper
    // subset that still yields a proper interval graph
    for (int size = 0; size < f; size++) {
        std::vector<int> pick(size);
        std::function<bool(int, int)> go = [&](int start, int depth) -> bool {
            if (depth == size) {
                Graph h2 = inst.g;
                for (int idx : pick) h2.add_edge(inst.fill[idx].first, inst.fill[idx].second);
                if (is_proper_interval(h2).proper_interval) {
                    for (int idx : pick) rep.removable.push_back(inst.fill[idx]);
                    return true;
                }
                return false;
            }
            for (int i = start; i < f; i++) {
                pick[depth] = i;
                if (go(i + 1, depth + 1)) return true;
            }
            return false;
        };
        if (go(0, 0)) return rep; // rep.minimal stays false; removable = kept subset
    }
    rep.minimal = true;
    return rep;
}

} // namespace circletk
