#include "circletk/suites.hpp"

#include "circletk/completion.hpp"
#include "circletk/families.hpp"
#include "circletk/oracle.hpp"
#include "circletk/recognizer.hpp"
#include "circletk/refcheck.hpp"
#include "circletk/two_nested.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace circletk {

namespace {

using Rng = std::mt19937_64;

Graph random_connected_split(Rng& rng, int n) {
    for (;;) {
        int k = 1 + int(rng() % uint64_t(n - 1));
        Graph g(n);
        for (int a = 0; a < k; a++)
            for (int b = a + 1; b < k; b++) g.add_edge(a, b);
        for (int s = k; s < n; s++) {
            for (int a = 0; a < k; a++)
                if (rng() % 2) g.add_edge(s, a);
            if (g.degree(s) == 0) g.add_edge(s, int(rng() % uint64_t(k)));
        }
        if (is_connected(g)) return g;
    }
}

// Gap-class extension of the 4-tent or co-4-tent: clique vertices seeing no
// base independent plus independents complete to the base clique, which is
// the shape that produces LR-rows in the final class matrix.
std::optional<Graph> planted_gap_split(Rng& rng, int max_n) {
    bool co = rng() % 2;
    Graph base = co ? co_four_tent() : four_tent();
    int kc = co ? 3 : 4;
    int gap_k = 1 + int(rng() % 2);
    int lr_s = 1 + int(rng() % 2);
    int n = base.n + gap_k + lr_s;
    if (n > max_n) return std::nullopt;
    Graph g(n);
    for (auto [a, b] : base.edges()) g.add_edge(a, b);
    for (int v = base.n; v < base.n + gap_k; v++) {
        for (int u = 0; u < kc; u++) g.add_edge(v, u);
        for (int u = base.n; u < v; u++) g.add_edge(v, u);
    }
    for (int v = base.n + gap_k; v < n; v++) {
        for (int u = 0; u < kc; u++) g.add_edge(v, u);
        for (int u = base.n; u < base.n + gap_k; u++)
            if (rng() % 3 == 0) g.add_edge(v, u);
        if (rng() % 4 == 0)
            for (int u = kc; u < base.n; u++)
                if (rng() % 2) g.add_edge(v, u);
    }
    if (!is_connected(g) || !split_partition(g).is_split()) return std::nullopt;
    return g;
}

// Split extension of one of the four base graphs; these weight the recognizer
// paths that plain random split graphs rarely reach.
std::optional<Graph> planted_split(Rng& rng, int max_n) {
    Graph bases[4] = {tent(), four_tent(), co_four_tent(), net()};
    const Graph& base = bases[rng() % 4];
    int kc = (base.n == 7 && base.has_edge(0, 3)) ? 4 : 3; // clique side size
    int extra_k = int(rng() % 3), extra_s = int(rng() % 3);
    int n = base.n + extra_k + extra_s;
    if (n > max_n) return std::nullopt;
    Graph g(n);
    for (auto [a, b] : base.edges()) g.add_edge(a, b);
    for (int v = base.n; v < base.n + extra_k; v++) {
        for (int u = 0; u < kc; u++) g.add_edge(v, u);
        for (int u = base.n; u < v; u++) g.add_edge(v, u);
        for (int u = kc; u < base.n; u++)
            if (rng() % 2) g.add_edge(v, u);
    }
    for (int v = base.n + extra_k; v < n; v++) {
        for (int u = 0; u < kc; u++)
            if (rng() % 2) g.add_edge(v, u);
        for (int u = base.n; u < base.n + extra_k; u++)
            if (rng() % 2) g.add_edge(v, u);
        if (g.degree(v) == 0) g.add_edge(v, int(rng() % kc));
    }
    if (!is_connected(g) || !split_partition(g).is_split()) return std::nullopt;
    return g;
}

std::vector<Graph> all_connected_split_upto(int maxn) {
    std::vector<Graph> out;
    std::set<std::string> seen;
    for (int n = 1; n <= maxn; n++) {
        for (int k = 1; k <= n; k++) {
            int s = n - k;
            long bits = long(k) * s;
            if (bits > 20) continue;
            for (long mask = 0; mask < (1L << bits); mask++) {
                Graph g(n);
                for (int a = 0; a < k; a++)
                    for (int b = a + 1; b < k; b++) g.add_edge(a, b);
                bool ok = true;
                for (int i = 0; i < s; i++) {
                    int deg = 0;
                    for (int a = 0; a < k; a++)
                        if ((mask >> (long(i) * k + a)) & 1) {
                            g.add_edge(k + i, a);
                            deg++;
                        }
                    if (deg == 0) ok = false; // disconnected
                }
                if (!ok || !is_connected(g)) continue;
                auto cf = canonical_form(g);
                if (seen.insert(cf).second) out.push_back(g);
            }
        }
    }
    return out;
}

bool witness_matches_catalog(const Graph& g, const std::string& family,
                             const std::vector<int>& vertices) {
    auto catalog = forbidden_catalog_upto(g.n);
    for (auto& [label, pat] : catalog) {
        if (label != family) continue;
        if (int(vertices.size()) != pat.n) return false;
        for (int a = 0; a < pat.n; a++)
            for (int b = a + 1; b < pat.n; b++)
                if (pat.has_edge(a, b) != g.has_edge(vertices[a], vertices[b])) return false;
        return true;
    }
    return false;
}

SuiteResult suite_oracle_agreement(uint64_t seed) {
    SuiteResult res{"oracle-agreement", true, 0, 0, ""};
    auto corpus = all_connected_split_upto(7);
    Rng rng(seed);
    for (int i = 0; i < 500; i++) corpus.push_back(random_connected_split(rng, 8 + int(rng() % 2)));
    int planted = 0;
    while (planted < 300) {
        if (auto g = planted_split(rng, 9)) {
            corpus.push_back(*g);
            planted++;
        }
    }
    int gap_planted = 0;
    while (gap_planted < 150) {
        if (auto g = planted_gap_split(rng, 9)) {
            corpus.push_back(*g);
            gap_planted++;
        }
    }
    std::ostringstream detail;
    for (auto& g : corpus) {
        auto cert = recognize(g);
        auto oracle = brute_force_is_circle(g, 9);
        res.checked++;
        bool agree = (cert.verdict == "circle" && oracle.verdict == OracleVerdict::Circle) ||
                     (cert.verdict == "not_circle" && oracle.verdict == OracleVerdict::NotCircle);
        if (!agree) {
            res.failures++;
            if (res.failures <= 3)
                detail << " disagreement on n=" << g.n << " graph " << graph_to_json(g) << ";";
        }
    }
    res.pass = res.failures == 0;
    res.detail = detail.str();
    return res;
}

SuiteResult suite_certificate_soundness(uint64_t seed) {
    SuiteResult res{"certificate-soundness", true, 0, 0, ""};
    auto corpus = all_connected_split_upto(6);
    Rng rng(seed);
    for (int i = 0; i < 300; i++) corpus.push_back(random_connected_split(rng, 7 + int(rng() % 3)));
    int planted = 0;
    while (planted < 200) {
        if (auto g = planted_split(rng, 9)) {
            corpus.push_back(*g);
            planted++;
        }
    }
    for (auto& g : corpus) {
        auto cert = recognize(g);
        res.checked++;
        if (cert.verdict == "circle") {
            if (!cert.model || !verify_chord_model(g, *cert.model)) {
                if (cert.model || cert.model_note.empty()) res.failures++;
            }
        } else {
            bool induced_ok = witness_matches_catalog(g, cert.witness_family, cert.witness_vertices);
            if (!induced_ok) res.failures++;
            if (int(cert.witness_vertices.size()) <= 9) {
                Graph w = induced_subgraph(g, cert.witness_vertices);
                if (brute_force_is_circle(w, 9).verdict != OracleVerdict::NotCircle) res.failures++;
            }
        }
    }
    res.pass = res.failures == 0;
    return res;
}

SuiteResult suite_appendix_replay(uint64_t) {
    SuiteResult res{"appendix-replay", true, 0, 0, ""};
    std::ostringstream detail;
    for (auto& name : replay_catalog_names(9)) {
        auto rep = replay_appendix_sequence(name);
        res.checked++;
        if (!rep.ok) {
            res.failures++;
            detail << " " << name << " failed;";
        }
    }
    // oracle confirmation on catalog members with at most 9 vertices
    for (auto& [label, g] : forbidden_catalog_upto(9)) {
        res.checked++;
        if (brute_force_is_circle(g, 9).verdict != OracleVerdict::NotCircle) {
            res.failures++;
            detail << " catalog " << label << " not rejected by the oracle;";
        }
    }
    res.pass = res.failures == 0;
    res.detail = detail.str();
    return res;
}

void enumerate_row_multisets(int rows, int cols,
                             const std::function<void(const Matrix01&)>& cb) {
    Matrix01 m(rows, std::vector<uint8_t>(cols, 0));
    std::function<void(int, uint32_t)> go = [&](int r, uint32_t minrow) {
        if (r == rows) {
            cb(m);
            return;
        }
        for (uint32_t bits = minrow; bits < (uint32_t(1) << cols); bits++) {
            for (int c = 0; c < cols; c++) m[r][c] = (bits >> c) & 1;
            go(r + 1, bits);
        }
    };
    go(0, 0);
}

bool verify_tucker_witness(const Matrix01& m, const PatternWitness& w) {
    auto pat = pattern_by_name(w.family, w.k, w.l);
    if (!pat) return false;
    if (w.rows.size() != pat->rows.size() || w.cols.size() != size_t(pat->cols)) return false;
    for (size_t i = 0; i < w.rows.size(); i++)
        for (size_t j = 0; j < w.cols.size(); j++)
            if (m[w.rows[i]][w.cols[j]] != pat->rows[i].bits[j]) return false;
    return true;
}

SuiteResult suite_tucker_equivalence(uint64_t seed) {
    SuiteResult res{"tucker-equivalence", true, 0, 0, ""};
    // exhaustive up to 5x5 (as row multisets; both checks are invariant under
    // row permutation)
    for (int c = 1; c <= 5 && res.failures == 0; c++) {
        for (int r = 1; r <= 5 && res.failures == 0; r++) {
            enumerate_row_multisets(r, c, [&](const Matrix01& m) {
                if (res.failures) return;
                res.checked++;
                auto c1p = has_c1p(m);
                auto tucker = find_tucker(m);
                if (c1p.order.has_value() == tucker.has_value()) res.failures++;
                if (c1p.order && !refcheck::ordering_consecutive(m, *c1p.order)) res.failures++;
                if (c1p.tucker && !verify_tucker_witness(m, *c1p.tucker)) res.failures++;
            });
        }
    }
    Rng rng(seed);
    for (int t = 0; t < 1000 && res.failures == 0; t++) {
        int r = 1 + int(rng() % 8), c = 1 + int(rng() % 8);
        Matrix01 m(r, std::vector<uint8_t>(c));
        for (auto& row : m)
            for (auto& x : row) x = rng() % 2;
        res.checked++;
        auto c1p = has_c1p(m);
        auto tucker = find_tucker(m);
        if (c1p.order.has_value() == tucker.has_value()) res.failures++;
        if (c1p.order && !refcheck::ordering_consecutive(m, *c1p.order)) res.failures++;
        if (c1p.tucker && !verify_tucker_witness(m, *c1p.tucker)) res.failures++;
    }
    res.pass = res.failures == 0;
    return res;
}

SuiteResult suite_nested_equivalence(uint64_t) {
    SuiteResult res{"nested-equivalence", true, 0, 0, ""};
    for (int c = 1; c <= 24 && res.failures == 0; c++) {
        for (int r = 1; r * c <= 24 && res.failures == 0; r++) {
            enumerate_row_multisets(r, c, [&](const Matrix01& m) {
                if (res.failures) return;
                res.checked++;
                auto nested = is_nested(m);
                bool gem = refcheck::has_zero_gem(m);
                if (nested.nested == gem) {
                    res.failures++;
                    return;
                }
                if (nested.nested) {
                    if (!nested.order || !refcheck::ordering_consecutive(m, *nested.order))
                        res.failures++;
                }
            });
        }
    }
    res.pass = res.failures == 0;
    return res;
}

EnrichedMatrix random_enriched(Rng& rng, int max_dim) {
    int r = 1 + int(rng() % max_dim), c = 1 + int(rng() % max_dim);
    EnrichedMatrix m(r, c);
    int density = 30 + int(rng() % 50);
    RowColor empty_lr = rng() % 2 ? RowColor::Red : RowColor::Blue;
    for (int i = 0; i < r; i++) {
        int pick = int(rng() % 10);
        m.label[i] = pick < 5 ? RowLabel::U
                   : pick < 7 ? RowLabel::L
                   : pick < 9 ? RowLabel::R
                              : RowLabel::LR;
        for (int j = 0; j < c; j++) m.a[i][j] = int(rng() % 100) < density;
        if (m.label[i] == RowLabel::L || m.label[i] == RowLabel::R) {
            int cp = int(rng() % 3);
            m.color[i] = cp == 0 ? RowColor::None : (cp == 1 ? RowColor::Red : RowColor::Blue);
        } else if (m.label[i] == RowLabel::LR && m.row_empty(i)) {
            if (rng() % 2) m.color[i] = empty_lr;
        }
    }
    return m;
}

SuiteResult suite_two_nested_bruteforce(uint64_t seed) {
    SuiteResult res{"two-nested-bruteforce", true, 0, 0, ""};
    Rng rng(seed);
    std::ostringstream detail;
    for (int t = 0; t < 300; t++) {
        auto m = random_enriched(rng, 6);
        res.checked++;
        auto mine = is_2nested(m);
        bool ref = refcheck::two_nested_exhaustive(m);
        if (mine.two_nested != ref) {
            res.failures++;
            if (res.failures <= 3)
                detail << " mismatch (mine=" << mine.two_nested << ") on\n"
                       << format_enriched_matrix(m);
            continue;
        }
        if (mine.two_nested) {
            if (verify_bicoloring(m, mine.ordering, mine.coloring)) res.failures++;
        }
    }
    res.pass = res.failures == 0;
    res.detail = detail.str();
    return res;
}

SuiteResult suite_coloring_extension(uint64_t seed) {
    SuiteResult res{"coloring-extension", true, 0, 0, ""};
    Rng rng(seed);
    int made = 0;
    while (made < 500) {
        int n = 2 + int(rng() % 11);
        Graph g(n);
        int density = 20 + int(rng() % 50);
        for (int a = 0; a < n; a++)
            for (int b = a + 1; b < n; b++)
                if (int(rng() % 100) < density) g.add_edge(a, b);
        if (!is_connected(g)) continue;
        std::vector<RowColor> pre(n, RowColor::None);
        for (int v = 0; v < n; v++) {
            int r = int(rng() % 10);
            if (r < 2) pre[v] = RowColor::Red;
            else if (r < 4) pre[v] = RowColor::Blue;
        }
        bool improper = false;
        for (auto [a, b] : g.edges())
            if (pre[a] != RowColor::None && pre[a] == pre[b]) improper = true;
        if (improper) continue;
        made++;
        res.checked++;
        auto out = extend_partial_2coloring(g, pre);
        bool ref = refcheck::coloring_extendable_exhaustive(g, pre);
        if (out.coloring.has_value() != ref) {
            res.failures++;
            continue;
        }
        if (out.coloring) {
            for (auto [a, b] : g.edges())
                if ((*out.coloring)[a] == (*out.coloring)[b]) res.failures++;
            for (int v = 0; v < n; v++)
                if (pre[v] != RowColor::None && (*out.coloring)[v] != pre[v]) res.failures++;
        } else if (out.obstruction) {
            // validate the returned shape
            auto& ob = *out.obstruction;
            auto& vs = ob.vertices;
            bool ok = true;
            bool cycle = ob.kind >= 3;
            int len = int(vs.size());
            for (int i = 0; i < len && ok; i++)
                for (int j = i + 1; j < len && ok; j++) {
                    bool want = (j == i + 1) || (cycle && i == 0 && j == len - 1);
                    if (g.has_edge(vs[i], vs[j]) != want) ok = false;
                }
            int colored = 0;
            for (int v : vs)
                if (pre[v] != RowColor::None) colored++;
            switch (ob.kind) {
                case 1:
                    ok = ok && len % 2 == 0 && colored == 2 && pre[vs.front()] == pre[vs.back()] &&
                         pre[vs.front()] != RowColor::None;
                    break;
                case 2:
                    ok = ok && len % 2 == 1 && colored == 2 &&
                         pre[vs.front()] != RowColor::None && pre[vs.back()] != RowColor::None &&
                         pre[vs.front()] != pre[vs.back()];
                    break;
                case 3: ok = ok && len % 2 == 1 && colored == 0; break;
                case 4: ok = ok && len % 2 == 1 && colored == 1; break;
                case 5: ok = ok && len == 3 && colored == 2; break;
                default: ok = false;
            }
            if (ok && ob.kind <= 2) {
                for (size_t i = 1; i + 1 < vs.size(); i++)
                    if (pre[vs[i]] != RowColor::None) ok = false;
            }
            if (!ok) res.failures++;
        } else {
            res.failures++;
        }
    }
    res.pass = res.failures == 0;
    return res;
}

Graph example_one_graph() {
    // tent plus a clique class of four and four private independents
    Graph g(14);
    for (int a = 0; a < 7; a++)
        for (int b = a + 1; b < 7; b++) g.add_edge(a, b); // k1,k3,k5,k21..k24
    int k1 = 0, k3 = 1, k5 = 2;
    int s13 = 7, s35 = 8, s51 = 9;
    g.add_edge(s13, k1);
    g.add_edge(s13, k3);
    for (int kq = 3; kq <= 6; kq++) g.add_edge(s13, kq);
    g.add_edge(s35, k3);
    g.add_edge(s35, k5);
    g.add_edge(s51, k5);
    g.add_edge(s51, k1);
    g.add_edge(10, 3);
    g.add_edge(10, 4); // s1 ~ k21 k22
    g.add_edge(11, 3);
    g.add_edge(11, 4);
    g.add_edge(11, 5); // s2 ~ k21 k22 k23
    g.add_edge(12, 4);
    g.add_edge(12, 5); // s3 ~ k22 k23
    g.add_edge(13, 3); // s4 ~ k21
    return g;
}

Graph example_two_graph() {
    Graph g1 = example_one_graph();
    Graph g(17);
    for (auto [a, b] : g1.edges()) g.add_edge(a, b);
    // s5 ~ k1, k21, k22, k23; s6 ~ k1, k5, k21; s7 ~ k3, k5, k22, k23, k24
    g.add_edge(14, 0);
    g.add_edge(14, 3);
    g.add_edge(14, 4);
    g.add_edge(14, 5);
    g.add_edge(15, 0);
    g.add_edge(15, 2);
    g.add_edge(15, 3);
    g.add_edge(16, 1);
    g.add_edge(16, 2);
    g.add_edge(16, 4);
    g.add_edge(16, 5);
    g.add_edge(16, 6);
    return g;
}

SuiteResult suite_worked_examples(uint64_t) {
    SuiteResult res{"worked-examples", true, 0, 0, ""};
    std::ostringstream detail;
    auto fail = [&](const std::string& what) {
        res.failures++;
        detail << " " << what << ";";
    };
    {
        Graph g = example_one_graph();
        res.checked++;
        auto cert = recognize(g);
        if (cert.verdict != "circle" || !cert.model || !verify_chord_model(g, *cert.model))
            fail("first worked example not recognized with a verified model");
    }
    {
        Graph h = example_two_graph();
        res.checked++;
        auto split = split_partition(h);
        auto base = find_base_subgraph(h, *split.partition);
        auto cp = partition_tent(h, *split.partition, base.embedding);
        if (cp.obstruction) fail("second worked example: partition obstruction");
        else {
            auto cm = build_case_matrices(cp, h);
            // class 2 matrix must equal the documented enriched matrix up to
            // row order (columns are k21..k24 in ascending id order)
            std::multiset<std::string> got, want;
            const EnrichedMatrix& a2 = cm.per_class[1];
            for (int i = 0; i < a2.rows; i++) {
                std::string row = to_string(a2.label[i]) + "/" + to_string(a2.color[i]) + "/";
                for (int j = 0; j < a2.cols; j++) row += char('0' + a2.a[i][j]);
                got.insert(row);
            }
            for (auto s : {"U/-/1100", "U/-/1110", "U/-/0110", "U/-/1000", "L/red/1110",
                           "L/blue/1000", "R/blue/0111"})
                want.insert(s);
            if (got != want) fail("second worked example: class-2 matrix differs");
            auto cert = recognize(h);
            if (cert.verdict != "circle" || !cert.model || !verify_chord_model(h, *cert.model))
                fail("second worked example not recognized with a verified model");
        }
    }
    {
        res.checked++;
        Graph g = a_double_prime_3();
        for (int label : {5, 9, 8, 1, 2}) g = local_complement(g, label - 1);
        std::vector<int> set_labels = {5, 3, 4, 6, 7, 8};
        std::vector<int> vs;
        for (int l : set_labels) vs.push_back(l - 1);
        Graph sub = induced_subgraph(g, vs);
        if (!isomorphic(sub, wheel(5))) fail("local-complement regression: W5 set mismatch");
    }
    res.pass = res.failures == 0;
    res.detail = detail.str();
    return res;
}

namespace completion_suite {

Graph random_interval_graph(Rng& rng, int n) {
    // random intervals on a line
    std::vector<std::pair<int, int>> iv(n);
    for (int i = 0; i < n; i++) {
        int a = int(rng() % (2 * uint64_t(n)));
        int b = int(rng() % (2 * uint64_t(n)));
        iv[i] = {std::min(a, b), std::max(a, b)};
    }
    Graph g(n);
    for (int a = 0; a < n; a++)
        for (int b = a + 1; b < n; b++)
            if (iv[a].first <= iv[b].second && iv[b].first <= iv[a].second) g.add_edge(a, b);
    return g;
}

// Enumerate proper-interval completions by branching on an obstruction's
// internal non-edges; every minimal completion is reachable this way.
void enumerate_completions(const Graph& g, std::set<std::string>& seen,
                           std::vector<Graph>& leaves, int depth_budget) {
    auto key = graph_to_json(g);
    if (!seen.insert(key).second) return;
    auto check = is_proper_interval(g);
    if (check.proper_interval) {
        leaves.push_back(g);
        return;
    }
    if (depth_budget <= 0) return;
    std::vector<int> obstruction;
    if (!check.hole.empty()) obstruction = check.hole;
    else if (!check.claw.empty()) obstruction = check.claw;
    else if (check.at) {
        // replace the AT by a local structure: adding edges inside the triple
        // or toward it is necessary to break chordal+AT-freeness; fall back to
        // net/tent detection for a finite branch set
        if (auto w = find_induced(g, net())) obstruction = *w;
        else if (auto w2 = find_induced(g, tent())) obstruction = *w2;
        else obstruction = {check.at->at(0), check.at->at(1), check.at->at(2)};
    }
    for (size_t x = 0; x < obstruction.size(); x++)
        for (size_t y = x + 1; y < obstruction.size(); y++) {
            int a = obstruction[x], b = obstruction[y];
            if (g.has_edge(a, b)) continue;
            Graph h = g;
            h.add_edge(a, b);
            enumerate_completions(h, seen, leaves, depth_budget - 1);
        }
}

} // namespace completion_suite

SuiteResult suite_completion_theorem(uint64_t seed) {
    SuiteResult res{"completion-theorem", true, 0, 0, ""};
    Rng rng(seed);
    std::ostringstream detail;
    int instances = 0;
    while (instances < 200) {
        int n = 4 + int(rng() % 5); // up to 8
        Graph g = completion_suite::random_interval_graph(rng, n);
        if (!is_connected(g)) continue;
        if (!is_interval(g).interval) continue;
        instances++;
        std::set<std::string> seen;
        std::vector<Graph> leaves;
        completion_suite::enumerate_completions(g, seen, leaves, 12);
        for (auto& h : leaves) {
            auto inst = make_completion(g, h);
            if (int(inst.fill.size()) > 14) continue;
            auto min = is_minimal_completion(inst, 14);
            if (!min.minimal) continue;
            res.checked++;
            auto rep = check_necessary_condition(inst);
            if (!rep.pass) {
                res.failures++;
                if (res.failures <= 3)
                    detail << " type-" << rep.failing_type << " fill edge in a minimal completion;";
            }
        }
    }
    // structural properties on proper interval graphs
    int sampled = 0;
    while (sampled < 80) {
        int n = 4 + int(rng() % 6); // up to 9
        Graph g = completion_suite::random_interval_graph(rng, n);
        if (!is_connected(g) || !is_proper_interval(g).proper_interval) continue;
        sampled++;
        res.checked++;
        for (auto& ms : minimal_separators(g)) {
            if (ms.components.size() != 2) {
                res.failures++;
                detail << " separator with " << ms.components.size() << " components;";
            }
            std::vector<std::vector<int>> nuclei;
            for (auto& comp : ms.components) nuclei.push_back(nucleus(g, ms.separator, comp));
            if (ms.separator.size() > 1) {
                for (auto& nu : nuclei)
                    for (size_t a = 0; a < nu.size(); a++)
                        for (size_t b = a + 1; b < nu.size(); b++)
                            if (!g.has_edge(nu[a], nu[b])) res.failures++;
            }
            for (auto& nu : nuclei)
                if (!nuclear_ordering(g, nu, ms.separator)) res.failures++;
            if (nuclei.size() == 2 && !bi_ordering(g, ms.separator, nuclei[0], nuclei[1]))
                res.failures++;
        }
    }
    res.pass = res.failures == 0;
    res.detail = detail.str();
    return res;
}

SuiteResult suite_determinism(uint64_t seed) {
    SuiteResult res{"determinism", true, 0, 0, ""};
    auto render = [&]() {
        Rng rng(seed);
        std::ostringstream out;
        for (int t = 0; t < 40; t++) {
            Graph g = random_connected_split(rng, 5 + int(rng() % 5));
            auto cert = recognize(g);
            out << cert.verdict << "|";
            if (cert.model)
                for (int s : cert.model->word) out << s << ",";
            out << cert.witness_family << "|";
            for (int v : cert.witness_vertices) out << v << ",";
            out << "\n";
        }
        for (int t = 0; t < 40; t++) {
            auto m = random_enriched(rng, 5);
            auto r = is_2nested(m);
            out << r.two_nested << "|";
            if (r.two_nested) {
                for (int c : r.ordering.order) out << c << ",";
                out << "|";
                for (auto c : r.coloring.left) out << to_string(c) << ",";
                for (auto c : r.coloring.right) out << to_string(c) << ",";
            } else if (r.fail && r.fail->pattern) {
                out << r.fail->pattern->family;
            }
            out << "\n";
        }
        return out.str();
    };
    auto first = render();
    auto second = render();
    res.checked = 2;
    res.pass = first == second;
    if (!res.pass) res.failures = 1;
    return res;
}

} // namespace

std::vector<std::string> suite_names() {
    return {"oracle-agreement",      "certificate-soundness", "appendix-replay",
            "tucker-equivalence",    "nested-equivalence",    "two-nested-bruteforce",
            "coloring-extension",    "worked-examples",       "completion-theorem",
            "determinism"};
}

SuiteResult run_suite(const std::string& name, uint64_t seed) {
    if (name == "oracle-agreement") return suite_oracle_agreement(seed);
    if (name == "certificate-soundness") return suite_certificate_soundness(seed);
    if (name == "appendix-replay") return suite_appendix_replay(seed);
    if (name == "tucker-equivalence") return suite_tucker_equivalence(seed);
    if (name == "nested-equivalence") return suite_nested_equivalence(seed);
    if (name == "two-nested-bruteforce") return suite_two_nested_bruteforce(seed);
    if (name == "coloring-extension") return suite_coloring_extension(seed);
    if (name == "worked-examples") return suite_worked_examples(seed);
    if (name == "completion-theorem") return suite_completion_theorem(seed);
    if (name == "determinism") return suite_determinism(seed);
    SuiteResult res;
    res.name = name;
    res.detail = "unknown suite";
    return res;
}

} // namespace circletk
