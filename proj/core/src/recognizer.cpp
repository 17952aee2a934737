#include "circletk/recognizer.hpp"

#include "circletk/c1p.hpp"
#include "circletk/families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace circletk {

std::optional<std::pair<std::string, std::vector<int>>> find_forbidden_witness(const Graph& g) {
    auto catalog = forbidden_catalog_upto(g.n);
    std::stable_sort(catalog.begin(), catalog.end(),
                     [](const auto& a, const auto& b) { return a.second.n < b.second.n; });
    for (auto& [label, pat] : catalog) {
        if (auto w = find_induced(g, pat)) return std::make_pair(label, *w);
    }
    return std::nullopt;
}

namespace {

// Is (inside, outside) a genuine split: crossing edges form a complete join
// between the boundary sets?
bool valid_split_cut(const Graph& g, const std::vector<int>& inside) {
    std::vector<bool> in(g.n, false);
    for (int v : inside) in[v] = true;
    std::vector<int> boundary_in;
    for (int v : inside) {
        bool touches = false;
        for (int u : g.neighbors(v))
            if (!in[u]) touches = true;
        if (touches) boundary_in.push_back(v);
    }
    for (int x = 0; x < g.n; x++) {
        if (in[x]) continue;
        bool touches = false;
        for (int u : g.neighbors(x))
            if (in[u]) touches = true;
        if (!touches) continue;
        for (int b : boundary_in)
            if (!g.has_edge(x, b)) return false;
    }
    return true;
}

struct CutFactors {
    Graph f1, f2;
    std::vector<int> f1_vertices, f2_vertices; // image in g
    int marker1 = -1, marker2 = -1;            // positions of the markers
};

std::optional<CutFactors> split_factors(const Graph& g, const std::vector<int>& inside) {
    if (!valid_split_cut(g, inside)) return std::nullopt;
    std::vector<bool> in(g.n, false);
    for (int v : inside) in[v] = true;
    int rep_out = -1, rep_in = -1;
    for (int x = 0; x < g.n && rep_out < 0; x++) {
        if (in[x]) continue;
        for (int u : g.neighbors(x))
            if (in[u]) rep_out = x;
    }
    for (int v : inside) {
        bool touches = false;
        for (int u : g.neighbors(v))
            if (!in[u]) touches = true;
        if (touches) {
            rep_in = v;
            break;
        }
    }
    if (rep_out < 0 || rep_in < 0) return std::nullopt;
    CutFactors cf;
    cf.f1_vertices = inside;
    cf.f1_vertices.push_back(rep_out);
    std::sort(cf.f1_vertices.begin(), cf.f1_vertices.end());
    for (int x = 0; x < g.n; x++)
        if (!in[x]) cf.f2_vertices.push_back(x);
    cf.f2_vertices.push_back(rep_in);
    std::sort(cf.f2_vertices.begin(), cf.f2_vertices.end());
    cf.f1 = induced_subgraph(g, cf.f1_vertices);
    cf.f2 = induced_subgraph(g, cf.f2_vertices);
    for (size_t i = 0; i < cf.f1_vertices.size(); i++)
        if (cf.f1_vertices[i] == rep_out) cf.marker1 = int(i);
    for (size_t i = 0; i < cf.f2_vertices.size(); i++)
        if (cf.f2_vertices[i] == rep_in) cf.marker2 = int(i);
    return cf;
}

// Compose two factor chord models across the marker chords; verified.
std::optional<ChordModel> compose_models(const Graph& g, const CutFactors& cf,
                                         const ChordModel& m1, const ChordModel& m2) {
    // translate factor words into g vertex ids, markers become id -1
    auto translate = [](const ChordModel& m, const std::vector<int>& verts, int marker) {
        std::vector<int> w;
        for (int s : m.word) w.push_back(s == marker ? -1 : verts[s]);
        return w;
    };
    std::vector<int> w1 = translate(m1, cf.f1_vertices, cf.marker1);
    std::vector<int> w2 = translate(m2, cf.f2_vertices, cf.marker2);
    // split w2 at its two marker occurrences into alpha and beta
    std::vector<int> occ;
    for (size_t i = 0; i < w2.size(); i++)
        if (w2[i] == -1) occ.push_back(int(i));
    std::vector<int> alpha(w2.begin() + occ[0] + 1, w2.begin() + occ[1]);
    std::vector<int> beta;
    for (size_t i = occ[1] + 1; i < w2.size(); i++) beta.push_back(w2[i]);
    for (int i = 0; i < occ[0]; i++) beta.push_back(w2[i]);
    auto rev = [](std::vector<int> v) {
        std::reverse(v.begin(), v.end());
        return v;
    };
    std::vector<std::pair<std::vector<int>, std::vector<int>>> combos = {
        {alpha, beta},      {alpha, rev(beta)}, {rev(alpha), beta}, {rev(alpha), rev(beta)},
        {beta, alpha},      {beta, rev(alpha)}, {rev(beta), alpha}, {rev(beta), rev(alpha)},
    };
    for (auto& [first, second] : combos) {
        ChordModel out;
        bool used_first = false;
        for (int s : w1) {
            if (s != -1) {
                out.word.push_back(s);
                continue;
            }
            const auto& sub = used_first ? second : first;
            used_first = true;
            for (int t : sub) out.word.push_back(t);
        }
        if (verify_chord_model(g, out)) return out;
    }
    return std::nullopt;
}

std::optional<CircleCertificate> try_not_circle_witness(const Graph& g) {
    auto w = find_forbidden_witness(g);
    if (!w) return std::nullopt;
    CircleCertificate cert;
    cert.verdict = "not_circle";
    cert.witness_family = w->first;
    cert.witness_vertices = w->second;
    return cert;
}

// A matrix-side rejection must be corroborated by an induced forbidden
// subgraph; when none exists the oracle arbitrates at desk scale.
CircleCertificate not_circle_with_witness(const Graph& g, const RecognizeOptions& opts,
                                          const std::string& context) {
    if (auto cert = try_not_circle_witness(g)) return *cert;
    auto oracle = brute_force_is_circle(g, opts.oracle_budget);
    if (oracle.verdict == OracleVerdict::Circle) {
        CircleCertificate cert;
        cert.verdict = "circle";
        cert.model = oracle.model;
        return cert;
    }
    if (oracle.verdict == OracleVerdict::NotCircle) {
        CircleCertificate cert;
        cert.verdict = "not_circle";
        cert.witness_family = "unidentified";
        return cert;
    }
    throw std::logic_error("recognizer: " + context +
                           ", but no forbidden induced subgraph was found");
}

CircleCertificate recognize_impl(const Graph& g, const RecognizeOptions& opts, int depth);

CircleCertificate recognize_via_decomposition(const Graph& g, const std::vector<int>& inside,
                                              const RecognizeOptions& opts, int depth,
                                              const std::string& context) {
    auto cf = split_factors(g, inside);
    if (!cf || int(cf->f1_vertices.size()) >= g.n || int(cf->f2_vertices.size()) >= g.n) {
        // the documented cut is not a clean split here: decide by catalog
        if (auto w = find_forbidden_witness(g)) {
            CircleCertificate cert;
            cert.verdict = "not_circle";
            cert.witness_family = w->first;
            cert.witness_vertices = w->second;
            return cert;
        }
        CircleCertificate cert;
        cert.verdict = "circle";
        auto oracle = brute_force_is_circle(g, opts.oracle_budget);
        if (oracle.verdict == OracleVerdict::Circle && oracle.model) cert.model = oracle.model;
        else cert.model_note = "model unavailable (" + context + ")";
        return cert;
    }
    auto r1 = recognize_impl(cf->f1, opts, depth + 1);
    if (r1.verdict == "not_circle") {
        CircleCertificate cert = r1;
        std::vector<int> lifted;
        for (int v : cert.witness_vertices) lifted.push_back(cf->f1_vertices[v]);
        cert.witness_vertices = lifted;
        return cert;
    }
    auto r2 = recognize_impl(cf->f2, opts, depth + 1);
    if (r2.verdict == "not_circle") {
        CircleCertificate cert = r2;
        std::vector<int> lifted;
        for (int v : cert.witness_vertices) lifted.push_back(cf->f2_vertices[v]);
        cert.witness_vertices = lifted;
        return cert;
    }
    CircleCertificate cert;
    cert.verdict = "circle";
    if (r1.model && r2.model) {
        if (auto composed = compose_models(g, *cf, *r1.model, *r2.model)) {
            cert.model = composed;
            return cert;
        }
    }
    cert.model_note = "model unavailable (" + context + ")";
    return cert;
}

CircleCertificate recognize_impl(const Graph& g, const RecognizeOptions& opts, int depth) {
    if (depth > 64) throw std::logic_error("recognizer: decomposition recursion too deep");
    auto split = split_partition(g);
    if (!split.is_split()) throw NotSplitError(*split.obstruction);
    const SplitPartition& p = *split.partition;

    auto base = find_base_subgraph(g, p);
    if (base.kind == "none") {
        // split graphs with none of the four bases are permutation graphs,
        // hence circle; the oracle supplies a model at desk scale
        CircleCertificate cert;
        cert.verdict = "circle";
        auto oracle = brute_force_is_circle(g, opts.oracle_budget);
        if (oracle.verdict == OracleVerdict::Circle && oracle.model) cert.model = oracle.model;
        else if (oracle.verdict == OracleVerdict::NotCircle)
            throw std::logic_error("recognizer: base-free split graph rejected by the oracle");
        else cert.model_note = "model unavailable (permutation case)";
        return cert;
    }

    if (base.kind == "net") {
        auto cp = partition_net(g, p, base.embedding);
        if (cp.obstruction) return not_circle_with_witness(g, opts, "net partition obstruction");
        int nonempty_even = 0;
        for (int c : {2, 4, 6})
            if (!cp.k_cells[c - 1].empty()) nonempty_even++;
        if (nonempty_even >= 2)
            throw std::logic_error("recognizer: net case with two even classes but no 4-tent found");
        // factor at a pendant whose flanking classes are empty
        int pick = -1;
        for (int i : {1, 3, 5}) {
            int left = i == 1 ? 6 : i - 1;
            int right = i + 1;
            if (cp.k_cells[left - 1].empty() && cp.k_cells[right - 1].empty()) {
                pick = i;
                break;
            }
        }
        if (pick < 0) throw std::logic_error("recognizer: net case without a factorable pendant");
        int s_base = base.embedding[3 + (pick - 1) / 2];
        // inside = K_pick plus the false twins of the base pendant
        std::set<int> nsb;
        for (int u : g.neighbors(s_base)) nsb.insert(u);
        std::vector<int> inside = cp.k_cells[pick - 1];
        for (int s : p.independent) {
            std::set<int> ns;
            for (int u : g.neighbors(s)) ns.insert(u);
            if (ns == nsb) inside.push_back(s);
        }
        std::sort(inside.begin(), inside.end());
        return recognize_via_decomposition(g, inside, opts, depth, "net reduction");
    }

    CasePartition cp;
    if (base.kind == "tent") cp = partition_tent(g, p, base.embedding);
    else if (base.kind == "4-tent") cp = partition_4tent(g, p, base.embedding);
    else cp = partition_co4tent(g, p, base.embedding);

    if (cp.obstruction)
        return not_circle_with_witness(g, opts,
                                       "partition obstruction (" + cp.obstruction->reason + ")");

    if (cp.needs_decomposition) {
        // K_2 or K_4 empty: factor across K_1 or K_5 with the private
        // independents of that class
        int c = cp.decompose_class;
        std::vector<int> inside = cp.k_cells[c - 1];
        std::set<int> kc(inside.begin(), inside.end());
        for (int s : p.independent) {
            auto nb = g.neighbors(s);
            if (nb.empty()) continue;
            bool privately_inside = true;
            for (int u : nb)
                if (!kc.count(u)) privately_inside = false;
            if (privately_inside) inside.push_back(s);
        }
        std::sort(inside.begin(), inside.end());
        return recognize_via_decomposition(g, inside, opts, depth, "co-4-tent primality reduction");
    }

    auto cm = build_case_matrices(cp, g);
    std::vector<LROrdering> orders(cp.num_classes);
    for (int c = 0; c < cp.num_classes; c++) {
        auto res = is_2nested(cm.per_class[c]);
        if (!res.two_nested)
            return not_circle_with_witness(g, opts,
                                           "class matrix " + std::to_string(c + 1) +
                                               " is not 2-nested");
        orders[c] = res.ordering;
    }
    bool unions_nested = true;
    for (auto* u : {&cm.union_red, &cm.union_blue, &cm.union_rb, &cm.union_br})
        if (!is_nested(*u).nested) unions_nested = false;
    if (!unions_nested) {
        // corroborate by an induced witness; the chord assembler below stays
        // the final arbiter when the side tables disagree with the graph
        if (auto cert = try_not_circle_witness(g)) return *cert;
    }

    auto model = build_circle_model(g, p, cp, cm, orders);
    if (!model)
        return not_circle_with_witness(g, opts, "the chord model failed to assemble");
    CircleCertificate cert;
    cert.verdict = "circle";
    cert.model = model;
    return cert;
}

} // namespace

CircleCertificate recognize(const Graph& g, const RecognizeOptions& opts) {
    return recognize_impl(g, opts, 0);
}

} // namespace circletk
