// Command-line front end: recognizer, matrix checks, oracle, completion
// analysis and the verification suites.
//
// Exit codes: 0 definitive verdict, 2 input error, 3 budget/inconclusive.

#include "circletk/completion.hpp"
#include "circletk/oracle.hpp"
#include "circletk/recognizer.hpp"
#include "circletk/suites.hpp"
#include "circletk/two_nested.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace circletk;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json witness_json(const PatternWitness& w) {
    json j;
    j["family"] = w.family;
    if (w.k > 0) j["k"] = w.k;
    if (w.l >= 0) j["l"] = w.l;
    j["rows"] = w.rows;
    j["cols"] = w.cols;
    return j;
}

json gem_json(const GemWitness& g) {
    return json{{"kind", g.kind}, {"rows", {g.row1, g.row2}}, {"cols", g.cols}};
}

json fail_json(const MatrixCheckFail& f) {
    json j;
    j["detail"] = f.detail;
    if (f.pattern) j["witness"] = witness_json(*f.pattern);
    if (f.gem) j["gem"] = gem_json(*f.gem);
    return j;
}

json ordering_json(const LROrdering& ord) {
    json j;
    j["columns"] = ord.order;
    json splits = json::array();
    for (size_t i = 0; i < ord.full_lr_split.size(); i++)
        if (ord.full_lr_split[i] >= 0) splits.push_back({{"row", i}, {"split", ord.full_lr_split[i]}});
    if (!splits.empty()) j["full_lr_splits"] = splits;
    return j;
}

json coloring_json(const EnrichedMatrix& m, const BlockBicoloring& col) {
    json rows = json::array();
    for (int i = 0; i < m.rows; i++) {
        json r;
        r["row"] = i;
        r["label"] = to_string(m.label[i]);
        if (col.left[i] != RowColor::None) r["left"] = to_string(col.left[i]);
        if (col.right[i] != RowColor::None) r["right"] = to_string(col.right[i]);
        rows.push_back(r);
    }
    return rows;
}

int cmd_recognize(const std::string& path, int budget, bool text) {
    Graph g;
    try {
        g = parse_graph(slurp(path));
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    RecognizeOptions opts;
    opts.oracle_budget = budget;
    try {
        auto cert = recognize(g, opts);
        json out;
        out["verdict"] = cert.verdict;
        if (cert.model) out["model"] = cert.model->word;
        if (!cert.model_note.empty()) out["model_note"] = cert.model_note;
        if (cert.verdict == "not_circle") {
            out["witness"] = {{"family", cert.witness_family}, {"vertices", cert.witness_vertices}};
            if (cert.witness_k > 0) out["witness"]["k"] = cert.witness_k;
        }
        if (text) {
            std::cout << cert.verdict;
            if (cert.verdict == "not_circle") std::cout << " (" << cert.witness_family << ")";
            std::cout << "\n";
        } else {
            std::cout << out.dump(2) << "\n";
        }
        return 0;
    } catch (const NotSplitError& e) {
        json out;
        out["error"] = "not_split";
        out["witness"] = {{"kind", e.witness.kind}, {"vertices", e.witness.vertices}};
        std::cout << out.dump(2) << "\n";
        return 2;
    }
}

int cmd_matrix(const std::string& path, const std::string& check, bool /*text*/) {
    EnrichedMatrix m;
    try {
        m = parse_enriched_matrix(slurp(path));
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    json out;
    out["check"] = check;
    if (check == "c1p") {
        auto res = has_c1p(m.a);
        if (res.order) {
            out["result"] = true;
            out["ordering"] = *res.order;
        } else {
            out["result"] = false;
            out["witness"] = witness_json(*res.tucker);
        }
    } else if (check == "nested") {
        auto res = is_nested(m.a);
        out["result"] = res.nested;
        if (res.nested) out["ordering"] = *res.order;
        else out["gem"] = {{"rows", res.gem_rows}, {"cols", res.gem_cols}};
    } else if (check == "admissible") {
        auto w = find_admissibility_witness(m);
        out["result"] = !w.has_value();
        if (w) out["witness"] = witness_json(*w);
    } else if (check == "lr") {
        auto res = is_lr_orderable(m);
        out["result"] = res.ordering.has_value();
        if (res.ordering) out["ordering"] = ordering_json(*res.ordering);
        else out["witness"] = witness_json(*res.witness);
    } else if (check == "partial") {
        auto res = is_partially_2nested(m);
        out["result"] = res.ok;
        if (!res.ok) out["fail"] = fail_json(*res.fail);
    } else if (check == "2nested") {
        auto res = is_2nested(m);
        out["result"] = res.two_nested;
        if (res.two_nested) {
            out["ordering"] = ordering_json(res.ordering);
            out["blocks"] = coloring_json(m, res.coloring);
        } else if (res.fail) {
            out["fail"] = fail_json(*res.fail);
        }
    } else {
        std::cerr << "unknown matrix check '" << check << "'\n";
        return 2;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_oracle(const std::string& path, int budget, long orbit_budget) {
    Graph g;
    try {
        g = parse_graph(slurp(path));
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    auto res = brute_force_is_circle(g, budget);
    json out;
    if (res.verdict == OracleVerdict::Circle) {
        out["verdict"] = "circle";
        out["model"] = res.model->word;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (res.verdict == OracleVerdict::NotCircle) {
        // report the locally-equivalent forbidden target as well
        auto orbit = bouchet_orbit_check(g, orbit_budget);
        out["verdict"] = "not_circle";
        if (orbit.verdict == OracleVerdict::NotCircle) {
            out["via"] = "bouchet";
            out["sequence"] = orbit.complement_sequence;
            out["target"] = orbit.forbidden_target;
            out["target_vertices"] = orbit.forbidden_vertices;
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    out["verdict"] = "inconclusive";
    out["note"] = res.note;
    std::cout << out.dump(2) << "\n";
    return 3;
}

int cmd_completion(const std::string& gpath, const std::string& hpath, int budget) {
    Graph g, h;
    try {
        g = parse_graph(slurp(gpath));
        h = parse_graph(slurp(hpath));
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    json out;
    try {
        auto inst = make_completion(g, h);
        auto piv = is_proper_interval(h);
        if (!piv.proper_interval) {
            out["error"] = "H is not proper interval";
            if (!piv.hole.empty()) out["witness"] = {{"kind", "hole"}, {"vertices", piv.hole}};
            else if (piv.at)
                out["witness"] = {{"kind", "asteroidal-triple"},
                                  {"vertices", {piv.at->at(0), piv.at->at(1), piv.at->at(2)}}};
            else out["witness"] = {{"kind", "claw"}, {"vertices", piv.claw}};
            std::cout << out.dump(2) << "\n";
            return 2;
        }
        json edges = json::array();
        for (auto& e : inst.fill) {
            auto t = classify_fill_edge(inst, e);
            json je;
            je["edge"] = {e.first, e.second};
            je["type"] = t.type;
            if (!t.separator.empty()) je["separator"] = t.separator;
            if (!t.nucleus_set.empty()) je["nucleus"] = t.nucleus_set;
            edges.push_back(je);
        }
        out["fill_edges"] = edges;
        auto nec = check_necessary_condition(inst);
        out["necessary_condition"] = nec.pass;
        if (!nec.pass)
            out["failing_edge"] = {nec.failing_edge->first, nec.failing_edge->second};
        if (int(inst.fill.size()) <= budget) {
            auto min = is_minimal_completion(inst, budget);
            out["minimal"] = min.minimal;
            if (!min.minimal) {
                json kept = json::array();
                for (auto& e : min.removable) kept.push_back({e.first, e.second});
                out["sufficient_proper_subset"] = kept;
            }
        } else {
            out["minimal"] = nullptr;
            out["note"] = "fill set exceeds the minimality budget";
            std::cout << out.dump(2) << "\n";
            return 3;
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_suite(const std::string& name, uint64_t seed) {
    std::vector<std::string> names;
    if (name == "all") names = suite_names();
    else names = {name};
    bool all_pass = true;
    bool known = true;
    for (auto& n : names) {
        auto res = run_suite(n, seed);
        if (res.detail == "unknown suite") known = false;
        json line;
        line["suite"] = res.name;
        line["pass"] = res.pass;
        line["checked"] = res.checked;
        line["failures"] = res.failures;
        if (!res.detail.empty()) line["detail"] = res.detail;
        std::cout << line.dump() << "\n";
        all_pass = all_pass && res.pass;
    }
    if (!known) {
        std::cerr << "unknown suite '" << name << "'\n";
        return 2;
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"split-graph circle recognition toolkit"};
    app.require_subcommand(1);

    std::string path, check = "2nested", gpath, hpath, suite;
    int budget = 9;
    long orbit_budget = 50000;
    uint64_t seed = 0;
    std::string format = "json";

    auto* rec = app.add_subcommand("recognize", "decide circle-ness of a split graph");
    rec->add_option("graph", path, "edge-list file")->required();
    rec->add_option("--budget", budget, "oracle budget for fallback models");
    rec->add_option("--format", format, "json or text");

    auto* mat = app.add_subcommand("matrix", "enriched matrix checks");
    mat->add_option("matrix", path, "enriched matrix file")->required();
    mat->add_option("--check", check, "c1p|nested|admissible|lr|partial|2nested");

    auto* orc = app.add_subcommand("oracle", "brute-force circle decision");
    orc->add_option("graph", path, "edge-list file")->required();
    orc->add_option("--budget", budget, "vertex budget for the word search");
    orc->add_option("--orbit-budget", orbit_budget, "state budget for the orbit check");

    auto* cmp = app.add_subcommand("completion", "fill-edge classification");
    cmp->add_option("graph", gpath, "edge-list file for G")->required();
    cmp->add_option("supergraph", hpath, "edge-list file for H")->required();
    cmp->add_option("--budget", budget, "minimality subset budget")->capture_default_str();

    auto* sui = app.add_subcommand("suite", "run a named verification suite");
    sui->add_option("name", suite, "suite name or 'all'")->required();
    sui->add_option("--seed", seed, "seed for the randomized suites");

    CLI11_PARSE(app, argc, argv);

    try {
        if (rec->parsed()) return cmd_recognize(path, budget, format == "text");
        if (mat->parsed()) return cmd_matrix(path, check, format == "text");
        if (orc->parsed()) return cmd_oracle(path, budget, orbit_budget);
        if (cmp->parsed()) return cmd_completion(gpath, hpath, budget == 9 ? 20 : budget);
        if (sui->parsed()) return cmd_suite(suite, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
