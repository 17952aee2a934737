#ifndef CIRCLETK_ORACLE_HPP
#define CIRCLETK_ORACLE_HPP

#include "circletk/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace circletk {

// Circular double-occurrence word over vertex ids; two vertices are adjacent
// iff their occurrences interleave.
struct ChordModel {
    std::vector<int> word;
};

bool verify_chord_model(const Graph& g, const ChordModel& m);
// Rotation/reflection canonical form for model comparison.
std::vector<int> canonical_chord_word(const ChordModel& m);

enum class OracleVerdict { Circle, NotCircle, Inconclusive };

struct OracleResult {
    OracleVerdict verdict = OracleVerdict::Inconclusive;
    std::optional<ChordModel> model;               // for YES (word search)
    std::vector<int> complement_sequence;          // for NO via orbit search
    std::string forbidden_target;                  // "W5", "W7", "BW3"
    std::vector<int> forbidden_vertices;           // induced copy in the final graph
    std::string note;
};

// Exhaustive search over canonical double-occurrence words. Inconclusive iff
// n exceeds the budget.
OracleResult brute_force_is_circle(const Graph& g, int budget = 9);

// Local-complementation orbit exploration with canonical-form deduplication.
// NotCircle when some orbit member contains W5, W7 or BW3; Circle only when
// the orbit is exhausted; Inconclusive when the state budget runs out.
OracleResult bouchet_orbit_check(const Graph& g, long state_budget = 50000);

// Scripted local-complementation regressions for the minimally non-circle
// catalog; each stage applies a sequence and checks the claimed induced target.
struct ReplayStage {
    std::vector<int> sequence;
    std::string target;
    std::vector<int> pinned_set; // claimed vertex set of the target, when stated
    bool found = false;
    std::vector<int> embedding;
};
struct ReplayReport {
    std::string name;
    bool ok = false;
    std::vector<ReplayStage> stages;
    std::string note;
};
ReplayReport replay_appendix_sequence(const std::string& name);
std::vector<std::string> replay_catalog_names(int max_k = 9);

} // namespace circletk

#endif
