#ifndef CIRCLETK_PATTERNS_HPP
#define CIRCLETK_PATTERNS_HPP

#include "circletk/enriched_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace circletk {

// Label classes a pattern row may require. Unmarked rows match any label.
enum class PatternLabel : uint8_t { Any, L, R, LR, LorLR, RorLR };
// Green/orange mean "one consistent assignment of {red,blue}": a matcher tries
// both global assignments. Unconstrained rows match any color including none.
enum class PatternColor : uint8_t { Any, Green, Orange };

struct PatternRow {
    std::vector<uint8_t> bits;
    PatternLabel label = PatternLabel::Any;
    PatternColor color = PatternColor::Any;
};

struct Pattern {
    std::string family;
    int k = 0;  // size parameter, 0 when fixed
    int l = -1; // secondary parameter (P family)
    int cols = 0;
    std::vector<PatternRow> rows;
    std::vector<uint8_t> tag_col;   // per column: must map onto a tag column
    bool label_agnostic = false;    // pure 0/1 families ignore row labels;
                                    // enriched families match unmarked rows
                                    // against unlabeled rows only
};

struct PatternWitness {
    std::string family;
    int k = 0;
    int l = -1;
    std::vector<int> rows; // matrix row matched to pattern row i
    std::vector<int> cols; // matrix column matched to pattern column j
};

// Generators. Parameter ranges follow the family definitions; out-of-range
// arguments throw.
Pattern tucker_mi(int k);   // k x k, k >= 3
Pattern tucker_mii(int k);  // k x k, k >= 4
Pattern tucker_miii(int k); // k x (k+1), k >= 3
Pattern tucker_miv();       // 4 x 6
Pattern tucker_mv();        // 4 x 5
Pattern pattern_d(int which);                 // D0..D13
Pattern pattern_d6_anchored();                // D6 with anchored L/R rows
Pattern pattern_s1(int k);                    // odd k>=3 or even k>=4
Pattern pattern_s2(int k);                    // k >= 3
Pattern pattern_s3(int k);                    // k >= 3
Pattern pattern_s4(int k);                    // k >= 3
Pattern pattern_s5(int k);                    // k >= 4
Pattern pattern_s6(int k);                    // k >= 3
Pattern pattern_s6_prime();                   // 3 x 3
Pattern pattern_s7(int k);                    // k = 3 or even k >= 4
Pattern pattern_s8(int k);                    // even k >= 4
Pattern pattern_s0(int k);                    // even k >= 4, (k+1) x k
Pattern pattern_m0();                         // 3 x 4
Pattern pattern_p0(int k, int l); // k x k (l=0) or k x (k-1)
Pattern pattern_p1(int k, int l);
Pattern pattern_p2(int k, int l);
Pattern pattern_f0();
Pattern pattern_f1(int k); // odd k >= 5
Pattern pattern_f2(int k); // odd k >= 5
Pattern pattern_f0_prime();
Pattern pattern_f0_doubleprime();
Pattern pattern_f1_prime(int k); // odd k >= 5
Pattern pattern_f2_prime(int k); // odd k >= 5
// Tagged obstructions for LR-orderability: Tucker matrices with pinned tag
// columns, named M2'..M5''.
Pattern pattern_m2_prime(int k);       // M_II(k) + tag {0}
Pattern pattern_m2_doubleprime(int k); // M_II(k) + tags {0, k-2}
Pattern pattern_m3_prime(int k);       // M_III(k) + tag {0}
Pattern pattern_m3_doubleprime(int k); // M_III(k) + tag {k}
Pattern pattern_m4_prime();            // M_IV + tag {0}
Pattern pattern_m4_doubleprime();      // M_IV + tags {0, 2}
Pattern pattern_m5_prime();            // M_V + tag {4}
Pattern pattern_m5_doubleprime();      // M_V + tag {1}

Pattern dual_pattern(const Pattern& p); // swap L and R label classes

// Subconfiguration test: row/column selection plus permutations, label classes
// and a consistent green/orange -> {red,blue} assignment. Deterministic: first
// witness in lexicographic row order.
std::optional<PatternWitness> contains_subconfiguration(const EnrichedMatrix& m,
                                                        const Pattern& p);
// Same over a tagged matrix; pattern tag columns must land on tag columns.
std::optional<PatternWitness> contains_subconfiguration_tagged(const TaggedMatrix& m,
                                                               const Pattern& p);
// Tries the pattern and its dual; reports the family name either way.
std::optional<PatternWitness> contains_family(const EnrichedMatrix& m, const Pattern& p);
std::optional<PatternWitness> contains_family_tagged(const TaggedMatrix& m, const Pattern& p);

// Build a pattern by family name + parameters (for witness re-verification).
std::optional<Pattern> pattern_by_name(const std::string& family, int k, int l);

} // namespace circletk

#endif
