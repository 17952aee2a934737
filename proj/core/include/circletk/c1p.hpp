#ifndef CIRCLETK_C1P_HPP
#define CIRCLETK_C1P_HPP

#include "circletk/patterns.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace circletk {

using Matrix01 = std::vector<std::vector<uint8_t>>;

struct C1PResult {
    std::optional<std::vector<int>> order;    // column permutation (consecutive 1s per row)
    std::optional<PatternWitness> tucker;     // exactly one of the two is set
};

// Consecutive-ones decision with certificate: lexicographically least valid
// ordering, or a Tucker subconfiguration found by direct bounded search.
C1PResult has_c1p(const Matrix01& m);

// All C1P orderings streamed in lexicographic order; callback returns false to
// stop. Used by the suitable-ordering search.
void enumerate_c1p_orders(const Matrix01& m, const std::function<bool(const std::vector<int>&)>& cb);

bool order_is_c1p(const Matrix01& m, const std::vector<int>& order);

struct NestedResult {
    bool nested = false;
    std::optional<std::vector<int>> order; // C1P ordering with pairwise nested/disjoint rows
    std::vector<int> gem_rows;             // 0-gem witness rows
    std::vector<int> gem_cols;             // and columns (a\b, a&b, b\a)
};

// Nested = C1P and every two rows disjoint or nested; equivalently 0-gem-free.
NestedResult is_nested(const Matrix01& m);

std::optional<PatternWitness> find_tucker(const Matrix01& m);

} // namespace circletk

#endif
