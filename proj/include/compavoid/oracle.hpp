#pragma once

#include <cstddef>
#include <vector>

#include "compavoid/bigint.hpp"
#include "compavoid/correlate.hpp"
#include "compavoid/series.hpp"

namespace compavoid {

/* Exhaustive enumeration, kept deliberately free of generating-function
 * machinery: this is the ground truth every series computation is checked
 * against. Compositions are generated by depth-first recursion over parts;
 * a new occurrence of a forbidden word can only appear as a suffix of the
 * freshly extended composition, so one suffix check per step sees every
 * occurrence. */

// 2^21 compositions at the top weight; the full sweep stays under a minute.
inline constexpr int kMaxOracleWeight = 22;
// Cap on alphabet_size^max_length for string enumeration.
inline constexpr long long kMaxStringCount = 10'000'000;

// Counts indexed by (weight n, length m), 0 <= m <= n <= max_weight.
// The common output shape of engine and oracle.
struct CoefficientTriangle {
    explicit CoefficientTriangle(int max_weight);

    int max_weight = 0;
    std::vector<std::vector<Int>> counts;

    Int row_total(int n) const;
    friend bool operator==(const CoefficientTriangle &, const CoefficientTriangle &) = default;
};

CoefficientTriangle to_triangle(const BiSeries &series);

// Compositions of each weight <= max_weight containing none of the
// forbidden words. counts[0][0] = 1 for the empty composition.
CoefficientTriangle enumerate_avoiders(const ForbiddenSet &set, int max_weight);

// Compositions ending with set.word(word_index) whose only occurrence of
// any forbidden word is that final one.
CoefficientTriangle enumerate_quasi_avoiders(const ForbiddenSet &set, std::size_t word_index,
                                             int max_weight);

// Strings over {1..alphabet_size} avoiding all forbidden words, counted per
// length 0..max_length.
std::vector<Int> enumerate_string_avoiders(const ForbiddenSet &set, int alphabet_size,
                                           int max_length);

}  // namespace compavoid
