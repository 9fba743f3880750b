#pragma once

#include <vector>

#include "compavoid/correlate.hpp"
#include "compavoid/series.hpp"

namespace compavoid {

// Strictly increasing positive exponents a_1 < ... < a_k selecting the
// forbidden family { 2 1^{a_i - 1} 2 }.
class ExponentSet {
  public:
    explicit ExponentSet(std::vector<int> exponents);
    const std::vector<int> &exponents() const { return exponents_; }
    std::size_t size() const { return exponents_.size(); }
    friend bool operator==(const ExponentSet &, const ExponentSet &) = default;

  private:
    std::vector<int> exponents_;
};

// The words 2 1^{a_i - 1} 2. Distinct exponents give distinct lengths and
// no word is a factor of another, so the set is always a valid antichain.
ForbiddenSet family_words(const ExponentSet &e);

// Closed form for the avoidance series of the family: with
// P = sum_i (xq)^{a_i},
//   (1-x)(1 + xP) / [ (1-x(1+q) + (1-x)x^2 q)(1 + xP) - (1-x)x^2 q ],
// evaluated by polynomial substitution and one series division.
BiSeries family_gf(const ExponentSet &e, int max_weight);

enum class FamilyKind {
    kConsecutive,   // exponents 1..k
    kOddExponents,  // exponents 1, 3, ..., 2k+1
    kEvenExponents  // exponents 2, 4, ..., 2k
};

ExponentSet family_exponents(FamilyKind kind, int k);
BiSeries family_gf_special(FamilyKind kind, int k, int max_weight);

}  // namespace compavoid
