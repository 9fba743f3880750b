#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "compavoid/series.hpp"

namespace compavoid {

// A composition and, in strings mode, a string over the alphabet [n]:
// a nonempty sequence of positive integer parts. Weight is the sum of the
// parts, length the number of parts, so weight >= length always.
class Word {
  public:
    explicit Word(std::vector<int> parts);

    const std::vector<int> &parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return weight_; }
    // Weight of the last `len` parts (the tail of an overlap comparison).
    int suffix_weight(int len) const;
    int max_letter() const;

    friend bool operator==(const Word &, const Word &) = default;
    std::string str() const;  // space-separated parts, e.g. "2 1 2"

  private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// True iff b occurs as a contiguous factor of s.
bool contains(const Word &s, const Word &b);

// A set of forbidden words forming an antichain under factor containment.
// The empty set is allowed and forbids nothing.
class ForbiddenSet {
  public:
    ForbiddenSet() = default;

    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }
    const Word &word(std::size_t i) const { return words_[i]; }
    const std::vector<Word> &words() const { return words_; }

  private:
    friend ForbiddenSet validate_antichain(std::vector<Word> words);
    explicit ForbiddenSet(std::vector<Word> words) : words_(std::move(words)) {}
    std::vector<Word> words_;
};

// Checks pairwise non-containment and distinctness, throwing DuplicateWord
// or ContainmentViolation. Naive O(k^2 L^2); forbidden sets are small.
ForbiddenSet validate_antichain(std::vector<Word> words);

// bits[j] = 1 iff the letters in the overlap of X1 and X2 shifted j
// positions to the left all agree. One bit per offset 0..len(X1)-1.
struct CorrelationBits {
    std::vector<unsigned char> bits;
    std::string str() const;
    friend bool operator==(const CorrelationBits &, const CorrelationBits &) = default;
};

CorrelationBits correlation_bits(const Word &x1, const Word &x2);

// Length-tracking correlation polynomial: coefficient of q^j is bit j.
UniPoly correlation_poly_q(const Word &x1, const Word &x2);

// Weight-and-length correlation polynomial: bit j (j >= 1) contributes
// x^w q^j where w is the weight of the length-j suffix of X1; bit 0
// contributes the constant. Since parts are positive, every term beyond the
// constant is divisible by xq.
BiPoly correlation_poly_xq(const Word &x1, const Word &x2);

}  // namespace compavoid
