#include "compavoid/correlate.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "compavoid/errors.hpp"

namespace compavoid {

Word::Word(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw ValidationError("a word needs at least one part");
    for (int p : parts_) {
        if (p < 1) throw ValidationError("word parts must be positive integers");
        weight_ += p;
    }
}

int Word::suffix_weight(int len) const {
    return std::accumulate(parts_.end() - len, parts_.end(), 0);
}

int Word::max_letter() const {
    return *std::max_element(parts_.begin(), parts_.end());
}

std::string Word::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ' ';
        os << parts_[i];
    }
    return os.str();
}

bool contains(const Word &s, const Word &b) {
    const auto &sv = s.parts();
    const auto &bv = b.parts();
    if (bv.size() > sv.size()) return false;
    for (std::size_t i = 0; i + bv.size() <= sv.size(); ++i)
        if (std::equal(bv.begin(), bv.end(), sv.begin() + i)) return true;
    return false;
}

ForbiddenSet validate_antichain(std::vector<Word> words) {
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            if (words[i] == words[j])
                throw DuplicateWord("forbidden word \"" + words[i].str() + "\" appears twice");
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j) {
            if (i == j) continue;
            if (contains(words[i], words[j]))
                throw ContainmentViolation(
                    i, j,
                    "forbidden word \"" + words[i].str() + "\" contains \"" + words[j].str() +
                        "\"; the set must be an antichain");
        }
    return ForbiddenSet(std::move(words));
}

std::string CorrelationBits::str() const {
    std::string s(bits.size(), '0');
    for (std::size_t j = 0; j < bits.size(); ++j)
        if (bits[j]) s[j] = '1';
    return s;
}

/* Offset j slides X2 j positions to the left from the right-aligned
 * position; the bit records whether all letters in the overlap agree. The
 * two cases below are the same comparison split by which string sticks out
 * on the left. */
CorrelationBits correlation_bits(const Word &x1, const Word &x2) {
    const auto &a = x1.parts();
    const auto &b = x2.parts();
    const int m = x1.length();
    const int l = x2.length();
    std::vector<unsigned char> c(m, 0);

    auto partial_overlap = [&](int j) {
        for (int i = 0; i <= m - j - 1; ++i)
            if (a[i] != b[l - m + i + j]) return false;
        return true;
    };

    if (m <= l) {
        for (int j = 0; j < m; ++j) c[j] = partial_overlap(j);
    } else {
        for (int j = 0; j <= m - l; ++j) {
            bool ok = true;
            for (int i = 0; i < l && ok; ++i) ok = (b[i] == a[m - l + i - j]);
            c[j] = ok;
        }
        for (int j = m - l + 1; j < m; ++j) c[j] = partial_overlap(j);
    }
    return CorrelationBits{std::move(c)};
}

UniPoly correlation_poly_q(const Word &x1, const Word &x2) {
    const auto bits = correlation_bits(x1, x2).bits;
    UniPoly p;
    for (std::size_t j = 0; j < bits.size(); ++j)
        if (bits[j]) p += UniPoly::monomial(static_cast<int>(j));
    return p;
}

BiPoly correlation_poly_xq(const Word &x1, const Word &x2) {
    const auto bits = correlation_bits(x1, x2).bits;
    BiPoly p;
    if (bits[0]) p += BiPoly::one();
    for (int j = 1; j < static_cast<int>(bits.size()); ++j)
        if (bits[j]) p += BiPoly::monomial(x1.suffix_weight(j), j);
    return p;
}

}  // namespace compavoid
