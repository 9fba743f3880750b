#include "compavoid/oracle.hpp"

#include <algorithm>
#include <string>

#include "compavoid/errors.hpp"

namespace compavoid {

namespace {

constexpr std::size_t kNoMatch = static_cast<std::size_t>(-1);

bool ends_with(const std::vector<int> &seq, const Word &word) {
    const auto &wp = word.parts();
    if (wp.size() > seq.size()) return false;
    return std::equal(wp.rbegin(), wp.rend(), seq.rbegin());
}

// At most one forbidden word can end at a given position: two would make
// the shorter a factor of the longer, violating the antichain property.
std::size_t suffix_match(const std::vector<int> &seq, const ForbiddenSet &set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        if (ends_with(seq, set.word(i))) return i;
    return kNoMatch;
}

void check_weight_bound(int max_weight) {
    if (max_weight < 0) throw ValidationError("max weight must be nonnegative");
    if (max_weight > kMaxOracleWeight)
        throw BoundTooLarge("oracle enumeration capped at weight " +
                            std::to_string(kMaxOracleWeight));
}

}  // namespace

CoefficientTriangle::CoefficientTriangle(int max_weight) : max_weight(max_weight) {
    if (max_weight < 0) throw ValidationError("max weight must be nonnegative");
    counts.resize(max_weight + 1);
    for (int n = 0; n <= max_weight; ++n) counts[n].assign(n + 1, Int(0));
}

Int CoefficientTriangle::row_total(int n) const {
    Int total = 0;
    for (const Int &c : counts[n]) total += c;
    return total;
}

CoefficientTriangle to_triangle(const BiSeries &series) {
    CoefficientTriangle t(series.max_weight());
    for (int n = 0; n <= t.max_weight; ++n)
        for (int m = 0; m <= n; ++m) t.counts[n][m] = series.at(n, m);
    return t;
}

CoefficientTriangle enumerate_avoiders(const ForbiddenSet &set, int max_weight) {
    check_weight_bound(max_weight);
    CoefficientTriangle t(max_weight);
    t.counts[0][0] = 1;  // the empty composition avoids everything

    std::vector<int> cur;
    int weight = 0;
    auto dfs = [&](auto &&self) -> void {
        for (int p = 1; weight + p <= max_weight; ++p) {
            cur.push_back(p);
            weight += p;
            if (suffix_match(cur, set) == kNoMatch) {
                ++t.counts[weight][cur.size()];
                self(self);
            }
            weight -= p;
            cur.pop_back();
        }
    };
    dfs(dfs);
    return t;
}

CoefficientTriangle enumerate_quasi_avoiders(const ForbiddenSet &set, std::size_t word_index,
                                             int max_weight) {
    check_weight_bound(max_weight);
    if (word_index >= set.size())
        throw IndexOutOfRange("word index " + std::to_string(word_index) +
                              " out of range for a set of " + std::to_string(set.size()) +
                              " words");
    CoefficientTriangle t(max_weight);

    /* Walk the tree of occurrence-free prefixes. The first occurrence ever
     * created is a suffix of the current composition; if that suffix is the
     * requested word the composition quasi-avoids it, and either way no
     * extension can qualify (the existing occurrence would be a second
     * one), so the branch stops. */
    std::vector<int> cur;
    int weight = 0;
    auto dfs = [&](auto &&self) -> void {
        for (int p = 1; weight + p <= max_weight; ++p) {
            cur.push_back(p);
            weight += p;
            const std::size_t hit = suffix_match(cur, set);
            if (hit == kNoMatch)
                self(self);
            else if (hit == word_index)
                ++t.counts[weight][cur.size()];
            weight -= p;
            cur.pop_back();
        }
    };
    dfs(dfs);
    return t;
}

std::vector<Int> enumerate_string_avoiders(const ForbiddenSet &set, int alphabet_size,
                                           int max_length) {
    if (alphabet_size < 1) throw ValidationError("alphabet size must be at least 1");
    if (max_length < 0) throw ValidationError("max length must be nonnegative");
    long long leaves = 1;
    for (int d = 0; d < max_length; ++d) {
        leaves *= alphabet_size;
        if (leaves > kMaxStringCount)
            throw BoundTooLarge("string enumeration capped at alphabet_size^max_length <= " +
                                std::to_string(kMaxStringCount));
    }

    std::vector<Int> counts(max_length + 1, Int(0));
    counts[0] = 1;
    std::vector<int> cur;
    auto dfs = [&](auto &&self) -> void {
        if (static_cast<int>(cur.size()) == max_length) return;
        for (int letter = 1; letter <= alphabet_size; ++letter) {
            cur.push_back(letter);
            if (suffix_match(cur, set) == kNoMatch) {
                ++counts[cur.size()];
                self(self);
            }
            cur.pop_back();
        }
    };
    dfs(dfs);
    return counts;
}

}  // namespace compavoid
