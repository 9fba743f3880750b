#pragma once

#include <random>
#include <vector>

#include "compavoid/correlate.hpp"
#include "compavoid/errors.hpp"
#include "compavoid/series.hpp"

namespace compavoid::testing {

inline BiSeries series_from_rows(const std::vector<std::vector<long long>> &rows) {
    BiSeries s(static_cast<int>(rows.size()) - 1);
    for (int n = 0; n < static_cast<int>(rows.size()); ++n)
        for (int m = 0; m < static_cast<int>(rows[n].size()); ++m) s.set(n, m, rows[n][m]);
    return s;
}

// Frozen expected series for the family with exponents {1, 2}, i.e. avoiding
// 2 2 and 2 1 2, through weight 6.
inline const std::vector<std::vector<long long>> &consecutive2_rows() {
    static const std::vector<std::vector<long long>> rows = {
        {1},
        {0, 1},
        {0, 1, 1},
        {0, 1, 2, 1},
        {0, 1, 2, 3, 1},
        {0, 1, 4, 3, 4, 1},
        {0, 1, 5, 9, 5, 5, 1},
    };
    return rows;
}

// Exponents {1, 3, 5}: avoiding 2 2, 2 1 1 2 and 2 1 1 1 1 2, through
// weight 8.
inline const std::vector<std::vector<long long>> &odd2_rows() {
    static const std::vector<std::vector<long long>> rows = {
        {1},
        {0, 1},
        {0, 1, 1},
        {0, 1, 2, 1},
        {0, 1, 2, 3, 1},
        {0, 1, 4, 4, 4, 1},
        {0, 1, 5, 9, 6, 5, 1},
        {0, 1, 6, 13, 16, 9, 6, 1},
        {0, 1, 7, 19, 28, 26, 12, 7, 1},
    };
    return rows;
}

// Exponents {2, 4}: avoiding 2 1 2 and 2 1 1 1 2, through weight 8.
inline const std::vector<std::vector<long long>> &even2_rows() {
    static const std::vector<std::vector<long long>> rows = {
        {1},
        {0, 1},
        {0, 1, 1},
        {0, 1, 2, 1},
        {0, 1, 3, 3, 1},
        {0, 1, 4, 5, 4, 1},
        {0, 1, 5, 10, 8, 5, 1},
        {0, 1, 6, 15, 18, 11, 6, 1},
        {0, 1, 7, 21, 33, 30, 15, 7, 1},
    };
    return rows;
}

inline ForbiddenSet random_forbidden_set(std::mt19937 &rng, int max_words = 3, int max_len = 4,
                                         int max_part = 3) {
    std::uniform_int_distribution<int> nwords(1, max_words);
    std::uniform_int_distribution<int> len(1, max_len);
    std::uniform_int_distribution<int> part(1, max_part);
    for (;;) {
        std::vector<Word> words;
        const int k = nwords(rng);
        for (int i = 0; i < k; ++i) {
            std::vector<int> parts(len(rng));
            for (int &p : parts) p = part(rng);
            words.push_back(Word(std::move(parts)));
        }
        try {
            return validate_antichain(std::move(words));
        } catch (const ValidationError &) {
            continue;
        }
    }
}

}  // namespace compavoid::testing
