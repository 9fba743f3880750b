#include "compavoid/engine.hpp"

#include <random>
#include <vector>

#include "compavoid/errors.hpp"
#include "compavoid/oracle.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace compavoid;
using compavoid::testing::random_forbidden_set;
using compavoid::testing::series_from_rows;

namespace {

Word w(std::vector<int> parts) { return Word(std::move(parts)); }

BiPoly random_entry(std::mt19937 &rng) {
    std::uniform_int_distribution<int> nterms(0, 3);
    std::uniform_int_distribution<int> deg(0, 2);
    std::uniform_int_distribution<int> coeff(-3, 3);
    BiPoly p;
    const int t = nterms(rng);
    for (int i = 0; i < t; ++i) p += BiPoly::monomial(deg(rng), deg(rng), coeff(rng));
    return p;
}

ForbiddenSet single_letters(int k) {
    std::vector<Word> words;
    for (int a = 1; a <= k; ++a) words.push_back(Word({a}));
    return validate_antichain(std::move(words));
}

}  // namespace

TEST_CASE("correlation matrix construction") {
    CorrelationMatrix m1 = build_matrix(validate_antichain({w({2, 2})}));
    CHECK(m1.entries[0][0] == BiPoly::one() + BiPoly::monomial(2, 1));

    CorrelationMatrix trivial = build_matrix(validate_antichain({w({3})}));
    CHECK(trivial.entries[0][0] == BiPoly::one());

    // Family words: entry (i, j) is delta_ij + x (xq)^{a_i}.
    std::vector<int> exponents = {1, 2, 3};
    CorrelationMatrix fam = build_matrix(
        validate_antichain({w({2, 2}), w({2, 1, 2}), w({2, 1, 1, 2})}));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            BiPoly expect = BiPoly::monomial(exponents[i] + 1, exponents[i]);
            if (i == j) expect += BiPoly::one();
            CHECK(fam.entries[i][j] == expect);
        }

    // Invariants: diagonal constant 1, off-diagonal constant 0.
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(fam.entries[i][j].constant_term() == (i == j ? 1 : 0));
}

TEST_CASE("determinant basics") {
    BiPoly p = BiPoly::one() + BiPoly::monomial(2, 1, -3);
    CHECK(det({{p}}) == p);

    std::vector<std::vector<BiPoly>> eye(4, std::vector<BiPoly>(4));
    for (int i = 0; i < 4; ++i) eye[i][i] = BiPoly::one();
    CHECK(det(eye) == BiPoly::one());

    CHECK(det(std::vector<std::vector<BiPoly>>{}) == BiPoly::one());

    std::vector<std::vector<BiPoly>> singular(2, std::vector<BiPoly>(2, BiPoly::one()));
    CHECK(det(singular).is_zero());
    CHECK(det_elimination(singular).is_zero());

    // Dimension k+1 = 13 must stay available for the bordered system.
    std::vector<std::vector<BiPoly>> big(14, std::vector<BiPoly>(14));
    CHECK_THROWS_AS(det(big), SizeLimitExceeded);
}

TEST_CASE("family numerator determinant has the factored closed form") {
    std::vector<int> exponents = {1, 2, 3};
    const std::size_t k = exponents.size();
    std::vector<std::vector<BiPoly>> m(k, std::vector<BiPoly>(k));
    BiPoly sum;
    for (std::size_t i = 0; i < k; ++i) {
        const int a = exponents[i];
        sum += BiPoly::monomial(a + 1, a);
        for (std::size_t j = 0; j < k; ++j) {
            m[i][j] = -BiPoly::monomial(a + 1, a);
            if (i == j) m[i][j] -= BiPoly::one();
        }
    }
    CHECK(det(m) == -(BiPoly::one() + sum));  // (-1)^3 (1 + x sum (xq)^{a_i})
}

TEST_CASE("cofactor and elimination determinants agree") {
    std::mt19937 rng(5150);
    for (int iter = 0; iter < 60; ++iter) {
        const std::size_t k = 1 + rng() % 5;
        std::vector<std::vector<BiPoly>> m(k, std::vector<BiPoly>(k));
        for (auto &row : m)
            for (auto &e : row) e = random_entry(rng);
        CHECK(det_cofactor(m) == det_elimination(m));
    }

    // Also at the dimensions where det() dispatches to elimination, with
    // the sparse entry shape correlation matrices actually have.
    std::uniform_int_distribution<int> deg(0, 1);
    std::uniform_int_distribution<int> coeff(-1, 1);
    for (std::size_t k : {10u, 13u}) {
        std::vector<std::vector<BiPoly>> m(k, std::vector<BiPoly>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                m[i][j] = BiPoly::monomial(deg(rng), deg(rng), coeff(rng));
                if (i == j) m[i][j] += BiPoly::one();
            }
        CHECK(det_cofactor(m) == det_elimination(m));
    }
}

TEST_CASE("composition series for the golden two-word set") {
    ForbiddenSet set = validate_antichain({w({2, 2}), w({2, 1, 2})});
    AvoidanceResult r = composition_gf(set, 6);
    CHECK(r.gf == series_from_rows(testing::consecutive2_rows()));
    CHECK(r.numer.constant_term() == 1);   // (-1)^2
    CHECK(r.denom.constant_term() == 1);
}

TEST_CASE("forbidding the part 1 leaves compositions with parts >= 2") {
    AvoidanceResult r = composition_gf(validate_antichain({w({1})}), 10);
    BiPoly one_minus_x = BiPoly::one() - BiPoly::monomial(1, 0);
    CHECK(r.gf == series_div(one_minus_x, BiPoly::one() - BiPoly::monomial(1, 0) -
                                              BiPoly::monomial(2, 1), 10));
    CHECK(to_triangle(r.gf) == enumerate_avoiders(validate_antichain({w({1})}), 10));
}

TEST_CASE("empty forbidden set counts all compositions") {
    AvoidanceResult r = composition_gf(ForbiddenSet(), 10);
    CHECK(r.quasi.empty());
    CHECK(r.numer == BiPoly::one());
    CoefficientTriangle all = enumerate_avoiders(ForbiddenSet(), 10);
    CHECK(to_triangle(r.gf) == all);
    for (int n = 1; n <= 10; ++n) CHECK(r.gf.row_total(n) == Int(1) << (n - 1));
}

TEST_CASE("quasi-avoidance series match the enumeration") {
    ForbiddenSet set = validate_antichain({w({2, 2}), w({2, 1, 2})});
    AvoidanceResult r = composition_gf(set, 10);
    for (std::size_t i = 0; i < set.size(); ++i) {
        CHECK(to_triangle(r.quasi[i]) == enumerate_quasi_avoiders(set, i, 10));
        // No quasi-avoider is lighter than the word it ends with.
        for (int n = 0; n < set.word(i).weight(); ++n)
            CHECK(r.quasi[i].row_total(n) == 0);
    }
}

TEST_CASE("identity checks pass on valid inputs") {
    ForbiddenSet golden = validate_antichain({w({2, 2}), w({2, 1, 2})});
    CHECK(verify_identities(composition_gf(golden, 10), golden).all_ok());

    ForbiddenSet part1 = validate_antichain({w({1})});
    CHECK(verify_identities(composition_gf(part1, 10), part1).all_ok());

    // Trivial at weight bound 0: only constant terms.
    CHECK(verify_identities(composition_gf(golden, 0), golden).all_ok());

    std::mt19937 rng(31415);
    for (int iter = 0; iter < 10; ++iter) {
        ForbiddenSet set = random_forbidden_set(rng);
        AvoidanceResult r = composition_gf(set, 12);
        CHECK(verify_identities(r, set).all_ok());
    }
}

TEST_CASE("series coefficients equal brute-force counts on random sets") {
    std::mt19937 rng(27182);
    for (int iter = 0; iter < 10; ++iter) {
        ForbiddenSet set = random_forbidden_set(rng);
        AvoidanceResult r = composition_gf(set, 12);
        CHECK(to_triangle(r.gf) == enumerate_avoiders(set, 12));
        for (std::size_t i = 0; i < set.size(); ++i)
            CHECK(to_triangle(r.quasi[i]) == enumerate_quasi_avoiders(set, i, 12));
    }
}

TEST_CASE("size cap on the forbidden set") {
    CHECK_NOTHROW(composition_gf(single_letters(12), 4));
    CHECK_THROWS_AS(composition_gf(single_letters(13), 4), SizeLimitExceeded);
}

TEST_CASE("large sets route through elimination and still match enumeration") {
    // Forbidding the single letters 1..k leaves compositions into parts
    // above k; k >= 9 exercises the elimination determinants.
    for (int k : {9, 12}) {
        ForbiddenSet set = single_letters(k);
        AvoidanceResult r = composition_gf(set, 14);
        CHECK(to_triangle(r.gf) == enumerate_avoiders(set, 14));
        CHECK(verify_identities(r, set).all_ok());
    }

    // A mixed ten-word antichain with real overlaps.
    std::vector<Word> words;
    for (int a = 1; a <= 9; ++a) {
        std::vector<int> parts{2};
        parts.insert(parts.end(), a - 1, 1);
        parts.push_back(2);
        words.push_back(Word(parts));
    }
    words.push_back(w({3, 3}));
    ForbiddenSet set = validate_antichain(std::move(words));
    AvoidanceResult r = composition_gf(set, 12);
    CHECK(to_triangle(r.gf) == enumerate_avoiders(set, 12));
    CHECK(verify_identities(r, set).all_ok());
    for (std::size_t i = 0; i < set.size(); ++i)
        CHECK(to_triangle(r.quasi[i]) == enumerate_quasi_avoiders(set, i, 12));
}

TEST_CASE("string series") {
    ForbiddenSet set = validate_antichain({w({1, 1})});
    UniSeries s = string_gf(set, 2, 12);
    std::vector<Int> brute = enumerate_string_avoiders(set, 2, 12);
    for (int m = 0; m <= 12; ++m) CHECK(s.at(m) == brute[m]);

    UniSeries ones = string_gf(validate_antichain({w({1})}), 2, 8);
    for (int m = 0; m <= 8; ++m) CHECK(ones.at(m) == 1);

    UniSeries free3 = string_gf(ForbiddenSet(), 3, 6);
    Int p = 1;
    for (int m = 0; m <= 6; ++m, p *= 3) CHECK(free3.at(m) == p);

    CHECK_THROWS_AS(string_gf(validate_antichain({w({3, 1})}), 2, 6), LetterOutOfAlphabet);
}

TEST_CASE("string series match enumeration over small alphabets") {
    std::mt19937 rng(1618);
    for (int iter = 0; iter < 8; ++iter) {
        const int alphabet = 2 + static_cast<int>(rng() % 2);
        ForbiddenSet set = random_forbidden_set(rng, 3, 3, alphabet);
        UniSeries s = string_gf(set, alphabet, 12);
        std::vector<Int> brute = enumerate_string_avoiders(set, alphabet, 12);
        for (int m = 0; m <= 12; ++m) CHECK(s.at(m) == brute[m]);
    }
}
