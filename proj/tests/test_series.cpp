#include "compavoid/series.hpp"

#include <random>
#include <vector>

#include "compavoid/errors.hpp"
#include "doctest.h"

using namespace compavoid;

namespace {

BiPoly bp(int xdeg, int qdeg, long long c = 1) { return BiPoly::monomial(xdeg, qdeg, c); }

// Pascal's triangle, the independent oracle for 1/(1 - x - xq):
// expanding sum_j (x + xq)^j gives binomial(n, m) at x^n q^m.
std::vector<std::vector<Int>> pascal(int rows) {
    std::vector<std::vector<Int>> b(rows + 1);
    for (int n = 0; n <= rows; ++n) {
        b[n].assign(n + 1, 1);
        for (int m = 1; m < n; ++m) b[n][m] = b[n - 1][m - 1] + b[n - 1][m];
    }
    return b;
}

BiPoly random_poly(std::mt19937 &rng) {
    std::uniform_int_distribution<int> nterms(0, 4);
    std::uniform_int_distribution<int> deg(0, 3);
    std::uniform_int_distribution<int> coeff(-5, 5);
    BiPoly p;
    const int t = nterms(rng);
    for (int i = 0; i < t; ++i) p += BiPoly::monomial(deg(rng), deg(rng), coeff(rng));
    return p;
}

BiSeries random_unit_series(std::mt19937 &rng, int max_weight) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> sign(0, 1);
    BiSeries s(max_weight);
    s.set(0, 0, sign(rng) ? 1 : -1);
    for (int n = 1; n <= max_weight; ++n)
        for (int m = 0; m <= n; ++m) s.set(n, m, coeff(rng));
    return s;
}

}  // namespace

TEST_CASE("polynomial addition") {
    CHECK(bp(1, 0) + bp(2, 1) + (-bp(1, 0)) == bp(2, 1));  // cancellation
    BiPoly p = bp(3, 2, 7) - bp(0, 0, 2);
    CHECK(p + BiPoly() == p);
    CHECK((BiPoly::one() + bp(2, 1)) + (BiPoly::one() + bp(2, 1)) ==
          BiPoly::constant(2) + bp(2, 1, 2));
}

TEST_CASE("polynomial multiplication") {
    CHECK((BiPoly::one() - bp(1, 0)) * (BiPoly::one() + bp(1, 0)) == BiPoly::one() - bp(2, 0));
    CHECK(bp(1, 0) * (bp(1, 1) * bp(1, 1)) == bp(3, 2));
    CHECK((BiPoly::one() + bp(2, 1)) * (BiPoly::one() - bp(2, 1)) == BiPoly::one() - bp(4, 2));
}

TEST_CASE("polynomial ring axioms on random inputs") {
    std::mt19937 rng(20240517);
    for (int iter = 0; iter < 200; ++iter) {
        BiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("canonical form stores no zero coefficients") {
    BiPoly p = bp(2, 1, 3) - bp(2, 1, 3);
    CHECK(p.is_zero());
    CHECK(p.terms().empty());
    CHECK(BiPoly::constant(0).is_zero());
}

TEST_CASE("series_from_poly") {
    CHECK_THROWS_AS(BiSeries::from_poly(BiPoly::one() + bp(3, 4), 5), NonTriangular);

    BiSeries s = BiSeries::from_poly(BiPoly::one() + bp(2, 1), 5);
    CHECK(s.at(0, 0) == 1);
    CHECK(s.at(2, 1) == 1);
    CHECK(s.at(2, 0) == 0);

    CHECK(BiSeries::from_poly(bp(7, 0), 5) == BiSeries(5));  // beyond truncation
}

TEST_CASE("series multiplication") {
    BiSeries a = BiSeries::from_poly(BiPoly::one() + bp(1, 1) + bp(3, 2, 4), 5);
    CHECK(a * BiSeries::one(5) == a);
    CHECK(BiSeries::from_poly(BiPoly::one() + bp(1, 1), 5) *
              BiSeries::from_poly(BiPoly::one() - bp(1, 1), 5) ==
          BiSeries::from_poly(BiPoly::one() - bp(2, 2), 5));
    CHECK(BiSeries::from_poly(bp(3, 1), 5) * BiSeries::from_poly(bp(3, 1), 5) == BiSeries(5));
    CHECK_THROWS_AS(BiSeries::one(4) * BiSeries::one(5), BoundMismatch);
}

TEST_CASE("series inversion") {
    const int N = 8;
    auto binom = pascal(N);

    BiSeries denom = BiSeries::from_poly(BiPoly::one() - bp(1, 0) - bp(1, 1), N);
    BiSeries inv = denom.invert();
    for (int n = 0; n <= N; ++n)
        for (int m = 0; m <= n; ++m) CHECK(inv.at(n, m) == binom[n][m]);

    CHECK(BiSeries::one(4).invert() == BiSeries::one(4));
    CHECK_THROWS_AS(BiSeries::from_poly(BiPoly::constant(2) + bp(1, 0), 4).invert(),
                    NonUnitConstant);
}

TEST_CASE("random unit series times its inverse is one") {
    std::mt19937 rng(7771);
    for (int iter = 0; iter < 40; ++iter) {
        const int N = 1 + static_cast<int>(rng() % 12);
        BiSeries a = random_unit_series(rng, N);
        CHECK(a * a.invert() == BiSeries::one(N));
    }
}

TEST_CASE("series division") {
    const int N = 4;
    BiPoly one_minus_x = BiPoly::one() - bp(1, 0);

    // Compositions of n with m parts: binomial(n-1, m-1).
    BiSeries all = series_div(one_minus_x, BiPoly::one() - bp(1, 0) - bp(1, 1), N);
    auto binom = pascal(N);
    CHECK(all.at(0, 0) == 1);
    for (int n = 1; n <= N; ++n) {
        CHECK(all.at(n, 0) == 0);
        for (int m = 1; m <= n; ++m) CHECK(all.at(n, m) == binom[n - 1][m - 1]);
    }

    CHECK(series_div(BiPoly::one(), BiPoly::one(), 3) == BiSeries::one(3));

    // Compositions with every part >= 2.
    BiSeries big = series_div(one_minus_x, BiPoly::one() - bp(1, 0) - bp(2, 1), N);
    BiSeries expect(N);
    expect.set(0, 0, 1);
    expect.set(2, 1, 1);
    expect.set(3, 1, 1);
    expect.set(4, 1, 1);
    expect.set(4, 2, 1);
    CHECK(big == expect);

    CHECK_THROWS_AS(series_div(BiPoly::one(), BiPoly::constant(2) + bp(1, 0), 3), NonUnitConstant);
    // Weight-zero part of the denominator must be constant, not just have
    // constant term 1.
    CHECK_THROWS_AS(series_div(BiPoly::one(), BiPoly::one() + bp(0, 1), 3), NonUnitConstant);
    // Non-triangular quotient is rejected at the end.
    CHECK_THROWS_AS(series_div(BiPoly::one() + bp(3, 4), BiPoly::one(), 5), NonTriangular);
}

TEST_CASE("series division by one equals from_poly") {
    std::mt19937 rng(9182);
    std::uniform_int_distribution<int> coeff(-6, 6);
    for (int iter = 0; iter < 50; ++iter) {
        const int N = static_cast<int>(rng() % 8);
        BiPoly p;
        for (int n = 0; n <= N; ++n)
            for (int m = 0; m <= n; ++m) p += BiPoly::monomial(n, m, coeff(rng));
        CHECK(series_div(p, BiPoly::one(), N) == BiSeries::from_poly(p, N));
    }
}

TEST_CASE("exact polynomial division") {
    std::mt19937 rng(40291);
    int done = 0;
    while (done < 100) {
        BiPoly a = random_poly(rng), b = random_poly(rng);
        if (b.is_zero()) continue;
        CHECK(divide_exact(a * b, b) == a);
        ++done;
    }
    CHECK_THROWS_AS(divide_exact(bp(1, 0), bp(0, 1)), InternalError);

    UniPoly u = UniPoly::one() + UniPoly::monomial(2, 3);
    UniPoly v = UniPoly::monomial(1, 2) - UniPoly::one();
    CHECK(divide_exact(u * v, v) == u);
}

TEST_CASE("univariate series") {
    UniPoly den = UniPoly::one() - UniPoly::monomial(1);
    UniSeries geo = series_div(UniPoly::one(), den, 6);
    for (int m = 0; m <= 6; ++m) CHECK(geo.at(m) == 1);

    CHECK(geo * UniSeries::from_poly(den, 6) == UniSeries::one(6));
    CHECK_THROWS_AS(series_div(UniPoly::one(), UniPoly::constant(3), 4), NonUnitConstant);
    CHECK_THROWS_AS(UniSeries::one(3) * UniSeries::one(4), BoundMismatch);

    // Constant term -1 stays over the integers.
    UniSeries neg = series_div(UniPoly::constant(-1), UniPoly::monomial(1) - UniPoly::one(), 5);
    for (int m = 0; m <= 5; ++m) CHECK(neg.at(m) == 1);
}

TEST_CASE("specialize x to one") {
    BiPoly p = BiPoly::one() + bp(2, 1, 3) + bp(4, 1, -1) + bp(5, 2);
    UniPoly expect = UniPoly::one() + UniPoly::monomial(1, 2) + UniPoly::monomial(2);
    CHECK(p.specialize_x1() == expect);
}
