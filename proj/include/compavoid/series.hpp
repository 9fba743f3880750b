#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "compavoid/bigint.hpp"

namespace compavoid {

/* Exact arithmetic for the two rings everything else is built on:
 * sparse polynomials in x (weight) and q (length) over the integers, and
 * dense power series truncated at a weight or length bound. No coefficient
 * is ever rounded. */

// Dense polynomial in q. Trailing zero coefficients are trimmed, so the
// zero polynomial has an empty coefficient vector and degree -1.
class UniPoly {
  public:
    UniPoly() = default;
    static UniPoly constant(Int value);
    static UniPoly one() { return constant(1); }
    static UniPoly monomial(int degree, Int coeff = 1);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Int coeff(int degree) const;
    Int constant_term() const { return coeff(0); }

    UniPoly &operator+=(const UniPoly &rhs);
    UniPoly &operator-=(const UniPoly &rhs);
    friend UniPoly operator+(UniPoly lhs, const UniPoly &rhs) { return lhs += rhs; }
    friend UniPoly operator-(UniPoly lhs, const UniPoly &rhs) { return lhs -= rhs; }
    friend UniPoly operator*(const UniPoly &lhs, const UniPoly &rhs);
    UniPoly &operator*=(const UniPoly &rhs);
    UniPoly operator-() const;
    friend bool operator==(const UniPoly &, const UniPoly &) = default;

    std::string str() const;

  private:
    void trim();
    std::vector<Int> coeffs_;
};

// Quotient of an exact division; the remainder is known to vanish.
// Throws InternalError if it does not.
UniPoly divide_exact(const UniPoly &num, const UniPoly &den);

// Monomial x^xdeg q^qdeg, ordered lexicographically with x first. The last
// map entry of a BiPoly is the leading term used by exact division.
struct Monomial {
    int xdeg = 0;
    int qdeg = 0;
    friend auto operator<=>(const Monomial &, const Monomial &) = default;
};

// Sparse polynomial in x and q. Canonical form: no stored coefficient is
// zero, all degrees nonnegative.
class BiPoly {
  public:
    BiPoly() = default;
    static BiPoly constant(Int value);
    static BiPoly one() { return constant(1); }
    static BiPoly monomial(int xdeg, int qdeg, Int coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    Int coeff(int xdeg, int qdeg) const;
    Int constant_term() const { return coeff(0, 0); }
    const std::map<Monomial, Int> &terms() const { return terms_; }

    BiPoly &operator+=(const BiPoly &rhs);
    BiPoly &operator-=(const BiPoly &rhs);
    friend BiPoly operator+(BiPoly lhs, const BiPoly &rhs) { return lhs += rhs; }
    friend BiPoly operator-(BiPoly lhs, const BiPoly &rhs) { return lhs -= rhs; }
    friend BiPoly operator*(const BiPoly &lhs, const BiPoly &rhs);
    BiPoly &operator*=(const BiPoly &rhs);
    BiPoly operator-() const;
    friend bool operator==(const BiPoly &, const BiPoly &) = default;

    // Substitute x = 1, leaving the length-only polynomial in q.
    UniPoly specialize_x1() const;

    std::string str() const;

  private:
    void add_term(const Monomial &m, const Int &coeff);
    std::map<Monomial, Int> terms_;
};

BiPoly divide_exact(const BiPoly &num, const BiPoly &den);

// Bivariate counting series truncated at a weight bound: the coefficient of
// x^n q^m is stored for 0 <= m <= n <= max_weight. A composition of weight n
// has at most n parts, so counting series never have support outside that
// triangle; from_poly rejects a nonzero coefficient with m > n.
class BiSeries {
  public:
    explicit BiSeries(int max_weight);
    static BiSeries one(int max_weight);
    static BiSeries from_poly(const BiPoly &p, int max_weight);

    int max_weight() const { return max_weight_; }
    const Int &at(int n, int m) const;
    void set(int n, int m, Int value);
    // Coefficients of q^0..q^n in the x^n slice.
    std::vector<Int> row(int n) const;
    Int row_total(int n) const;

    friend BiSeries operator+(const BiSeries &lhs, const BiSeries &rhs);
    friend BiSeries operator-(const BiSeries &lhs, const BiSeries &rhs);
    friend BiSeries operator*(const BiSeries &lhs, const BiSeries &rhs);

    // Multiplicative inverse up to truncation. Requires the constant term to
    // be +1 or -1 so that every coefficient stays an integer.
    BiSeries invert() const;

    friend bool operator==(const BiSeries &, const BiSeries &) = default;

  private:
    void check_index(int n, int m) const;
    int max_weight_ = 0;
    std::vector<std::vector<Int>> c_;
};

// num / den expanded to the weight bound. The weight-zero part of den must
// be the constant +1 or -1. num and den are intermediate algebra and may
// carry terms with q-degree above x-degree; only the final quotient is
// required to be triangular.
BiSeries series_div(const BiPoly &num, const BiPoly &den, int max_weight);

// Univariate series in q truncated at a length bound.
class UniSeries {
  public:
    explicit UniSeries(int max_length);
    static UniSeries one(int max_length);
    static UniSeries from_poly(const UniPoly &p, int max_length);

    int max_length() const { return max_length_; }
    const Int &at(int m) const;
    void set(int m, Int value);

    friend UniSeries operator+(const UniSeries &lhs, const UniSeries &rhs);
    friend UniSeries operator-(const UniSeries &lhs, const UniSeries &rhs);
    friend UniSeries operator*(const UniSeries &lhs, const UniSeries &rhs);
    UniSeries invert() const;

    friend bool operator==(const UniSeries &, const UniSeries &) = default;

  private:
    int max_length_ = 0;
    std::vector<Int> c_;
};

UniSeries series_div(const UniPoly &num, const UniPoly &den, int max_length);

}  // namespace compavoid
