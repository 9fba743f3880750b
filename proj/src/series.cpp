#include "compavoid/series.hpp"

#include <sstream>
#include <utility>

#include "compavoid/errors.hpp"

namespace compavoid {

/* ---------------- UniPoly ---------------- */

UniPoly UniPoly::constant(Int value) {
    UniPoly p;
    if (value != 0) p.coeffs_.push_back(std::move(value));
    return p;
}

UniPoly UniPoly::monomial(int degree, Int coeff) {
    if (degree < 0) throw ValidationError("polynomial degrees must be nonnegative");
    UniPoly p;
    if (coeff != 0) {
        p.coeffs_.assign(degree + 1, Int(0));
        p.coeffs_[degree] = std::move(coeff);
    }
    return p;
}

Int UniPoly::coeff(int degree) const {
    if (degree < 0 || degree > this->degree()) return 0;
    return coeffs_[degree];
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly &UniPoly::operator+=(const UniPoly &rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Int(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

UniPoly &UniPoly::operator-=(const UniPoly &rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Int(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly &lhs, const UniPoly &rhs) {
    UniPoly out;
    if (lhs.is_zero() || rhs.is_zero()) return out;
    out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    out.trim();
    return out;
}

UniPoly &UniPoly::operator*=(const UniPoly &rhs) {
    *this = *this * rhs;
    return *this;
}

UniPoly UniPoly::operator-() const {
    UniPoly out = *this;
    for (auto &c : out.coeffs_) c = -c;
    return out;
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= degree(); ++d) {
        const Int &c = coeffs_[d];
        if (c == 0) continue;
        Int mag = c < 0 ? Int(-c) : c;
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        if (mag != 1 || d == 0) os << mag.str();
        if (d >= 1) {
            os << "q";
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

UniPoly divide_exact(const UniPoly &num, const UniPoly &den) {
    if (den.is_zero()) throw InternalError("exact division by the zero polynomial");
    UniPoly quotient;
    UniPoly rem = num;
    const int dd = den.degree();
    const Int dl = den.coeff(dd);
    while (!rem.is_zero()) {
        const int rd = rem.degree();
        if (rd < dd) throw InternalError("polynomial division is not exact");
        Int c = rem.coeff(rd) / dl;
        if (c * dl != rem.coeff(rd)) throw InternalError("polynomial division is not exact");
        UniPoly t = UniPoly::monomial(rd - dd, c);
        quotient += t;
        rem -= t * den;
    }
    return quotient;
}

/* ---------------- BiPoly ---------------- */

BiPoly BiPoly::constant(Int value) {
    BiPoly p;
    p.add_term({0, 0}, value);
    return p;
}

BiPoly BiPoly::monomial(int xdeg, int qdeg, Int coeff) {
    if (xdeg < 0 || qdeg < 0) throw ValidationError("polynomial degrees must be nonnegative");
    BiPoly p;
    p.add_term({xdeg, qdeg}, coeff);
    return p;
}

Int BiPoly::coeff(int xdeg, int qdeg) const {
    auto it = terms_.find({xdeg, qdeg});
    return it == terms_.end() ? Int(0) : it->second;
}

void BiPoly::add_term(const Monomial &m, const Int &coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPoly &BiPoly::operator+=(const BiPoly &rhs) {
    for (const auto &[m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

BiPoly &BiPoly::operator-=(const BiPoly &rhs) {
    for (const auto &[m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

BiPoly operator*(const BiPoly &lhs, const BiPoly &rhs) {
    BiPoly out;
    for (const auto &[ma, ca] : lhs.terms_)
        for (const auto &[mb, cb] : rhs.terms_)
            out.add_term({ma.xdeg + mb.xdeg, ma.qdeg + mb.qdeg}, ca * cb);
    return out;
}

BiPoly &BiPoly::operator*=(const BiPoly &rhs) {
    *this = *this * rhs;
    return *this;
}

BiPoly BiPoly::operator-() const {
    BiPoly out = *this;
    for (auto &[m, c] : out.terms_) c = -c;
    return out;
}

UniPoly BiPoly::specialize_x1() const {
    UniPoly out;
    for (const auto &[m, c] : terms_) out += UniPoly::monomial(m.qdeg, c);
    return out;
}

std::string BiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        Int mag = c < 0 ? Int(-c) : c;
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        const bool has_var = m.xdeg > 0 || m.qdeg > 0;
        if (mag != 1 || !has_var) os << mag.str();
        if (m.xdeg >= 1) {
            os << "x";
            if (m.xdeg > 1) os << "^" << m.xdeg;
        }
        if (m.qdeg >= 1) {
            os << "q";
            if (m.qdeg > 1) os << "^" << m.qdeg;
        }
    }
    return os.str();
}

/* Multivariate long division against a single divisor. When den divides num
 * the leading term of every intermediate remainder is divisible by the
 * leading term of den, and the leading monomial strictly decreases, so the
 * loop terminates with remainder zero. Any failed step means the division
 * was not exact. */
BiPoly divide_exact(const BiPoly &num, const BiPoly &den) {
    if (den.is_zero()) throw InternalError("exact division by the zero polynomial");
    BiPoly quotient;
    BiPoly rem = num;
    const auto &dlead = *den.terms().rbegin();
    while (!rem.is_zero()) {
        const auto &rlead = *rem.terms().rbegin();
        const int dx = rlead.first.xdeg - dlead.first.xdeg;
        const int dq = rlead.first.qdeg - dlead.first.qdeg;
        if (dx < 0 || dq < 0) throw InternalError("polynomial division is not exact");
        Int c = rlead.second / dlead.second;
        if (c * dlead.second != rlead.second)
            throw InternalError("polynomial division is not exact");
        BiPoly t = BiPoly::monomial(dx, dq, c);
        quotient += t;
        rem -= t * den;
    }
    return quotient;
}

/* ---------------- shared series division ----------------
 *
 * Power series in x with coefficients in Z[q]. With b[0] = s in {+1,-1},
 * num = den * out gives the recurrence
 *     out[n] = s * (a[n] - sum_{k=1..n} b[k] * out[n-k]),
 * which stays in Z[q] throughout. */
namespace {

std::vector<UniPoly> divide_rows(const std::vector<UniPoly> &a, const std::vector<UniPoly> &b) {
    if (b[0].degree() > 0)
        throw NonUnitConstant("weight-zero part of the denominator must be a constant");
    const Int s = b[0].constant_term();
    if (s != 1 && s != -1)
        throw NonUnitConstant("denominator constant term must be +1 or -1, got " + s.str());
    const std::size_t n = a.size();
    std::vector<UniPoly> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        UniPoly acc = a[i];
        for (std::size_t k = 1; k <= i; ++k) acc -= b[k] * out[i - k];
        out[i] = (s == 1) ? acc : -acc;
    }
    return out;
}

std::vector<UniPoly> poly_rows(const BiPoly &p, int max_weight) {
    std::vector<UniPoly> rows(max_weight + 1);
    for (const auto &[m, c] : p.terms())
        if (m.xdeg <= max_weight) rows[m.xdeg] += UniPoly::monomial(m.qdeg, c);
    return rows;
}

}  // namespace

/* ---------------- BiSeries ---------------- */

BiSeries::BiSeries(int max_weight) : max_weight_(max_weight) {
    if (max_weight < 0) throw ValidationError("max weight must be nonnegative");
    c_.resize(max_weight + 1);
    for (int n = 0; n <= max_weight; ++n) c_[n].assign(n + 1, Int(0));
}

BiSeries BiSeries::one(int max_weight) {
    BiSeries s(max_weight);
    s.c_[0][0] = 1;
    return s;
}

BiSeries BiSeries::from_poly(const BiPoly &p, int max_weight) {
    BiSeries s(max_weight);
    for (const auto &[m, c] : p.terms()) {
        if (m.xdeg > max_weight) continue;
        if (m.qdeg > m.xdeg)
            throw NonTriangular("coefficient of x^" + std::to_string(m.xdeg) + " q^" +
                                std::to_string(m.qdeg) + " lies outside the triangle m <= n");
        s.c_[m.xdeg][m.qdeg] = c;
    }
    return s;
}

void BiSeries::check_index(int n, int m) const {
    if (n < 0 || n > max_weight_ || m < 0 || m > n)
        throw IndexOutOfRange("series index (" + std::to_string(n) + ", " + std::to_string(m) +
                              ") outside triangle of bound " + std::to_string(max_weight_));
}

const Int &BiSeries::at(int n, int m) const {
    check_index(n, m);
    return c_[n][m];
}

void BiSeries::set(int n, int m, Int value) {
    check_index(n, m);
    c_[n][m] = std::move(value);
}

std::vector<Int> BiSeries::row(int n) const {
    check_index(n, 0);
    return c_[n];
}

Int BiSeries::row_total(int n) const {
    check_index(n, 0);
    Int total = 0;
    for (const Int &c : c_[n]) total += c;
    return total;
}

BiSeries operator+(const BiSeries &lhs, const BiSeries &rhs) {
    if (lhs.max_weight_ != rhs.max_weight_)
        throw BoundMismatch("series truncation bounds differ");
    BiSeries out = lhs;
    for (int n = 0; n <= out.max_weight_; ++n)
        for (int m = 0; m <= n; ++m) out.c_[n][m] += rhs.c_[n][m];
    return out;
}

BiSeries operator-(const BiSeries &lhs, const BiSeries &rhs) {
    if (lhs.max_weight_ != rhs.max_weight_)
        throw BoundMismatch("series truncation bounds differ");
    BiSeries out = lhs;
    for (int n = 0; n <= out.max_weight_; ++n)
        for (int m = 0; m <= n; ++m) out.c_[n][m] -= rhs.c_[n][m];
    return out;
}

// The triangle is closed under products: m1 <= n1 and m2 <= n2 give
// m1+m2 <= n1+n2, so no truncation in q is ever needed.
BiSeries operator*(const BiSeries &lhs, const BiSeries &rhs) {
    if (lhs.max_weight_ != rhs.max_weight_)
        throw BoundMismatch("series truncation bounds differ");
    const int N = lhs.max_weight_;
    BiSeries out(N);
    for (int n1 = 0; n1 <= N; ++n1)
        for (int m1 = 0; m1 <= n1; ++m1) {
            if (lhs.c_[n1][m1] == 0) continue;
            for (int n2 = 0; n1 + n2 <= N; ++n2)
                for (int m2 = 0; m2 <= n2; ++m2)
                    out.c_[n1 + n2][m1 + m2] += lhs.c_[n1][m1] * rhs.c_[n2][m2];
        }
    return out;
}

BiSeries BiSeries::invert() const {
    std::vector<UniPoly> rows(max_weight_ + 1);
    for (int n = 0; n <= max_weight_; ++n)
        for (int m = 0; m <= n; ++m)
            if (c_[n][m] != 0) rows[n] += UniPoly::monomial(m, c_[n][m]);
    std::vector<UniPoly> unit(max_weight_ + 1);
    unit[0] = UniPoly::one();
    std::vector<UniPoly> inv = divide_rows(unit, rows);
    BiSeries out(max_weight_);
    for (int n = 0; n <= max_weight_; ++n) {
        if (inv[n].degree() > n)
            throw NonTriangular("inverse has q-degree above x-degree at weight " +
                                std::to_string(n));
        for (int m = 0; m <= n; ++m) out.c_[n][m] = inv[n].coeff(m);
    }
    return out;
}

BiSeries series_div(const BiPoly &num, const BiPoly &den, int max_weight) {
    if (max_weight < 0) throw ValidationError("max weight must be nonnegative");
    std::vector<UniPoly> quot = divide_rows(poly_rows(num, max_weight), poly_rows(den, max_weight));
    BiSeries out(max_weight);
    for (int n = 0; n <= max_weight; ++n) {
        if (quot[n].degree() > n)
            throw NonTriangular("quotient has q-degree above x-degree at weight " +
                                std::to_string(n));
        for (int m = 0; m <= n; ++m) out.set(n, m, quot[n].coeff(m));
    }
    return out;
}

/* ---------------- UniSeries ---------------- */

UniSeries::UniSeries(int max_length) : max_length_(max_length) {
    if (max_length < 0) throw ValidationError("max length must be nonnegative");
    c_.assign(max_length + 1, Int(0));
}

UniSeries UniSeries::one(int max_length) {
    UniSeries s(max_length);
    s.c_[0] = 1;
    return s;
}

UniSeries UniSeries::from_poly(const UniPoly &p, int max_length) {
    UniSeries s(max_length);
    for (int d = 0; d <= p.degree() && d <= max_length; ++d) s.c_[d] = p.coeff(d);
    return s;
}

const Int &UniSeries::at(int m) const {
    if (m < 0 || m > max_length_)
        throw IndexOutOfRange("series index " + std::to_string(m) + " exceeds bound " +
                              std::to_string(max_length_));
    return c_[m];
}

void UniSeries::set(int m, Int value) {
    if (m < 0 || m > max_length_)
        throw IndexOutOfRange("series index " + std::to_string(m) + " exceeds bound " +
                              std::to_string(max_length_));
    c_[m] = std::move(value);
}

UniSeries operator+(const UniSeries &lhs, const UniSeries &rhs) {
    if (lhs.max_length_ != rhs.max_length_)
        throw BoundMismatch("series truncation bounds differ");
    UniSeries out = lhs;
    for (int m = 0; m <= out.max_length_; ++m) out.c_[m] += rhs.c_[m];
    return out;
}

UniSeries operator-(const UniSeries &lhs, const UniSeries &rhs) {
    if (lhs.max_length_ != rhs.max_length_)
        throw BoundMismatch("series truncation bounds differ");
    UniSeries out = lhs;
    for (int m = 0; m <= out.max_length_; ++m) out.c_[m] -= rhs.c_[m];
    return out;
}

UniSeries operator*(const UniSeries &lhs, const UniSeries &rhs) {
    if (lhs.max_length_ != rhs.max_length_)
        throw BoundMismatch("series truncation bounds differ");
    UniSeries out(lhs.max_length_);
    for (int i = 0; i <= lhs.max_length_; ++i) {
        if (lhs.c_[i] == 0) continue;
        for (int j = 0; i + j <= lhs.max_length_; ++j) out.c_[i + j] += lhs.c_[i] * rhs.c_[j];
    }
    return out;
}

UniSeries UniSeries::invert() const {
    const Int s = c_[0];
    if (s != 1 && s != -1)
        throw NonUnitConstant("series constant term must be +1 or -1, got " + s.str());
    UniSeries out(max_length_);
    out.c_[0] = s;
    for (int n = 1; n <= max_length_; ++n) {
        Int acc = 0;
        for (int k = 1; k <= n; ++k) acc -= c_[k] * out.c_[n - k];
        out.c_[n] = (s == 1) ? acc : -acc;
    }
    return out;
}

UniSeries series_div(const UniPoly &num, const UniPoly &den, int max_length) {
    if (max_length < 0) throw ValidationError("max length must be nonnegative");
    const Int s = den.constant_term();
    if (s != 1 && s != -1)
        throw NonUnitConstant("denominator constant term must be +1 or -1, got " + s.str());
    UniSeries out(max_length);
    for (int n = 0; n <= max_length; ++n) {
        Int acc = num.coeff(n);
        for (int k = 1; k <= n; ++k) acc -= den.coeff(k) * out.at(n - k);
        out.set(n, (s == 1) ? acc : Int(-acc));
    }
    return out;
}

}  // namespace compavoid
