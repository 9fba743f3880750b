#include "compavoid/engine.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <utility>

#include "compavoid/errors.hpp"

namespace compavoid {

namespace {

template <class Poly>
void check_square(const std::vector<std::vector<Poly>> &m) {
    for (const auto &row : m)
        if (row.size() != m.size()) throw InternalError("determinant of a non-square matrix");
}

/* Laplace expansion down the rows, memoized on the subset of columns still
 * unused. Row r always pairs with masks of popcount k - r, so the mask
 * alone identifies the minor: 2^k states instead of k! paths. */
template <class Poly>
Poly cofactor_det(const std::vector<std::vector<Poly>> &m) {
    const std::size_t k = m.size();
    if (k == 0) return Poly::one();
    std::vector<Poly> memo(std::size_t(1) << k);
    std::vector<bool> known(std::size_t(1) << k, false);
    auto rec = [&](auto &&self, std::uint32_t mask) -> Poly {
        if (mask == 0) return Poly::one();
        if (known[mask]) return memo[mask];
        const std::size_t row = k - static_cast<std::size_t>(std::popcount(mask));
        Poly acc;
        int pos = 0;
        for (std::size_t col = 0; col < k; ++col) {
            if (!(mask & (std::uint32_t(1) << col))) continue;
            if (!m[row][col].is_zero()) {
                Poly term = m[row][col] * self(self, mask & ~(std::uint32_t(1) << col));
                acc += (pos % 2 == 0) ? term : -term;
            }
            ++pos;
        }
        known[mask] = true;
        memo[mask] = acc;
        return acc;
    };
    return rec(rec, (std::uint32_t(1) << k) - 1);
}

/* Fraction-free (Bareiss) elimination: each update
 *   m[i][j] <- (m[i][j] m[r][r] - m[i][r] m[r][j]) / previous pivot
 * divides exactly over the polynomial ring, so intermediates never leave
 * it. Row swaps on zero pivots only flip the sign. */
template <class Poly>
Poly elimination_det(std::vector<std::vector<Poly>> m) {
    const std::size_t k = m.size();
    if (k == 0) return Poly::one();
    Poly prev = Poly::one();
    bool negate = false;
    for (std::size_t r = 0; r + 1 < k; ++r) {
        std::size_t pivot = r;
        while (pivot < k && m[pivot][r].is_zero()) ++pivot;
        if (pivot == k) return Poly();
        if (pivot != r) {
            std::swap(m[pivot], m[r]);
            negate = !negate;
        }
        for (std::size_t i = r + 1; i < k; ++i)
            for (std::size_t j = r + 1; j < k; ++j)
                m[i][j] = divide_exact(m[i][j] * m[r][r] - m[i][r] * m[r][j], prev);
        prev = m[r][r];
    }
    return negate ? -m[k - 1][k - 1] : m[k - 1][k - 1];
}

// The bordered system for k forbidden words is (k+1) x (k+1).
constexpr std::size_t kMaxDetDimension = kMaxForbiddenWords + 1;

template <class Poly>
Poly dispatch_det(const std::vector<std::vector<Poly>> &m) {
    if (m.size() > kMaxDetDimension)
        throw SizeLimitExceeded("determinants limited to dimension " +
                                std::to_string(kMaxDetDimension));
    return m.size() <= 9 ? cofactor_det(m) : elimination_det(m);
}

Int expected_origin_sign(std::size_t k) { return (k % 2 == 0) ? Int(1) : Int(-1); }

}  // namespace

BiPoly det(const std::vector<std::vector<BiPoly>> &m) {
    check_square(m);
    return dispatch_det(m);
}

BiPoly det_cofactor(const std::vector<std::vector<BiPoly>> &m) {
    check_square(m);
    return cofactor_det(m);
}

BiPoly det_elimination(const std::vector<std::vector<BiPoly>> &m) {
    check_square(m);
    return elimination_det(m);
}

UniPoly det(const std::vector<std::vector<UniPoly>> &m) {
    check_square(m);
    return dispatch_det(m);
}

UniPoly det_cofactor(const std::vector<std::vector<UniPoly>> &m) {
    check_square(m);
    return cofactor_det(m);
}

UniPoly det_elimination(const std::vector<std::vector<UniPoly>> &m) {
    check_square(m);
    return elimination_det(m);
}

CorrelationMatrix build_matrix(const ForbiddenSet &set) {
    const std::size_t k = set.size();
    CorrelationMatrix matrix;
    matrix.entries.resize(k, std::vector<BiPoly>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            BiPoly c = correlation_poly_xq(set.word(i), set.word(j));
            const Int c0 = c.constant_term();
            if (c0 != (i == j ? 1 : 0))
                throw InternalError("correlation matrix constant-term invariant violated at (" +
                                    std::to_string(i) + ", " + std::to_string(j) + ")");
            matrix.entries[i][j] = std::move(c);
        }
    return matrix;
}

namespace {

// (k+1) x (k+1) matrix of the linear system in (G, B_1..B_k).
std::vector<std::vector<BiPoly>> bordered_matrix(const ForbiddenSet &set,
                                                 const CorrelationMatrix &corr) {
    const std::size_t k = set.size();
    const BiPoly one_minus_x = BiPoly::one() - BiPoly::monomial(1, 0);
    std::vector<std::vector<BiPoly>> m(k + 1, std::vector<BiPoly>(k + 1));
    m[0][0] = BiPoly::one() - BiPoly::monomial(1, 0) - BiPoly::monomial(1, 1);
    for (std::size_t j = 1; j <= k; ++j) m[0][j] = one_minus_x;
    for (std::size_t i = 1; i <= k; ++i) {
        const Word &word = set.word(i - 1);
        m[i][0] = BiPoly::monomial(word.weight(), word.length());
        for (std::size_t j = 1; j <= k; ++j) m[i][j] = -corr.entries[i - 1][j - 1];
    }
    return m;
}

}  // namespace

AvoidanceResult composition_gf(const ForbiddenSet &set, int max_weight) {
    const std::size_t k = set.size();
    if (k > kMaxForbiddenWords)
        throw SizeLimitExceeded("forbidden sets limited to " +
                                std::to_string(kMaxForbiddenWords) + " words");
    const CorrelationMatrix corr = build_matrix(set);

    std::vector<std::vector<BiPoly>> core(k, std::vector<BiPoly>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) core[i][j] = -corr.entries[i][j];
    BiPoly numer = det(core);

    const auto bordered = bordered_matrix(set, corr);
    BiPoly denom = det(bordered);

    // Both determinants are (-1)^k at the origin: corner 1 over core -I.
    if (numer.constant_term() != expected_origin_sign(k) ||
        denom.constant_term() != expected_origin_sign(k))
        throw InternalError("determinant constant terms violate the (-1)^k invariant");

    const BiPoly one_minus_x = BiPoly::one() - BiPoly::monomial(1, 0);
    BiSeries gf = series_div(one_minus_x * numer, denom, max_weight);
    if (gf.at(0, 0) != 1) throw InternalError("avoidance series must start at 1");
    for (int n = 0; n <= max_weight; ++n)
        for (int m = 0; m <= n; ++m)
            if (gf.at(n, m) < 0)
                throw InternalError("avoidance series has a negative coefficient at x^" +
                                    std::to_string(n) + " q^" + std::to_string(m));

    std::vector<BiSeries> quasi;
    quasi.reserve(k);
    for (std::size_t i = 1; i <= k; ++i) {
        auto replaced = bordered;
        for (std::size_t r = 0; r <= k; ++r)
            replaced[r][i] = (r == 0) ? one_minus_x : BiPoly();
        quasi.push_back(series_div(det(replaced), denom, max_weight));
    }

    return AvoidanceResult{std::move(gf), std::move(quasi), std::move(numer), std::move(denom)};
}

UniSeries string_gf(const ForbiddenSet &set, int alphabet_size, int max_length) {
    if (alphabet_size < 1) throw ValidationError("alphabet size must be at least 1");
    const std::size_t k = set.size();
    if (k > kMaxForbiddenWords)
        throw SizeLimitExceeded("forbidden sets limited to " +
                                std::to_string(kMaxForbiddenWords) + " words");
    for (std::size_t i = 0; i < k; ++i)
        if (set.word(i).max_letter() > alphabet_size)
            throw LetterOutOfAlphabet("forbidden word \"" + set.word(i).str() +
                                      "\" uses a letter above the alphabet size " +
                                      std::to_string(alphabet_size));

    std::vector<std::vector<UniPoly>> core(k, std::vector<UniPoly>(k));
    std::vector<std::vector<UniPoly>> bordered(k + 1, std::vector<UniPoly>(k + 1));
    bordered[0][0] = UniPoly::one() - UniPoly::monomial(1, alphabet_size);
    for (std::size_t j = 1; j <= k; ++j) bordered[0][j] = UniPoly::one();
    for (std::size_t i = 0; i < k; ++i) {
        bordered[i + 1][0] = UniPoly::monomial(set.word(i).length());
        for (std::size_t j = 0; j < k; ++j) {
            core[i][j] = -correlation_poly_q(set.word(i), set.word(j));
            bordered[i + 1][j + 1] = core[i][j];
        }
    }

    UniPoly numer = det(core);
    UniPoly denom = det(bordered);
    if (denom.constant_term() != expected_origin_sign(k))
        throw InternalError("determinant constant term violates the (-1)^k invariant");
    return series_div(numer, denom, max_length);
}

bool IdentityReport::all_ok() const {
    if (!growth_ok) return false;
    for (unsigned char ok : tail_ok)
        if (!ok) return false;
    return true;
}

IdentityReport verify_identities(const AvoidanceResult &result, const ForbiddenSet &set) {
    const int N = result.gf.max_weight();
    const std::size_t k = set.size();
    const BiPoly one_minus_x = BiPoly::one() - BiPoly::monomial(1, 0);

    IdentityReport report;

    BiSeries quasi_sum(N);
    for (const BiSeries &b : result.quasi) quasi_sum = quasi_sum + b;
    const BiPoly growth = one_minus_x - BiPoly::monomial(1, 1);
    BiSeries lhs = BiSeries::from_poly(growth, N) * result.gf +
                   BiSeries::from_poly(one_minus_x, N) * quasi_sum;
    report.growth_ok = (lhs == BiSeries::from_poly(one_minus_x, N));

    const CorrelationMatrix corr = build_matrix(set);
    report.tail_ok.assign(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        const Word &word = set.word(i);
        BiSeries left =
            BiSeries::from_poly(BiPoly::monomial(word.weight(), word.length()), N) * result.gf;
        BiSeries right(N);
        for (std::size_t j = 0; j < k; ++j)
            right = right + BiSeries::from_poly(corr.entries[i][j], N) * result.quasi[j];
        report.tail_ok[i] = (left == right);
    }
    return report;
}

}  // namespace compavoid
