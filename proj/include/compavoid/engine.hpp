#pragma once

#include <cstddef>
#include <vector>

#include "compavoid/correlate.hpp"
#include "compavoid/series.hpp"

namespace compavoid {

// Hard cap on the forbidden-set size and hence on determinant dimension.
inline constexpr std::size_t kMaxForbiddenWords = 12;

// entries[i][j] = correlation polynomial of word i against word j.
// Diagonal entries have constant term 1 (full self-overlap), off-diagonal
// entries constant term 0 (a full overlap would violate the antichain).
struct CorrelationMatrix {
    std::vector<std::vector<BiPoly>> entries;
    std::size_t size() const { return entries.size(); }
};

CorrelationMatrix build_matrix(const ForbiddenSet &set);

/* Exact determinants over the integer polynomial ring. Two independent
 * routes are kept: cofactor expansion memoized over column subsets, and
 * fraction-free elimination whose exact divisions keep intermediates
 * polynomial. det() dispatches by dimension (cofactor up to 8, elimination
 * up to the hard cap) and throws SizeLimitExceeded beyond it. The empty
 * matrix has determinant 1. */
BiPoly det(const std::vector<std::vector<BiPoly>> &m);
BiPoly det_cofactor(const std::vector<std::vector<BiPoly>> &m);
BiPoly det_elimination(const std::vector<std::vector<BiPoly>> &m);
UniPoly det(const std::vector<std::vector<UniPoly>> &m);
UniPoly det_cofactor(const std::vector<std::vector<UniPoly>> &m);
UniPoly det_elimination(const std::vector<std::vector<UniPoly>> &m);

// gf counts avoiding compositions by weight (x) and length (q); quasi[i]
// counts compositions ending with word i with no other occurrence of any
// forbidden word. numer and denom are the two determinants behind gf,
// kept for inspection: gf = (1-x) * numer / denom.
struct AvoidanceResult {
    BiSeries gf;
    std::vector<BiSeries> quasi;
    BiPoly numer;
    BiPoly denom;
};

// Series of (1-x) det(-c_ij) / det(bordered matrix) through max_weight,
// where the bordered matrix has corner 1-x(1+q), first row 1-x, first
// column x^{w(S_i)} q^{len(S_i)} and core -c_ij(x,q). The quasi series come
// from the same linear system by Cramer's rule, one column replacement per
// unknown. An empty set yields the unrestricted series (1-x)/(1-x(1+q)).
AvoidanceResult composition_gf(const ForbiddenSet &set, int max_weight);

// Length-counting analogue for strings over {1..alphabet_size}:
// det(-c_ij(q)) over the bordered determinant with corner 1 - nq, first
// row 1, first column q^{len(S_i)}. An empty set yields 1/(1-nq).
UniSeries string_gf(const ForbiddenSet &set, int alphabet_size, int max_length);

// Truncated checks of the two identities the avoidance system satisfies:
//   growth:   (1-x-xq) G + (1-x) sum_i B_i = 1-x
//   tail i:   x^{w(S_i)} q^{len(S_i)} G = sum_j c_ij B_j
// Failures are reported, not thrown.
struct IdentityReport {
    bool growth_ok = false;
    std::vector<unsigned char> tail_ok;
    bool all_ok() const;
};

IdentityReport verify_identities(const AvoidanceResult &result, const ForbiddenSet &set);

}  // namespace compavoid
