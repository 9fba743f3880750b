#include "compavoid/family.hpp"

#include <utility>

#include "compavoid/errors.hpp"

namespace compavoid {

ExponentSet::ExponentSet(std::vector<int> exponents) : exponents_(std::move(exponents)) {
    if (exponents_.empty()) throw ValidationError("exponent set must be nonempty");
    if (exponents_[0] < 1) throw ValidationError("exponents must be positive");
    for (std::size_t i = 1; i < exponents_.size(); ++i)
        if (exponents_[i] <= exponents_[i - 1])
            throw ValidationError("exponents must be strictly increasing");
}

ForbiddenSet family_words(const ExponentSet &e) {
    std::vector<Word> words;
    words.reserve(e.size());
    for (int a : e.exponents()) {
        std::vector<int> parts;
        parts.reserve(a + 1);
        parts.push_back(2);
        parts.insert(parts.end(), a - 1, 1);
        parts.push_back(2);
        words.push_back(Word(std::move(parts)));
    }
    return validate_antichain(std::move(words));
}

BiSeries family_gf(const ExponentSet &e, int max_weight) {
    const BiPoly one = BiPoly::one();
    const BiPoly x = BiPoly::monomial(1, 0);
    const BiPoly x2q = BiPoly::monomial(2, 1);

    BiPoly p;  // sum_i (xq)^{a_i}
    for (int a : e.exponents()) p += BiPoly::monomial(a, a);
    const BiPoly one_plus_xp = one + x * p;
    const BiPoly head = one - x - BiPoly::monomial(1, 1) + (one - x) * x2q;

    const BiPoly num = (one - x) * one_plus_xp;
    const BiPoly den = head * one_plus_xp - (one - x) * x2q;
    return series_div(num, den, max_weight);
}

ExponentSet family_exponents(FamilyKind kind, int k) {
    if (k < 1) throw ValidationError("family parameter k must be at least 1");
    std::vector<int> exponents;
    switch (kind) {
        case FamilyKind::kConsecutive:
            for (int i = 1; i <= k; ++i) exponents.push_back(i);
            break;
        case FamilyKind::kOddExponents:
            for (int i = 0; i <= k; ++i) exponents.push_back(2 * i + 1);
            break;
        case FamilyKind::kEvenExponents:
            for (int i = 1; i <= k; ++i) exponents.push_back(2 * i);
            break;
    }
    return ExponentSet(std::move(exponents));
}

BiSeries family_gf_special(FamilyKind kind, int k, int max_weight) {
    return family_gf(family_exponents(kind, k), max_weight);
}

}  // namespace compavoid
