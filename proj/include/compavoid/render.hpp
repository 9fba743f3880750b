#pragma once

#include <optional>
#include <string>
#include <vector>

#include "compavoid/bigint.hpp"
#include "compavoid/correlate.hpp"
#include "compavoid/oracle.hpp"

namespace compavoid {

enum class OutputFormat { kTable, kJson, kCsv };

// Polynomial-style cell from ascending q-coefficients, mirroring how the
// series rows read: "q + 4q^2 + 3q^3 + 4q^4 + q^5". "0" when all vanish.
std::string q_poly_cell(const std::vector<Int> &qcoeffs);

struct CompositionReport {
    std::string mode;  // "compositions" or "family"
    std::vector<Word> forbidden;
    std::vector<int> exponents;  // family mode only
    CoefficientTriangle gf;
    std::vector<CoefficientTriangle> quasi;  // one per word when requested
    std::optional<bool> oracle_match;
    std::string oracle_detail;
};

struct StringReport {
    std::vector<Word> forbidden;
    int alphabet_size = 0;
    std::vector<Int> counts;  // per length 0..max_length
    std::optional<bool> oracle_match;
    std::string oracle_detail;
};

std::string render(const CompositionReport &report, OutputFormat format);
std::string render(const StringReport &report, OutputFormat format);

}  // namespace compavoid
