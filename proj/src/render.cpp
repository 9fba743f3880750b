#include "compavoid/render.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace compavoid {

std::string q_poly_cell(const std::vector<Int> &qcoeffs) {
    std::string out;
    bool first = true;
    for (std::size_t d = 0; d < qcoeffs.size(); ++d) {
        const Int &c = qcoeffs[d];
        if (c == 0) continue;
        Int mag = c < 0 ? Int(-c) : c;
        out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        first = false;
        if (mag != 1 || d == 0) out += mag.str();
        if (d >= 1) {
            out += "q";
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return first ? "0" : out;
}

namespace {

using nlohmann::json;

std::string oracle_line(const std::optional<bool> &match, const std::string &detail) {
    if (!match.has_value()) return "";
    if (*match) return "oracle check: match\n";
    return "oracle check: MISMATCH\n" + detail;
}

void triangle_table(std::ostream &os, const CoefficientTriangle &t) {
    os << "weight | series in q\n";
    os << "-------+-------------\n";
    for (int n = 0; n <= t.max_weight; ++n)
        os << std::setw(6) << n << " | " << q_poly_cell(t.counts[n]) << "\n";
}

void triangle_csv(std::ostream &os, const CoefficientTriangle &t) {
    os << "weight,length,count\n";
    for (int n = 0; n <= t.max_weight; ++n)
        for (int m = 0; m <= n; ++m)
            if (t.counts[n][m] != 0)
                os << n << "," << m << "," << t.counts[n][m].str() << "\n";
}

json triangle_coefficients(const CoefficientTriangle &t) {
    json entries = json::array();
    for (int n = 0; n <= t.max_weight; ++n)
        for (int m = 0; m <= n; ++m)
            if (t.counts[n][m] != 0)
                entries.push_back(
                    {{"weight", n}, {"length", m}, {"count", t.counts[n][m].str()}});
    return entries;
}

json words_json(const std::vector<Word> &words) {
    json out = json::array();
    for (const Word &w : words) out.push_back(w.parts());
    return out;
}

}  // namespace

std::string render(const CompositionReport &report, OutputFormat format) {
    std::ostringstream os;
    switch (format) {
        case OutputFormat::kTable:
            triangle_table(os, report.gf);
            for (std::size_t i = 0; i < report.quasi.size(); ++i) {
                os << "\nquasi-avoiders ending with \"" << report.forbidden[i].str() << "\"\n";
                triangle_table(os, report.quasi[i]);
            }
            os << oracle_line(report.oracle_match, report.oracle_detail);
            break;
        case OutputFormat::kCsv:
            triangle_csv(os, report.gf);
            for (std::size_t i = 0; i < report.quasi.size(); ++i) {
                os << "\n# quasi-avoiders ending with: " << report.forbidden[i].str() << "\n";
                triangle_csv(os, report.quasi[i]);
            }
            if (report.oracle_match.has_value())
                os << "# " << (*report.oracle_match ? "oracle check: match"
                                                    : "oracle check: MISMATCH")
                   << "\n";
            break;
        case OutputFormat::kJson: {
            json j;
            j["mode"] = report.mode;
            j["forbidden"] = words_json(report.forbidden);
            j["max_weight"] = report.gf.max_weight;
            j["coefficients"] = triangle_coefficients(report.gf);
            if (!report.exponents.empty()) j["exponents"] = report.exponents;
            if (!report.quasi.empty()) {
                json quasi = json::array();
                for (std::size_t i = 0; i < report.quasi.size(); ++i)
                    quasi.push_back({{"word", report.forbidden[i].parts()},
                                     {"coefficients", triangle_coefficients(report.quasi[i])}});
                j["quasi"] = quasi;
            }
            if (report.oracle_match.has_value())
                j["oracle_check"] = *report.oracle_match ? "match" : "mismatch";
            os << j.dump(2) << "\n";
            break;
        }
    }
    return os.str();
}

std::string render(const StringReport &report, OutputFormat format) {
    std::ostringstream os;
    const int max_length = static_cast<int>(report.counts.size()) - 1;
    switch (format) {
        case OutputFormat::kTable:
            os << "length | count\n";
            os << "-------+------\n";
            for (int m = 0; m <= max_length; ++m)
                os << std::setw(6) << m << " | " << report.counts[m].str() << "\n";
            os << oracle_line(report.oracle_match, report.oracle_detail);
            break;
        case OutputFormat::kCsv:
            os << "length,count\n";
            for (int m = 0; m <= max_length; ++m)
                os << m << "," << report.counts[m].str() << "\n";
            if (report.oracle_match.has_value())
                os << "# " << (*report.oracle_match ? "oracle check: match"
                                                    : "oracle check: MISMATCH")
                   << "\n";
            break;
        case OutputFormat::kJson: {
            json j;
            j["mode"] = "strings";
            j["forbidden"] = words_json(report.forbidden);
            j["alphabet_size"] = report.alphabet_size;
            j["max_length"] = max_length;
            json counts = json::array();
            for (int m = 0; m <= max_length; ++m)
                counts.push_back({{"length", m}, {"count", report.counts[m].str()}});
            j["counts"] = counts;
            if (report.oracle_match.has_value())
                j["oracle_check"] = *report.oracle_match ? "match" : "mismatch";
            os << j.dump(2) << "\n";
            break;
        }
    }
    return os.str();
}

}  // namespace compavoid
