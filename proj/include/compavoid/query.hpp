#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "compavoid/correlate.hpp"
#include "compavoid/family.hpp"
#include "compavoid/render.hpp"

namespace compavoid {

// CLI bounds are capped well above anything the enumeration caps allow, so
// engine-only runs can go deeper than oracle-backed ones.
inline constexpr int kMaxQueryBound = 100;

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitBound = 2;
inline constexpr int kExitMismatch = 3;
inline constexpr int kExitInternal = 4;

struct Query {
    enum class Mode { kCompositions, kStrings, kFamily, kVerify };
    Mode mode = Mode::kCompositions;
    std::vector<Word> avoid;
    std::optional<ExponentSet> exponents;
    int alphabet_size = 2;
    int max_weight = 12;
    int max_length = 12;
    OutputFormat format = OutputFormat::kTable;
    bool show_quasi = false;
    bool run_oracle = false;
};

// Raised for --help; not an error.
struct HelpRequested {
    std::string text;
};

// Grammar: parts are base-10 positive integers separated by spaces, words
// separated by semicolons. Digit strings without separators are ambiguous
// once parts exceed 9 and are rejected.
std::vector<Word> parse_word_list(std::string_view text);
std::vector<int> parse_int_list(std::string_view text);

// Whitespace splitter honoring double quotes, for batch lines.
std::vector<std::string> split_command_line(std::string_view line);

// Throws ParseError / ValidationError (and subclasses) on bad input.
Query parse_query(const std::vector<std::string> &args);

// Renders to `out` and returns an exit code; engine errors propagate.
int run_query(const Query &query, std::ostream &out);

// parse_query + run_query with all errors mapped to exit codes.
int run_args(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

// One query per line; blank lines and #-comments are skipped. Returns the
// worst exit code seen.
int run_batch(std::istream &in, std::ostream &out, std::ostream &err);

int exit_code_for(const std::exception &error);

}  // namespace compavoid
