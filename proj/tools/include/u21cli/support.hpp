#pragma once

#include <string>
#include <vector>

#include "u21/suites.hpp"

namespace u21cli {

// Inclusive integer range written "a..b" (or a bare "a" meaning a..a).
struct Range {
    long lo = 0;
    long hi = 0;
};

Range parse_range(const std::string& text);
std::vector<long> parse_longs(const std::string& text);
std::vector<u21::Rational> parse_rationals(const std::string& text);

// Everything a single invocation produced.  When `has_table` is set the
// rows belong to the last report in `reports`.
struct RunOutput {
    std::vector<u21::SuiteReport> reports;
    std::vector<u21::NewformRow> rows;
    bool has_table = false;
};

// format is one of "text", "json", "csv".
std::string render(const RunOutput& out, const std::string& format);
int exit_code(const RunOutput& out);

// CSV serialization of the newform table.  parse(write(rows)) == rows,
// which the test suite checks verbatim.
std::string newform_rows_csv(const std::vector<u21::NewformRow>& rows);
std::vector<u21::NewformRow> parse_newform_rows_csv(const std::string& csv);

}  // namespace u21cli
