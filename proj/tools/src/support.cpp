#include "u21cli/support.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace u21cli {

namespace {

std::string trimmed(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

long to_long(const std::string& s) {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters in integer '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) parts.push_back(trimmed(cur));
    if (!text.empty() && text.back() == sep) parts.push_back("");
    return parts;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

// Splits one CSV record, honoring double-quoted fields with "" escapes.
std::vector<std::string> csv_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted) throw std::invalid_argument("unterminated quote in CSV record");
    fields.push_back(cur);
    return fields;
}

nlohmann::json report_json(const u21::SuiteReport& r) {
    nlohmann::json j;
    j["suite"] = r.suite;
    j["params"] = r.params;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["status"] = c.pass ? "pass" : "fail";
        if (!c.witness.empty()) jc["witness"] = c.witness;
        checks.push_back(std::move(jc));
    }
    j["checks"] = std::move(checks);
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

nlohmann::json row_json(const u21::NewformRow& row) {
    nlohmann::json j;
    j["q"] = row.q;
    j["N"] = row.N;
    j["n_pi"] = row.n_pi;
    j["lambda"] = row.lambda.get_str();
    j["accepted"] = row.accepted;
    j["Z_W"] = row.Z_W;
    j["L"] = row.L;
    j["epsilon"] = row.epsilon;
    return j;
}

void render_report_text(std::ostringstream& out, const u21::SuiteReport& r) {
    out << "== " << r.suite << " ==\n";
    if (!r.params.empty()) out << "params: " << r.params << "\n";
    for (const auto& c : r.checks) {
        out << (c.pass ? "  [PASS] " : "  [FAIL] ") << c.name;
        if (!c.pass && !c.witness.empty()) out << ": " << c.witness;
        out << "\n";
    }
    out << "  " << (r.checks.size() - static_cast<size_t>(r.failed())) << "/" << r.checks.size()
        << " checks passed (" << r.elapsed_ms << " ms)\n";
}

void render_rows_text(std::ostringstream& out, const std::vector<u21::NewformRow>& rows) {
    out << "table:\n";
    for (const auto& row : rows) {
        out << "  q=" << row.q << " N=" << row.N << " n_pi=" << row.n_pi
            << " lambda=" << row.lambda.get_str()
            << " accepted=" << (row.accepted ? "yes" : "no")
            << " Z_W=" << row.Z_W << " L=" << row.L << " epsilon=" << row.epsilon << "\n";
    }
}

}  // namespace

Range parse_range(const std::string& text) {
    std::string s = trimmed(text);
    if (s.empty()) throw std::invalid_argument("empty range");
    Range r;
    size_t dots = s.find("..");
    if (dots == std::string::npos) {
        r.lo = r.hi = to_long(s);
    } else {
        r.lo = to_long(trimmed(s.substr(0, dots)));
        r.hi = to_long(trimmed(s.substr(dots + 2)));
    }
    if (r.hi < r.lo) throw std::invalid_argument("range '" + text + "' runs backwards");
    return r;
}

std::vector<long> parse_longs(const std::string& text) {
    std::vector<long> out;
    for (const auto& tok : split(text, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
        out.push_back(to_long(tok));
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

std::vector<u21::Rational> parse_rationals(const std::string& text) {
    std::vector<u21::Rational> out;
    for (const auto& tok : split(text, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
        u21::Rational v;
        try {
            v = u21::Rational(tok);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse rational '" + tok + "'");
        }
        v.canonicalize();
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

std::string render(const RunOutput& out, const std::string& format) {
    if (format == "json") {
        nlohmann::json docs = nlohmann::json::array();
        for (size_t i = 0; i < out.reports.size(); ++i) {
            nlohmann::json j = report_json(out.reports[i]);
            if (out.has_table && i + 1 == out.reports.size()) {
                nlohmann::json rows = nlohmann::json::array();
                for (const auto& row : out.rows) rows.push_back(row_json(row));
                j["rows"] = std::move(rows);
            }
            docs.push_back(std::move(j));
        }
        if (docs.size() == 1) return docs[0].dump(2) + "\n";
        return docs.dump(2) + "\n";
    }
    if (format == "csv") {
        if (out.has_table && out.reports.size() == 1) return newform_rows_csv(out.rows);
        std::ostringstream csv;
        csv << "suite,name,status,witness\n";
        for (const auto& r : out.reports) {
            for (const auto& c : r.checks) {
                csv << csv_quote(r.suite) << ',' << csv_quote(c.name) << ','
                    << (c.pass ? "pass" : "fail") << ',' << csv_quote(c.witness) << "\n";
            }
        }
        return csv.str();
    }
    std::ostringstream text;
    long failures = 0;
    for (size_t i = 0; i < out.reports.size(); ++i) {
        render_report_text(text, out.reports[i]);
        failures += out.reports[i].failed();
        if (out.has_table && i + 1 == out.reports.size()) render_rows_text(text, out.rows);
    }
    if (failures == 0) {
        text << "overall: PASS\n";
    } else {
        text << "overall: FAIL (" << failures << " check" << (failures == 1 ? "" : "s")
             << " failed)\n";
    }
    return text.str();
}

int exit_code(const RunOutput& out) {
    for (const auto& r : out.reports) {
        if (!r.ok()) return 1;
    }
    return 0;
}

std::string newform_rows_csv(const std::vector<u21::NewformRow>& rows) {
    std::ostringstream csv;
    csv << "q,N,n_pi,lambda,accepted,Z_W,L,epsilon\n";
    for (const auto& row : rows) {
        csv << row.q << ',' << row.N << ',' << row.n_pi << ',' << csv_quote(row.lambda.get_str())
            << ',' << (row.accepted ? 1 : 0) << ',' << csv_quote(row.Z_W) << ','
            << csv_quote(row.L) << ',' << csv_quote(row.epsilon) << "\n";
    }
    return csv.str();
}

std::vector<u21::NewformRow> parse_newform_rows_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || line != "q,N,n_pi,lambda,accepted,Z_W,L,epsilon")
        throw std::invalid_argument("missing newform table header");
    std::vector<u21::NewformRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto fields = csv_fields(line);
        if (fields.size() != 8)
            throw std::invalid_argument("newform table record needs 8 fields, got " +
                                        std::to_string(fields.size()));
        u21::NewformRow row;
        row.q = to_long(fields[0]);
        row.N = to_long(fields[1]);
        row.n_pi = to_long(fields[2]);
        row.lambda = u21::Rational(fields[3]);
        row.lambda.canonicalize();
        long acc = to_long(fields[4]);
        if (acc != 0 && acc != 1) throw std::invalid_argument("accepted flag must be 0 or 1");
        row.accepted = acc == 1;
        row.Z_W = fields[5];
        row.L = fields[6];
        row.epsilon = fields[7];
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace u21cli
