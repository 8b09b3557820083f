#pragma once

// Minimal RFC-4180-style CSV writing and parsing.  Doubles go through
// round-trip (shortest) formatting via to_chars, so emit/parse cycles are
// bit-exact and locale-independent.

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace circlelab::csv {

inline std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc{}) throw std::runtime_error("csv: to_chars failed");
    return std::string(buf, res.ptr);
}

inline double parse_double(const std::string& s) {
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw std::runtime_error("csv: bad double field '" + s + "'");
    return v;
}

inline std::string quote_field(const std::string& field) {
    bool needs = field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

inline std::string emit_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += quote_field(fields[i]);
    }
    out += '\n';
    return out;
}

inline std::vector<std::string> parse_row(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool in_quotes = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c == '\r' && i + 1 == line.size()) {
            // tolerate trailing CR
        } else {
            cur += c;
        }
    }
    if (in_quotes) throw std::runtime_error("csv: unterminated quote");
    out.push_back(cur);
    return out;
}

// Line-oriented parse; fields here never contain embedded newlines.
inline std::vector<std::vector<std::string>> parse(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::string line;
    for (char c : text) {
        if (c == '\n') {
            rows.push_back(parse_row(line));
            line.clear();
        } else {
            line += c;
        }
    }
    if (!line.empty()) rows.push_back(parse_row(line));
    return rows;
}

}  // namespace circlelab::csv
