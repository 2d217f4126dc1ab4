#pragma once

// Tabular results shared by the solvers and the command-line tool: named
// axis columns, one or more named value columns, and a string metadata map.
// CSV emission follows RFC 4180 (CRLF record separators, quoting only where
// needed) and prints every number with 17 significant digits so that parsing
// the text back reproduces the exact binary values.  A small JSON emitter
// mirrors the same fields; JSON is write-only here.

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "fractional_calculus.hpp"

namespace frack {

struct SolutionRow {
    std::vector<double> coordinates;
    std::vector<double> values;
};

struct SolutionTable {
    std::vector<std::string> axis_names;
    std::vector<std::string> value_names{"value"};
    std::vector<SolutionRow> rows;
    std::map<std::string, std::string> metadata;

    void validate() const {
        if (axis_names.empty())
            throw InvalidParameters("SolutionTable: need at least one axis");
        if (value_names.empty())
            throw InvalidParameters("SolutionTable: need at least one value column");
        for (const SolutionRow& r : rows) {
            if (r.coordinates.size() != axis_names.size())
                throw InvalidParameters(
                    "SolutionTable: row coordinate count does not match axes");
            if (r.values.size() != value_names.size())
                throw InvalidParameters(
                    "SolutionTable: row value count does not match value columns");
            for (double c : r.coordinates)
                if (!std::isfinite(c))
                    throw InvalidParameters("SolutionTable: non-finite coordinate");
            for (double v : r.values)
                if (!std::isfinite(v))
                    throw InvalidParameters("SolutionTable: non-finite value");
        }
    }
};

// Shortest decimal text that parses back to the same double.
inline std::string format_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
}

namespace detail {

inline std::string csv_escape(const std::string& field) {
    bool needs_quotes = false;
    for (char c : field)
        if (c == ',' || c == '"' || c == '\r' || c == '\n') {
            needs_quotes = true;
            break;
        }
    if (!needs_quotes) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

// Splits one CSV record into fields, honoring quoted fields.
inline std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool in_quotes = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
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
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (in_quotes) throw IngestionError("CSV: unterminated quoted field");
    fields.push_back(cur);
    return fields;
}

inline std::vector<std::string> csv_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty() && cur.back() == '\r') cur.pop_back();
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

inline double parse_number(const std::string& field) {
    std::size_t b = 0, e = field.size();
    while (b < e && std::isspace(static_cast<unsigned char>(field[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(field[e - 1]))) --e;
    if (b == e) throw IngestionError("CSV: empty numeric field");
    const std::string body = field.substr(b, e - b);
    char* end = nullptr;
    const double v = std::strtod(body.c_str(), &end);
    if (end != body.c_str() + body.size())
        throw IngestionError("CSV: cannot parse number '" + body + "'");
    return v;
}

inline bool parses_as_number(const std::string& field) {
    try {
        (void)parse_number(field);
        return true;
    } catch (const IngestionError&) {
        return false;
    }
}

} // namespace detail

inline std::string to_csv(const SolutionTable& table) {
    table.validate();
    std::string out;
    bool first = true;
    for (const std::string& name : table.axis_names) {
        if (!first) out += ',';
        out += detail::csv_escape(name);
        first = false;
    }
    for (const std::string& name : table.value_names) {
        out += ',';
        out += detail::csv_escape(name);
    }
    out += "\r\n";
    for (const SolutionRow& r : table.rows) {
        first = true;
        for (double c : r.coordinates) {
            if (!first) out += ',';
            out += format_double(c);
            first = false;
        }
        for (double v : r.values) {
            out += ',';
            out += format_double(v);
        }
        out += "\r\n";
    }
    return out;
}

// Parses text produced by to_csv.  axis_count says how many leading columns
// are coordinates; the rest are value columns.
inline SolutionTable parse_table_csv(const std::string& text,
                                     std::size_t axis_count) {
    const std::vector<std::string> lines = detail::csv_lines(text);
    if (lines.empty()) throw IngestionError("CSV: empty input");
    SolutionTable table;
    const std::vector<std::string> header = detail::csv_split(lines.front());
    if (axis_count == 0 || axis_count >= header.size())
        throw IngestionError("CSV: axis count does not fit the header");
    table.axis_names.assign(header.begin(),
                            header.begin() + static_cast<long>(axis_count));
    table.value_names.assign(header.begin() + static_cast<long>(axis_count),
                             header.end());
    for (std::size_t li = 1; li < lines.size(); ++li) {
        if (lines[li].empty()) continue;
        const std::vector<std::string> fields = detail::csv_split(lines[li]);
        if (fields.size() != header.size())
            throw IngestionError("CSV: row has wrong field count");
        SolutionRow row;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            const double v = detail::parse_number(fields[i]);
            if (i < axis_count) row.coordinates.push_back(v);
            else row.values.push_back(v);
        }
        table.rows.push_back(std::move(row));
    }
    table.validate();
    return table;
}

// Two-column (t, f) ingestion for sampled forcing.  Header row optional.
// Requires strictly increasing t with t_0 >= 0 and finite f everywhere.
inline SampledFunction read_sampled_csv(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    const std::vector<std::string> lines = detail::csv_lines(text);
    SampledFunction f;
    bool first_line = true;
    for (const std::string& line : lines) {
        if (line.empty()) continue;
        const std::vector<std::string> fields = detail::csv_split(line);
        if (fields.size() != 2)
            throw IngestionError("forcing CSV: expected two columns t,f");
        if (first_line) {
            first_line = false;
            if (!detail::parses_as_number(fields[0])) continue; // header row
        }
        const double t = detail::parse_number(fields[0]);
        const double v = detail::parse_number(fields[1]);
        if (!std::isfinite(t) || !std::isfinite(v))
            throw IngestionError("forcing CSV: non-finite entry");
        if (!f.t_grid.empty() && !(t > f.t_grid.back()))
            throw IngestionError("forcing CSV: t must be strictly increasing");
        if (f.t_grid.empty() && t < 0.0)
            throw IngestionError("forcing CSV: first t must be >= 0");
        f.t_grid.push_back(t);
        f.values.push_back(v);
    }
    if (f.t_grid.size() < 2)
        throw IngestionError("forcing CSV: need at least two rows");
    return f;
}

inline SampledFunction read_sampled_csv(const std::string& text) {
    std::istringstream in(text);
    return read_sampled_csv(in);
}

namespace detail {

inline std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

} // namespace detail

inline std::string to_json(const SolutionTable& table) {
    table.validate();
    std::string out = "{\n  \"axis_names\": [";
    for (std::size_t i = 0; i < table.axis_names.size(); ++i) {
        if (i) out += ", ";
        out += '"' + detail::json_escape(table.axis_names[i]) + '"';
    }
    out += "],\n  \"value_names\": [";
    for (std::size_t i = 0; i < table.value_names.size(); ++i) {
        if (i) out += ", ";
        out += '"' + detail::json_escape(table.value_names[i]) + '"';
    }
    out += "],\n  \"rows\": [";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        out += (r ? ",\n    " : "\n    ");
        out += "{\"coordinates\": [";
        for (std::size_t i = 0; i < table.rows[r].coordinates.size(); ++i) {
            if (i) out += ", ";
            out += format_double(table.rows[r].coordinates[i]);
        }
        out += "], \"values\": [";
        for (std::size_t i = 0; i < table.rows[r].values.size(); ++i) {
            if (i) out += ", ";
            out += format_double(table.rows[r].values[i]);
        }
        out += "]}";
    }
    out += table.rows.empty() ? "],\n" : "\n  ],\n";
    out += "  \"metadata\": {";
    bool first = true;
    for (const auto& [key, value] : table.metadata) {
        if (!first) out += ", ";
        out += '"' + detail::json_escape(key) + "\": \"" +
               detail::json_escape(value) + '"';
        first = false;
    }
    out += "}\n}\n";
    return out;
}

} // namespace frack
