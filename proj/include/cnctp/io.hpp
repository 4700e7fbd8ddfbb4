#pragma once

#include <cctype>
#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "cnctp/dataset.hpp"
#include "cnctp/error.hpp"

namespace cnctp {

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline std::string lower(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

inline std::optional<double> parse_number(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return std::nullopt;
    double v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
    return v;
}

inline std::string format_number(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

struct raw_column {
    std::string name;
    attribute_kind kind = attribute_kind::nominal;
    std::optional<std::vector<std::string>> declared;
};

struct raw_table {
    std::string name;
    std::vector<raw_column> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> lines;
};

// Turns string cells into a dataset. Undeclared values are an error when the column
// declares its domain; otherwise the domain is collected in first-occurrence order.
inline nominal_dataset build_dataset(const raw_table& t, std::size_t class_col) {
    const auto ncol = t.columns.size();
    std::vector<attribute_spec> specs;
    attribute_spec class_spec;
    std::vector<std::unordered_map<std::string, value_index>> lookup(ncol);
    std::vector<bool> has_missing(ncol, false);

    for (std::size_t c = 0; c < ncol; ++c) {
        attribute_spec s{t.columns[c].name, t.columns[c].kind, {}, c == class_col};
        if (c == class_col && s.kind == attribute_kind::numeric)
            throw parse_error("class attribute '" + s.name + "' must be nominal", 0);
        if (s.kind == attribute_kind::nominal && t.columns[c].declared) {
            for (const auto& v : *t.columns[c].declared) {
                if (!lookup[c].emplace(v, static_cast<value_index>(s.domain.size())).second)
                    throw parse_error("attribute '" + s.name + "' declares value '" + v + "' twice", 0);
                s.domain.push_back(v);
            }
        }
        if (c == class_col) class_spec = std::move(s);
        else specs.push_back(std::move(s));
    }

    auto spec_for = [&](std::size_t c) -> attribute_spec& {
        return c == class_col ? class_spec : specs[c < class_col ? c : c - 1];
    };

    // first pass: domains and missing flags
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        if (row[class_col] == missing_label) continue;
        for (std::size_t c = 0; c < ncol; ++c) {
            auto& s = spec_for(c);
            const auto& cell = row[c];
            if (cell == missing_label) {
                has_missing[c] = true;
                continue;
            }
            if (s.kind == attribute_kind::numeric) {
                if (!parse_number(cell))
                    throw parse_error("value '" + cell + "' is not numeric for attribute '" + s.name + "'", t.lines[r]);
                continue;
            }
            if (lookup[c].count(cell)) continue;
            if (t.columns[c].declared)
                throw parse_error("undeclared nominal value '" + cell + "' for attribute '" + s.name + "'", t.lines[r]);
            lookup[c].emplace(cell, static_cast<value_index>(s.domain.size()));
            s.domain.push_back(cell);
        }
    }
    for (std::size_t c = 0; c < ncol; ++c) {
        auto& s = spec_for(c);
        if (c != class_col && s.kind == attribute_kind::nominal && has_missing[c]) {
            lookup[c].emplace(std::string(missing_label), static_cast<value_index>(s.domain.size()));
            s.domain.emplace_back(missing_label);
        }
        if (s.kind == attribute_kind::nominal && s.domain.empty()) s.domain.emplace_back(missing_label);
    }
    if (class_spec.domain.size() < 2)
        throw parse_error("class attribute '" + class_spec.name + "' needs at least two values", 0);

    nominal_dataset ds(t.name, specs, class_spec);
    std::vector<value_index> values(specs.size());
    std::vector<double> numeric;
    std::vector<bool> seen_class(class_spec.domain.size(), false);
    const bool any_numeric = !ds.all_nominal();
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        if (row[class_col] == missing_label) {
            std::size_t miss = 0;
            for (const auto& cell : row) miss += cell == missing_label;
            ds.record_dropped_row(miss);
            continue;
        }
        numeric.assign(any_numeric ? specs.size() : 0, 0.0);
        for (std::size_t c = 0, j = 0; c < ncol; ++c) {
            if (c == class_col) continue;
            const auto& s = specs[j];
            const auto& cell = row[c];
            if (s.kind == attribute_kind::numeric) {
                values[j] = 0;
                numeric[j] = cell == missing_label ? std::numeric_limits<double>::quiet_NaN() : *parse_number(cell);
            } else {
                values[j] = lookup[c].at(cell);
            }
            ++j;
        }
        const auto label = lookup[class_col].at(row[class_col]);
        seen_class[label] = true;
        ds.add_row(values, label, numeric);
    }
    if (ds.empty()) throw parse_error("empty data section", 0);
    if (std::count(seen_class.begin(), seen_class.end(), true) < 2)
        throw parse_error("single-class dataset: class attribute '" + class_spec.name + "' takes one value", 0);
    return ds;
}

// Split on `sep` outside single or double quotes; quotes are stripped and
// backslash escapes inside quotes are honoured.
inline std::vector<std::string> split_arff(std::string_view line, char sep, std::size_t lineno) {
    std::vector<std::string> out;
    std::string cur;
    char quote = 0;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char ch = line[i];
        if (quote) {
            if (ch == '\\' && i + 1 < line.size()) cur.push_back(line[++i]);
            else if (ch == quote) quote = 0;
            else cur.push_back(ch);
        } else if (ch == '\'' || ch == '"') {
            if (!quoted && trim(cur).empty()) cur.clear();
            quote = ch;
            quoted = true;
        } else if (ch == sep) {
            out.push_back(quoted ? cur : std::string(trim(cur)));
            cur.clear();
            quoted = false;
        } else if (!(quoted && std::isspace(static_cast<unsigned char>(ch)))) {
            cur.push_back(ch);
        }
    }
    if (quote) throw parse_error("unterminated quote", lineno);
    out.push_back(quoted ? cur : std::string(trim(cur)));
    return out;
}

// Drop a '%' comment that starts outside quotes.
inline std::string_view strip_comment(std::string_view line) {
    char quote = 0;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char ch = line[i];
        if (quote) {
            if (ch == '\\') ++i;
            else if (ch == quote) quote = 0;
        } else if (ch == '\'' || ch == '"') {
            quote = ch;
        } else if (ch == '%') {
            return line.substr(0, i);
        }
    }
    return line;
}

// Reads a possibly quoted leading token; returns it and the remainder.
inline std::pair<std::string, std::string_view> leading_token(std::string_view s, std::size_t lineno) {
    s = trim(s);
    if (s.empty()) throw parse_error("malformed header: missing name", lineno);
    if (s.front() == '\'' || s.front() == '"') {
        const char q = s.front();
        std::string tok;
        std::size_t i = 1;
        for (; i < s.size() && s[i] != q; ++i) {
            if (s[i] == '\\' && i + 1 < s.size()) ++i;
            tok.push_back(s[i]);
        }
        if (i == s.size()) throw parse_error("malformed header: unterminated quote", lineno);
        return {tok, s.substr(i + 1)};
    }
    std::size_t i = 0;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != '{') ++i;
    return {std::string(s.substr(0, i)), s.substr(i)};
}

inline std::string quote_arff(std::string_view s) {
    bool needs = s.empty() || s == missing_label;
    for (char c : s)
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '{' || c == '}' || c == '\'' ||
            c == '"' || c == '%' || c == '\\')
            needs = true;
    if (!needs) return std::string(s);
    std::string out = "'";
    for (char c : s) {
        if (c == '\'' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('\'');
    return out;
}

} // namespace detail

// Column that designates the class: a header name or a 0-based index. Defaults to last.
using class_selector = std::variant<std::monostate, std::string, std::size_t>;

namespace detail {
inline std::size_t resolve_class(const raw_table& t, const class_selector& sel) {
    if (std::holds_alternative<std::monostate>(sel)) return t.columns.size() - 1;
    if (auto* idx = std::get_if<std::size_t>(&sel)) {
        if (*idx >= t.columns.size()) throw parse_error("class column index " + std::to_string(*idx) + " out of range", 0);
        return *idx;
    }
    const auto& name = std::get<std::string>(sel);
    for (std::size_t c = 0; c < t.columns.size(); ++c)
        if (t.columns[c].name == name) return c;
    throw parse_error("unknown class column '" + name + "'", 0);
}
} // namespace detail

// ARFF subset: @relation, nominal and numeric @attribute declarations, dense @data rows.
inline nominal_dataset load_arff(std::istream& in, const class_selector& class_column = {}) {
    detail::raw_table t;
    std::string line;
    std::size_t lineno = 0;
    bool in_data = false, have_relation = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto body = detail::trim(detail::strip_comment(line));
        if (body.empty()) continue;
        if (in_data) {
            if (body.front() == '{') throw parse_error("sparse ARFF rows are not supported", lineno);
            auto cells = detail::split_arff(body, ',', lineno);
            if (cells.size() != t.columns.size())
                throw parse_error("row arity mismatch: " + std::to_string(cells.size()) + " values, expected " +
                                      std::to_string(t.columns.size()),
                                  lineno);
            t.rows.push_back(std::move(cells));
            t.lines.push_back(lineno);
            continue;
        }
        if (body.front() != '@') throw parse_error("malformed header: expected a declaration", lineno);
        auto space = body.find_first_of(" \t");
        auto keyword = detail::lower(body.substr(0, space));
        auto rest = space == std::string_view::npos ? std::string_view{} : body.substr(space);
        if (keyword == "@relation") {
            t.name = detail::leading_token(rest, lineno).first;
            have_relation = true;
        } else if (keyword == "@attribute") {
            auto [name, type] = detail::leading_token(rest, lineno);
            type = detail::trim(type);
            detail::raw_column col{name, attribute_kind::nominal, std::nullopt};
            if (!type.empty() && type.front() == '{') {
                if (type.back() != '}') throw parse_error("malformed header: unterminated value list", lineno);
                std::vector<std::string> values;
                for (auto& v : detail::split_arff(type.substr(1, type.size() - 2), ',', lineno))
                    if (!v.empty()) values.push_back(v);
                if (values.empty()) throw parse_error("malformed header: empty value list for '" + name + "'", lineno);
                col.declared = std::move(values);
            } else {
                auto kind = detail::lower(type);
                if (kind == "numeric" || kind == "real" || kind == "integer")
                    col.kind = attribute_kind::numeric;
                else if (kind.empty())
                    throw parse_error("malformed header: attribute '" + name + "' has no type", lineno);
                else
                    throw parse_error("unsupported attribute type '" + std::string(type) + "'", lineno);
            }
            for (const auto& c : t.columns)
                if (c.name == col.name) throw parse_error("duplicate attribute name '" + col.name + "'", lineno);
            t.columns.push_back(std::move(col));
        } else if (keyword == "@data") {
            if (t.columns.empty()) throw parse_error("no attributes declared", lineno);
            in_data = true;
        } else {
            throw parse_error("malformed header: unknown declaration '" + keyword + "'", lineno);
        }
    }
    if (!have_relation && t.columns.empty()) throw parse_error("malformed header: missing @relation", lineno);
    if (t.columns.empty()) throw parse_error("no attributes declared", lineno);
    if (!in_data) throw parse_error("malformed header: missing @data", lineno);
    if (t.rows.empty()) throw parse_error("empty data section", lineno);
    if (t.columns.size() < 2) throw parse_error("no predictive attributes declared", lineno);
    return detail::build_dataset(t, detail::resolve_class(t, class_column));
}

inline void write_arff(std::ostream& out, const nominal_dataset& ds) {
    out << "@relation " << detail::quote_arff(ds.name()) << "\n\n";
    auto declare = [&](const attribute_spec& a) {
        out << "@attribute " << detail::quote_arff(a.name) << ' ';
        if (!a.is_nominal()) {
            out << "numeric\n";
            return;
        }
        out << '{';
        std::size_t n = a.domain.size() - (a.missing_index() ? 1 : 0);
        for (std::size_t v = 0; v < n; ++v) out << (v ? "," : "") << detail::quote_arff(a.domain[v]);
        out << "}\n";
    };
    for (const auto& a : ds.attributes()) declare(a);
    declare(ds.class_attribute());
    out << "\n@data\n";
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (std::size_t j = 0; j < ds.attribute_count(); ++j) {
            const auto& a = ds.attribute(j);
            if (ds.is_missing(i, j)) out << missing_label;
            else if (a.is_nominal()) out << detail::quote_arff(a.domain[ds.value(i, j)]);
            else out << detail::format_number(ds.numeric(i, j));
            out << ',';
        }
        out << detail::quote_arff(ds.class_attribute().domain[ds.label(i)]) << '\n';
    }
}

namespace detail {

// RFC 4180 records: double-quoted fields, "" escapes, embedded newlines inside quotes.
inline std::vector<std::vector<std::string>> read_csv_records(std::istream& in, std::vector<std::size_t>& lines) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> rec;
    std::string field;
    bool in_quotes = false, field_quoted = false, any = false;
    std::size_t lineno = 1, start_line = 1;
    auto end_field = [&] {
        rec.push_back(field_quoted ? field : std::string(trim(field)));
        field.clear();
        field_quoted = false;
    };
    auto end_record = [&] {
        end_field();
        if (!(rec.size() == 1 && rec[0].empty() && !any)) {
            records.push_back(std::move(rec));
            lines.push_back(start_line);
        }
        rec.clear();
        any = false;
    };
    char ch;
    while (in.get(ch)) {
        if (in_quotes) {
            if (ch == '"') {
                if (in.peek() == '"') {
                    in.get(ch);
                    field.push_back('"');
                } else {
                    in_quotes = false;
                }
            } else {
                if (ch == '\n') ++lineno;
                field.push_back(ch);
            }
            continue;
        }
        if (ch == '"' && trim(field).empty()) {
            in_quotes = field_quoted = any = true;
            field.clear();
        } else if (ch == ',') {
            end_field();
            any = true;
        } else if (ch == '\n') {
            end_record();
            start_line = ++lineno;
        } else if (ch != '\r') {
            field.push_back(ch);
            any = any || !std::isspace(static_cast<unsigned char>(ch));
        }
    }
    if (in_quotes) throw parse_error("unterminated quoted field", start_line);
    if (any || !field.empty() || !rec.empty()) end_record();
    return records;
}

} // namespace detail

// CSV with a header row. A column is numeric when every non-missing cell parses as a
// number; the class column is always nominal.
inline nominal_dataset load_csv(std::istream& in, const class_selector& class_column = {}, std::string name = "csv") {
    std::vector<std::size_t> lines;
    auto records = detail::read_csv_records(in, lines);
    if (records.empty()) throw parse_error("empty file", 0);
    detail::raw_table t;
    t.name = std::move(name);
    for (auto& h : records[0]) t.columns.push_back({h, attribute_kind::nominal, std::nullopt});
    if (t.columns.size() < 2) throw parse_error("CSV needs at least two columns", lines[0]);
    for (std::size_t r = 1; r < records.size(); ++r) {
        if (records[r].size() != t.columns.size())
            throw parse_error("ragged row: " + std::to_string(records[r].size()) + " fields, expected " +
                                  std::to_string(t.columns.size()),
                              lines[r]);
        t.rows.push_back(std::move(records[r]));
        t.lines.push_back(lines[r]);
    }
    if (t.rows.empty()) throw parse_error("empty data section", 0);
    const auto class_col = detail::resolve_class(t, class_column);
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        if (c == class_col) continue;
        bool numeric = false;
        bool all_numbers = true;
        for (const auto& row : t.rows) {
            if (row[c] == missing_label) continue;
            numeric = true;
            if (!detail::parse_number(row[c])) {
                all_numbers = false;
                break;
            }
        }
        if (numeric && all_numbers) t.columns[c].kind = attribute_kind::numeric;
    }
    return detail::build_dataset(t, class_col);
}

// Dispatches on extension (.arff or .csv). The dataset is named after the file stem.
inline nominal_dataset load_file(const std::filesystem::path& path, const class_selector& class_column = {}) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open '" + path.string() + "'");
    auto ext = detail::lower(path.extension().string());
    nominal_dataset ds;
    if (ext == ".arff") ds = load_arff(in, class_column);
    else if (ext == ".csv") ds = load_csv(in, class_column);
    else throw error("unsupported file extension '" + ext + "' for '" + path.string() + "'");
    ds.set_name(path.stem().string());
    return ds;
}

} // namespace cnctp
