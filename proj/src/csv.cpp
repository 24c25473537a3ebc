#include "interp/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "interp/errors.hpp"

namespace interp::csv {

std::string escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_optional(const std::optional<double>& x) { return x ? format_double(*x) : std::string(); }

std::string join_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += escape(fields[i]);
    }
    out += "\r\n";
    return out;
}

std::size_t Table::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    throw MissingColumn("column '" + name + "' not found");
}

bool Table::has_column(const std::string& name) const {
    for (const auto& h : header)
        if (h == name) return true;
    return false;
}

Table parse(const std::string& text) {
    Table t;
    std::size_t pos = 0;
    // Leading comment lines.
    while (pos < text.size() && text[pos] == '#') {
        const auto eol = text.find('\n', pos);
        std::string line = text.substr(pos + 1, eol == std::string::npos ? std::string::npos : eol - pos - 1);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line.front() == ' ') line.erase(0, 1);
        t.comments.push_back(line);
        pos = eol == std::string::npos ? text.size() : eol + 1;
    }

    std::vector<std::string> row;
    std::string field;
    bool quoted = false, any = false;
    auto end_field = [&] {
        row.push_back(field);
        field.clear();
        any = true;
    };
    auto end_row = [&] {
        if (any) {
            end_field();
            if (t.header.empty())
                t.header = row;
            else
                t.rows.push_back(row);
        }
        row.clear();
        any = false;
    };
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (quoted) {
            if (c == '"') {
                if (pos + 1 < text.size() && text[pos + 1] == '"') {
                    field += '"';
                    ++pos;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        switch (c) {
        case '"': quoted = true; any = true; break;
        case ',': end_field(); break;
        case '\r': break;
        case '\n': end_row(); break;
        default: field += c; any = true; break;
        }
    }
    if (quoted) throw InvalidArgument("unterminated quoted CSV field");
    end_row();
    return t;
}

Table read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::optional<double> parse_optional_double(const std::string& field) {
    if (field.empty()) return std::nullopt;
    if (field == "nan") return std::nan("");
    if (field == "inf") return HUGE_VAL;
    if (field == "-inf") return -HUGE_VAL;
    char* end = nullptr;
    const double x = std::strtod(field.c_str(), &end);
    if (end != field.c_str() + field.size()) throw InvalidArgument("not a number: '" + field + "'");
    return x;
}

}  // namespace interp::csv
