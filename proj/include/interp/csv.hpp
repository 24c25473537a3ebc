#pragma once

#include <optional>
#include <string>
#include <vector>

namespace interp::csv {

// RFC 4180 field quoting.
std::string escape(const std::string& field);

// %.17g, so values round-trip exactly. Empty string for a missing value.
std::string format_double(double x);
std::string format_optional(const std::optional<double>& x);

std::string join_row(const std::vector<std::string>& fields);

struct Table {
    std::vector<std::string> comments;  // leading '#' lines, without the marker
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Index of a header column, or throws MissingColumn.
    std::size_t column(const std::string& name) const;
    bool has_column(const std::string& name) const;
};

// Parses RFC 4180 text with optional leading '#' comment lines.
Table parse(const std::string& text);
Table read_file(const std::string& path);

std::optional<double> parse_optional_double(const std::string& field);

}  // namespace interp::csv
