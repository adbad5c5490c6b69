#pragma once

#include <string>
#include <variant>
#include <vector>

namespace eisenspec::emit {

using Cell = std::variant<double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

enum class Format { Csv, Svg, Json };

Format parse_format(const std::string& name);

/// Shortest round-trip decimal for doubles ('.' separator, locale-free).
std::string format_number(double v);

/// Header plus one line per row, LF endings.
std::string to_csv(const Table& t);

/// Array of records keyed by column name, columns in table order.
std::string to_json(const Table& t);

/// Single polyline of (x_column, y_column) in an 800 x 600 viewBox with axes.
std::string to_svg(const Table& t, std::size_t x_column = 0, std::size_t y_column = 1);

std::string render(const Table& t, Format f);

/// Renders and writes. Empty tables and unwritable paths throw
/// std::runtime_error; nothing is written in either case.
void write(const Table& t, Format f, const std::string& path);

}  // namespace eisenspec::emit
