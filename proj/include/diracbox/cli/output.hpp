#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace diracbox::cli {

/// Empty cell, integer, real, or text.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

enum class Format { Csv, Json };

/// Column-named rows plus the invocation parameters that produced them.
struct RowSet {
    std::vector<std::pair<std::string, Cell>> params;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

/// Reals are printed with 9 significant digits ("%.9g").
std::string format_real(double value);

/// The double obtained by parsing format_real(value): what a reader of the
/// output gets back.
double printed_value(double value);

/// CSV: header row then one line per row, LF endings, empty cells for missing
/// values. JSON: {"params": [{"name", "value"}...], "rows": [{column: value}...]}.
void write(std::ostream& out, const RowSet& rows, Format format);

} // namespace diracbox::cli
