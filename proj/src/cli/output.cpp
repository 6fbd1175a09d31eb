#include "diracbox/cli/output.hpp"

#include <cstdlib>

#include <fmt/format.h>
#include <json.hpp>

namespace diracbox::cli {

namespace {

struct CsvCell {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_real(v); }
    std::string operator()(const std::string& v) const
    {
        if (v.find_first_of(",\"\n") == std::string::npos) {
            return v;
        }
        std::string quoted = "\"";
        for (char c : v) {
            if (c == '"') {
                quoted += '"';
            }
            quoted += c;
        }
        return quoted + "\"";
    }
};

struct JsonCell {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
    nlohmann::ordered_json operator()(double v) const { return printed_value(v); }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
};

} // namespace

void RowSet::add_row(std::vector<Cell> row)
{
    row.resize(columns.size());
    rows.push_back(std::move(row));
}

std::string format_real(double value) { return fmt::format("{:.9g}", value); }

double printed_value(double value) { return std::strtod(format_real(value).c_str(), nullptr); }

void write(std::ostream& out, const RowSet& rows, Format format)
{
    if (format == Format::Csv) {
        for (std::size_t i = 0; i < rows.columns.size(); ++i) {
            out << (i ? "," : "") << rows.columns[i];
        }
        out << '\n';
        for (const auto& row : rows.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                out << (i ? "," : "") << std::visit(CsvCell{}, row[i]);
            }
            out << '\n';
        }
        out.flush();
        return;
    }

    nlohmann::ordered_json doc;
    doc["params"] = nlohmann::ordered_json::array();
    for (const auto& [name, value] : rows.params) {
        doc["params"].push_back({{"name", name}, {"value", std::visit(JsonCell{}, value)}});
    }
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rows.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            obj[rows.columns[i]] = std::visit(JsonCell{}, row[i]);
        }
        doc["rows"].push_back(std::move(obj));
    }
    out << doc.dump(2) << '\n';
    out.flush();
}

} // namespace diracbox::cli
