// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#include "conformal_ladder/report.hpp"

#include "conformal_ladder/errors.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace conformal_ladder {

void Report::add_exact(std::string id, std::string reference, bool passed, std::string detail)
{
    CheckRecord r;
    r.id = std::move(id);
    r.reference = std::move(reference);
    r.passed = passed;
    r.exact = true;
    r.detail = std::move(detail);
    records_.push_back(std::move(r));
}

void Report::add_numeric(std::string id, std::string reference, double residual, double tolerance,
                         std::string detail)
{
    CheckRecord r;
    r.id = std::move(id);
    r.reference = std::move(reference);
    r.passed = std::isfinite(residual) && residual < tolerance;
    r.exact = false;
    r.residual = residual;
    r.detail = std::move(detail);
    records_.push_back(std::move(r));
}

void Report::append(const Report& other)
{
    records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

bool Report::passed() const
{
    return failures() == 0;
}

std::size_t Report::failures() const
{
    std::size_t n = 0;
    for (const auto& r : records_)
        n += r.passed ? 0 : 1;
    return n;
}

const CheckRecord& Report::at(const std::string& id) const
{
    for (const auto& r : records_)
        if (r.id == id)
            return r;
    throw std::out_of_range("no check record '" + id + "'");
}

OutputFormat parse_output_format(const std::string& name)
{
    if (name == "json")
        return OutputFormat::json;
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "text")
        return OutputFormat::text;
    throw DomainError("unknown output format '" + name + "' (expected json, csv or text)");
}

namespace {

std::string format_double(double x)
{
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

std::string cell_text(const Cell& c)
{
    if (const auto* s = std::get_if<std::string>(&c))
        return *s;
    if (const auto* i = std::get_if<long long>(&c))
        return std::to_string(*i);
    return format_double(std::get<double>(c));
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

} // namespace

nlohmann::ordered_json to_json(const CheckRecord& r, bool include_timing)
{
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["reference"] = r.reference;
    j["status"] = r.passed ? "pass" : "fail";
    j["exact"] = r.exact;
    if (r.residual)
        j["residual"] = *r.residual;
    else
        j["residual"] = nullptr;
    j["detail"] = r.detail;
    if (include_timing)
        j["seconds"] = r.seconds;
    return j;
}

nlohmann::ordered_json to_json(const Table& t)
{
    nlohmann::ordered_json j;
    j["kind"] = t.kind;
    j["meta"] = t.meta;
    j["columns"] = t.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        auto jr = nlohmann::ordered_json::array();
        for (const auto& c : row)
            std::visit([&](const auto& v) { jr.push_back(v); }, c);
        rows.push_back(std::move(jr));
    }
    j["rows"] = std::move(rows);
    return j;
}

std::string render(const Table& t, OutputFormat format)
{
    std::ostringstream os;
    switch (format) {
    case OutputFormat::json:
        os << to_json(t).dump(2) << "\n";
        break;
    case OutputFormat::csv:
        for (std::size_t c = 0; c < t.columns.size(); ++c)
            os << (c ? "," : "") << csv_escape(t.columns[c]);
        os << "\n";
        for (const auto& row : t.rows) {
            for (std::size_t c = 0; c < row.size(); ++c)
                os << (c ? "," : "") << csv_escape(cell_text(row[c]));
            os << "\n";
        }
        break;
    case OutputFormat::text: {
        std::vector<std::size_t> width(t.columns.size());
        for (std::size_t c = 0; c < t.columns.size(); ++c)
            width[c] = t.columns[c].size();
        for (const auto& row : t.rows)
            for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
                width[c] = std::max(width[c], cell_text(row[c]).size());
        const auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t c = 0; c < cells.size(); ++c)
                os << (c ? "  " : "") << std::left << std::setw(static_cast<int>(width[c])) << cells[c];
            os << "\n";
        };
        os << "# " << t.kind << "\n";
        for (const auto& [key, value] : t.meta.items())
            os << "# " << key << ": " << value.dump() << "\n";
        line(t.columns);
        for (const auto& row : t.rows) {
            std::vector<std::string> cells;
            for (const auto& c : row)
                cells.push_back(cell_text(c));
            line(cells);
        }
        break;
    }
    }
    return os.str();
}

} // namespace conformal_ladder
