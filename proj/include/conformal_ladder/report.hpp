// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace conformal_ladder {

/// One verified statement.
struct CheckRecord {
    std::string id;          ///< stable identifier, e.g. "clifford/dirac/anticommutator"
    std::string reference;   ///< what identity this is, in words
    bool passed = false;
    bool exact = false;      ///< true when decided in exact arithmetic
    std::optional<double> residual;
    std::string detail;
    double seconds = 0.0;
};

/// Ordered collection of check records.
class Report {
public:
    void add(CheckRecord record) { records_.push_back(std::move(record)); }
    void add_exact(std::string id, std::string reference, bool passed, std::string detail = {});
    void add_numeric(std::string id, std::string reference, double residual, double tolerance,
                     std::string detail = {});
    void append(const Report& other);

    const std::vector<CheckRecord>& records() const noexcept { return records_; }
    std::vector<CheckRecord>& records() noexcept { return records_; }
    bool passed() const;
    std::size_t failures() const;

    /// Record with the given id; throws std::out_of_range if absent.
    const CheckRecord& at(const std::string& id) const;

private:
    std::vector<CheckRecord> records_;
};

enum class OutputFormat { json, csv, text };

OutputFormat parse_output_format(const std::string& name);

/// Cell of a Table: exact values travel as strings ("p/q"), floats as
/// numbers.
using Cell = std::variant<std::string, long long, double>;

struct Table {
    std::string kind;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
};

nlohmann::ordered_json to_json(const CheckRecord& r, bool include_timing);
nlohmann::ordered_json to_json(const Table& t);

std::string render(const Table& t, OutputFormat format);

} // namespace conformal_ladder
