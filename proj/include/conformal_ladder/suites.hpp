// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "conformal_ladder/report.hpp"

namespace conformal_ladder {

struct SuiteConfig {
    std::string suite = "all";
    int e_max = 8;
    std::size_t series_order = 200;
    double tolerance = 1e-10; ///< roundoff bound for identities that hold exactly in real arithmetic
    std::uint64_t seed = 42;
    OutputFormat output = OutputFormat::json;

    /// Throws DomainError for an unknown suite or out-of-range values.
    void validate() const;
};

/// Suite names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();

struct SuiteReport {
    std::string suite;
    SuiteConfig config;
    Report checks; ///< sorted by id
    bool passed() const { return checks.passed(); }
};

/// Worker count: CONFORMAL_LADDER_THREADS if set to a positive integer,
/// otherwise the hardware concurrency, never below 1.
unsigned worker_threads();

/// Runs the check groups of the suite, possibly in parallel. Each record's
/// `seconds` is the wall time of the group that produced it. A group that
/// throws contributes one failing record "<group>/error".
SuiteReport run_suite(const SuiteConfig& config);

nlohmann::ordered_json to_json(const SuiteReport& r, bool include_timing);
std::string render(const SuiteReport& r, OutputFormat format, bool include_timing = true);

struct TableConfig {
    std::string kind;              ///< spectrum, h_polynomials, z_coefficients, planck_modes
    int e_max = 8;                 ///< spectrum
    std::optional<int> helicity = 0; ///< spectrum; nullopt for the full space
    int max_degree = 8;            ///< h_polynomials
    std::size_t order = 12;        ///< z_coefficients
    double radius = 10;            ///< planck_modes
    double beta = 1;
    std::size_t n_max = 40;

    void validate() const;
};

const std::vector<std::string>& table_kinds();

Table emit_table(const TableConfig& config);

} // namespace conformal_ladder
