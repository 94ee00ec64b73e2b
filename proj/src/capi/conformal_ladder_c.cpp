// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#include "conformal_ladder/conformal_ladder.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "conformal_ladder/errors.hpp"
#include "conformal_ladder/geometry.hpp"
#include "conformal_ladder/modular.hpp"
#include "conformal_ladder/suites.hpp"

struct cladder_report {
    conformal_ladder::SuiteReport report;
};

struct cladder_table {
    conformal_ladder::Table table;
};

namespace {

namespace cl = conformal_ladder;

thread_local std::string g_last_error;

cladder_status fail(cladder_status s, const std::string& message)
{
    g_last_error = message;
    return s;
}

/// Maps exceptions to status codes. `config` marks calls whose domain
/// errors are configuration mistakes.
template <class F>
cladder_status guarded(F&& body, bool config = false)
{
    try {
        body();
        g_last_error.clear();
        return CLADDER_OK;
    } catch (const cl::DomainError& e) {
        return fail(config ? CLADDER_CONFIG_ERROR : CLADDER_DOMAIN_ERROR, e.what());
    } catch (const cl::ConvergenceError& e) {
        return fail(CLADDER_CONVERGENCE_ERROR, e.what());
    } catch (const cl::GuardBandViolation& e) {
        return fail(CLADDER_GUARD_BAND, e.what());
    } catch (const std::bad_alloc&) {
        return fail(CLADDER_INTERNAL_ERROR, "out of memory");
    } catch (const std::exception& e) {
        return fail(CLADDER_INTERNAL_ERROR, e.what());
    }
}

char* copy_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

cl::OutputFormat format_of(cladder_format f)
{
    switch (f) {
    case CLADDER_JSON:
        return cl::OutputFormat::json;
    case CLADDER_CSV:
        return cl::OutputFormat::csv;
    case CLADDER_TEXT:
        return cl::OutputFormat::text;
    }
    throw cl::DomainError("unknown output format");
}

cl::CPoint4 point_of(const double re[4], const double im[4])
{
    cl::CPoint4 z;
    for (std::size_t i = 0; i < 4; ++i)
        z[i] = {re[i], im[i]};
    return z;
}

} // namespace

extern "C" {

const char* cladder_last_error(void)
{
    return g_last_error.c_str();
}

const char* cladder_version(void)
{
    return "0.1.0";
}

void cladder_string_free(char* s)
{
    std::free(s);
}

cladder_status cladder_parse_format(const char* name, cladder_format* out)
{
    if (name == nullptr || out == nullptr)
        return fail(CLADDER_CONFIG_ERROR, "null argument");
    return guarded(
        [&] {
            switch (cl::parse_output_format(name)) {
            case cl::OutputFormat::json:
                *out = CLADDER_JSON;
                break;
            case cl::OutputFormat::csv:
                *out = CLADDER_CSV;
                break;
            case cl::OutputFormat::text:
                *out = CLADDER_TEXT;
                break;
            }
        },
        true);
}

void cladder_suite_config_default(cladder_suite_config* config)
{
    if (config == nullptr)
        return;
    const cl::SuiteConfig d;
    config->suite = "all";
    config->e_max = d.e_max;
    config->series_order = d.series_order;
    config->tolerance = d.tolerance;
    config->seed = d.seed;
}

cladder_status cladder_run_suite(const cladder_suite_config* config, cladder_report** out)
{
    if (config == nullptr || out == nullptr || config->suite == nullptr)
        return fail(CLADDER_CONFIG_ERROR, "null argument");
    *out = nullptr;
    cl::SuiteConfig c;
    c.suite = config->suite;
    c.e_max = config->e_max;
    c.series_order = config->series_order;
    c.tolerance = config->tolerance;
    c.seed = config->seed;
    const cladder_status s = guarded([&] { c.validate(); }, true);
    if (s != CLADDER_OK)
        return s;
    return guarded([&] { *out = new cladder_report{cl::run_suite(c)}; });
}

int cladder_report_passed(const cladder_report* report)
{
    return report != nullptr && report->report.passed() ? 1 : 0;
}

size_t cladder_report_check_count(const cladder_report* report)
{
    return report ? report->report.checks.records().size() : 0;
}

size_t cladder_report_failure_count(const cladder_report* report)
{
    return report ? report->report.checks.failures() : 0;
}

cladder_status cladder_report_render(const cladder_report* report, cladder_format format, int include_timing,
                                     char** out)
{
    if (report == nullptr || out == nullptr)
        return fail(CLADDER_CONFIG_ERROR, "null argument");
    return guarded([&] { *out = copy_string(cl::render(report->report, format_of(format), include_timing != 0)); },
                   true);
}

void cladder_report_free(cladder_report* report)
{
    delete report;
}

void cladder_table_config_default(cladder_table_config* config)
{
    if (config == nullptr)
        return;
    const cl::TableConfig d;
    config->kind = "spectrum";
    config->e_max = d.e_max;
    config->helicity = 0;
    config->all_helicities = 0;
    config->max_degree = d.max_degree;
    config->order = d.order;
    config->radius = d.radius;
    config->beta = d.beta;
    config->n_max = d.n_max;
}

cladder_status cladder_emit_table(const cladder_table_config* config, cladder_table** out)
{
    if (config == nullptr || out == nullptr || config->kind == nullptr)
        return fail(CLADDER_CONFIG_ERROR, "null argument");
    *out = nullptr;
    cl::TableConfig c;
    c.kind = config->kind;
    c.e_max = config->e_max;
    if (config->all_helicities)
        c.helicity.reset();
    else
        c.helicity = config->helicity;
    c.max_degree = config->max_degree;
    c.order = config->order;
    c.radius = config->radius;
    c.beta = config->beta;
    c.n_max = config->n_max;
    const cladder_status s = guarded([&] { c.validate(); }, true);
    if (s != CLADDER_OK)
        return s;
    return guarded([&] { *out = new cladder_table{cl::emit_table(c)}; });
}

size_t cladder_table_row_count(const cladder_table* table)
{
    return table ? table->table.rows.size() : 0;
}

cladder_status cladder_table_render(const cladder_table* table, cladder_format format, char** out)
{
    if (table == nullptr || out == nullptr)
        return fail(CLADDER_CONFIG_ERROR, "null argument");
    return guarded([&] { *out = copy_string(cl::render(table->table, format_of(format))); }, true);
}

void cladder_table_free(cladder_table* table)
{
    delete table;
}

cladder_status cladder_qseries(const char* series, int weight, unsigned long order, cladder_table** out)
{
    if (series == nullptr || out == nullptr)
        return fail(CLADDER_CONFIG_ERROR, "null argument");
    *out = nullptr;
    const std::string name = series;
    return guarded(
        [&] {
            if (order < 1)
                throw cl::DomainError("order must be at least 1");
            cl::Table t;
            t.kind = "qseries";
            t.columns = {"n", "coefficient"};
            t.meta["series"] = name;
            t.meta["order"] = order;
            cl::QSeries s;
            if (name == "Z") {
                s = cl::partition_Z(order);
            } else if (name == "mean_energy") {
                s = cl::mean_energy_series(order);
            } else if (name == "eisenstein") {
                s = cl::eisenstein(weight, order).coeffs;
                t.meta["weight"] = weight;
            } else {
                throw cl::DomainError("unknown series '" + name + "' (expected Z, mean_energy or eisenstein)");
            }
            for (std::size_t n = 0; n <= order; ++n)
                t.rows.push_back({static_cast<long long>(n), cl::to_string(s[n])});
            *out = new cladder_table{std::move(t)};
        },
        true);
}

cladder_status cladder_modular_residual(int weight, double tau_re, double tau_im, const long gamma[4],
                                        unsigned long order, double* residual)
{
    if (gamma == nullptr || residual == nullptr)
        return fail(CLADDER_CONFIG_ERROR, "null argument");
    return guarded([&] {
        const cl::ModularMatrix g{gamma[0], gamma[1], gamma[2], gamma[3]};
        *residual = cl::modular_covariance_residual(weight, {tau_re, tau_im}, g, order);
    });
}

cladder_status cladder_stefan_boltzmann(double radius, double beta, unsigned long n_max, double* density,
                                        double* ratio_error, double* tail_bound, unsigned long* modes)
{
    return guarded([&] {
        cl::ThermoParams p;
        p.radius = radius;
        p.beta = beta;
        const cl::StefanBoltzmann sb = cl::stefan_boltzmann(p, n_max);
        if (density)
            *density = sb.density;
        if (ratio_error)
            *ratio_error = sb.ratio_error;
        if (tail_bound)
            *tail_bound = sb.tail_bound;
        if (modes)
            *modes = sb.n_max;
    });
}

cladder_status cladder_gc_map(const double x_re[4], const double x_im[4], double z_re[4], double z_im[4])
{
    if (!x_re || !x_im || !z_re || !z_im)
        return fail(CLADDER_CONFIG_ERROR, "null argument");
    return guarded([&] {
        cl::MinkowskiPoint x;
        x.x0 = {x_re[0], x_im[0]};
        for (std::size_t i = 0; i < 3; ++i)
            x.x[i] = {x_re[i + 1], x_im[i + 1]};
        const cl::CPoint4 z = cl::gc_map(x);
        for (std::size_t i = 0; i < 4; ++i) {
            z_re[i] = z[i].real();
            z_im[i] = z[i].imag();
        }
    });
}

cladder_status cladder_gc_inverse(const double z_re[4], const double z_im[4], double x_re[4], double x_im[4])
{
    if (!x_re || !x_im || !z_re || !z_im)
        return fail(CLADDER_CONFIG_ERROR, "null argument");
    return guarded([&] {
        const cl::MinkowskiPoint x = cl::gc_inverse(point_of(z_re, z_im));
        x_re[0] = x.x0.real();
        x_im[0] = x.x0.imag();
        for (std::size_t i = 0; i < 3; ++i) {
            x_re[i + 1] = x.x[i].real();
            x_im[i + 1] = x.x[i].imag();
        }
    });
}

cladder_status cladder_tube_classify(const double z_re[4], const double z_im[4], cladder_tube* out)
{
    if (!z_re || !z_im || !out)
        return fail(CLADDER_CONFIG_ERROR, "null argument");
    return guarded([&] {
        switch (cl::tube_classify(point_of(z_re, z_im))) {
        case cl::TubeClass::forward_tube:
            *out = CLADDER_FORWARD_TUBE;
            break;
        case cl::TubeClass::backward_tube:
            *out = CLADDER_BACKWARD_TUBE;
            break;
        case cl::TubeClass::compact_minkowski:
            *out = CLADDER_COMPACT_MINKOWSKI;
            break;
        case cl::TubeClass::outside:
            *out = CLADDER_OUTSIDE;
            break;
        }
    });
}

const char* cladder_tube_name(cladder_tube t)
{
    switch (t) {
    case CLADDER_FORWARD_TUBE:
        return "forward_tube";
    case CLADDER_BACKWARD_TUBE:
        return "backward_tube";
    case CLADDER_COMPACT_MINKOWSKI:
        return "compact_minkowski";
    case CLADDER_OUTSIDE:
        return "outside";
    }
    return "unknown";
}

} // extern "C"
