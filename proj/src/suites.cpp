// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#include "conformal_ladder/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iomanip>
#include <memory>
#include <sstream>
#include <thread>

#include "conformal_ladder/clifford.hpp"
#include "conformal_ladder/errors.hpp"
#include "conformal_ladder/fock.hpp"
#include "conformal_ladder/geometry.hpp"
#include "conformal_ladder/modular.hpp"
#include "conformal_ladder/vertex.hpp"

namespace conformal_ladder {

namespace {

struct Group {
    std::string name;
    std::function<Report()> run;
};

// Fixed by the vertex checks rather than by --e-max.
constexpr int kVertexNumericEMax = 20;
constexpr int kHarmonicMaxDegree = 8;

void add_groups(const std::string& suite, const SuiteConfig& c, std::vector<Group>& out)
{
    if (suite == "clifford") {
        out.push_back({"clifford", [] { return clifford_checks(); }});
    } else if (suite == "ladder") {
        auto basis = std::make_shared<const FockBasis>(c.e_max);
        const int max_h = std::min(4, basis->max_occupation());
        out.push_back({"ladder/algebra", [basis] {
                           Report r = ccr_checks(*basis);
                           r.append(chevalley_checks(*basis));
                           r.append(nilpotent_orbit_identities(*basis));
                           return r;
                       }});
        out.push_back({"ladder/homomorphism", [basis] { return homomorphism_checks(*basis); }});
        out.push_back({"ladder/helicity", [basis] {
                           Report r = picture_independence_checks(*basis);
                           r.append(helicity_centrality_checks(*basis));
                           return r;
                       }});
        out.push_back({"ladder/momentum", [basis, seed = c.seed] { return momentum_checks(*basis, seed, 100); }});
        out.push_back({"ladder/spectrum", [basis, max_h] {
                           Report r = lowest_weight_checks(*basis, max_h);
                           r.append(spectrum_checks(*basis));
                           return r;
                       }});
    } else if (suite == "geometry") {
        out.push_back({"geometry", [seed = c.seed] { return geometry_checks(seed); }});
    } else if (suite == "vertex") {
        auto numeric = std::make_shared<const FockBasis>(kVertexNumericEMax);
        out.push_back({"vertex/algebra", [e_max = c.e_max] {
                           Report r = quaternion_identity_check();
                           r.append(translation_checks(FockBasis(e_max)));
                           return r;
                       }});
        out.push_back({"vertex/harmonic", [] { return harmonic_checks(kHarmonicMaxDegree); }});
        out.push_back({"vertex/norm", [numeric] { return norm_checks(*numeric); }});
        out.push_back({"vertex/two-point", [numeric, seed = c.seed, tol = c.tolerance] {
                           return two_point_checks(*numeric, seed, tol);
                       }});
    } else if (suite == "modular") {
        out.push_back({"modular", [order = c.series_order] { return modular_checks(order); }});
    } else if (suite == "planck") {
        out.push_back({"planck", [seed = c.seed, tol = c.tolerance] { return planck_checks(seed, tol); }});
    }
}

std::string format_double(double x)
{
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

std::string csv_field(const std::string& s)
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

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"clifford", "ladder", "geometry", "vertex", "modular", "planck", "all"};
    return names;
}

void SuiteConfig::validate() const
{
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw DomainError("unknown suite '" + suite + "'");
    if (e_max < 2)
        throw DomainError("e_max must be at least 2");
    if (e_max > 16)
        throw DomainError("e_max above 16 is outside the supported range");
    if (series_order < 8)
        throw DomainError("series_order must be at least 8");
    if (!(tolerance > 0) || !std::isfinite(tolerance))
        throw DomainError("tolerance must be positive");
}

unsigned worker_threads()
{
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("CONFORMAL_LADDER_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            n = static_cast<unsigned>(v);
    }
    return n;
}

SuiteReport run_suite(const SuiteConfig& config)
{
    config.validate();
    std::vector<Group> groups;
    if (config.suite == "all") {
        for (const auto& s : suite_names())
            if (s != "all")
                add_groups(s, config, groups);
    } else {
        add_groups(config.suite, config, groups);
    }

    std::vector<Report> results(groups.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < groups.size(); i = next++) {
            const auto t0 = std::chrono::steady_clock::now();
            Report r;
            try {
                r = groups[i].run();
            } catch (const std::exception& e) {
                r = Report{};
                r.add_exact(groups[i].name + "/error", "check group completes", false, e.what());
            }
            const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            for (auto& rec : r.records())
                rec.seconds = dt;
            results[i] = std::move(r);
        }
    };
    const unsigned n = std::min<unsigned>(worker_threads(), static_cast<unsigned>(std::max<std::size_t>(groups.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    SuiteReport out;
    out.suite = config.suite;
    out.config = config;
    for (const auto& r : results)
        out.checks.append(r);
    auto& recs = out.checks.records();
    std::stable_sort(recs.begin(), recs.end(), [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
    return out;
}

nlohmann::ordered_json to_json(const SuiteReport& r, bool include_timing)
{
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["status"] = r.passed() ? "pass" : "fail";
    nlohmann::ordered_json cfg;
    cfg["suite"] = r.config.suite;
    cfg["e_max"] = r.config.e_max;
    cfg["series_order"] = r.config.series_order;
    cfg["tolerance"] = r.config.tolerance;
    cfg["seed"] = r.config.seed;
    j["config"] = std::move(cfg);
    const std::size_t total = r.checks.records().size();
    const std::size_t failed = r.checks.failures();
    j["summary"] = {{"checks", total}, {"passed", total - failed}, {"failed", failed}};
    auto checks = nlohmann::ordered_json::array();
    for (const auto& rec : r.checks.records())
        checks.push_back(to_json(rec, include_timing));
    j["checks"] = std::move(checks);
    return j;
}

std::string render(const SuiteReport& r, OutputFormat format, bool include_timing)
{
    std::ostringstream os;
    switch (format) {
    case OutputFormat::json:
        os << to_json(r, include_timing).dump(2) << "\n";
        break;
    case OutputFormat::csv:
        os << "id,status,exact,residual,reference,detail" << (include_timing ? ",seconds" : "") << "\n";
        for (const auto& c : r.checks.records()) {
            os << csv_field(c.id) << "," << (c.passed ? "pass" : "fail") << "," << (c.exact ? "true" : "false") << ","
               << (c.residual ? format_double(*c.residual) : "") << "," << csv_field(c.reference) << ","
               << csv_field(c.detail);
            if (include_timing)
                os << "," << format_double(c.seconds);
            os << "\n";
        }
        break;
    case OutputFormat::text:
        for (const auto& c : r.checks.records()) {
            os << (c.passed ? "PASS " : "FAIL ") << c.id;
            if (c.residual)
                os << "  residual " << std::setprecision(3) << *c.residual;
            if (!c.detail.empty())
                os << "  (" << c.detail << ")";
            os << "\n";
        }
        os << r.suite << ": " << (r.checks.records().size() - r.checks.failures()) << "/" << r.checks.records().size()
           << " passed\n";
        break;
    }
    return os.str();
}

const std::vector<std::string>& table_kinds()
{
    static const std::vector<std::string> kinds{"spectrum", "h_polynomials", "z_coefficients", "planck_modes"};
    return kinds;
}

void TableConfig::validate() const
{
    const auto& kinds = table_kinds();
    if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end())
        throw DomainError("unknown table kind '" + kind + "'");
    if (e_max < 1 || e_max > 12)
        throw DomainError("e_max must be in 1..12");
    if (max_degree < 0 || max_degree > 40)
        throw DomainError("max_degree must be in 0..40");
    if (order < 1)
        throw DomainError("order must be at least 1");
    if (n_max < 1)
        throw DomainError("n_max must be at least 1");
    ThermoParams p;
    p.radius = radius;
    p.beta = beta;
    p.validate();
}

Table emit_table(const TableConfig& config)
{
    config.validate();
    Table t;
    t.kind = config.kind;
    if (config.kind == "spectrum") {
        const FockBasis basis(config.e_max);
        t.columns = {"eigenvalue", "multiplicity"};
        t.meta["e_max"] = config.e_max;
        if (config.helicity)
            t.meta["helicity"] = *config.helicity;
        else
            t.meta["helicity"] = "all";
        for (const auto& e : hamiltonian_spectrum(basis, config.helicity))
            t.rows.push_back({to_string(e.eigenvalue), static_cast<long long>(e.multiplicity)});
    } else if (config.kind == "h_polynomials") {
        t.columns = {"k", "h_k", "expanded"};
        for (int k = 0; k <= config.max_degree; ++k)
            t.rows.push_back({static_cast<long long>(k), harmonic_h_string(k),
                              to_string(harmonic_h(k, HarmonicMode::closed_form))});
    } else if (config.kind == "z_coefficients") {
        t.columns = {"n", "coefficient"};
        t.meta["order"] = config.order;
        const QSeries z = partition_Z(config.order);
        for (std::size_t n = 0; n <= config.order; ++n)
            t.rows.push_back({static_cast<long long>(n), to_string(z[n])});
    } else {
        ThermoParams p;
        p.radius = config.radius;
        p.beta = config.beta;
        t.columns = {"n", "nu", "term", "term_from_frequency"};
        double total = 0;
        for (std::size_t n = 1; n <= config.n_max; ++n) {
            const long nl = static_cast<long>(n);
            const double term = planck_term(nl, p);
            total += term;
            t.rows.push_back({static_cast<long long>(n), static_cast<double>(n) * p.c / p.radius, term,
                              planck_term_frequency(nl, p)});
        }
        const StefanBoltzmann sb = stefan_boltzmann(p);
        t.meta["radius"] = p.radius;
        t.meta["beta"] = p.beta;
        t.meta["total"] = total;
        t.meta["stefan_boltzmann"] = {{"density", sb.density},
                                      {"limit", sb.limit},
                                      {"ratio_error", sb.ratio_error},
                                      {"modes", sb.n_max},
                                      {"tail_bound", sb.tail_bound}};
    }
    return t;
}

} // namespace conformal_ladder
