// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "conformal_ladder/conformal_ladder.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct StringDeleter {
    void operator()(char* s) const { cladder_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct ReportDeleter {
    void operator()(cladder_report* r) const { cladder_report_free(r); }
};
struct TableDeleter {
    void operator()(cladder_table* t) const { cladder_table_free(t); }
};

int exit_for(cladder_status s)
{
    std::cerr << "error: " << cladder_last_error() << "\n";
    switch (s) {
    case CLADDER_CONVERGENCE_ERROR:
    case CLADDER_GUARD_BAND:
    case CLADDER_INTERNAL_ERROR:
        return kExitFail;
    default:
        return kExitConfig;
    }
}

/// Writes to --out-file when given, else stdout. Returns false on I/O failure.
bool emit(const std::string& text, const std::string& out_file)
{
    if (out_file.empty()) {
        std::cout << text;
        return static_cast<bool>(std::cout);
    }
    std::ofstream f(out_file, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << out_file << " for writing\n";
        return false;
    }
    f << text;
    return static_cast<bool>(f);
}

std::optional<cladder_format> parse_format(const std::string& name)
{
    cladder_format f{};
    if (cladder_parse_format(name.c_str(), &f) != CLADDER_OK) {
        std::cerr << "error: " << cladder_last_error() << "\n";
        return std::nullopt;
    }
    return f;
}

int render_table(cladder_table* raw, const std::string& format, const std::string& out_file)
{
    std::unique_ptr<cladder_table, TableDeleter> table(raw);
    const auto f = parse_format(format);
    if (!f)
        return kExitConfig;
    char* text = nullptr;
    if (const auto s = cladder_table_render(table.get(), *f, &text); s != CLADDER_OK)
        return exit_for(s);
    CString owned(text);
    return emit(owned.get(), out_file) ? kExitPass : kExitConfig;
}

std::vector<std::string> split_numbers(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(item);
    return out;
}

std::vector<double> parse_components(const std::string& text)
{
    std::vector<double> out;
    for (const auto& item : split_numbers(text))
        out.push_back(std::stod(item));
    if (out.size() != 4)
        throw CLI::ValidationError("expected four comma-separated numbers, got '" + text + "'");
    return out;
}

nlohmann::ordered_json complex_array(const double re[4], const double im[4])
{
    auto a = nlohmann::ordered_json::array();
    for (int i = 0; i < 4; ++i)
        a.push_back({re[i], im[i]});
    return a;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Verification engine for the conformal ladder constructions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(cladder_version()));

    std::string output = "json";
    std::string out_file;
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--output", output, "json, csv or text")->capture_default_str();
        sub->add_option("--out-file", out_file, "write here instead of stdout");
    };

    // run
    cladder_suite_config suite{};
    cladder_suite_config_default(&suite);
    std::string suite_name = "all";
    bool no_timing = false;
    auto* run = app.add_subcommand("run", "run a verification suite");
    run->add_option("suite_pos", suite_name, "clifford, ladder, geometry, vertex, modular, planck or all");
    run->add_option("--suite", suite_name, "same as the positional suite name");
    run->add_option("--e-max", suite.e_max, "Fock cutoff for the ladder suite")->capture_default_str();
    run->add_option("--series-order", suite.series_order, "q-series order")->capture_default_str();
    run->add_option("--tolerance", suite.tolerance, "roundoff bound")->capture_default_str();
    run->add_option("--seed", suite.seed, "seed for sampled checks")->capture_default_str();
    run->add_flag("--no-timing", no_timing, "omit per-check timing");
    add_output(run);

    // table
    cladder_table_config table{};
    cladder_table_config_default(&table);
    std::string kind = "spectrum";
    std::string helicity = "0";
    auto* tab = app.add_subcommand("table", "emit a table");
    tab->add_option("kind", kind, "spectrum, h_polynomials, z_coefficients or planck_modes")->required();
    tab->add_option("--e-max", table.e_max, "spectrum cutoff")->capture_default_str();
    tab->add_option("--helicity", helicity, "helicity sector or 'all'")->capture_default_str();
    tab->add_option("--max-degree", table.max_degree, "largest k for h_polynomials")->capture_default_str();
    tab->add_option("--order", table.order, "order for z_coefficients")->capture_default_str();
    tab->add_option("--radius", table.radius, "sphere radius R")->capture_default_str();
    tab->add_option("--beta", table.beta, "inverse temperature")->capture_default_str();
    tab->add_option("--n-max", table.n_max, "modes in planck_modes")->capture_default_str();
    add_output(tab);

    // qseries
    std::string series = "Z";
    int weight = 4;
    unsigned long order = 20;
    auto* qs = app.add_subcommand("qseries", "coefficients of Z, the mean energy or G_2k");
    qs->add_option("--series", series, "Z, mean_energy or eisenstein")->capture_default_str();
    qs->add_option("--weight", weight, "Eisenstein weight 2k >= 4")->capture_default_str();
    qs->add_option("--order", order, "truncation order")->capture_default_str();
    add_output(qs);

    // modular-check
    double tau_re = 0;
    double tau_im = 2;
    std::string gamma_text = "S";
    double mod_tol = 1e-6;
    unsigned long mod_order = 600;
    auto* mc = app.add_subcommand("modular-check", "covariance residual of G_2k under an SL(2,Z) element");
    mc->add_option("--weight", weight, "weight 2k >= 4")->capture_default_str();
    mc->add_option("--tau-re", tau_re)->capture_default_str();
    mc->add_option("--tau-im", tau_im)->capture_default_str();
    mc->add_option("--gamma", gamma_text, "S, T or a,b,c,d")->capture_default_str();
    mc->add_option("--order", mod_order, "series order N")->capture_default_str();
    mc->add_option("--tolerance", mod_tol, "pass threshold")->capture_default_str();

    // planck
    auto* pl = app.add_subcommand("planck", "per-mode Planck terms and the Stefan-Boltzmann ratio");
    pl->add_option("--radius", table.radius, "sphere radius R")->capture_default_str();
    pl->add_option("--beta", table.beta, "inverse temperature")->capture_default_str();
    pl->add_option("--n-max", table.n_max, "modes listed")->capture_default_str();
    add_output(pl);

    // gc-map and classify
    std::string x_re_text;
    std::string x_im_text = "0,0,0,0";
    auto* gc = app.add_subcommand("gc-map", "map a Minkowski point x = (x0, x1, x2, x3) to z");
    gc->add_option("--x", x_re_text, "real parts, comma-separated")->required();
    gc->add_option("--x-im", x_im_text, "imaginary parts")->capture_default_str();
    std::string z_re_text;
    std::string z_im_text = "0,0,0,0";
    auto* cls = app.add_subcommand("classify", "classify z as forward tube, backward tube, compact space or outside");
    cls->add_option("--z", z_re_text, "real parts, comma-separated")->required();
    cls->add_option("--z-im", z_im_text, "imaginary parts")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    if (run->parsed()) {
        const auto f = parse_format(output);
        if (!f)
            return kExitConfig;
        suite.suite = suite_name.c_str();
        cladder_report* raw = nullptr;
        if (const auto s = cladder_run_suite(&suite, &raw); s != CLADDER_OK)
            return exit_for(s);
        std::unique_ptr<cladder_report, ReportDeleter> report(raw);
        char* text = nullptr;
        if (const auto s = cladder_report_render(report.get(), *f, no_timing ? 0 : 1, &text); s != CLADDER_OK)
            return exit_for(s);
        CString owned(text);
        if (!emit(owned.get(), out_file))
            return kExitConfig;
        return cladder_report_passed(report.get()) ? kExitPass : kExitFail;
    }

    if (tab->parsed() || pl->parsed()) {
        if (pl->parsed()) {
            kind = "planck_modes";
        } else if (helicity == "all") {
            table.all_helicities = 1;
        } else {
            try {
                table.helicity = std::stoi(helicity);
            } catch (const std::exception&) {
                std::cerr << "error: --helicity takes an integer or 'all'\n";
                return kExitConfig;
            }
        }
        table.kind = kind.c_str();
        cladder_table* raw = nullptr;
        if (const auto s = cladder_emit_table(&table, &raw); s != CLADDER_OK)
            return exit_for(s);
        return render_table(raw, output, out_file);
    }

    if (qs->parsed()) {
        cladder_table* raw = nullptr;
        if (const auto s = cladder_qseries(series.c_str(), weight, order, &raw); s != CLADDER_OK)
            return exit_for(s);
        return render_table(raw, output, out_file);
    }

    if (mc->parsed()) {
        long gamma[4] = {0, -1, 1, 0};
        if (gamma_text == "T") {
            const long t[4] = {1, 1, 0, 1};
            std::copy(t, t + 4, gamma);
        } else if (gamma_text != "S") {
            try {
                const auto g = split_numbers(gamma_text);
                if (g.size() != 4)
                    throw std::invalid_argument("size");
                for (int i = 0; i < 4; ++i)
                    gamma[i] = std::stol(g[static_cast<std::size_t>(i)]);
            } catch (const std::exception&) {
                std::cerr << "error: --gamma takes S, T or a,b,c,d\n";
                return kExitConfig;
            }
        }
        double residual = 0;
        if (const auto s = cladder_modular_residual(weight, tau_re, tau_im, gamma, mod_order, &residual);
            s != CLADDER_OK)
            return exit_for(s);
        nlohmann::ordered_json j;
        j["weight"] = weight;
        j["tau"] = {tau_re, tau_im};
        j["gamma"] = {gamma[0], gamma[1], gamma[2], gamma[3]};
        j["order"] = mod_order;
        j["residual"] = residual;
        j["tolerance"] = mod_tol;
        j["status"] = residual < mod_tol ? "pass" : "fail";
        std::cout << j.dump(2) << "\n";
        return residual < mod_tol ? kExitPass : kExitFail;
    }

    try {
        if (gc->parsed()) {
            const auto re = parse_components(x_re_text);
            const auto im = parse_components(x_im_text);
            double z_re[4];
            double z_im[4];
            if (const auto s = cladder_gc_map(re.data(), im.data(), z_re, z_im); s != CLADDER_OK)
                return exit_for(s);
            cladder_tube t{};
            if (const auto s = cladder_tube_classify(z_re, z_im, &t); s != CLADDER_OK)
                return exit_for(s);
            nlohmann::ordered_json j;
            j["x"] = complex_array(re.data(), im.data());
            j["z"] = complex_array(z_re, z_im);
            j["class"] = cladder_tube_name(t);
            std::cout << j.dump(2) << "\n";
            return kExitPass;
        }
        if (cls->parsed()) {
            const auto re = parse_components(z_re_text);
            const auto im = parse_components(z_im_text);
            cladder_tube t{};
            if (const auto s = cladder_tube_classify(re.data(), im.data(), &t); s != CLADDER_OK)
                return exit_for(s);
            nlohmann::ordered_json j;
            j["z"] = complex_array(re.data(), im.data());
            j["class"] = cladder_tube_name(t);
            std::cout << j.dump(2) << "\n";
            return kExitPass;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
