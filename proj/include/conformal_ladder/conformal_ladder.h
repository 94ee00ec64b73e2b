// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CONFORMAL_LADDER_H
#define CONFORMAL_LADDER_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CLADDER_API __declspec(dllexport)
#else
#define CLADDER_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cladder_status {
    CLADDER_OK = 0,
    CLADDER_CONFIG_ERROR = 2,      /* invalid argument or configuration */
    CLADDER_DOMAIN_ERROR = 3,      /* input outside an operation's domain */
    CLADDER_CONVERGENCE_ERROR = 4, /* truncation did not converge */
    CLADDER_GUARD_BAND = 5,        /* operator applied too close to the Fock cutoff */
    CLADDER_INTERNAL_ERROR = 6
} cladder_status;

typedef enum cladder_format { CLADDER_JSON = 0, CLADDER_CSV = 1, CLADDER_TEXT = 2 } cladder_format;

typedef enum cladder_tube {
    CLADDER_FORWARD_TUBE = 0,
    CLADDER_BACKWARD_TUBE = 1,
    CLADDER_COMPACT_MINKOWSKI = 2,
    CLADDER_OUTSIDE = 3
} cladder_tube;

typedef struct cladder_report cladder_report;
typedef struct cladder_table cladder_table;

typedef struct cladder_suite_config {
    const char* suite; /* clifford, ladder, geometry, vertex, modular, planck, all */
    int e_max;
    unsigned long series_order;
    double tolerance;
    uint64_t seed;
} cladder_suite_config;

typedef struct cladder_table_config {
    const char* kind; /* spectrum, h_polynomials, z_coefficients, planck_modes */
    int e_max;
    int helicity;
    int all_helicities; /* nonzero: spectrum of the full space */
    int max_degree;
    unsigned long order;
    double radius;
    double beta;
    unsigned long n_max;
} cladder_table_config;

/* Message of the last failed call on this thread; never NULL. */
CLADDER_API const char* cladder_last_error(void);
CLADDER_API const char* cladder_version(void);
/* Frees strings returned through char** out-parameters. */
CLADDER_API void cladder_string_free(char* s);

CLADDER_API cladder_status cladder_parse_format(const char* name, cladder_format* out);

CLADDER_API void cladder_suite_config_default(cladder_suite_config* config);
/* Runs a suite. CLADDER_OK means a report was produced; check
 * cladder_report_passed for the outcome. */
CLADDER_API cladder_status cladder_run_suite(const cladder_suite_config* config, cladder_report** out);
CLADDER_API int cladder_report_passed(const cladder_report* report);
CLADDER_API size_t cladder_report_check_count(const cladder_report* report);
CLADDER_API size_t cladder_report_failure_count(const cladder_report* report);
CLADDER_API cladder_status cladder_report_render(const cladder_report* report, cladder_format format,
                                                 int include_timing, char** out);
CLADDER_API void cladder_report_free(cladder_report* report);

CLADDER_API void cladder_table_config_default(cladder_table_config* config);
CLADDER_API cladder_status cladder_emit_table(const cladder_table_config* config, cladder_table** out);
CLADDER_API size_t cladder_table_row_count(const cladder_table* table);
CLADDER_API cladder_status cladder_table_render(const cladder_table* table, cladder_format format, char** out);
CLADDER_API void cladder_table_free(cladder_table* table);

/* Coefficient table of a q-series: series is "Z", "mean_energy" or
 * "eisenstein" (weight used only for the latter). */
CLADDER_API cladder_status cladder_qseries(const char* series, int weight, unsigned long order, cladder_table** out);

/* |(c tau + d)^{-2k} G_2k(gamma tau) - G_2k(tau)| with gamma = {a, b, c, d}. */
CLADDER_API cladder_status cladder_modular_residual(int weight, double tau_re, double tau_im, const long gamma[4],
                                                    unsigned long order, double* residual);

/* Dimensionless Stefan-Boltzmann density; n_max = 0 picks the cutoff. */
CLADDER_API cladder_status cladder_stefan_boltzmann(double radius, double beta, unsigned long n_max, double* density,
                                                    double* ratio_error, double* tail_bound, unsigned long* modes);

/* x = (x^0, x^1, x^2, x^3) -> z = (z1, z2, z3, z4), complex parts split. */
CLADDER_API cladder_status cladder_gc_map(const double x_re[4], const double x_im[4], double z_re[4], double z_im[4]);
CLADDER_API cladder_status cladder_gc_inverse(const double z_re[4], const double z_im[4], double x_re[4],
                                              double x_im[4]);
CLADDER_API cladder_status cladder_tube_classify(const double z_re[4], const double z_im[4], cladder_tube* out);
CLADDER_API const char* cladder_tube_name(cladder_tube t);

#ifdef __cplusplus
}
#endif

#endif
