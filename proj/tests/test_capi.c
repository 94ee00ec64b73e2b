// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

// Exercises the shared library through its C header only.

#include <math.h>
#include <stdio.h>
#include <string.h>

#include "conformal_ladder/conformal_ladder.h"

static int failures = 0;

#define EXPECT(cond)                                                          \
    do {                                                                      \
        if (!(cond)) {                                                        \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                       \
        }                                                                     \
    } while (0)

static void test_version_and_format(void)
{
    cladder_format f;
    EXPECT(strcmp(cladder_version(), "0.1.0") == 0);
    EXPECT(cladder_parse_format("csv", &f) == CLADDER_OK && f == CLADDER_CSV);
    EXPECT(cladder_parse_format("text", &f) == CLADDER_OK && f == CLADDER_TEXT);
    EXPECT(cladder_parse_format("xml", &f) == CLADDER_CONFIG_ERROR);
    EXPECT(strstr(cladder_last_error(), "xml") != NULL);
    EXPECT(cladder_parse_format(NULL, &f) == CLADDER_CONFIG_ERROR);
}

static void test_suite(void)
{
    cladder_suite_config c;
    cladder_report* r = NULL;
    char* text = NULL;
    cladder_suite_config_default(&c);
    EXPECT(strcmp(c.suite, "all") == 0);
    EXPECT(c.e_max == 8);
    EXPECT(c.seed == 42);

    c.suite = "clifford";
    EXPECT(cladder_run_suite(&c, &r) == CLADDER_OK);
    EXPECT(r != NULL);
    EXPECT(cladder_report_passed(r) == 1);
    EXPECT(cladder_report_check_count(r) == 47);
    EXPECT(cladder_report_failure_count(r) == 0);
    EXPECT(cladder_report_render(r, CLADDER_JSON, 0, &text) == CLADDER_OK);
    EXPECT(text != NULL && strstr(text, "\"status\": \"pass\"") != NULL);
    EXPECT(text != NULL && strstr(text, "seconds") == NULL);
    cladder_string_free(text);
    EXPECT(cladder_report_render(r, CLADDER_TEXT, 1, &text) == CLADDER_OK);
    EXPECT(text != NULL && strstr(text, "clifford: 47/47 passed") != NULL);
    cladder_string_free(text);
    cladder_report_free(r);

    r = NULL;
    c.suite = "nosuch";
    EXPECT(cladder_run_suite(&c, &r) == CLADDER_CONFIG_ERROR);
    EXPECT(r == NULL);
    EXPECT(strlen(cladder_last_error()) > 0);
    c.suite = "ladder";
    c.e_max = 99;
    EXPECT(cladder_run_suite(&c, &r) == CLADDER_CONFIG_ERROR);
    EXPECT(cladder_run_suite(NULL, &r) == CLADDER_CONFIG_ERROR);
    cladder_report_free(NULL);
    EXPECT(cladder_report_passed(NULL) == 0);
}

static void test_tables(void)
{
    cladder_table_config t;
    cladder_table* tab = NULL;
    char* csv = NULL;
    cladder_table_config_default(&t);
    EXPECT(strcmp(t.kind, "spectrum") == 0);
    EXPECT(cladder_emit_table(&t, &tab) == CLADDER_OK);
    EXPECT(cladder_table_row_count(tab) == 8);
    EXPECT(cladder_table_render(tab, CLADDER_CSV, &csv) == CLADDER_OK);
    EXPECT(csv != NULL && strstr(csv, "8,64") != NULL);
    cladder_string_free(csv);
    cladder_table_free(tab);

    t.kind = "nosuch";
    EXPECT(cladder_emit_table(&t, &tab) == CLADDER_CONFIG_ERROR);

    EXPECT(cladder_qseries("Z", 0, 4, &tab) == CLADDER_OK);
    EXPECT(cladder_table_row_count(tab) == 5);
    EXPECT(cladder_table_render(tab, CLADDER_CSV, &csv) == CLADDER_OK);
    EXPECT(csv != NULL && strstr(csv, "4,40") != NULL);
    cladder_string_free(csv);
    cladder_table_free(tab);
    EXPECT(cladder_qseries("eisenstein", 3, 4, &tab) == CLADDER_CONFIG_ERROR);
    EXPECT(cladder_qseries("nosuch", 4, 4, &tab) == CLADDER_CONFIG_ERROR);
}

static void test_numerics(void)
{
    const long s[4] = {0, -1, 1, 0};
    const long bad[4] = {1, 1, 1, 1};
    double res = -1, density = 0, err = 0, tail = 0;
    unsigned long modes = 0;
    const double pi = 3.14159265358979323846;

    EXPECT(cladder_modular_residual(4, 0.3, 1.1, s, 600, &res) == CLADDER_OK);
    EXPECT(res >= 0 && res < 1e-6);
    EXPECT(cladder_modular_residual(4, 0, 2, bad, 100, &res) == CLADDER_DOMAIN_ERROR);
    EXPECT(cladder_modular_residual(4, 0, 0.02, s, 10, &res) == CLADDER_CONVERGENCE_ERROR);

    EXPECT(cladder_stefan_boltzmann(1000, 1, 0, &density, &err, &tail, &modes) == CLADDER_OK);
    EXPECT(fabs(density - pi * pi / 30) < 1e-10);
    EXPECT(err < 1e-2);
    EXPECT(modes > 1000);
    EXPECT(cladder_stefan_boltzmann(-1, 1, 0, &density, NULL, NULL, NULL) == CLADDER_DOMAIN_ERROR);
    EXPECT(cladder_stefan_boltzmann(1000, 1, 5, &density, NULL, NULL, NULL) == CLADDER_CONVERGENCE_ERROR);
}

static void test_geometry(void)
{
    const double x_re[4] = {0, 0, 0, 0}, x_im[4] = {0, 0, 0, 0};
    double z_re[4], z_im[4], back_re[4], back_im[4];
    const double fwd_re[4] = {0, 0, 0, 0.5}, zero[4] = {0, 0, 0, 0};
    const double far_re[4] = {0, 0, 0, 3};
    cladder_tube t;
    int i;

    EXPECT(cladder_gc_map(x_re, x_im, z_re, z_im) == CLADDER_OK);
    EXPECT(z_re[3] == 1.0 && z_re[0] == 0.0 && z_im[3] == 0.0);
    EXPECT(cladder_gc_inverse(z_re, z_im, back_re, back_im) == CLADDER_OK);
    for (i = 0; i < 4; ++i)
        EXPECT(fabs(back_re[i]) < 1e-15 && fabs(back_im[i]) < 1e-15);

    EXPECT(cladder_tube_classify(z_re, z_im, &t) == CLADDER_OK && t == CLADDER_COMPACT_MINKOWSKI);
    EXPECT(cladder_tube_classify(fwd_re, zero, &t) == CLADDER_OK && t == CLADDER_FORWARD_TUBE);
    EXPECT(cladder_tube_classify(far_re, zero, &t) == CLADDER_OK && t == CLADDER_BACKWARD_TUBE);
    EXPECT(strcmp(cladder_tube_name(CLADDER_FORWARD_TUBE), "forward_tube") == 0);
    EXPECT(cladder_gc_map(NULL, x_im, z_re, z_im) == CLADDER_CONFIG_ERROR);
}

int main(void)
{
    test_version_and_format();
    test_suite();
    test_tables();
    test_numerics();
    test_geometry();
    if (failures) {
        fprintf(stderr, "%d expectation(s) failed\n", failures);
        return 1;
    }
    printf("capi: all expectations met\n");
    return 0;
}
