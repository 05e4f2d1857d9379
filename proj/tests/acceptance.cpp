// (C) Copyright 2026, shiftring contributors.
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0.
//
// Gate suite: one check per certified claim, one PASS/FAIL line each, with
// the measured values and the pinned tolerances printed alongside.

#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "shiftring/experiments.hpp"

using namespace shiftring;

TEST_CASE("criterion-01-hard-state-distance") {
    LemmaSweepReport rep = lemma_sweep(2, 100, 16, 7);
    std::printf("criterion-01 %s: min trace distance %.9f over %d tuples x %d z "
                "(required >= 0.5 - 1e-9)\n",
                rep.pass ? "PASS" : "FAIL", rep.min_distance, rep.tuples, rep.z_per_tuple);
    CHECK(rep.min_distance >= 0.5 - 1e-9);
    CHECK(rep.pass);
}

TEST_CASE("criterion-02-spectral-ingredient") {
    SpectralSweepReport rep = spectral_sweep(2, 100, 11);
    std::printf("criterion-02 %s: max reduced spectral norm %.9f over %d samples "
                "(required <= %.9f + 1e-9)\n",
                rep.pass ? "PASS" : "FAIL", rep.max_norm, rep.samples, rep.limit);
    CHECK(rep.max_norm <= rep.limit + 1e-9);
    CHECK(rep.pass);
}

TEST_CASE("criterion-03-fidelity-chain") {
    FidelitySweepReport rep = fidelity_sweep(20, 13);
    std::printf("criterion-03 %s: min link %.9f (>= 1/16), min Frobenius distance %.9f "
                "(>= 0.25), max trace-identity error %.3e (<= 1e-9) over %d tuples\n",
                rep.pass ? "PASS" : "FAIL", rep.min_link, rep.min_frob, rep.max_identity_error,
                rep.tuples);
    CHECK(rep.min_link >= 1.0 / 16.0 - 1e-9);
    CHECK(rep.min_frob >= 0.25 - 1e-9);
    CHECK(rep.max_identity_error <= 1e-9);
    CHECK(rep.pass);
}

TEST_CASE("criterion-04-operator-space-certificate") {
    SuperSweepReport rep = super_sweep(20, 17);
    std::printf("criterion-04 %s: min half-chain witness %.9f (>= 0.5 - 1e-9), min scan "
                "maximum %.9f (>= 0.25 - 1e-9), worst string %s, over %d tuples\n",
                rep.pass ? "PASS" : "FAIL", rep.min_halfchain, rep.min_max_value,
                rep.worst_pauli.c_str(), rep.tuples);
    CHECK(rep.min_halfchain >= 0.5 - 1e-9);
    CHECK(rep.min_max_value >= 0.25 - 1e-9);
    CHECK(rep.pass);
}

TEST_CASE("criterion-05-end-to-end") {
    EndToEndSuite suite = end_to_end_suite(19);
    bool all = suite.pass;
    for (const EndToEndVerdict& v : suite.verdicts)
        std::printf("criterion-05 case: circuit err %.6f, ||U - translation|| %.6f "
                    "(required >= 0.125 - 1e-9 whenever err <= 0.125), triangle %s, %s\n",
                    v.err_circuit, v.final_dist, v.triangle_ok ? "ok" : "VIOLATED",
                    v.pass ? "pass" : "fail");
    std::printf("criterion-05 %s: %zu pipeline cases\n", all ? "PASS" : "FAIL",
                suite.verdicts.size());
    CHECK(all);
}

TEST_CASE("criterion-06-cut-error-decay") {
    DecayReport rep = hhkl_decay_experiment(12, 0.5, {0, 1, 2, 3, 4}, 0.125, 23);
    for (const CutResult& c : rep.run.cuts)
        std::printf("criterion-06 r=%d err=%.6e certified<=%.6e+%.3f\n", c.r, c.err, c.duhamel,
                    c.slack);
    std::printf("criterion-06 %s: strictly decreasing %s, log-linear slope %.4f (< 0), "
                "R^2 %.4f (> 0.9), certificates %s\n",
                rep.pass ? "PASS" : "FAIL", rep.strictly_decreasing ? "yes" : "NO",
                rep.fit.slope, rep.fit.r2, rep.duhamel_ok ? "hold" : "VIOLATED");
    CHECK(rep.strictly_decreasing);
    CHECK(rep.fit.slope < 0.0);
    CHECK(rep.fit.r2 > 0.9);
    CHECK(rep.duhamel_ok);
    CHECK(rep.pass);
}

TEST_CASE("criterion-07-projector-equivalence") {
    ProjectorReport rep = haar_projector_experiment(6, 1000, 29);
    std::printf("criterion-07 %s: max Monte Carlo deviation %.6f over %d samples "
                "(required <= %.6f)\n",
                rep.pass ? "PASS" : "FAIL", rep.max_deviation, rep.samples, rep.tolerance);
    CHECK(rep.max_deviation <= rep.tolerance);
    CHECK(rep.pass);
}

TEST_CASE("criterion-08-generator-structure") {
    LiouvillianReport rep = liouvillian_experiment(50, 31);
    std::printf("criterion-08 %s: max disjoint-commutator norm %.3e, max generator "
                "imaginary part %.3e over %d samples each (required <= 1e-10)\n",
                rep.pass ? "PASS" : "FAIL", rep.max_identity, rep.max_reality, rep.samples);
    CHECK(rep.max_identity <= 1e-10);
    CHECK(rep.max_reality <= 1e-10);
    CHECK(rep.pass);
}

TEST_CASE("criterion-09-two-copy-swap-string") {
    SptReport rep = spt_experiment();
    std::printf("criterion-09 %s: conjugation error %.3e (<= 1e-12), depth-2 circuit error "
                "%.3e, reflection involution %s, commutes %s, circuit separable %s "
                "(must be no)\n",
                rep.pass ? "PASS" : "FAIL", rep.conjugation_error, rep.circuit_error,
                rep.involution_ok ? "yes" : "NO", rep.commutes_ok ? "yes" : "NO",
                rep.circuit_separable ? "YES" : "no");
    CHECK(rep.conjugation_error <= 1e-12);
    CHECK(rep.circuit_error <= 1e-12);
    CHECK(rep.involution_ok);
    CHECK(rep.commutes_ok);
    CHECK(!rep.circuit_separable);
    CHECK(rep.pass);
}

TEST_CASE("criterion-10-bound-envelopes") {
    const double ac = critical_alpha();
    const double ac_expected = 2.0 + 1.0 / std::sqrt(2.0);
    bool ac_ok = std::abs(ac - ac_expected) <= 1e-10;

    // branch boundaries: the threshold exponent is continuous across
    // {2 + 1/sqrt(2), 4} and the branch set is exactly {2, ac, 3, 4}
    BoundParams p;
    const double eps = 1e-9;
    auto rel_gap = [&](double a) {
        double below = time_threshold(a - 1e-12, 1000, eps, p, ThresholdSource::Main);
        double above = time_threshold(a + 1e-12, 1000, eps, p, ThresholdSource::Main);
        return std::abs(below - above) / above;
    };
    bool zoo_ok = rel_gap(ac_expected) < 1e-6 && rel_gap(4.0) < 1e-6;

    std::vector<MajorizationReport> majors;
    bool major_ok = true;
    for (double alpha : {2.5, 3.0, 4.0}) {
        LeakageScan scan = leakage_scan(12, alpha, {1.0 / 3.0, 2.0 / 3.0, 1.0}, {2, 3, 4}, 41);
        MajorizationReport rep = majorization_experiment(scan);
        major_ok = major_ok && rep.pass;
        std::printf("criterion-10 alpha=%.2f: worst operator-envelope ratio %.6f, worst "
                    "Frobenius-envelope ratio %.6f (both <= 1), Frobenius <= operator %s, %s\n",
                    alpha, rep.worst_op_ratio, rep.worst_fb_ratio, rep.fb_le_op ? "yes" : "NO",
                    rep.pass ? "pass" : "fail");
        majors.push_back(rep);
    }
    bool pass = ac_ok && zoo_ok && major_ok;
    std::printf("criterion-10 %s: critical exponent %.12f vs %.12f (|diff| <= 1e-10 %s), "
                "branch boundaries consistent %s, envelopes majorize measured leakage %s\n",
                pass ? "PASS" : "FAIL", ac, ac_expected, ac_ok ? "yes" : "NO",
                zoo_ok ? "yes" : "NO", major_ok ? "yes" : "NO");
    CHECK(ac_ok);
    CHECK(zoo_ok);
    CHECK(major_ok);
    for (const MajorizationReport& rep : majors) {
        CHECK(rep.worst_op_ratio <= 1.0 + 1e-9);
        CHECK(rep.worst_fb_ratio <= 1.0 + 1e-9);
        CHECK(rep.fb_le_op);
    }
}

TEST_CASE("criterion-11-norm-ordering") {
    NormOrderReport rep = norm_order_experiment(100, 37);
    std::printf("criterion-11 %s: max ordering violation %.3e over %d samples "
                "(required <= 1e-9)\n",
                rep.pass ? "PASS" : "FAIL", rep.max_violation, rep.samples);
    CHECK(rep.max_violation <= 1e-9);
    CHECK(rep.pass);
}
