// (C) Copyright 2026, shiftring contributors.
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0.

#include <doctest.h>

#include <cmath>

#include "shiftring/bounds.hpp"

using namespace shiftring;

TEST_CASE("operator-norm envelope: hand values and windows") {
    BoundParams p;  // c_lr = v = 1, epsilon = 0.01
    CHECK(*lr_leakage_bound(0.0, 3.0, 4.0, p) == doctest::Approx(0.0));
    CHECK(*lr_leakage_bound(1.0, 3.0, 4.0, p) == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(!lr_leakage_bound(3.5, 3.0, 4.0, p).has_value());   // past the front
    CHECK(!lr_leakage_bound(3.0, 3.0, 4.0, p).has_value());   // r - vt = 0

    // 2 < alpha <= 3 branch with its own window
    const double alpha = 2.5;
    const double window = std::pow(4.0, alpha - 2.0 - p.epsilon);
    CHECK(lr_leakage_bound(window * 0.99, 4.0, alpha, p).has_value());
    CHECK(!lr_leakage_bound(window * 1.01, 4.0, alpha, p).has_value());
    const double base = 0.5 / std::pow(4.0, alpha - 2.0 - p.epsilon);
    const double expo = (alpha - 1.0) / (alpha - 2.0) - p.epsilon / 2.0;
    CHECK(*lr_leakage_bound(0.5, 4.0, alpha, p) ==
          doctest::Approx(std::pow(base, expo)).epsilon(1e-12));

    CHECK_THROWS_AS(lr_leakage_bound(1.0, 3.0, 2.0, p), std::domain_error);
    CHECK_THROWS_AS(lr_leakage_bound(-1.0, 3.0, 4.0, p), std::domain_error);
}

TEST_CASE("Frobenius envelope: hand values and branches") {
    BoundParams p;
    CHECK(frobenius_leakage_bound(2.0, 4.0, 1.5, p) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(frobenius_leakage_bound(0.0, 4.0, 3.0, p) == doctest::Approx(0.0));
    // same branch for every alpha > 2
    CHECK(frobenius_leakage_bound(1.0, 5.0, 3.0, p) ==
          doctest::Approx(frobenius_leakage_bound(1.0, 5.0, 2.5, p)));
    CHECK(frobenius_leakage_bound(1.0, 4.0, 2.0, p) ==
          doctest::Approx(std::log(4.0) * std::log(4.0) / 4.0).epsilon(1e-12));
    CHECK_THROWS_AS(frobenius_leakage_bound(1.0, 4.0, 1.0, p), std::domain_error);
    CHECK_THROWS_AS(frobenius_leakage_bound(1.0, 1.0, 3.0, p), std::domain_error);
}

TEST_CASE("time thresholds: hand values per branch") {
    BoundParams p;  // big_c = 0, big_c_prime = 1, c_fb = 1
    const double eps = 0.01;
    CHECK(time_threshold(5.0, 100, eps, p, ThresholdSource::Main) ==
          doctest::Approx(100.0));
    CHECK(time_threshold(3.5, 100, eps, p, ThresholdSource::Main) ==
          doctest::Approx(std::pow(100.0, 2.5 / 3.0)).epsilon(1e-12));
    CHECK(time_threshold(2.9, 100, eps, p, ThresholdSource::Main) ==
          doctest::Approx(std::pow(100.0, 0.9 * 1.9 / 2.8 - eps)).epsilon(1e-12));
    CHECK(time_threshold(2.2, 100, eps, p, ThresholdSource::Main) ==
          doctest::Approx(std::pow(100.0, 0.5 - eps)).epsilon(1e-12));
    CHECK(time_threshold(1.5, 100, eps, p, ThresholdSource::Main) ==
          doctest::Approx(std::pow(100.0, 0.25)).epsilon(1e-12));
    CHECK(time_threshold(1.5, 100, eps, p, ThresholdSource::FrobeniusRoute) ==
          doctest::Approx(std::pow(100.0, 0.25)).epsilon(1e-12));
    CHECK(time_threshold(3.0, 100, eps, p, ThresholdSource::FrobeniusRoute) ==
          doctest::Approx(std::sqrt(100.0 / std::log(100.0))).epsilon(1e-12));
    CHECK_THROWS_AS(time_threshold(0.5, 100, eps, p, ThresholdSource::Main), std::domain_error);
    CHECK_THROWS_AS(time_threshold(3.0, 1, eps, p, ThresholdSource::Main), std::domain_error);
}

TEST_CASE("branch boundaries behave as displayed") {
    BoundParams p;
    const double ac = 2.0 + 1.0 / std::sqrt(2.0);
    // exponent continuity at alpha = 4 and at the critical point as eps -> 0
    const double eps = 1e-9;
    const double just_below_4 = time_threshold(4.0 - 1e-12, 1000, eps, p, ThresholdSource::Main);
    const double at_4 = time_threshold(4.0, 1000, eps, p, ThresholdSource::Main);
    CHECK(std::abs(just_below_4 - at_4) / at_4 < 1e-6);
    const double below_ac = time_threshold(ac - 1e-12, 1000, eps, p, ThresholdSource::Main);
    const double above_ac = time_threshold(ac + 1e-12, 1000, eps, p, ThresholdSource::Main);
    CHECK(std::abs(below_ac - above_ac) / above_ac < 1e-6);
    // the displayed discontinuity at alpha = 2 stays (1/2 vs (alpha-1)/2 both
    // give 1/2 in exponent, but the additive constant branch changes)
    CHECK(time_threshold(2.0, 100, 0.01, p, ThresholdSource::Main) ==
          doctest::Approx(std::pow(100.0, 0.5 - 0.01)));
}

TEST_CASE("the critical exponent is two plus inverse root two") {
    const double ac = critical_alpha();
    CHECK(std::abs(ac - (2.0 + 1.0 / std::sqrt(2.0))) < 1e-10);
    CHECK(std::abs((ac - 1.0) * (ac - 2.0) / (2.0 * ac - 3.0) - 0.5) < 1e-10);
    // root uniqueness: the defining function is monotone increasing on (2,3)
    auto f = [](double a) { return (a - 1.0) * (a - 2.0) / (2.0 * a - 3.0) - 0.5; };
    double prev = f(2.01);
    for (double a = 2.05; a < 3.0; a += 0.05) {
        CHECK(f(a) > prev);
        prev = f(a);
    }
}

TEST_CASE("front fitting recovers synthetic exponential constants") {
    const double c = 0.7, mu = 1.3, v = 0.8;
    std::vector<ScanPoint> scan;
    for (double t : {0.5, 1.0, 1.5, 2.0})
        for (double r : {2.0, 3.0, 4.0, 5.0})
            scan.push_back({t, r, c * std::exp(mu * (v * t - r))});
    FitReport rep = fit_front(scan, FrontModel::ExponentialFront);
    CHECK(rep.params.source == ParamSource::Fitted);
    CHECK(std::abs(rep.params.mu - mu) / mu < 0.05);
    CHECK(std::abs(rep.params.v - v) / v < 0.05);
    CHECK(std::abs(rep.params.c_lr - c) / c < 0.05);
    for (const ScanPoint& pt : scan)
        CHECK(pt.value <=
              rep.params.c_lr * std::exp(rep.params.mu * (rep.params.v * pt.t - pt.r)) * (1 + 1e-9));
}

TEST_CASE("front fitting recovers a synthetic power-law prefactor") {
    const double alpha = 3.0, c = 0.42;
    std::vector<ScanPoint> scan;
    for (double t : {0.25, 0.5, 1.0})
        for (double r : {2.0, 3.0, 4.0})
            scan.push_back({t, r, c * t * std::log(r) / r});
    FitReport rep = fit_front(scan, FrontModel::PowerLawFront, alpha);
    CHECK(std::abs(rep.params.c_fb - c) / c < 0.01);
    for (const ScanPoint& pt : scan)
        CHECK(pt.value <= frobenius_leakage_bound(pt.t, pt.r, alpha, rep.params) * (1 + 1e-9));
}

TEST_CASE("degenerate scans are rejected") {
    std::vector<ScanPoint> zeros;
    for (double t : {0.5, 1.0, 1.5})
        for (double r : {2.0, 3.0, 4.0}) zeros.push_back({t, r, 0.0});
    CHECK_THROWS(fit_front(zeros, FrontModel::ExponentialFront));
    std::vector<ScanPoint> thin = {{0.5, 2.0, 0.1}, {1.0, 2.0, 0.2}, {1.5, 2.0, 0.3}};
    CHECK_THROWS(fit_front(thin, FrontModel::ExponentialFront));
}
