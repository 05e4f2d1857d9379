// (C) Copyright 2026, shiftring contributors.
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0.

#include "shiftring/bounds.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <set>
#include <stdexcept>

namespace shiftring {

std::optional<double> lr_leakage_bound(double t, double r, double alpha, const BoundParams& p) {
    if (alpha <= 2.0) throw std::domain_error("lr_leakage_bound: requires alpha > 2");
    if (t < 0.0 || r <= 0.0) throw std::domain_error("lr_leakage_bound: requires t >= 0, r > 0");
    if (alpha > 3.0) {
        if (t > r / p.v || r - p.v * t <= 0.0) return std::nullopt;
        if (t == 0.0) return 0.0;
        return p.c_lr * t * t * std::pow(r - p.v * t, 1.0 - alpha);
    }
    // 2 < alpha <= 3
    double window = std::pow(r, alpha - 2.0 - p.epsilon) / p.v;
    if (t > window) return std::nullopt;
    double base = t / std::pow(r, alpha - 2.0 - p.epsilon);
    double expo = (alpha - 1.0) / (alpha - 2.0) - p.epsilon / 2.0;
    return p.c_lr * std::pow(base, expo);
}

double frobenius_leakage_bound(double t, double r, double alpha, const BoundParams& p) {
    if (alpha <= 1.0) throw std::domain_error("frobenius_leakage_bound: requires alpha > 1");
    if (r < 2.0) throw std::domain_error("frobenius_leakage_bound: requires r >= 2");
    double shape;
    if (alpha > 2.0)
        shape = std::log(r) / r;
    else if (alpha == 2.0)
        shape = std::log(r) * std::log(r) / r;
    else
        shape = std::pow(r, 1.0 - alpha);
    return p.c_fb * t * shape;
}

namespace {

double exact_small_alpha_exponent(double alpha, double eps) {
    double a = alpha - 1.0 - eps * (alpha / 2.0 - 1.0);
    double b = alpha - 2.0 - eps;
    double c = 2.0 * alpha - 3.0 - eps * (alpha / 2.0 - 1.0);
    return a * b / c;
}

}  // namespace

double time_threshold(double alpha, int big_l, double eps, const BoundParams& p,
                      ThresholdSource source) {
    if (big_l < 2) throw std::domain_error("time_threshold: requires L >= 2");
    if (eps <= 0.0 || eps >= 1.0) throw std::domain_error("time_threshold: eps in (0,1)");
    const double L = big_l;
    const double ac = 2.0 + 1.0 / std::sqrt(2.0);
    switch (source) {
        case ThresholdSource::Main: {
            if (alpha <= 1.0) throw std::domain_error("time_threshold: requires alpha > 1");
            if (alpha >= 4.0) return p.big_c_prime * L - p.big_c;
            if (alpha > 3.0) return p.big_c_prime * std::pow(L, (alpha - 1.0) / 3.0) - p.big_c;
            if (alpha > ac)
                return p.big_c_prime *
                       std::pow(L, (alpha - 2.0) * (alpha - 1.0) / (2.0 * alpha - 3.0) - eps);
            if (alpha >= 2.0) return p.big_c_prime * std::pow(L, 0.5 - eps) - p.big_c;
            return p.big_c_prime * std::pow(L, (alpha - 1.0) / 2.0) - p.big_c;
        }
        case ThresholdSource::OperatorRoute: {
            if (alpha <= 2.0) throw std::domain_error("time_threshold: operator route needs alpha > 2");
            if (alpha >= 4.0) return (L - p.big_c) / p.v;
            if (alpha > 3.0) return p.big_c_prime * std::pow(L, (alpha - 1.0) / 3.0) / p.v;
            return p.big_c_prime * std::pow(L, exact_small_alpha_exponent(alpha, eps)) / p.v;
        }
        case ThresholdSource::FrobeniusRoute: {
            if (alpha <= 1.0) throw std::domain_error("time_threshold: requires alpha > 1");
            if (alpha > 2.0) return p.c_fb * std::sqrt(L / std::log(L));
            if (alpha == 2.0) return p.c_fb * std::sqrt(L / (std::log(L) * std::log(L)));
            return p.c_fb * std::pow(L, (alpha - 1.0) / 2.0);
        }
    }
    throw std::logic_error("time_threshold: unreachable");
}

double critical_alpha() {
    auto h = [](double a) { return (a - 1.0) * (a - 2.0) / (2.0 * a - 3.0) - 0.5; };
    double lo = 2.0 + 1e-9, hi = 3.0 - 1e-9;
    if (h(lo) >= 0.0 || h(hi) <= 0.0) throw std::logic_error("critical_alpha: bracket lost");
    while (hi - lo > 1e-13) {
        double mid = 0.5 * (lo + hi);
        (h(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

FitReport fit_front(const std::vector<ScanPoint>& scan, FrontModel model, double alpha) {
    std::vector<ScanPoint> live;
    std::set<double> rset, tset;
    for (const auto& pt : scan)
        if (pt.value > 1e-12) {
            live.push_back(pt);
            rset.insert(pt.r);
            tset.insert(pt.t);
        }
    if (rset.size() < 3 || tset.size() < 3)
        throw std::runtime_error("fit_front: need >= 3 distinct r and t values above threshold");

    FitReport rep;
    rep.params.source = ParamSource::Fitted;

    if (model == FrontModel::ExponentialFront) {
        // log value = log(c_lr) + (mu v) t - mu r
        const int m = static_cast<int>(live.size());
        Eigen::MatrixXd a(m, 3);
        Eigen::VectorXd y(m);
        for (int i = 0; i < m; ++i) {
            a(i, 0) = 1.0;
            a(i, 1) = live[i].t;
            a(i, 2) = live[i].r;
            y(i) = std::log(live[i].value);
        }
        Eigen::Vector3d coef = (a.transpose() * a).ldlt().solve(a.transpose() * y);
        double mu = -coef(2);
        double muv = coef(1);
        if (mu <= 0.0 || muv <= 0.0) throw std::runtime_error("fit_front: front not exponential");
        rep.params.c_lr = std::exp(coef(0));
        rep.params.mu = mu;
        rep.params.v = muv / mu;
        rep.rms_log_residual = std::sqrt((a * coef - y).squaredNorm() / m);
        double worst = 0.0;
        for (const auto& pt : scan) {
            double bound = rep.params.c_lr * std::exp(mu * (rep.params.v * pt.t - pt.r));
            worst = std::max(worst, pt.value / bound);
        }
        rep.inflation = std::max(1.0, worst) * (1.0 + 1e-12);
        rep.params.c_lr *= rep.inflation;
        return rep;
    }

    // PowerLawFront: value <= c_fb * t * shape(r)
    if (alpha <= 1.0) throw std::domain_error("fit_front: power-law model requires alpha > 1");
    BoundParams unit;
    unit.c_fb = 1.0;
    double sum_log = 0.0;
    int m = 0;
    for (const auto& pt : live) {
        if (pt.t <= 0.0 || pt.r < 2.0) continue;
        sum_log += std::log(pt.value / frobenius_leakage_bound(pt.t, pt.r, alpha, unit));
        ++m;
    }
    if (m < 3) throw std::runtime_error("fit_front: too few usable points");
    double logc = sum_log / m;
    rep.params.c_fb = std::exp(logc);
    double ss = 0.0, worst = 0.0;
    for (const auto& pt : scan) {
        if (pt.t <= 0.0 || pt.r < 2.0) continue;
        double shape_t = frobenius_leakage_bound(pt.t, pt.r, alpha, unit);
        if (pt.value > 1e-12) {
            double res = std::log(pt.value / shape_t) - logc;
            ss += res * res;
        }
        worst = std::max(worst, pt.value / (rep.params.c_fb * shape_t));
    }
    rep.rms_log_residual = std::sqrt(ss / m);
    rep.inflation = std::max(1.0, worst) * (1.0 + 1e-12);
    rep.params.c_fb *= rep.inflation;
    return rep;
}

}  // namespace shiftring
