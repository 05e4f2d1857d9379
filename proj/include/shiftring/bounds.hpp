// (C) Copyright 2026, shiftring contributors.
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0.

#ifndef SHIFTRING_BOUNDS_HPP
#define SHIFTRING_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "shiftring/hamiltonian.hpp"

namespace shiftring {

enum class ParamSource { Default, Fitted, User };

/// The bound constants, always explicit. Defaults are placeholders (all 1)
/// and are labeled as such; certificates use fitted values.
struct BoundParams {
    double c_lr = 1.0;        // light-cone front prefactor
    double mu = 1.0;          // exponential front steepness
    double v = 1.0;           // front velocity
    double c_fb = 1.0;        // Frobenius front prefactor
    double c_alpha = 0.0;     // interaction tail constant; 0 = use tail_constant(alpha)
    double epsilon = 0.01;    // exponent-softening parameter, in (0,1)
    double big_c = 0.0;       // additive threshold constant C
    double big_c_prime = 1.0; // multiplicative threshold constant C'
    ParamSource source = ParamSource::Default;

    double effective_c_alpha(double alpha) const {
        return c_alpha > 0.0 ? c_alpha : tail_constant(alpha);
    }
};

/// Operator-norm leakage envelope (alpha > 2). Returns nullopt outside the
/// formula's stated t-window instead of extrapolating.
std::optional<double> lr_leakage_bound(double t, double r, double alpha, const BoundParams& p);

/// Frobenius leakage envelope (alpha > 1, r >= 2): c_fb * t times
/// log(r)/r (alpha>2), log^2(r)/r (alpha=2), or r^(1-alpha) (1<alpha<2).
double frobenius_leakage_bound(double t, double r, double alpha, const BoundParams& p);

enum class ThresholdSource { Main, OperatorRoute, FrobeniusRoute };

/// The alpha-branched maximum evolution time below which the shift is
/// certifiably unrealized. Branch boundaries: {2, 2+1/sqrt(2), 3, 4} for
/// Main, {3, 4} for OperatorRoute, {2} for FrobeniusRoute.
double time_threshold(double alpha, int big_l, double eps, const BoundParams& p,
                      ThresholdSource source);

/// Root of (a-1)(a-2)/(2a-3) = 1/2 in (2,3); equals 2 + 1/sqrt(2).
double critical_alpha();

struct ScanPoint {
    double t = 0.0;
    double r = 0.0;
    double value = 0.0;
};

enum class FrontModel { ExponentialFront, PowerLawFront };

struct FitReport {
    BoundParams params;
    double rms_log_residual = 0.0;
    double inflation = 1.0;  // factor applied so the fit majorizes the data
};

/// Least-squares extraction of the front constants from a leakage scan,
/// then inflation so the fitted bound majorizes the scan pointwise.
/// PowerLawFront requires `alpha`; ExponentialFront ignores it.
FitReport fit_front(const std::vector<ScanPoint>& scan, FrontModel model, double alpha = 0.0);

}  // namespace shiftring

#endif
