#pragma once

#include <vector>

#include "sqz/core.hpp"

namespace sqz {

// Squeezing-curve model xi_z^2(t) = A/(1 + k1 t) + (1 - A) exp(k2 t).
struct FitResult {
    double A = 0.0;
    double k1 = 0.0;             // squeezing rate, 1/s
    double k2 = 0.0;             // anti-squeezing rate, 1/s
    double residual_norm = 0.0;  // rms residual
    double xi_min = 0.0;
    double tau = 0.0;            // time of the minimum, s
    bool low_information = false;  // flat series, degenerate A = 1 fit
};

double squeezing_model(double t, double A, double k1, double k2);

// Least-squares fit of (A, k1, k2): coarse multi-start grid, then damped
// Gauss-Newton refinement. Needs >= 10 samples, all positive.
FitResult fit_squeezing_curve(const std::vector<double>& times, const std::vector<double>& xi_values);

// Principal branch of the Lambert W function via Halley iteration;
// |W e^W - s| < 1e-12 max(1, |s|). Domain s >= -1/e.
double lambert_w0(double s);

struct MinimumResult {
    double tau;
    double xi_min;
};

// Closed-form minimum of the fitted curve, tau = 2 W(s)/k2 - 1/k1 with
// s = [k2/(2 k1)] sqrt(A/(1-A) (k1/k2) e^{k2/k1}), cross-checked against a
// golden-section minimization. Requires 0 < A < 1, k1 > 0, k2 > 0.
MinimumResult minimal_squeezing_time(const FitResult& fit);

// Slope of the least-squares line through (log N, log y).
double fit_power_law(const std::vector<double>& n_values, const std::vector<double>& y_values);

struct OscillationFit {
    double frequency;  // angular, rad/s
    double amplitude;
    double phase;
    double offset;
};

// Dominant oscillation of a real series by periodogram scan plus local
// refinement. Throws DomainError when no oscillation rises above the noise
// floor or fewer than three periods fit in the record.
OscillationFit oscillation_frequency(const std::vector<double>& times, const std::vector<double>& series);

// Pearson correlation; throws DomainError for < 2 pairs or zero variance.
double pearson_correlation(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace sqz
