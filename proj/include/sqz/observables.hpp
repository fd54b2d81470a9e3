#pragma once

#include <vector>

#include "sqz/integrator.hpp"
#include "sqz/moments.hpp"
#include "sqz/params.hpp"

namespace sqz {

struct SpinVector {
    double jx, jy, jz;
};

struct SpinVariances {
    double var_jx, var_jy, var_jz;          // clamped at 0 for reporting
    double raw_var_jx, raw_var_jy, raw_var_jz;
    bool closure_violation = false;          // some raw variance fell below -1e-6 N^2
};

// J_x = (N/2)(<s12> + <s21>), J_y = (iN/2)(<s12> - <s21>), J_z = (N/2)(2<s22> - 1),
// reported in the microwave rotating frame.
SpinVector collective_spin(const MomentState& st, std::int64_t n_atoms);

// <J^2> from the identical-atom pair moments; requires N >= 2.
SpinVariances spin_variances(const MomentState& st, std::int64_t n_atoms);

// xi_z^2 = N (Delta J_z)^2 / (J_x^2 + J_y^2); throws DomainError when the
// transverse spin vanishes.
double squeezing_parameter(const MomentState& st, std::int64_t n_atoms);

struct DressedFrequencies {
    double upper, lower;  // omega_32 +- sqrt(N/2) g
};

DressedFrequencies dressed_frequencies(const PhysicalParams& p);
// J_z-dependent form omega_32 +- sqrt(J_z + N/2) g; domain error if J_z < -N/2.
DressedFrequencies dressed_frequencies(const PhysicalParams& p, double jz);

struct SteadyScanOptions {
    double rel_tol = 1e-8;            // relative change of <a> per 1/kappa
    std::size_t max_steps = 1000000;  // per grid point
    double dt = 0.0;                  // 0 = default_dt
};

// Deterministic (eta = 0) steady-state cavity amplitude with the atoms held in
// the equal-superposition coherent state, for each probe frequency in the grid.
std::vector<cx> steady_scan_frequency(const PhysicalParams& params, const std::vector<double>& omega_p_grid,
                                      const SteadyScanOptions& opts = {});

// Same at fixed probe frequency, scanning the population imbalance J_z/N.
std::vector<cx> steady_scan_jz(const PhysicalParams& params, const std::vector<double>& jz_grid,
                               const SteadyScanOptions& opts = {});

}  // namespace sqz
