#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sqz/integrator.hpp"
#include "sqz/observables.hpp"
#include "sqz/params.hpp"

namespace sqz {

// Resonant microwave pulse: H_d drives the 1<->2 transition at Rabi rate
// 2 Omega_m, so a rotation by theta takes theta/(2 Omega_m).
double mw_pulse_duration(double theta, const PhysicalParams& p);

// Continuous probe + homodyne run from the +y spin coherent state, with the
// probe detuned by `delta` from the upper dressed state. One record per seed.
std::vector<TrajectoryRecord> run_squeezing(const PhysicalParams& params, double delta,
                                            double duration, const std::vector<std::uint64_t>& seeds,
                                            const IntegratorOptions& opts = {}, bool parallel = true);

// xi_z^2(t) at the record's snapshot stride.
std::vector<double> squeezing_series(const TrajectoryRecord& rec, std::int64_t n_atoms);

struct VerificationTiming {
    double probe_duration = 5e-6;  // per probe window
};

// pi/2 -> probe1 -> pi -> probe2 -> probe3 -> pi -> probe4, probe and
// measurement gated off during the microwave pulses.
PulseSchedule make_verification_schedule(const PhysicalParams& p, const VerificationTiming& timing);

struct VerificationResult {
    std::array<double, 4> n;  // integrated photocurrents per probe window
    double jz1;               // n1 - n2
    double jz2;               // n4 - n3
};

VerificationResult verification_experiment(const PhysicalParams& params, const VerificationTiming& timing,
                                           std::uint64_t seed, const IntegratorOptions& opts = {});

std::vector<VerificationResult> verification_ensemble(const PhysicalParams& params,
                                                      const VerificationTiming& timing,
                                                      std::size_t n_trajectories, std::uint64_t base_seed,
                                                      const IntegratorOptions& opts = {},
                                                      bool parallel = true);

// Pearson correlation of the (jz1, jz2) pairs.
double ensemble_correlation(const std::vector<VerificationResult>& results);

}  // namespace sqz
