#pragma once

#include <cstdint>

#include "sqz/core.hpp"

namespace sqz {

// System parameters. All frequencies and rates are angular (rad/s); probe_amp
// is in sqrt(rad/s) so that probe_amp*sqrt(kappa_1) is a rate. Configuration
// files use ordinary frequencies in Hz and are converted once, in hz_to_rad.
struct PhysicalParams {
    std::int64_t n_atoms = 0;
    double omega_c = 0.0;    // cavity
    double omega_32 = 0.0;   // optical transition |2> <-> |3>
    double omega_21 = 0.0;   // hyperfine transition |1> <-> |2>
    double kappa = 0.0;      // total cavity loss, kappa_1 + kappa_2
    double kappa_1 = 0.0;    // input mirror
    double kappa_2 = 0.0;    // output (detection) mirror
    double g = 0.0;          // single-atom coupling
    double gamma = 0.0;      // spontaneous emission |3> -> |2>
    double chi = 0.0;        // dephasing of the |2>/|3> coherence
    double omega_p = 0.0;    // probe laser
    double probe_amp = 0.0;  // Omega_p
    double omega_m = 0.0;    // microwave drive
    double mw_amp = 0.0;     // Omega_m
    double eta = 0.0;        // detection efficiency

    double delta_c() const { return omega_c - omega_p; }
    double delta_32() const { return omega_32 - omega_p; }
    double delta_21() const { return omega_21 - omega_m; }
    // collective coupling sqrt(N/2) g: dressed-state splitting around omega_32
    double collective_g() const;

    void validate() const;  // throws ConfigError
};

inline double hz_to_rad(double f_hz) { return two_pi * f_hz; }

// Reference parameter set (rubidium ensemble in an optical cavity), with the
// mirrors split evenly and the probe sitting on the upper dressed state.
PhysicalParams default_params();

}  // namespace sqz
