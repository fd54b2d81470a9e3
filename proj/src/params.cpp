#include "sqz/params.hpp"

#include <cmath>
#include <string>

namespace sqz {

double PhysicalParams::collective_g() const {
    return std::sqrt(0.5 * static_cast<double>(n_atoms)) * g;
}

void PhysicalParams::validate() const {
    auto fail = [](const std::string& what) { throw ConfigError("invalid parameters: " + what); };
    if (n_atoms < 1) fail("n_atoms must be >= 1");
    if (!(kappa > 0.0) || !(kappa_1 >= 0.0) || !(kappa_2 >= 0.0)) fail("cavity rates must be positive");
    if (std::abs(kappa - (kappa_1 + kappa_2)) > 1e-9 * kappa) fail("kappa != kappa_1 + kappa_2");
    if (!(g > 0.0)) fail("g must be positive");
    if (gamma < 0.0) fail("gamma must be nonnegative");
    if (chi < 0.0) fail("chi must be nonnegative");
    if (!(omega_c > 0.0) || !(omega_32 > 0.0) || !(omega_21 > 0.0)) fail("transition frequencies must be positive");
    if (!(omega_p > 0.0) || !(omega_m > 0.0)) fail("drive frequencies must be positive");
    if (probe_amp < 0.0 || mw_amp < 0.0) fail("drive amplitudes must be nonnegative");
    if (eta < 0.0 || eta > 1.0) fail("eta must lie in [0, 1]");
}

PhysicalParams default_params() {
    PhysicalParams p;
    p.n_atoms = 10000;
    p.omega_c = hz_to_rad(377e12);
    p.omega_32 = p.omega_c;
    p.omega_21 = hz_to_rad(6.8e9);
    p.kappa = hz_to_rad(11.1e6);
    p.kappa_1 = 0.5 * p.kappa;
    p.kappa_2 = 0.5 * p.kappa;
    p.g = hz_to_rad(0.253e6);
    p.gamma = hz_to_rad(5.75e6);
    p.chi = hz_to_rad(10e3);
    p.omega_m = p.omega_21;
    p.mw_amp = hz_to_rad(1e6);
    p.probe_amp = hz_to_rad(1e4);
    p.omega_p = p.omega_c + p.collective_g();
    p.eta = 0.12;
    p.validate();
    return p;
}

}  // namespace sqz
