#include <doctest.h>

#include <cmath>

#include "sqz/integrator.hpp"
#include "sqz/oracle.hpp"

using namespace sqz;

namespace {

// Weak-drive parameter set for the truncated space: the comparison probes the
// equations, not the experimental amplitudes.
PhysicalParams oracle_params(int n_atoms) {
    PhysicalParams p = default_params();
    p.n_atoms = n_atoms;
    p.probe_amp *= 0.02;
    p.omega_p = p.omega_c + p.collective_g();
    p.eta = 0.4;
    p.validate();
    return p;
}

constexpr double kPi2 = 1.5707963267948966;

}  // namespace

TEST_CASE("undriven ground state is stationary") {
    const PhysicalParams p = oracle_params(2);
    TruncatedSystem sys(p, 2, 4, 0.0, 0.0);  // all atoms in |1>, vacuum
    const MomentState d = sys.moment_drift(DriveFlags{});
    for (std::size_t i = 0; i < kNumMoments; ++i) CHECK(std::abs(d[i]) < 1e-12);
    sys.sme_step(DriveFlags{}, 1e-10, 0.0);
    CHECK(sys.trace_error() < 1e-12);
}

TEST_CASE("oracle initial moments equal the product-state constructor") {
    const PhysicalParams p = oracle_params(2);
    for (double polar : {0.0, 0.8, kPi2}) {
        TruncatedSystem sys(p, 2, 4, polar, kPi2);
        const MomentState from_oracle = sys.extract_moments();
        const MomentState direct = init_product_state(p, polar, kPi2);
        for (std::size_t i = 0; i < kNumMoments; ++i) {
            CHECK(std::abs(from_oracle[i] - direct[i]) < 1e-14);
        }
    }
}

TEST_CASE("hermiticity and trace are maintained through noisy steps") {
    PhysicalParams p = oracle_params(2);
    p.probe_amp *= 0.25;  // stay far from the Fock cutoff over the longer run
    TruncatedSystem sys(p, 2, 4, kPi2, kPi2);
    const DriveFlags flags{.probe_on = true, .microwave_on = true, .measurement_on = true};
    NoiseSource noise(3);
    const double dt = 1e-10;
    for (int i = 0; i < 500; ++i) {
        sys.sme_step(flags, dt, noise.wiener_increment(dt));
        CHECK(sys.trace_error() < 1e-10);
        CHECK(sys.hermiticity_error() < 1e-10);
    }
    CHECK(sys.top_fock_population() < 1e-6);
}

TEST_CASE("eta = 0 reduces to the deterministic master equation") {
    PhysicalParams p = oracle_params(2);
    p.eta = 0.0;
    TruncatedSystem a(p, 2, 4, kPi2, kPi2);
    TruncatedSystem b(p, 2, 4, kPi2, kPi2);
    const DriveFlags flags{.probe_on = true, .microwave_on = false, .measurement_on = true};
    NoiseSource na(1), nb(2);
    for (int i = 0; i < 200; ++i) {
        a.sme_step(flags, 1e-10, na.wiener_increment(1e-10));
        b.sme_step(flags, 1e-10, nb.wiener_increment(1e-10));
    }
    CHECK((a.rho() - b.rho()).norm() < 1e-14);
}

TEST_CASE("pair moments are the same for every atom pair") {
    const PhysicalParams p = oracle_params(3);
    TruncatedSystem sys(p, 3, 3, kPi2, kPi2);
    const DriveFlags flags{.probe_on = true, .microwave_on = true, .measurement_on = true};
    NoiseSource noise(9);
    for (int i = 0; i < 300; ++i) sys.sme_step(flags, 1e-10, noise.wiener_increment(1e-10));
    for (const auto& [ab, cd] : {std::pair{12, 12}, {12, 21}, {22, 23}, {33, 12}, {32, 23}}) {
        const cx p01 = sys.extract_pair(0, ab, 1, cd);
        const cx p10 = sys.extract_pair(1, ab, 0, cd);
        const cx p02 = sys.extract_pair(0, ab, 2, cd);
        const cx p12 = sys.extract_pair(1, ab, 2, cd);
        CHECK(std::abs(p01 - p10) < 1e-10);
        CHECK(std::abs(p01 - p02) < 1e-10);
        CHECK(std::abs(p01 - p12) < 1e-10);
    }
}

TEST_CASE("moment equations match the oracle derivatives on factorized states") {
    const PhysicalParams p = oracle_params(2);
    const DriveFlags flags{.probe_on = true, .microwave_on = true, .measurement_on = true};
    const RhsParams rhs = make_rhs_params(p, flags);
    for (double polar : {0.4, kPi2, 2.2}) {
        TruncatedSystem sys(p, 2, 4, polar, 0.9);
        const MomentState y = sys.extract_moments();
        MomentState drift_mf, diff_mf;
        drift(y, rhs, drift_mf);
        diffusion(y, rhs, diff_mf);
        const MomentState drift_ex = sys.moment_drift(flags);
        const MomentState diff_ex = sys.moment_diffusion(flags);
        for (std::size_t i = 0; i < kNumMoments; ++i) {
            CHECK(std::abs(drift_mf[i] - drift_ex[i]) <= 1e-8 * std::max(1.0, std::abs(drift_ex[i])));
            CHECK(std::abs(diff_mf[i] - diff_ex[i]) <= 1e-8 * std::max(1.0, std::abs(diff_ex[i])));
        }
    }
}

TEST_CASE("shared-noise co-evolution stays within 1e-4 of the oracle") {
    const PhysicalParams p = oracle_params(2);
    const DriveFlags flags{.probe_on = true, .microwave_on = true, .measurement_on = true};
    const RhsParams rhs = make_rhs_params(p, flags);
    TruncatedSystem sys(p, 2, 4, kPi2, kPi2);
    MomentState y = sys.extract_moments();
    NoiseSource noise(2024);
    const double dt = 1e-10;
    double worst = 0.0, worst_current = 0.0;
    for (int s = 0; s < 100; ++s) {
        const double dW = noise.wiener_increment(dt);
        worst_current = std::max(
            worst_current, std::abs(photocurrent_sample(y, p, dW, dt) - sys.photocurrent_sample(dW, dt)));
        sys.sme_step(flags, dt, dW);
        step(y, rhs, dt, dW);
        const MomentState ex = sys.extract_moments();
        for (std::size_t i = 0; i < kNumMoments; ++i) worst = std::max(worst, std::abs(y[i] - ex[i]));
    }
    CHECK(worst < 1e-4);
    CHECK(worst_current < 1e-4);
}

namespace {

// Classic RK4 over either drift field: accurate enough that the comparison
// probes the equations, not the stepper.
template <class Rhs>
MomentState rk4_integrate(MomentState y, double dt, std::size_t n, Rhs rhs) {
    MomentState k1, k2, k3, k4, tmp;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = i * dt;
        rhs(y, t, k1);
        for (std::size_t j = 0; j < kNumMoments; ++j) tmp[j] = y[j] + 0.5 * dt * k1[j];
        rhs(tmp, t + 0.5 * dt, k2);
        for (std::size_t j = 0; j < kNumMoments; ++j) tmp[j] = y[j] + 0.5 * dt * k2[j];
        rhs(tmp, t + 0.5 * dt, k3);
        for (std::size_t j = 0; j < kNumMoments; ++j) tmp[j] = y[j] + dt * k3[j];
        rhs(tmp, t + dt, k4);
        for (std::size_t j = 0; j < kNumMoments; ++j) {
            y[j] += dt / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
        }
    }
    return y;
}

}  // namespace

TEST_CASE("lab-frame equations agree with the rotating frame over 1 us") {
    // artificially small frequencies so the explicit phases are integrable
    PhysicalParams p = default_params();
    p.n_atoms = 2;
    p.omega_c = two_pi * 20e6;
    p.omega_32 = p.omega_c;
    p.omega_21 = two_pi * 10e6;
    p.omega_m = p.omega_21;
    p.omega_p = p.omega_c + p.collective_g();
    p.probe_amp *= 0.05;
    p.eta = 0.0;
    p.validate();

    const DriveFlags flags{.probe_on = true, .microwave_on = true, .measurement_on = false};
    const RhsParams rot = make_rhs_params(p, flags);
    const LabRhsParams lab = make_lab_rhs_params(p, flags);

    const MomentState init = init_spin_coherent(p, 0.3);
    const double dt = 1e-10;
    const auto n = static_cast<std::size_t>(1e-6 / dt);
    const MomentState y_rot = rk4_integrate(
        init, dt, n, [&](const MomentState& y, double, MomentState& d) { drift(y, rot, d); });
    const MomentState y_lab = rk4_integrate(
        init, dt, n, [&](const MomentState& y, double t, MomentState& d) { drift_lab(y, lab, t, d); });

    // map the lab moments into the rotating frame and compare
    const double t_final = n * dt;
    for (std::size_t k = 0; k < kNumMoments; ++k) {
        const cx phase = std::exp(
            im * ((kFrameWeights[k].n_p * p.omega_p + kFrameWeights[k].n_m * p.omega_m) * t_final));
        const cx mapped = y_lab[k] * phase;
        CHECK(std::abs(mapped - y_rot[k]) <= 1e-4 * std::max(1.0, std::abs(y_rot[k])));
    }
}

TEST_CASE("oracle rejects out-of-range truncations") {
    const PhysicalParams p = oracle_params(2);
    CHECK_THROWS_AS(TruncatedSystem(p, 4, 4, 0.0, 0.0), ConfigError);
    CHECK_THROWS_AS(TruncatedSystem(p, 2, 12, 0.0, 0.0), ConfigError);
}
