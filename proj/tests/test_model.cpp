#include <doctest.h>

#include "test_util.hpp"

#include <cmath>
#include <random>

#include "sqz/moments.hpp"
#include "sqz/observables.hpp"
#include "sqz/params.hpp"

using namespace sqz;

TEST_CASE("default parameters reproduce the reference table") {
    const PhysicalParams p = default_params();
    CHECK(p.g == hz_to_rad(0.253e6));
    CHECK(p.kappa == hz_to_rad(11.1e6));
    CHECK(p.gamma == hz_to_rad(5.75e6));
    CHECK(p.chi == hz_to_rad(10e3));
    CHECK(p.n_atoms == 10000);
    CHECK(p.eta == 0.12);
    CHECK(p.omega_c == hz_to_rad(377e12));
    CHECK(p.omega_32 == p.omega_c);
    CHECK(p.omega_21 == hz_to_rad(6.8e9));
    CHECK(p.omega_m == p.omega_21);
    CHECK(p.mw_amp == hz_to_rad(1e6));
    CHECK(p.probe_amp == hz_to_rad(1e4));

    // even mirror split, exact total
    CHECK(p.kappa_1 == p.kappa_2);
    CHECK(p.kappa_1 == hz_to_rad(5.55e6));
    CHECK(p.kappa == p.kappa_1 + p.kappa_2);

    // probe sits on the upper dressed state, sqrt(N/2) g above the cavity
    // (1e-8 relative: the offset is 10^-7 of the optical frequency, so the
    // difference loses ~7 digits to cancellation)
    CHECK(p.omega_p - p.omega_c == doctest::Approx(p.collective_g()).epsilon(1e-8));
    CHECK(p.collective_g() / two_pi == doctest::Approx(17.8898e6).epsilon(1e-4));
    CHECK(std::abs(p.collective_g() / two_pi - 17.89e6) < 0.01e6);
}

TEST_CASE("parameter validation") {
    PhysicalParams p = default_params();
    p.kappa_1 = 0.7 * p.kappa;
    CHECK_THROWS_AS(p.validate(), ConfigError);
    p = default_params();
    p.eta = 1.5;
    CHECK_THROWS_AS(p.validate(), ConfigError);
    p = default_params();
    p.n_atoms = 0;
    CHECK_THROWS_AS(p.validate(), ConfigError);
}

TEST_CASE("spin coherent state along +y") {
    const PhysicalParams p = default_params();
    const MomentState st = init_spin_coherent(p, 0.5 * std::numbers::pi);
    CHECK(st[kS22].real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(st[kS22].imag() == 0.0);
    CHECK(st[kS12].real() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(st[kS12].imag() == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(st[kP1212].real() == doctest::Approx(-0.25));
    CHECK(std::abs(st[kP1212].imag()) < 1e-15);
    CHECK(st[kP1221] == cx(0.25, 0.0));
    CHECK(st[kA] == cx(0.0, 0.0));

    const SpinVector j = collective_spin(st, p.n_atoms);
    CHECK(j.jx == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(j.jy == doctest::Approx(5000.0));
    CHECK(j.jz == doctest::Approx(0.0));

    // coherent-state normalization and symmetric transverse uncertainty
    CHECK(squeezing_parameter(st, p.n_atoms) == doctest::Approx(1.0).epsilon(1e-10));
    const SpinVariances v = spin_variances(st, p.n_atoms);
    CHECK(v.var_jz == doctest::Approx(p.n_atoms / 4.0));
    CHECK(v.var_jx == doctest::Approx(p.n_atoms / 4.0));
    CHECK(v.var_jy == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("equatorial coherent states at any azimuth are unsqueezed") {
    const PhysicalParams p = default_params();
    for (double az : {0.0, 0.7, 2.1, 4.4}) {
        const MomentState st = init_spin_coherent(p, az);
        CHECK(squeezing_parameter(st, p.n_atoms) == doctest::Approx(1.0).epsilon(1e-10));
        const SpinVariances v = spin_variances(st, p.n_atoms);
        CHECK(v.var_jz == doctest::Approx(p.n_atoms / 4.0));
    }
}

TEST_CASE("all-down initial state") {
    const PhysicalParams p = default_params();
    const MomentState st = init_all_down(p);
    const SpinVector j = collective_spin(st, p.n_atoms);
    CHECK(j.jx == 0.0);
    CHECK(j.jy == 0.0);
    CHECK(j.jz == doctest::Approx(-5000.0));
    CHECK(st[kP2222] == cx(0.0, 0.0));
    CHECK(spin_variances(st, p.n_atoms).var_jz == doctest::Approx(0.0));
    // zero transverse spin: the squeezing parameter is undefined
    CHECK_THROWS_AS(squeezing_parameter(st, p.n_atoms), DomainError);
}

TEST_CASE("moment lookup closes the stored set under conjugation") {
    const PhysicalParams p = default_params();
    MomentState st = init_spin_coherent(p, 0.5 * std::numbers::pi);
    CHECK(std::abs(lookup(st, "s21") - cx(0.0, 0.5)) < 1e-15);
    st[kA] = cx(1.0, 2.0);
    CHECK(lookup(st, "ad") == cx(1.0, -2.0));
    CHECK(std::abs(lookup(st, "s21_s21") - cx(-0.25, 0.0)) < 1e-15);
    CHECK(std::abs(lookup(st, "s11") - cx(0.5, 0.0)) < 1e-15);

    CHECK(throws_with<LookupError>([&] { lookup(st, "s14"); }, "s14"));
    CHECK_THROWS_AS(lookup(st, "bogus"), LookupError);
}

TEST_CASE("conjugation map is an involution over the full catalog") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    MomentState st;
    for (std::size_t i = 0; i < kNumMoments; ++i) st[i] = cx(u(rng), u(rng));
    st.repair_self_adjoint();  // conjugation constraints hold on physical states

    for (const std::string& sym : moment_catalog()) {
        const std::string conj_sym = conjugate_symbol(sym);
        CHECK(conjugate_symbol(conj_sym) == sym);
        const cx direct = lookup(st, sym);
        const cx conjd = lookup(st, conj_sym);
        CHECK(std::abs(conjd - std::conj(direct)) < 1e-14);
    }
}

TEST_CASE("frame weights are additive over slot constituents") {
    // independent transcription: elementary weights, summed per stored slot
    auto w_at = [](int lm) -> FrameWeight {
        switch (lm) {
            case 12: return {0, 1};
            case 21: return {0, -1};
            case 23: return {1, 0};
            case 32: return {-1, 0};
            case 13: return {1, 1};
            case 31: return {-1, -1};
            default: return {0, 0};  // populations
        }
    };
    struct Def {
        MomentIndex slot;
        int nc, na, at1, at2;
    };
    const Def defs[] = {
        {kA, 0, 1, 0, 0},       {kS12, 0, 0, 12, 0},    {kS13, 0, 0, 13, 0},
        {kS23, 0, 0, 23, 0},    {kS22, 0, 0, 22, 0},    {kS33, 0, 0, 33, 0},
        {kAdA, 1, 1, 0, 0},     {kAA, 0, 2, 0, 0},      {kAdS12, 1, 0, 12, 0},
        {kAdS13, 1, 0, 13, 0},  {kAdS23, 1, 0, 23, 0},  {kAdS22, 1, 0, 22, 0},
        {kAdS33, 1, 0, 33, 0},  {kAS12, 0, 1, 12, 0},   {kAS13, 0, 1, 13, 0},
        {kAS23, 0, 1, 23, 0},   {kP1212, 0, 0, 12, 12}, {kP2222, 0, 0, 22, 22},
        {kP2323, 0, 0, 23, 23}, {kP3333, 0, 0, 33, 33}, {kP1313, 0, 0, 13, 13},
        {kP1221, 0, 0, 12, 21}, {kP1213, 0, 0, 12, 13}, {kP2113, 0, 0, 21, 13},
        {kP3223, 0, 0, 32, 23}, {kP3213, 0, 0, 32, 13}, {kP1232, 0, 0, 12, 32},
        {kP1223, 0, 0, 12, 23}, {kP3113, 0, 0, 31, 13}, {kP2313, 0, 0, 23, 13},
        {kP2213, 0, 0, 22, 13}, {kP3313, 0, 0, 33, 13}, {kP3332, 0, 0, 33, 32},
        {kP2233, 0, 0, 22, 33}, {kP2223, 0, 0, 22, 23}, {kP2212, 0, 0, 22, 12},
        {kP3312, 0, 0, 33, 12},
    };
    for (const auto& d : defs) {
        int np = d.na - d.nc, nm = 0;
        for (int lm : {d.at1, d.at2}) {
            if (!lm) continue;
            const FrameWeight w = w_at(lm);
            np += w.n_p;
            nm += w.n_m;
        }
        CHECK(kFrameWeights[d.slot].n_p == np);
        CHECK(kFrameWeights[d.slot].n_m == nm);
    }
}

TEST_CASE("population closure stays in bounds for product states") {
    const PhysicalParams p = default_params();
    for (double polar : {0.0, 0.3, 1.2, 2.9}) {
        const MomentState st = init_product_state(p, polar, 0.25);
        const cx s11 = lookup(st, "s11");
        CHECK(s11.real() >= -1e-12);
        CHECK(s11.real() <= 1.0 + 1e-12);
    }
}
