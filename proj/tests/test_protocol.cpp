#include <doctest.h>

#include <cmath>
#include <cstring>

#include "sqz/protocol.hpp"

using namespace sqz;

TEST_CASE("microwave pulse durations at the resonant Rabi rate") {
    const PhysicalParams p = default_params();
    CHECK(mw_pulse_duration(0.5 * std::numbers::pi, p) == doctest::Approx(125e-9).epsilon(1e-12));
    CHECK(mw_pulse_duration(std::numbers::pi, p) == doctest::Approx(250e-9).epsilon(1e-12));
    CHECK(mw_pulse_duration(0.0, p) == 0.0);
    PhysicalParams q = p;
    q.mw_amp = 0.0;
    CHECK_THROWS_AS(mw_pulse_duration(1.0, q), ConfigError);
}

TEST_CASE("verification schedule layout") {
    const PhysicalParams p = default_params();
    const PulseSchedule sched = make_verification_schedule(p, {});
    REQUIRE(sched.segments.size() == 7);
    int probes = 0, pulses = 0;
    for (const auto& seg : sched.segments) {
        if (seg.flags.microwave_on) {
            ++pulses;
            CHECK(!seg.flags.probe_on);        // probe gated off during pulses
            CHECK(!seg.flags.measurement_on);
        } else {
            ++probes;
            CHECK(seg.flags.probe_on);
            CHECK(seg.flags.measurement_on);
        }
    }
    CHECK(probes == 4);
    CHECK(pulses == 3);
    CHECK(sched.segments[0].duration == doctest::Approx(125e-9));
    CHECK(sched.segments[2].duration == doctest::Approx(250e-9));
}

namespace {

PhysicalParams ideal_params() {
    PhysicalParams p = default_params();
    p.gamma = 0.0;
    p.chi = 0.0;
    return p;
}

}  // namespace

TEST_CASE("a pi/2 pulse lifts the pole state onto the equator") {
    const PhysicalParams p = ideal_params();
    const PulseSchedule sched = single_segment(mw_pulse_duration(0.5 * std::numbers::pi, p),
                                               {.microwave_on = true}, "pi2");
    IntegratorOptions opts;
    opts.dt = 5e-14;  // the 1e-6 N tolerance needs the Euler amplitude error this low
    const TrajectoryRecord rec = simulate_trajectory(init_all_down(p), sched, p, opts);
    const SpinVector j = collective_spin(rec.states.back(), p.n_atoms);
    const double n = static_cast<double>(p.n_atoms);
    CHECK(std::abs(j.jz) < 1e-6 * n);
    CHECK(std::abs(std::hypot(j.jx, j.jy) - 0.5 * n) < 1e-6 * n);
}

TEST_CASE("a pi pulse flips J_z and preserves the uncertainties") {
    const PhysicalParams p = ideal_params();
    // start from a mildly z-squeezed equatorial state
    MomentState st = init_spin_coherent(p, 0.5 * std::numbers::pi);
    st[kP2222] -= 1.0 / (16.0 * (p.n_atoms - 1.0));
    st[kS22] += 3e-3;  // tilt slightly off the equator so J_z flips visibly

    const PulseSchedule sched =
        single_segment(mw_pulse_duration(std::numbers::pi, p), {.microwave_on = true}, "pi");
    IntegratorOptions opts;
    opts.dt = 1e-11;
    const TrajectoryRecord rec = simulate_trajectory(st, sched, p, opts);
    const MomentState& fin = rec.states.back();

    const SpinVector j0 = collective_spin(st, p.n_atoms);
    const SpinVector j1 = collective_spin(fin, p.n_atoms);
    CHECK(j1.jz == doctest::Approx(-j0.jz).epsilon(1e-3));

    const SpinVariances v0 = spin_variances(st, p.n_atoms);
    const SpinVariances v1 = spin_variances(fin, p.n_atoms);
    CHECK(v1.var_jz == doctest::Approx(v0.var_jz).epsilon(1e-3));
    CHECK(std::hypot(j1.jx, j1.jy) == doctest::Approx(std::hypot(j0.jx, j0.jy)).epsilon(1e-3));

    // the squeezing parameter survives the rotation
    CHECK(squeezing_parameter(fin, p.n_atoms) ==
          doctest::Approx(squeezing_parameter(st, p.n_atoms)).epsilon(0.05));
}

TEST_CASE("seed order does not leak between ensemble members") {
    const PhysicalParams p = default_params();
    const std::vector<std::uint64_t> fwd = {11, 22, 33};
    const std::vector<std::uint64_t> rev = {33, 22, 11};
    const auto a = run_squeezing(p, 0.0, 1e-6, fwd, {}, false);
    const auto b = run_squeezing(p, 0.0, 1e-6, rev, {}, true);
    REQUIRE(a.size() == 3);
    for (int i = 0; i < 3; ++i) {
        const auto& ra = a[i];
        const auto& rb = b[2 - i];
        REQUIRE(ra.states.size() == rb.states.size());
        CHECK(std::memcmp(ra.states.data(), rb.states.data(),
                          ra.states.size() * sizeof(MomentState)) == 0);
    }
}

TEST_CASE("squeezing series follows the record") {
    const PhysicalParams p = default_params();
    const auto recs = run_squeezing(p, 0.0, 1e-6, {5}, {}, false);
    const auto xi = squeezing_series(recs[0], p.n_atoms);
    REQUIRE(xi.size() == recs[0].times.size());
    CHECK(xi.front() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("verification experiment integrates four windows") {
    PhysicalParams p = default_params();
    p.n_atoms = 400;  // small, fast
    VerificationTiming timing{1e-6};
    const VerificationResult r = verification_experiment(p, timing, 17, {});
    for (double ni : r.n) CHECK(std::isfinite(ni));
    CHECK(r.jz1 == r.n[0] - r.n[1]);
    CHECK(r.jz2 == r.n[3] - r.n[2]);
}

TEST_CASE("ensemble correlation plumbs through the pairs") {
    std::vector<VerificationResult> res(3);
    for (int i = 0; i < 3; ++i) {
        res[i].jz1 = i;
        res[i].jz2 = 2.0 * i;
    }
    CHECK(ensemble_correlation(res) == doctest::Approx(1.0));
}
