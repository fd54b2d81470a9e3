#include "sqz/protocol.hpp"

#include <cmath>

#include "sqz/analysis.hpp"
#include "sqz/ensemble.hpp"

namespace sqz {

double mw_pulse_duration(double theta, const PhysicalParams& p) {
    if (!(p.mw_amp > 0.0)) throw ConfigError("microwave pulse needs Omega_m > 0");
    return theta / (2.0 * p.mw_amp);
}

std::vector<TrajectoryRecord> run_squeezing(const PhysicalParams& params, double delta,
                                            double duration, const std::vector<std::uint64_t>& seeds,
                                            const IntegratorOptions& opts, bool parallel) {
    PhysicalParams p = params;
    p.omega_p = dressed_frequencies(params).upper + delta;
    p.validate();
    const PulseSchedule sched =
        single_segment(duration, {.probe_on = true, .microwave_on = false, .measurement_on = true},
                       "probe");
    const MomentState initial = init_spin_coherent(p, 0.5 * std::numbers::pi);
    std::vector<TrajectoryRecord> out(seeds.size());
    for_each_trajectory(seeds.size(), parallel, [&](std::size_t i) {
        IntegratorOptions o = opts;
        o.seed = seeds[i];
        out[i] = simulate_trajectory(initial, sched, p, o);
    });
    return out;
}

std::vector<double> squeezing_series(const TrajectoryRecord& rec, std::int64_t n_atoms) {
    std::vector<double> xi;
    xi.reserve(rec.states.size());
    for (const auto& st : rec.states) xi.push_back(squeezing_parameter(st, n_atoms));
    return xi;
}

PulseSchedule make_verification_schedule(const PhysicalParams& p, const VerificationTiming& timing) {
    if (!(timing.probe_duration > 0.0)) throw ConfigError("probe window duration must be positive");
    const DriveFlags mw{.probe_on = false, .microwave_on = true, .measurement_on = false};
    const DriveFlags probe{.probe_on = true, .microwave_on = false, .measurement_on = true};
    const double t_pi2 = mw_pulse_duration(0.5 * std::numbers::pi, p);
    const double t_pi = mw_pulse_duration(std::numbers::pi, p);
    PulseSchedule sched;
    sched.segments = {
        {t_pi2, mw, "pi2_prepare"},
        {timing.probe_duration, probe, "probe1"},
        {t_pi, mw, "pi_invert_a"},
        {timing.probe_duration, probe, "probe2"},
        {timing.probe_duration, probe, "probe3"},
        {t_pi, mw, "pi_invert_b"},
        {timing.probe_duration, probe, "probe4"},
    };
    sched.id = "verification";
    sched.validate();
    return sched;
}

VerificationResult verification_experiment(const PhysicalParams& params, const VerificationTiming& timing,
                                           std::uint64_t seed, const IntegratorOptions& opts) {
    const PulseSchedule sched = make_verification_schedule(params, timing);
    IntegratorOptions o = opts;
    o.seed = seed;
    const TrajectoryRecord rec = simulate_trajectory(init_all_down(params), sched, params, o);

    // Integrate the photocurrent per probe window. Segment boundaries follow
    // the integrator's step rounding.
    VerificationResult res{};
    double t0 = 0.0;
    int window = 0;
    std::size_t k = 0;
    for (const auto& seg : sched.segments) {
        const auto n_steps = static_cast<std::size_t>(std::llround(seg.duration / rec.dt));
        const double t1 = t0 + static_cast<double>(n_steps) * rec.dt;
        if (seg.flags.measurement_on) {
            double sum = 0.0;
            while (k < rec.photocurrent_times.size() && rec.photocurrent_times[k] < t1 - 0.5 * rec.dt) {
                sum += rec.photocurrent[k] * rec.dt;
                ++k;
            }
            res.n[window++] = sum;
        }
        t0 = t1;
    }
    res.jz1 = res.n[0] - res.n[1];
    res.jz2 = res.n[3] - res.n[2];
    return res;
}

std::vector<VerificationResult> verification_ensemble(const PhysicalParams& params,
                                                      const VerificationTiming& timing,
                                                      std::size_t n_trajectories, std::uint64_t base_seed,
                                                      const IntegratorOptions& opts, bool parallel) {
    std::vector<VerificationResult> out(n_trajectories);
    for_each_trajectory(n_trajectories, parallel, [&](std::size_t i) {
        out[i] = verification_experiment(params, timing, derive_seed(base_seed, i), opts);
    });
    return out;
}

double ensemble_correlation(const std::vector<VerificationResult>& results) {
    std::vector<double> x, y;
    x.reserve(results.size());
    y.reserve(results.size());
    for (const auto& r : results) {
        x.push_back(r.jz1);
        y.push_back(r.jz2);
    }
    return pearson_correlation(x, y);
}

}  // namespace sqz
