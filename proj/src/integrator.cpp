#include "sqz/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace sqz {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

NoiseSource::NoiseSource(std::uint64_t seed) : engine_(seed) {}

double NoiseSource::uniform01() {
    // 53-bit mantissa in (0, 1]; never returns 0 so log() below is safe
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double NoiseSource::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u = uniform01();
    const double v = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u));
    spare_ = r * std::sin(two_pi * v);
    have_spare_ = true;
    return r * std::cos(two_pi * v);
}

double NoiseSource::wiener_increment(double dt) {
    if (!(dt > 0.0)) throw ConfigError("wiener_increment requires dt > 0");
    return std::sqrt(dt) * normal();
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t trajectory_index) {
    std::uint64_t x = base_seed;
    std::uint64_t mixed = splitmix64(x);
    x = mixed ^ (0xA5A5A5A5A5A5A5A5ull + trajectory_index);
    return splitmix64(x);
}

double PulseSchedule::total_duration() const {
    double t = 0.0;
    for (const auto& s : segments) t += s.duration;
    return t;
}

void PulseSchedule::validate() const {
    std::set<std::string> labels;
    for (const auto& s : segments) {
        if (!(s.duration > 0.0)) throw ConfigError("schedule segment '" + s.label + "' has nonpositive duration");
        if (!labels.insert(s.label).second) throw ConfigError("duplicate schedule label '" + s.label + "'");
    }
}

PulseSchedule single_segment(double duration, DriveFlags flags, std::string label) {
    PulseSchedule sched;
    sched.segments.push_back({duration, flags, std::move(label)});
    sched.id = sched.segments[0].label;
    sched.validate();
    return sched;
}

double max_stable_dt_bound(const PhysicalParams& p) {
    const double fastest = std::max({p.kappa, std::sqrt(static_cast<double>(p.n_atoms)) * p.g,
                                     std::abs(p.delta_c()), std::abs(p.delta_32()),
                                     std::abs(p.delta_21()), p.mw_amp});
    return 0.1 * two_pi / fastest;
}

double default_dt(const PhysicalParams& p) {
    // Explicit Euler-Maruyama: the pair coherences rotate at up to ~3.2x the
    // collective coupling (hybridized with the photon pair slots) while the
    // cavity and atomic decay damp them at ~(kappa+gamma)/4, so stability needs
    // omega^2 dt < 2 Gamma. The prefactor carries a ~2x margin against the
    // measured divergence edge at N = 1e4.
    const double w_fast = 3.2 * std::max({p.collective_g(), std::abs(p.delta_c()),
                                          std::abs(p.delta_32()), std::abs(p.delta_21())});
    const double damping = 0.25 * (p.kappa + p.gamma);
    const double stability = 0.5 * damping / (w_fast * w_fast);
    return std::min({1e-9, max_stable_dt_bound(p), stability});
}

double step(MomentState& y, const RhsParams& rhs, double dt, double dW) {
    MomentState dydt;
    drift(y, rhs, dydt);
    if (rhs.meas != 0.0) {
        MomentState dyw;
        diffusion(y, rhs, dyw);
        for (std::size_t i = 0; i < kNumMoments; ++i) y[i] += dt * dydt[i] + dW * dyw[i];
    } else {
        for (std::size_t i = 0; i < kNumMoments; ++i) y[i] += dt * dydt[i];
    }
    return y.repair_self_adjoint();
}

// Deterministic segments (microwave pulses, undetected probing) are plain
// ODEs; a classic RK4 step keeps rotation errors far below the 1/N^2 level at
// which the pair moments would acquire spurious variance.
double rk4_step(MomentState& y, const RhsParams& rhs, double dt) {
    MomentState k1, k2, k3, k4, tmp;
    drift(y, rhs, k1);
    for (std::size_t i = 0; i < kNumMoments; ++i) tmp[i] = y[i] + 0.5 * dt * k1[i];
    drift(tmp, rhs, k2);
    for (std::size_t i = 0; i < kNumMoments; ++i) tmp[i] = y[i] + 0.5 * dt * k2[i];
    drift(tmp, rhs, k3);
    for (std::size_t i = 0; i < kNumMoments; ++i) tmp[i] = y[i] + dt * k3[i];
    drift(tmp, rhs, k4);
    for (std::size_t i = 0; i < kNumMoments; ++i) {
        y[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return y.repair_self_adjoint();
}

double photocurrent_sample(const MomentState& y, const PhysicalParams& p, double dW, double dt) {
    return std::sqrt(p.eta * p.kappa_2) * y[kA].real() + dW / dt;
}

TrajectoryRecord simulate_trajectory(const MomentState& initial, const PulseSchedule& schedule,
                                     const PhysicalParams& params, const IntegratorOptions& opts) {
    params.validate();
    schedule.validate();
    const double dt = opts.dt > 0.0 ? opts.dt : default_dt(params);
    if (dt > max_stable_dt_bound(params)) {
        throw ConfigError("dt does not resolve the fastest retained frequency scale");
    }
    if (opts.stride == 0) throw ConfigError("snapshot stride must be positive");

    TrajectoryRecord rec;
    rec.dw_seed = opts.seed;
    rec.schedule_id = schedule.id;
    rec.dt = dt;
    NoiseSource noise(opts.seed);

    MomentState y = initial;
    std::size_t global_step = 0;
    auto snapshot = [&](double t) {
        rec.times.push_back(t);
        rec.states.push_back(y);
    };
    auto unphysical = [&] {
        return std::abs(y[kS12]) > 0.55 || std::abs(y[kP1221]) > 0.30 ||
               std::abs(y[kP1212]) > 0.30 || y[kP2222].real() < -0.02;
    };
    snapshot(0.0);

    double t = 0.0;
    for (const auto& seg : schedule.segments) {
        const RhsParams rhs = make_rhs_params(params, seg.flags);
        const auto n_steps = static_cast<std::size_t>(std::llround(seg.duration / dt));
        for (std::size_t k = 0; k < n_steps; ++k) {
            double repaired;
            if (seg.flags.measurement_on) {
                const double dW = noise.wiener_increment(dt);
                rec.photocurrent.push_back(photocurrent_sample(y, params, dW, dt));
                rec.photocurrent_times.push_back(t);
                repaired = step(y, rhs, dt, dW);
            } else {
                repaired = rk4_step(y, rhs, dt);
            }
            rec.diagnostics.max_self_adjoint_repair =
                std::max(rec.diagnostics.max_self_adjoint_repair, repaired);
            t += dt;
            ++global_step;
            if (!y.is_finite()) {
                throw IntegrationError("trajectory diverged in segment '" + seg.label + "'", global_step);
            }
            const double pop_excursion =
                std::max({-y[kS22].real(), y[kS22].real() - 1.0, -y[kS33].real(), y[kS33].real() - 1.0, 0.0});
            rec.diagnostics.max_population_violation =
                std::max(rec.diagnostics.max_population_violation, pop_excursion);
            if (global_step % opts.stride == 0) {
                if (opts.stop_when_unphysical && unphysical()) {
                    rec.diagnostics.truncated = true;  // last snapshot is the last valid state
                    return rec;
                }
                snapshot(t);
            }
        }
    }
    if (rec.times.back() != t) snapshot(t);
    return rec;
}

}  // namespace sqz
