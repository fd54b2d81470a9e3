#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sqz/dynamics.hpp"
#include "sqz/moments.hpp"
#include "sqz/params.hpp"

namespace sqz {

// Deterministic Gaussian noise source. Box-Muller over mt19937_64 keeps the
// stream identical across platforms and standard libraries (std::normal_distribution
// is implementation-defined).
class NoiseSource {
  public:
    explicit NoiseSource(std::uint64_t seed);
    double normal();
    // Draw from Normal(0, dt); dt must be positive.
    double wiener_increment(double dt);

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
    double uniform01();
};

// Per-trajectory seed derivation: changing the trajectory count never
// reshuffles earlier members.
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t trajectory_index);

struct Segment {
    double duration = 0.0;  // seconds
    DriveFlags flags;
    std::string label;
};

struct PulseSchedule {
    std::vector<Segment> segments;
    std::string id;

    double total_duration() const;
    void validate() const;  // positive durations, unique labels
};

PulseSchedule single_segment(double duration, DriveFlags flags, std::string label = "run");

struct IntegratorOptions {
    double dt = 0.0;          // seconds; 0 = choose automatically
    std::uint64_t seed = 0;
    std::size_t stride = 100;  // snapshot every `stride` steps
    // Stop (without error) once the second-order closure leaves its validity
    // window: single-atom coherences or pair moments beyond their operator
    // bounds. Long conditioned runs eventually cross it.
    bool stop_when_unphysical = false;
};

struct TrajectoryDiagnostics {
    double max_self_adjoint_repair = 0.0;  // largest imaginary part zeroed per step
    double max_population_violation = 0.0; // excursion of <s22>, <s33> outside [0, 1]
    bool truncated = false;                // stopped by the validity guard
};

struct TrajectoryRecord {
    std::vector<double> times;          // snapshot times (s)
    std::vector<MomentState> states;    // snapshots, same length as times
    std::vector<double> photocurrent;   // one sample per measurement-on step
    std::vector<double> photocurrent_times;
    std::uint64_t dw_seed = 0;
    std::string schedule_id;
    double dt = 0.0;
    TrajectoryDiagnostics diagnostics;
};

// Upper bound on dt from the fastest retained frequency scale (62 steps per
// period of max(kappa, sqrt(N) g, detunings, Omega_m)).
double max_stable_dt_bound(const PhysicalParams& p);

// Default dt: 1 ns at the reference scales, shrunk at large N where the pair
// coherences rotating at twice the collective coupling limit the explicit
// Euler-Maruyama step.
double default_dt(const PhysicalParams& p);

// One Euler-Maruyama step followed by conjugation-constraint repair.
// Returns the repaired imaginary magnitude.
double step(MomentState& y, const RhsParams& rhs, double dt, double dW);

// RK4 drift-only step for measurement-off segments: a first-order rotation
// error of size eps puts ~eps N^2 of spurious variance into the pair moments,
// so microwave pulses need far better than Euler accuracy.
double rk4_step(MomentState& y, const RhsParams& rhs, double dt);

// Homodyne photocurrent sample I = sqrt(eta kappa_2) Re<a> + dW/dt.
double photocurrent_sample(const MomentState& y, const PhysicalParams& p, double dW, double dt);

TrajectoryRecord simulate_trajectory(const MomentState& initial, const PulseSchedule& schedule,
                                     const PhysicalParams& params, const IntegratorOptions& opts);

}  // namespace sqz
