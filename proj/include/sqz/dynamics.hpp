#pragma once

#include "sqz/core.hpp"
#include "sqz/moments.hpp"
#include "sqz/params.hpp"

namespace sqz {

struct DriveFlags {
    bool probe_on = false;
    bool microwave_on = false;
    bool measurement_on = false;  // gates the dW terms and the photocurrent
};

// Third-order cumulant closure: <opq> ~ <o><pq> + <p><oq> + <q><op> - 2<o><p><q>.
inline cx third_order_closure(cx o, cx p, cx q, cx op, cx oq, cx pq) {
    return o * pq + p * oq + q * op - 2.0 * o * p * q;
}

// Precomputed coefficients for the right-hand sides. Drives that are gated off
// enter as exact zeros, so the same equations cover every pulse segment.
struct RhsParams {
    double dc = 0.0;     // omega_c - omega_p
    double d21 = 0.0;    // omega_21 - omega_m
    double d32 = 0.0;    // omega_32 - omega_p
    double kappa = 0.0;
    double g = 0.0;
    double om = 0.0;     // microwave Rabi amplitude (0 when gated off)
    double gamma = 0.0;
    double chi = 0.0;
    double drive = 0.0;  // Omega_p sqrt(kappa_1) (0 when gated off)
    double meas = 0.0;   // sqrt(eta kappa_2) (0 when gated off)
    double n = 0.0;      // atom number
    double nm1 = 0.0;    // n - 1
};

RhsParams make_rhs_params(const PhysicalParams& p, DriveFlags flags);

// Deterministic part of d<moment>/dt in the rotating frame.
void drift(const MomentState& y, const RhsParams& p, MomentState& dy);

// Coefficient of dW for every moment (homodyne backaction). Zero when
// measurement is gated off or eta = 0.
void diffusion(const MomentState& y, const RhsParams& p, MomentState& dy);

// Lab-frame reference equations with explicit exp(+-i w_p t) and
// exp(+-i w_m t) phases. Only integrable for artificially small frequencies;
// kept to validate the rotating-frame transcription.
struct LabRhsParams {
    double wc = 0.0, w21 = 0.0, w32 = 0.0;  // bare frequencies
    double wp = 0.0, wm = 0.0;              // drive frequencies (phase factors)
    double kappa = 0.0, g = 0.0, om = 0.0, gamma = 0.0, chi = 0.0;
    double drive = 0.0, meas = 0.0, n = 0.0, nm1 = 0.0;
};

LabRhsParams make_lab_rhs_params(const PhysicalParams& p, DriveFlags flags);

void drift_lab(const MomentState& y, const LabRhsParams& p, double t, MomentState& dy);
void diffusion_lab(const MomentState& y, const LabRhsParams& p, double t, MomentState& dy);

}  // namespace sqz
