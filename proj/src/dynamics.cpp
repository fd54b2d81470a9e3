#include "sqz/dynamics.hpp"

#include <cmath>

namespace sqz {

namespace {

void require_finite(const MomentState& y) {
    if (!y.is_finite()) throw IntegrationError("non-finite moment state passed to the right-hand side", 0);
}

void zero_pair_slots(MomentState& dy) {
    for (std::size_t i = kP1212; i < kNumMoments; ++i) dy[i] = 0.0;
}

}  // namespace

RhsParams make_rhs_params(const PhysicalParams& p, DriveFlags flags) {
    RhsParams r;
    r.dc = p.delta_c();
    r.d21 = p.delta_21();
    r.d32 = p.delta_32();
    r.kappa = p.kappa;
    r.g = p.g;
    r.gamma = p.gamma;
    r.chi = p.chi;
    r.om = flags.microwave_on ? p.mw_amp : 0.0;
    r.drive = flags.probe_on ? p.probe_amp * std::sqrt(p.kappa_1) : 0.0;
    r.meas = flags.measurement_on ? std::sqrt(p.eta * p.kappa_2) : 0.0;
    r.n = static_cast<double>(p.n_atoms);
    r.nm1 = r.n - 1.0;
    return r;
}

LabRhsParams make_lab_rhs_params(const PhysicalParams& p, DriveFlags flags) {
    LabRhsParams r;
    r.wc = p.omega_c;
    r.w21 = p.omega_21;
    r.w32 = p.omega_32;
    r.wp = p.omega_p;
    r.wm = p.omega_m;
    r.kappa = p.kappa;
    r.g = p.g;
    r.gamma = p.gamma;
    r.chi = p.chi;
    r.om = flags.microwave_on ? p.mw_amp : 0.0;
    r.drive = flags.probe_on ? p.probe_amp * std::sqrt(p.kappa_1) : 0.0;
    r.meas = flags.measurement_on ? std::sqrt(p.eta * p.kappa_2) : 0.0;
    r.n = static_cast<double>(p.n_atoms);
    r.nm1 = r.n - 1.0;
    return r;
}

// Equation blocks below follow the slot order of MomentIndex: cavity amplitude,
// atomic coherences and populations, photon and atom-photon second moments,
// then the 21 atom-pair moments. Third-order moments on the right-hand sides
// are already closed; conjugate-only moments appear as conj(...).

void drift(const MomentState& y, const RhsParams& p, MomentState& dy) {
    require_finite(y);
    using std::conj;
    const cx a = y[kA], s12 = y[kS12], s13 = y[kS13], s23 = y[kS23], s22 = y[kS22], s33 = y[kS33];
    const cx ada = y[kAdA], aa = y[kAA], ad_s12 = y[kAdS12], ad_s13 = y[kAdS13], ad_s23 = y[kAdS23], ad_s22 = y[kAdS22];
    const cx ad_s33 = y[kAdS33], a_s12 = y[kAS12], a_s13 = y[kAS13], a_s23 = y[kAS23], p1212 = y[kP1212], p2222 = y[kP2222];
    const cx p2323 = y[kP2323], p3333 = y[kP3333], p1313 = y[kP1313], p1221 = y[kP1221], p1213 = y[kP1213], p2113 = y[kP2113];
    const cx p3223 = y[kP3223], p3213 = y[kP3213], p1232 = y[kP1232], p1223 = y[kP1223], p3113 = y[kP3113], p2313 = y[kP2313];
    const cx p2213 = y[kP2213], p3313 = y[kP3313], p3332 = y[kP3332], p2233 = y[kP2233], p2223 = y[kP2223], p2212 = y[kP2212];
    const cx p3312 = y[kP3312];
    dy[kA] =
        -im*p.drive - (0.5*p.kappa)*a - im*p.dc*a - im*p.n*p.g*s23;
    dy[kS12] =
        -im*p.om - (0.25*p.chi)*s12 + im*2.0*p.om*s22 + im*p.om*s33 - im*p.d21*s12 - im*p.g*ad_s13;
    dy[kS13] =
        -(0.25*p.chi)*s13 - (0.5*p.gamma)*s13 + im*p.om*s23 - im*p.d21*s13 - im*p.d32*s13 - im*p.g*a_s12;
    dy[kS23] =
        -p.chi*s23 - (0.5*p.gamma)*s23 + im*p.om*s13 - im*p.g*conj(ad_s22) + im*p.g*conj(ad_s33)
        - im*p.d32*s23;
    dy[kS22] =
        p.gamma*s33 - im*p.om*conj(s12) + im*p.om*s12 + im*p.g*conj(ad_s23) - im*p.g*ad_s23;
    dy[kS33] =
        -p.gamma*s33 - im*p.g*conj(ad_s23) + im*p.g*ad_s23;
    dy[kAdA] =
        -p.kappa*ada - im*p.drive*conj(a) + im*p.drive*a + im*p.n*p.g*conj(ad_s23) - im*p.n*p.g*ad_s23;
    dy[kAA] =
        -p.kappa*aa - im*2.0*p.dc*aa - im*2.0*p.drive*a - im*2.0*p.n*p.g*a_s23;
    dy[kAdS12] =
        -(0.25*p.chi)*ad_s12 - (0.5*p.kappa)*ad_s12 - im*p.om*conj(a) + im*2.0*p.om*ad_s22
        + im*p.om*ad_s33 - im*p.d21*ad_s12 + im*p.dc*ad_s12 + im*p.drive*s12
        + im*p.g*p.nm1*p1232 - im*2.0*p.g*conj(a)*ad_s13 + im*2.0*p.g*s13*conj(a)*conj(a)
        - im*p.g*conj(aa)*s13;
    dy[kAdS13] =
        -(0.25*p.chi)*ad_s13 - (0.5*p.gamma)*ad_s13 - (0.5*p.kappa)*ad_s13 + im*p.om*ad_s23
        - im*p.d21*ad_s13 - im*p.d32*ad_s13 + im*p.dc*ad_s13 + im*p.drive*s13
        + im*p.g*p.nm1*p3213 - im*p.g*conj(a)*a_s12 - im*p.g*a*ad_s12 - im*p.g*ada*s12
        + im*2.0*p.g*conj(a)*a*s12;
    dy[kAdS23] =
        -p.chi*ad_s23 - (0.5*p.gamma)*ad_s23 - (0.5*p.kappa)*ad_s23 + im*p.om*ad_s13 - im*p.d32*ad_s23
        + im*p.dc*ad_s23 + im*p.drive*s23 + im*p.g*s33 + im*p.g*p.nm1*p3223
        - im*p.g*conj(a)*conj(ad_s22) + im*p.g*conj(a)*conj(ad_s33) - im*p.g*a*ad_s22
        + im*p.g*a*ad_s33 - im*p.g*ada*s22 + im*p.g*ada*s33 + im*2.0*p.g*conj(a)*a*s22
        - im*2.0*p.g*conj(a)*a*s33;
    dy[kAdS22] =
        p.gamma*ad_s33 - (0.5*p.kappa)*ad_s22 - im*p.om*conj(a_s12) + im*p.om*ad_s12 + im*p.g*conj(s23)
        + im*p.dc*ad_s22 + im*p.drive*s22 + im*p.g*p.nm1*conj(p2223)
        + im*p.g*conj(a)*conj(ad_s23) - im*2.0*p.g*conj(a)*ad_s23 + im*2.0*p.g*s23*conj(a)*conj(a)
        + im*p.g*conj(a_s23)*a - im*p.g*conj(aa)*s23 + im*p.g*conj(s23)*ada
        - im*2.0*p.g*conj(a)*conj(s23)*a;
    dy[kAdS33] =
        -p.gamma*ad_s33 - (0.5*p.kappa)*ad_s33 + im*p.dc*ad_s33 + im*p.drive*s33 + im*p.g*p.nm1*p3332
        - im*p.g*conj(a)*conj(ad_s23) + im*2.0*p.g*conj(a)*ad_s23 - im*2.0*p.g*s23*conj(a)*conj(a)
        - im*p.g*conj(a_s23)*a + im*p.g*conj(aa)*s23 - im*p.g*conj(s23)*ada
        + im*2.0*p.g*conj(a)*conj(s23)*a;
    dy[kAS12] =
        -(0.25*p.chi)*a_s12 - (0.5*p.kappa)*a_s12 + im*2.0*p.om*conj(ad_s22) + im*p.om*conj(ad_s33)
        - im*p.om*a - im*p.d21*a_s12 - im*p.dc*a_s12 - im*p.drive*s12 - im*p.g*s13
        - im*p.g*p.nm1*p1223 - im*p.g*conj(a)*a_s13 - im*p.g*a*ad_s13 - im*p.g*ada*s13
        + im*2.0*p.g*conj(a)*a*s13;
    dy[kAS13] =
        -(0.25*p.chi)*a_s13 - (0.5*p.gamma)*a_s13 - (0.5*p.kappa)*a_s13 + im*p.om*a_s23 - im*p.d21*a_s13
        - im*p.d32*a_s13 - im*p.dc*a_s13 - im*p.drive*s13 - im*p.g*p.nm1*p2313
        - im*2.0*p.g*a*a_s12 + im*2.0*p.g*s12*a*a - im*p.g*aa*s12;
    dy[kAS23] =
        -p.chi*a_s23 - (0.5*p.gamma)*a_s23 - (0.5*p.kappa)*a_s23 + im*p.om*a_s13 - im*p.d32*a_s23
        - im*p.dc*a_s23 - im*p.drive*s23 - im*p.g*p.nm1*p2323 - im*2.0*p.g*conj(ad_s22)*a
        + im*2.0*p.g*conj(ad_s33)*a + im*2.0*p.g*s22*a*a - im*2.0*p.g*s33*a*a - im*p.g*aa*s22
        + im*p.g*aa*s33;
    dy[kP1212] =
        -(0.5*p.chi)*p1212 + im*4.0*p.om*p2212 + im*2.0*p.om*p3312 - im*2.0*p.om*s12 - im*2.0*p.d21*p1212
        - im*2.0*p.g*conj(a)*p1213 - im*2.0*p.g*ad_s12*s13 - im*2.0*p.g*ad_s13*s12
        + im*4.0*p.g*conj(a)*s12*s13;
    dy[kP2222] =
        (2.0*p.gamma)*p2233 - im*2.0*p.om*conj(p2212) + im*2.0*p.om*p2212 - im*2.0*p.g*conj(a)*p2223
        + im*2.0*p.g*conj(ad_s22)*conj(s23) + im*2.0*p.g*conj(ad_s23)*s22 + im*2.0*p.g*conj(p2223)*a
        - im*2.0*p.g*ad_s22*s23 - im*2.0*p.g*ad_s23*s22 + im*4.0*p.g*conj(a)*s22*s23
        - im*4.0*p.g*conj(s23)*a*s22;
    dy[kP2323] =
        -(2.0*p.chi)*p2323 - p.gamma*p2323 + im*2.0*p.om*p2313 - im*2.0*p.d32*p2323
        - im*2.0*p.g*conj(ad_s22)*s23 + im*2.0*p.g*conj(ad_s33)*s23 + im*2.0*p.g*conj(p3332)*a
        - im*2.0*p.g*a*p2223 - im*2.0*p.g*a_s23*s22 + im*2.0*p.g*a_s23*s33 + im*4.0*p.g*a*s22*s23
        - im*4.0*p.g*a*s23*s33;
    dy[kP3333] =
        -(2.0*p.gamma)*p3333 + im*2.0*p.g*conj(a)*conj(p3332) - im*2.0*p.g*conj(ad_s23)*s33
        - im*2.0*p.g*conj(ad_s33)*conj(s23) - im*2.0*p.g*a*p3332 + im*2.0*p.g*ad_s23*s33
        + im*2.0*p.g*ad_s33*s23 - im*4.0*p.g*conj(a)*s23*s33 + im*4.0*p.g*conj(s23)*a*s33;
    dy[kP1313] =
        -(0.5*p.chi)*p1313 - p.gamma*p1313 + im*2.0*p.om*p2313 - im*2.0*p.d21*p1313 - im*2.0*p.d32*p1313
        - im*2.0*p.g*a*p1213 - im*2.0*p.g*a_s12*s13 - im*2.0*p.g*a_s13*s12 + im*4.0*p.g*a*s12*s13;
    dy[kP1221] =
        -(0.5*p.chi)*p1221 + im*2.0*p.om*conj(p2212) + im*p.om*conj(p3312) - im*p.om*conj(s12)
        - im*2.0*p.om*p2212 - im*p.om*p3312 + im*p.om*s12 - im*p.g*conj(a)*p2113
        - im*p.g*conj(a_s12)*s13 + im*p.g*conj(ad_s13)*s12 + im*p.g*conj(p2113)*a
        - im*p.g*conj(s12)*ad_s13 + im*p.g*conj(s13)*a_s12 + im*2.0*p.g*conj(a)*conj(s12)*s13
        - im*2.0*p.g*conj(s13)*a*s12;
    dy[kP1213] =
        -(0.5*p.chi)*p1213 - (0.5*p.gamma)*p1213 + im*p.om*p1223 + im*2.0*p.om*p2213 + im*p.om*p3313
        - im*p.om*s13 - im*2.0*p.d21*p1213 - im*p.d32*p1213 - im*p.g*conj(a)*p1313
        + im*2.0*p.g*conj(a)*s13*s13 - im*p.g*a*p1212 + im*2.0*p.g*a*s12*s12 - im*2.0*p.g*a_s12*s12
        - im*2.0*p.g*ad_s13*s13;
    dy[kP2113] =
        -(0.5*p.chi)*p2113 - (0.5*p.gamma)*p2113 + im*p.om*conj(p1232) - im*2.0*p.om*p2213 - im*p.om*p3313
        + im*p.om*s13 - im*p.d32*p2113 - im*p.g*conj(ad_s12)*s12 + im*p.g*conj(ad_s13)*s13
        - im*p.g*conj(s12)*a_s12 + im*p.g*conj(s13)*a_s13 - im*p.g*a*p1221 + im*p.g*a*p3113
        + im*2.0*p.g*conj(s12)*a*s12 - im*2.0*p.g*conj(s13)*a*s13;
    dy[kP3223] =
        -(2.0*p.chi)*p3223 - p.gamma*p3223 - im*p.om*conj(p3213) + im*p.om*p3213
        - im*p.g*conj(a)*conj(p3332) + im*p.g*conj(a)*p2223 - im*p.g*conj(ad_s22)*conj(s23)
        - im*p.g*conj(ad_s23)*s22 + im*p.g*conj(ad_s23)*s33 + im*p.g*conj(ad_s33)*conj(s23)
        - im*p.g*conj(p2223)*a + im*p.g*a*p3332 + im*p.g*ad_s22*s23 + im*p.g*ad_s23*s22
        - im*p.g*ad_s23*s33 - im*p.g*ad_s33*s23 - im*2.0*p.g*conj(a)*s22*s23
        + im*2.0*p.g*conj(a)*s23*s33 + im*2.0*p.g*conj(s23)*a*s22 - im*2.0*p.g*conj(s23)*a*s33;
    dy[kP3213] =
        -(1.25*p.chi)*p3213 - p.gamma*p3213 - im*p.om*p3113 + im*p.om*p3223 - im*p.d21*p3213
        + im*p.g*conj(a)*p2213 - im*p.g*conj(a)*p3313 - im*p.g*conj(ad_s23)*s12
        - im*p.g*conj(s23)*a_s12 - im*p.g*a*p1232 + im*p.g*ad_s13*s22 - im*p.g*ad_s13*s33
        + im*p.g*ad_s22*s13 - im*p.g*ad_s33*s13 - im*2.0*p.g*conj(a)*s13*s22
        + im*2.0*p.g*conj(a)*s13*s33 + im*2.0*p.g*conj(s23)*a*s12;
    dy[kP1232] =
        -(1.25*p.chi)*p1232 - (0.5*p.gamma)*p1232 - im*p.om*conj(p2113) + im*2.0*p.om*conj(p2223)
        - im*p.om*conj(s23) + im*p.om*p3332 - im*p.d21*p1232 + im*p.d32*p1232
        + im*p.g*conj(a)*p2212 - im*p.g*conj(a)*p3213 - im*p.g*conj(a)*p3312
        - im*p.g*conj(a_s23)*s13 - im*p.g*conj(s23)*ad_s13 + im*p.g*ad_s12*s22
        - im*p.g*ad_s12*s33 + im*p.g*ad_s22*s12 - im*p.g*ad_s33*s12
        + im*2.0*p.g*conj(a)*conj(s23)*s13 - im*2.0*p.g*conj(a)*s12*s22 + im*2.0*p.g*conj(a)*s12*s33;
    dy[kP1223] =
        -(1.25*p.chi)*p1223 - (0.5*p.gamma)*p1223 + im*p.om*conj(p3332) + im*p.om*p1213
        + im*2.0*p.om*p2223 - im*p.om*s23 - im*p.d21*p1223 - im*p.d32*p1223 - im*p.g*conj(a)*p2313
        - im*p.g*conj(ad_s22)*s12 + im*p.g*conj(ad_s33)*s12 - im*p.g*a*p2212 + im*p.g*a*p3312
        - im*p.g*a_s12*s22 + im*p.g*a_s12*s33 - im*p.g*ad_s13*s23 - im*p.g*ad_s23*s13
        + im*2.0*p.g*conj(a)*s13*s23 + im*2.0*p.g*a*s12*s22 - im*2.0*p.g*a*s12*s33;
    dy[kP3113] =
        -(0.5*p.chi)*p3113 - p.gamma*p3113 + im*p.om*conj(p3213) - im*p.om*p3213 + im*p.g*conj(a)*p2113
        + im*p.g*conj(a_s12)*s13 - im*p.g*conj(ad_s13)*s12 - im*p.g*conj(p2113)*a
        + im*p.g*conj(s12)*ad_s13 - im*p.g*conj(s13)*a_s12 - im*2.0*p.g*conj(a)*conj(s12)*s13
        + im*2.0*p.g*conj(s13)*a*s12;
    dy[kP2313] =
        -(1.25*p.chi)*p2313 - p.gamma*p2313 + im*p.om*p1313 + im*p.om*p2323 - im*p.d21*p2313
        - im*2.0*p.d32*p2313 - im*p.g*conj(ad_s22)*s13 + im*p.g*conj(ad_s33)*s13 - im*p.g*a*p1223
        - im*p.g*a*p2213 + im*p.g*a*p3313 - im*p.g*a_s12*s23 - im*p.g*a_s13*s22
        + im*p.g*a_s13*s33 - im*p.g*a_s23*s12 + im*2.0*p.g*a*s12*s23 + im*2.0*p.g*a*s13*s22
        - im*2.0*p.g*a*s13*s33;
    dy[kP2213] =
        -(0.25*p.chi)*p2213 - (0.5*p.gamma)*p2213 + p.gamma*p3313 + im*p.om*p1213 - im*p.om*p2113
        + im*p.om*p2223 - im*p.d21*p2213 - im*p.d32*p2213 - im*p.g*conj(a)*p2313
        - im*p.g*conj(ad_s22)*s12 + im*p.g*conj(ad_s23)*s13 + im*p.g*conj(s23)*a_s13
        - im*p.g*a*p2212 + im*p.g*a*p3213 - im*p.g*a_s12*s22 - im*p.g*ad_s13*s23
        - im*p.g*ad_s23*s13 + im*2.0*p.g*conj(a)*s13*s23 - im*2.0*p.g*conj(s23)*a*s13
        + im*2.0*p.g*a*s12*s22;
    dy[kP3313] =
        -(0.25*p.chi)*p3313 - (1.5*p.gamma)*p3313 + im*p.om*conj(p3332) - im*p.d21*p3313
        - im*p.d32*p3313 + im*p.g*conj(a)*p2313 - im*p.g*conj(ad_s23)*s13
        - im*p.g*conj(ad_s33)*s12 - im*p.g*conj(s23)*a_s13 - im*p.g*a*p3213 - im*p.g*a*p3312
        - im*p.g*a_s12*s33 + im*p.g*ad_s13*s23 + im*p.g*ad_s23*s13 - im*2.0*p.g*conj(a)*s13*s23
        + im*2.0*p.g*conj(s23)*a*s13 + im*2.0*p.g*a*s12*s33;
    dy[kP3332] =
        -p.chi*p3332 - (1.5*p.gamma)*p3332 - im*p.om*conj(p3313) + im*p.d32*p3332 + im*p.g*conj(a)*p2233
        + im*p.g*conj(a)*p3223 - im*p.g*conj(a)*p3333 + im*2.0*p.g*conj(a)*s33*s33
        + im*p.g*conj(a_s23)*s23 - im*2.0*p.g*conj(ad_s23)*conj(s23) - im*p.g*conj(p2323)*a
        + im*p.g*conj(s23)*ad_s23 + im*2.0*p.g*a*conj(s23)*conj(s23) + im*p.g*ad_s22*s33
        + im*p.g*ad_s33*s22 - im*2.0*p.g*ad_s33*s33 - im*2.0*p.g*conj(a)*conj(s23)*s23
        - im*2.0*p.g*conj(a)*s22*s33;
    dy[kP2233] =
        -p.gamma*p2233 + p.gamma*p3333 - im*p.om*conj(p3312) + im*p.om*p3312
        - im*p.g*conj(a)*conj(p3332) + im*p.g*conj(a)*p2223 - im*p.g*conj(ad_s22)*conj(s23)
        - im*p.g*conj(ad_s23)*s22 + im*p.g*conj(ad_s23)*s33 + im*p.g*conj(ad_s33)*conj(s23)
        - im*p.g*conj(p2223)*a + im*p.g*a*p3332 + im*p.g*ad_s22*s23 + im*p.g*ad_s23*s22
        - im*p.g*ad_s23*s33 - im*p.g*ad_s33*s23 - im*2.0*p.g*conj(a)*s22*s23
        + im*2.0*p.g*conj(a)*s23*s33 + im*2.0*p.g*conj(s23)*a*s22 - im*2.0*p.g*conj(s23)*a*s33;
    dy[kP2223] =
        p.gamma*conj(p3332) - p.chi*p2223 - (0.5*p.gamma)*p2223 - im*p.om*conj(p1232) + im*p.om*p1223
        + im*p.om*p2213 - im*p.d32*p2223 - im*p.g*conj(a)*p2323 + im*2.0*p.g*conj(a)*s23*s23
        - im*2.0*p.g*conj(ad_s22)*s22 + im*p.g*conj(ad_s22)*s33 + im*p.g*conj(ad_s23)*s23
        + im*p.g*conj(ad_s33)*s22 + im*p.g*conj(s23)*a_s23 - im*p.g*a*p2222 + im*p.g*a*p2233
        + im*p.g*a*p3223 + im*2.0*p.g*a*s22*s22 - im*2.0*p.g*ad_s23*s23 - im*2.0*p.g*conj(s23)*a*s23
        - im*2.0*p.g*a*s22*s33;
    dy[kP2212] =
        -(0.25*p.chi)*p2212 + p.gamma*p3312 + im*p.om*p1212 - im*p.om*p1221 + im*2.0*p.om*p2222
        + im*p.om*p2233 - im*p.om*s22 - im*p.d21*p2212 - im*p.g*conj(a)*p1223
        - im*p.g*conj(a)*p2213 + im*p.g*conj(ad_s23)*s12 + im*p.g*conj(s23)*a_s12
        + im*p.g*a*p1232 - im*p.g*ad_s12*s23 - im*p.g*ad_s13*s22 - im*p.g*ad_s22*s13
        - im*p.g*ad_s23*s12 + im*2.0*p.g*conj(a)*s12*s23 + im*2.0*p.g*conj(a)*s13*s22
        - im*2.0*p.g*conj(s23)*a*s12;
    dy[kP3312] =
        -(0.25*p.chi)*p3312 - p.gamma*p3312 + im*2.0*p.om*p2233 + im*p.om*p3333 - im*p.om*s33
        - im*p.d21*p3312 + im*p.g*conj(a)*p1223 - im*p.g*conj(a)*p3313 - im*p.g*conj(ad_s23)*s12
        - im*p.g*conj(s23)*a_s12 - im*p.g*a*p1232 + im*p.g*ad_s12*s23 - im*p.g*ad_s13*s33
        + im*p.g*ad_s23*s12 - im*p.g*ad_s33*s13 - im*2.0*p.g*conj(a)*s12*s23
        + im*2.0*p.g*conj(a)*s13*s33 + im*2.0*p.g*conj(s23)*a*s12;
    if (p.n < 1.5) zero_pair_slots(dy);  // pair moments are meaningless at N = 1
}

void diffusion(const MomentState& y, const RhsParams& p, MomentState& dy) {
    require_finite(y);
    using std::conj;
    if (p.meas == 0.0) {
        dy = MomentState{};
        return;
    }
    const cx a = y[kA], s12 = y[kS12], s13 = y[kS13], s23 = y[kS23], s22 = y[kS22], s33 = y[kS33];
    const cx ada = y[kAdA], aa = y[kAA], ad_s12 = y[kAdS12], ad_s13 = y[kAdS13], ad_s23 = y[kAdS23], ad_s22 = y[kAdS22];
    const cx ad_s33 = y[kAdS33], a_s12 = y[kAS12], a_s13 = y[kAS13], a_s23 = y[kAS23];
    dy[kA] = p.meas*(
        -a*a + aa + ada - conj(a)*a);
    dy[kS12] = p.meas*(
        a_s12 + ad_s12 - conj(a)*s12 - a*s12);
    dy[kS13] = p.meas*(
        a_s13 + ad_s13 - conj(a)*s13 - a*s13);
    dy[kS23] = p.meas*(
        a_s23 + ad_s23 - conj(a)*s23 - a*s23);
    dy[kS22] = p.meas*(
        conj(ad_s22) + ad_s22 - conj(a)*s22 - a*s22);
    dy[kS33] = p.meas*(
        conj(ad_s33) + ad_s33 - conj(a)*s33 - a*s33);
    dy[kAdA] = p.meas*(
        -2.0*conj(a)*a*a + conj(a)*aa + conj(a)*ada - 2.0*a*conj(a)*conj(a) + conj(aa)*a + a*ada);
    dy[kAA] = p.meas*(
        -2.0*a*a*a - 2.0*conj(a)*a*a + 2.0*a*aa + 2.0*a*ada);
    dy[kAdS12] = p.meas*(
        conj(a)*a_s12 + conj(a)*ad_s12 - 2.0*s12*conj(a)*conj(a) + conj(aa)*s12 + ada*s12
        - 2.0*conj(a)*a*s12);
    dy[kAdS13] = p.meas*(
        conj(a)*a_s13 + conj(a)*ad_s13 - 2.0*s13*conj(a)*conj(a) + conj(aa)*s13 + ada*s13
        - 2.0*conj(a)*a*s13);
    dy[kAdS23] = p.meas*(
        conj(a)*a_s23 + conj(a)*ad_s23 - 2.0*s23*conj(a)*conj(a) + conj(aa)*s23 + ada*s23
        - 2.0*conj(a)*a*s23);
    dy[kAdS22] = p.meas*(
        conj(a)*conj(ad_s22) + conj(a)*ad_s22 - 2.0*s22*conj(a)*conj(a) + conj(aa)*s22 + ada*s22
        - 2.0*conj(a)*a*s22);
    dy[kAdS33] = p.meas*(
        conj(a)*conj(ad_s33) + conj(a)*ad_s33 - 2.0*s33*conj(a)*conj(a) + conj(aa)*s33 + ada*s33
        - 2.0*conj(a)*a*s33);
    dy[kAS12] = p.meas*(
        a*a_s12 + a*ad_s12 - 2.0*s12*a*a + aa*s12 + ada*s12 - 2.0*conj(a)*a*s12);
    dy[kAS13] = p.meas*(
        a*a_s13 + a*ad_s13 - 2.0*s13*a*a + aa*s13 + ada*s13 - 2.0*conj(a)*a*s13);
    dy[kAS23] = p.meas*(
        a*a_s23 + a*ad_s23 - 2.0*s23*a*a + aa*s23 + ada*s23 - 2.0*conj(a)*a*s23);
    dy[kP1212] = p.meas*(
        -2.0*conj(a)*s12*s12 - 2.0*a*s12*s12 + 2.0*a_s12*s12 + 2.0*ad_s12*s12);
    dy[kP2222] = p.meas*(
        -2.0*conj(a)*s22*s22 + 2.0*conj(ad_s22)*s22 - 2.0*a*s22*s22 + 2.0*ad_s22*s22);
    dy[kP2323] = p.meas*(
        -2.0*conj(a)*s23*s23 - 2.0*a*s23*s23 + 2.0*a_s23*s23 + 2.0*ad_s23*s23);
    dy[kP3333] = p.meas*(
        -2.0*conj(a)*s33*s33 + 2.0*conj(ad_s33)*s33 - 2.0*a*s33*s33 + 2.0*ad_s33*s33);
    dy[kP1313] = p.meas*(
        -2.0*conj(a)*s13*s13 - 2.0*a*s13*s13 + 2.0*a_s13*s13 + 2.0*ad_s13*s13);
    dy[kP1221] = p.meas*(
        conj(a_s12)*s12 + conj(ad_s12)*s12 + conj(s12)*a_s12 + conj(s12)*ad_s12
        - 2.0*conj(a)*conj(s12)*s12 - 2.0*conj(s12)*a*s12);
    dy[kP1213] = p.meas*(
        a_s12*s13 + a_s13*s12 + ad_s12*s13 + ad_s13*s12 - 2.0*conj(a)*s12*s13 - 2.0*a*s12*s13);
    dy[kP2113] = p.meas*(
        conj(a_s12)*s13 + conj(ad_s12)*s13 + conj(s12)*a_s13 + conj(s12)*ad_s13
        - 2.0*conj(a)*conj(s12)*s13 - 2.0*conj(s12)*a*s13);
    dy[kP3223] = p.meas*(
        conj(a_s23)*s23 + conj(ad_s23)*s23 + conj(s23)*a_s23 + conj(s23)*ad_s23
        - 2.0*conj(a)*conj(s23)*s23 - 2.0*conj(s23)*a*s23);
    dy[kP3213] = p.meas*(
        conj(a_s23)*s13 + conj(ad_s23)*s13 + conj(s23)*a_s13 + conj(s23)*ad_s13
        - 2.0*conj(a)*conj(s23)*s13 - 2.0*conj(s23)*a*s13);
    dy[kP1232] = p.meas*(
        conj(a_s23)*s12 + conj(ad_s23)*s12 + conj(s23)*a_s12 + conj(s23)*ad_s12
        - 2.0*conj(a)*conj(s23)*s12 - 2.0*conj(s23)*a*s12);
    dy[kP1223] = p.meas*(
        a_s12*s23 + a_s23*s12 + ad_s12*s23 + ad_s23*s12 - 2.0*conj(a)*s12*s23 - 2.0*a*s12*s23);
    dy[kP3113] = p.meas*(
        conj(a_s13)*s13 + conj(ad_s13)*s13 + conj(s13)*a_s13 + conj(s13)*ad_s13
        - 2.0*conj(a)*conj(s13)*s13 - 2.0*conj(s13)*a*s13);
    dy[kP2313] = p.meas*(
        a_s13*s23 + a_s23*s13 + ad_s13*s23 + ad_s23*s13 - 2.0*conj(a)*s13*s23 - 2.0*a*s13*s23);
    dy[kP2213] = p.meas*(
        conj(ad_s22)*s13 + a_s13*s22 + ad_s13*s22 + ad_s22*s13 - 2.0*conj(a)*s13*s22 - 2.0*a*s13*s22);
    dy[kP3313] = p.meas*(
        conj(ad_s33)*s13 + a_s13*s33 + ad_s13*s33 + ad_s33*s13 - 2.0*conj(a)*s13*s33 - 2.0*a*s13*s33);
    dy[kP3332] = p.meas*(
        conj(a_s23)*s33 + conj(ad_s23)*s33 + conj(ad_s33)*conj(s23) + conj(s23)*ad_s33
        - 2.0*conj(a)*conj(s23)*s33 - 2.0*conj(s23)*a*s33);
    dy[kP2233] = p.meas*(
        conj(ad_s22)*s33 + conj(ad_s33)*s22 + ad_s22*s33 + ad_s33*s22 - 2.0*conj(a)*s22*s33 - 2.0*a*s22*s33);
    dy[kP2223] = p.meas*(
        conj(ad_s22)*s23 + a_s23*s22 + ad_s22*s23 + ad_s23*s22 - 2.0*conj(a)*s22*s23 - 2.0*a*s22*s23);
    dy[kP2212] = p.meas*(
        conj(ad_s22)*s12 + a_s12*s22 + ad_s12*s22 + ad_s22*s12 - 2.0*conj(a)*s12*s22 - 2.0*a*s12*s22);
    dy[kP3312] = p.meas*(
        conj(ad_s33)*s12 + a_s12*s33 + ad_s12*s33 + ad_s33*s12 - 2.0*conj(a)*s12*s33 - 2.0*a*s12*s33);
    if (p.n < 1.5) zero_pair_slots(dy);
}

void drift_lab(const MomentState& y, const LabRhsParams& p, double t, MomentState& dy) {
    require_finite(y);
    using std::conj;
    const cx ep = std::polar(1.0, p.wp * t);
    const cx em = std::polar(1.0, p.wm * t);
    const cx epc = conj(ep), emc = conj(em);
    const cx a = y[kA], s12 = y[kS12], s13 = y[kS13], s23 = y[kS23], s22 = y[kS22], s33 = y[kS33];
    const cx ada = y[kAdA], aa = y[kAA], ad_s12 = y[kAdS12], ad_s13 = y[kAdS13], ad_s23 = y[kAdS23], ad_s22 = y[kAdS22];
    const cx ad_s33 = y[kAdS33], a_s12 = y[kAS12], a_s13 = y[kAS13], a_s23 = y[kAS23], p1212 = y[kP1212], p2222 = y[kP2222];
    const cx p2323 = y[kP2323], p3333 = y[kP3333], p1313 = y[kP1313], p1221 = y[kP1221], p1213 = y[kP1213], p2113 = y[kP2113];
    const cx p3223 = y[kP3223], p3213 = y[kP3213], p1232 = y[kP1232], p1223 = y[kP1223], p3113 = y[kP3113], p2313 = y[kP2313];
    const cx p2213 = y[kP2213], p3313 = y[kP3313], p3332 = y[kP3332], p2233 = y[kP2233], p2223 = y[kP2223], p2212 = y[kP2212];
    const cx p3312 = y[kP3312];
    dy[kA] =
        -im*p.drive*epc - (0.5*p.kappa)*a - im*p.wc*a - im*p.n*p.g*s23;
    dy[kS12] =
        -im*p.om*emc - (0.25*p.chi)*s12 - im*p.g*ad_s13 - im*p.w21*s12 + im*2.0*p.om*s22*emc
        + im*p.om*s33*emc;
    dy[kS13] =
        -(0.25*p.chi)*s13 - (0.5*p.gamma)*s13 - im*p.g*a_s12 - im*p.w21*s13 - im*p.w32*s13
        + im*p.om*s23*emc;
    dy[kS23] =
        -p.chi*s23 - (0.5*p.gamma)*s23 - im*p.g*conj(ad_s22) + im*p.g*conj(ad_s33) - im*p.w32*s23
        + im*p.om*s13*em;
    dy[kS22] =
        p.gamma*s33 + im*p.g*conj(ad_s23) - im*p.g*ad_s23 - im*p.om*conj(s12)*emc + im*p.om*s12*em;
    dy[kS33] =
        -p.gamma*s33 - im*p.g*conj(ad_s23) + im*p.g*ad_s23;
    dy[kAdA] =
        -p.kappa*ada - im*p.drive*conj(a)*epc + im*p.drive*a*ep + im*p.n*p.g*conj(ad_s23)
        - im*p.n*p.g*ad_s23;
    dy[kAA] =
        -p.kappa*aa - im*2.0*p.wc*aa - im*2.0*p.drive*a*epc - im*2.0*p.n*p.g*a_s23;
    dy[kAdS12] =
        -(0.25*p.chi)*ad_s12 - (0.5*p.kappa)*ad_s12 - im*p.w21*ad_s12 + im*p.wc*ad_s12
        - im*p.om*conj(a)*emc + im*2.0*p.om*ad_s22*emc + im*p.om*ad_s33*emc + im*p.drive*s12*ep
        + im*p.g*p.nm1*p1232 - im*2.0*p.g*conj(a)*ad_s13 + im*2.0*p.g*s13*conj(a)*conj(a)
        - im*p.g*conj(aa)*s13;
    dy[kAdS13] =
        -(0.25*p.chi)*ad_s13 - (0.5*p.gamma)*ad_s13 - (0.5*p.kappa)*ad_s13 - im*p.w21*ad_s13
        - im*p.w32*ad_s13 + im*p.wc*ad_s13 + im*p.om*ad_s23*emc + im*p.drive*s13*ep
        + im*p.g*p.nm1*p3213 - im*p.g*conj(a)*a_s12 - im*p.g*a*ad_s12 - im*p.g*ada*s12
        + im*2.0*p.g*conj(a)*a*s12;
    dy[kAdS23] =
        -p.chi*ad_s23 - (0.5*p.gamma)*ad_s23 - (0.5*p.kappa)*ad_s23 + im*p.g*s33 - im*p.w32*ad_s23
        + im*p.wc*ad_s23 + im*p.om*ad_s13*em + im*p.drive*s23*ep + im*p.g*p.nm1*p3223
        - im*p.g*conj(a)*conj(ad_s22) + im*p.g*conj(a)*conj(ad_s33) - im*p.g*a*ad_s22
        + im*p.g*a*ad_s33 - im*p.g*ada*s22 + im*p.g*ada*s33 + im*2.0*p.g*conj(a)*a*s22
        - im*2.0*p.g*conj(a)*a*s33;
    dy[kAdS22] =
        p.gamma*ad_s33 - (0.5*p.kappa)*ad_s22 + im*p.g*conj(s23) + im*p.wc*ad_s22
        - im*p.om*conj(a_s12)*emc + im*p.om*ad_s12*em + im*p.drive*s22*ep
        + im*p.g*p.nm1*conj(p2223) + im*p.g*conj(a)*conj(ad_s23) - im*2.0*p.g*conj(a)*ad_s23
        + im*2.0*p.g*s23*conj(a)*conj(a) + im*p.g*conj(a_s23)*a - im*p.g*conj(aa)*s23
        + im*p.g*conj(s23)*ada - im*2.0*p.g*conj(a)*conj(s23)*a;
    dy[kAdS33] =
        -p.gamma*ad_s33 - (0.5*p.kappa)*ad_s33 + im*p.wc*ad_s33 + im*p.drive*s33*ep + im*p.g*p.nm1*p3332
        - im*p.g*conj(a)*conj(ad_s23) + im*2.0*p.g*conj(a)*ad_s23 - im*2.0*p.g*s23*conj(a)*conj(a)
        - im*p.g*conj(a_s23)*a + im*p.g*conj(aa)*s23 - im*p.g*conj(s23)*ada
        + im*2.0*p.g*conj(a)*conj(s23)*a;
    dy[kAS12] =
        -(0.25*p.chi)*a_s12 - (0.5*p.kappa)*a_s12 - im*p.g*s13 - im*p.w21*a_s12 - im*p.wc*a_s12
        + im*2.0*p.om*conj(ad_s22)*emc + im*p.om*conj(ad_s33)*emc - im*p.om*a*emc
        - im*p.drive*s12*epc - im*p.g*p.nm1*p1223 - im*p.g*conj(a)*a_s13 - im*p.g*a*ad_s13
        - im*p.g*ada*s13 + im*2.0*p.g*conj(a)*a*s13;
    dy[kAS13] =
        -(0.25*p.chi)*a_s13 - (0.5*p.gamma)*a_s13 - (0.5*p.kappa)*a_s13 - im*p.w21*a_s13
        - im*p.w32*a_s13 - im*p.wc*a_s13 + im*p.om*a_s23*emc - im*p.drive*s13*epc
        - im*p.g*p.nm1*p2313 - im*2.0*p.g*a*a_s12 + im*2.0*p.g*s12*a*a - im*p.g*aa*s12;
    dy[kAS23] =
        -p.chi*a_s23 - (0.5*p.gamma)*a_s23 - (0.5*p.kappa)*a_s23 - im*p.w32*a_s23 - im*p.wc*a_s23
        + im*p.om*a_s13*em - im*p.drive*s23*epc - im*p.g*p.nm1*p2323 - im*2.0*p.g*conj(ad_s22)*a
        + im*2.0*p.g*conj(ad_s33)*a + im*2.0*p.g*s22*a*a - im*2.0*p.g*s33*a*a - im*p.g*aa*s22
        + im*p.g*aa*s33;
    dy[kP1212] =
        -(0.5*p.chi)*p1212 - im*2.0*p.w21*p1212 + im*4.0*p.om*p2212*emc + im*2.0*p.om*p3312*emc
        - im*2.0*p.om*s12*emc - im*2.0*p.g*conj(a)*p1213 - im*2.0*p.g*ad_s12*s13 - im*2.0*p.g*ad_s13*s12
        + im*4.0*p.g*conj(a)*s12*s13;
    dy[kP2222] =
        (2.0*p.gamma)*p2233 - im*2.0*p.om*conj(p2212)*emc + im*2.0*p.om*p2212*em - im*2.0*p.g*conj(a)*p2223
        + im*2.0*p.g*conj(ad_s22)*conj(s23) + im*2.0*p.g*conj(ad_s23)*s22 + im*2.0*p.g*conj(p2223)*a
        - im*2.0*p.g*ad_s22*s23 - im*2.0*p.g*ad_s23*s22 + im*4.0*p.g*conj(a)*s22*s23
        - im*4.0*p.g*conj(s23)*a*s22;
    dy[kP2323] =
        -(2.0*p.chi)*p2323 - p.gamma*p2323 - im*2.0*p.w32*p2323 + im*2.0*p.om*p2313*em
        - im*2.0*p.g*conj(ad_s22)*s23 + im*2.0*p.g*conj(ad_s33)*s23 + im*2.0*p.g*conj(p3332)*a
        - im*2.0*p.g*a*p2223 - im*2.0*p.g*a_s23*s22 + im*2.0*p.g*a_s23*s33 + im*4.0*p.g*a*s22*s23
        - im*4.0*p.g*a*s23*s33;
    dy[kP3333] =
        -(2.0*p.gamma)*p3333 + im*2.0*p.g*conj(a)*conj(p3332) - im*2.0*p.g*conj(ad_s23)*s33
        - im*2.0*p.g*conj(ad_s33)*conj(s23) - im*2.0*p.g*a*p3332 + im*2.0*p.g*ad_s23*s33
        + im*2.0*p.g*ad_s33*s23 - im*4.0*p.g*conj(a)*s23*s33 + im*4.0*p.g*conj(s23)*a*s33;
    dy[kP1313] =
        -(0.5*p.chi)*p1313 - p.gamma*p1313 - im*2.0*p.w21*p1313 - im*2.0*p.w32*p1313 + im*2.0*p.om*p2313*emc
        - im*2.0*p.g*a*p1213 - im*2.0*p.g*a_s12*s13 - im*2.0*p.g*a_s13*s12 + im*4.0*p.g*a*s12*s13;
    dy[kP1221] =
        -(0.5*p.chi)*p1221 + im*2.0*p.om*conj(p2212)*emc + im*p.om*conj(p3312)*emc - im*p.om*conj(s12)*emc
        - im*2.0*p.om*p2212*em - im*p.om*p3312*em + im*p.om*s12*em - im*p.g*conj(a)*p2113
        - im*p.g*conj(a_s12)*s13 + im*p.g*conj(ad_s13)*s12 + im*p.g*conj(p2113)*a
        - im*p.g*conj(s12)*ad_s13 + im*p.g*conj(s13)*a_s12 + im*2.0*p.g*conj(a)*conj(s12)*s13
        - im*2.0*p.g*conj(s13)*a*s12;
    dy[kP1213] =
        -(0.5*p.chi)*p1213 - (0.5*p.gamma)*p1213 - im*2.0*p.w21*p1213 - im*p.w32*p1213 + im*p.om*p1223*emc
        + im*2.0*p.om*p2213*emc + im*p.om*p3313*emc - im*p.om*s13*emc - im*p.g*conj(a)*p1313
        + im*2.0*p.g*conj(a)*s13*s13 - im*p.g*a*p1212 + im*2.0*p.g*a*s12*s12 - im*2.0*p.g*a_s12*s12
        - im*2.0*p.g*ad_s13*s13;
    dy[kP2113] =
        -(0.5*p.chi)*p2113 - (0.5*p.gamma)*p2113 - im*p.w32*p2113 + im*p.om*conj(p1232)*emc
        - im*2.0*p.om*p2213*em - im*p.om*p3313*em + im*p.om*s13*em - im*p.g*conj(ad_s12)*s12
        + im*p.g*conj(ad_s13)*s13 - im*p.g*conj(s12)*a_s12 + im*p.g*conj(s13)*a_s13
        - im*p.g*a*p1221 + im*p.g*a*p3113 + im*2.0*p.g*conj(s12)*a*s12 - im*2.0*p.g*conj(s13)*a*s13;
    dy[kP3223] =
        -(2.0*p.chi)*p3223 - p.gamma*p3223 - im*p.om*conj(p3213)*emc + im*p.om*p3213*em
        - im*p.g*conj(a)*conj(p3332) + im*p.g*conj(a)*p2223 - im*p.g*conj(ad_s22)*conj(s23)
        - im*p.g*conj(ad_s23)*s22 + im*p.g*conj(ad_s23)*s33 + im*p.g*conj(ad_s33)*conj(s23)
        - im*p.g*conj(p2223)*a + im*p.g*a*p3332 + im*p.g*ad_s22*s23 + im*p.g*ad_s23*s22
        - im*p.g*ad_s23*s33 - im*p.g*ad_s33*s23 - im*2.0*p.g*conj(a)*s22*s23
        + im*2.0*p.g*conj(a)*s23*s33 + im*2.0*p.g*conj(s23)*a*s22 - im*2.0*p.g*conj(s23)*a*s33;
    dy[kP3213] =
        -(1.25*p.chi)*p3213 - p.gamma*p3213 - im*p.w21*p3213 - im*p.om*p3113*emc + im*p.om*p3223*emc
        + im*p.g*conj(a)*p2213 - im*p.g*conj(a)*p3313 - im*p.g*conj(ad_s23)*s12
        - im*p.g*conj(s23)*a_s12 - im*p.g*a*p1232 + im*p.g*ad_s13*s22 - im*p.g*ad_s13*s33
        + im*p.g*ad_s22*s13 - im*p.g*ad_s33*s13 - im*2.0*p.g*conj(a)*s13*s22
        + im*2.0*p.g*conj(a)*s13*s33 + im*2.0*p.g*conj(s23)*a*s12;
    dy[kP1232] =
        -(1.25*p.chi)*p1232 - (0.5*p.gamma)*p1232 - im*p.w21*p1232 + im*p.w32*p1232
        - im*p.om*conj(p2113)*emc + im*2.0*p.om*conj(p2223)*emc - im*p.om*conj(s23)*emc
        + im*p.om*p3332*emc + im*p.g*conj(a)*p2212 - im*p.g*conj(a)*p3213 - im*p.g*conj(a)*p3312
        - im*p.g*conj(a_s23)*s13 - im*p.g*conj(s23)*ad_s13 + im*p.g*ad_s12*s22
        - im*p.g*ad_s12*s33 + im*p.g*ad_s22*s12 - im*p.g*ad_s33*s12
        + im*2.0*p.g*conj(a)*conj(s23)*s13 - im*2.0*p.g*conj(a)*s12*s22 + im*2.0*p.g*conj(a)*s12*s33;
    dy[kP1223] =
        -(1.25*p.chi)*p1223 - (0.5*p.gamma)*p1223 - im*p.w21*p1223 - im*p.w32*p1223
        + im*p.om*conj(p3332)*emc + im*2.0*p.om*p2223*emc - im*p.om*s23*emc + im*p.om*p1213*em
        - im*p.g*conj(a)*p2313 - im*p.g*conj(ad_s22)*s12 + im*p.g*conj(ad_s33)*s12
        - im*p.g*a*p2212 + im*p.g*a*p3312 - im*p.g*a_s12*s22 + im*p.g*a_s12*s33
        - im*p.g*ad_s13*s23 - im*p.g*ad_s23*s13 + im*2.0*p.g*conj(a)*s13*s23 + im*2.0*p.g*a*s12*s22
        - im*2.0*p.g*a*s12*s33;
    dy[kP3113] =
        -(0.5*p.chi)*p3113 - p.gamma*p3113 + im*p.om*conj(p3213)*emc - im*p.om*p3213*em
        + im*p.g*conj(a)*p2113 + im*p.g*conj(a_s12)*s13 - im*p.g*conj(ad_s13)*s12
        - im*p.g*conj(p2113)*a + im*p.g*conj(s12)*ad_s13 - im*p.g*conj(s13)*a_s12
        - im*2.0*p.g*conj(a)*conj(s12)*s13 + im*2.0*p.g*conj(s13)*a*s12;
    dy[kP2313] =
        -(1.25*p.chi)*p2313 - p.gamma*p2313 - im*p.w21*p2313 - im*2.0*p.w32*p2313 + im*p.om*p2323*emc
        + im*p.om*p1313*em - im*p.g*conj(ad_s22)*s13 + im*p.g*conj(ad_s33)*s13 - im*p.g*a*p1223
        - im*p.g*a*p2213 + im*p.g*a*p3313 - im*p.g*a_s12*s23 - im*p.g*a_s13*s22
        + im*p.g*a_s13*s33 - im*p.g*a_s23*s12 + im*2.0*p.g*a*s12*s23 + im*2.0*p.g*a*s13*s22
        - im*2.0*p.g*a*s13*s33;
    dy[kP2213] =
        -(0.25*p.chi)*p2213 - (0.5*p.gamma)*p2213 + p.gamma*p3313 - im*p.w21*p2213 - im*p.w32*p2213
        - im*p.om*p2113*emc + im*p.om*p2223*emc + im*p.om*p1213*em - im*p.g*conj(a)*p2313
        - im*p.g*conj(ad_s22)*s12 + im*p.g*conj(ad_s23)*s13 + im*p.g*conj(s23)*a_s13
        - im*p.g*a*p2212 + im*p.g*a*p3213 - im*p.g*a_s12*s22 - im*p.g*ad_s13*s23
        - im*p.g*ad_s23*s13 + im*2.0*p.g*conj(a)*s13*s23 - im*2.0*p.g*conj(s23)*a*s13
        + im*2.0*p.g*a*s12*s22;
    dy[kP3313] =
        -(0.25*p.chi)*p3313 - (1.5*p.gamma)*p3313 - im*p.w21*p3313 - im*p.w32*p3313
        + im*p.om*conj(p3332)*emc + im*p.g*conj(a)*p2313 - im*p.g*conj(ad_s23)*s13
        - im*p.g*conj(ad_s33)*s12 - im*p.g*conj(s23)*a_s13 - im*p.g*a*p3213 - im*p.g*a*p3312
        - im*p.g*a_s12*s33 + im*p.g*ad_s13*s23 + im*p.g*ad_s23*s13 - im*2.0*p.g*conj(a)*s13*s23
        + im*2.0*p.g*conj(s23)*a*s13 + im*2.0*p.g*a*s12*s33;
    dy[kP3332] =
        -p.chi*p3332 - (1.5*p.gamma)*p3332 + im*p.w32*p3332 - im*p.om*conj(p3313)*emc
        + im*p.g*conj(a)*p2233 + im*p.g*conj(a)*p3223 - im*p.g*conj(a)*p3333
        + im*2.0*p.g*conj(a)*s33*s33 + im*p.g*conj(a_s23)*s23 - im*2.0*p.g*conj(ad_s23)*conj(s23)
        - im*p.g*conj(p2323)*a + im*p.g*conj(s23)*ad_s23 + im*2.0*p.g*a*conj(s23)*conj(s23)
        + im*p.g*ad_s22*s33 + im*p.g*ad_s33*s22 - im*2.0*p.g*ad_s33*s33
        - im*2.0*p.g*conj(a)*conj(s23)*s23 - im*2.0*p.g*conj(a)*s22*s33;
    dy[kP2233] =
        -p.gamma*p2233 + p.gamma*p3333 - im*p.om*conj(p3312)*emc + im*p.om*p3312*em
        - im*p.g*conj(a)*conj(p3332) + im*p.g*conj(a)*p2223 - im*p.g*conj(ad_s22)*conj(s23)
        - im*p.g*conj(ad_s23)*s22 + im*p.g*conj(ad_s23)*s33 + im*p.g*conj(ad_s33)*conj(s23)
        - im*p.g*conj(p2223)*a + im*p.g*a*p3332 + im*p.g*ad_s22*s23 + im*p.g*ad_s23*s22
        - im*p.g*ad_s23*s33 - im*p.g*ad_s33*s23 - im*2.0*p.g*conj(a)*s22*s23
        + im*2.0*p.g*conj(a)*s23*s33 + im*2.0*p.g*conj(s23)*a*s22 - im*2.0*p.g*conj(s23)*a*s33;
    dy[kP2223] =
        p.gamma*conj(p3332) - p.chi*p2223 - (0.5*p.gamma)*p2223 - im*p.w32*p2223
        - im*p.om*conj(p1232)*emc + im*p.om*p1223*em + im*p.om*p2213*em - im*p.g*conj(a)*p2323
        + im*2.0*p.g*conj(a)*s23*s23 - im*2.0*p.g*conj(ad_s22)*s22 + im*p.g*conj(ad_s22)*s33
        + im*p.g*conj(ad_s23)*s23 + im*p.g*conj(ad_s33)*s22 + im*p.g*conj(s23)*a_s23
        - im*p.g*a*p2222 + im*p.g*a*p2233 + im*p.g*a*p3223 + im*2.0*p.g*a*s22*s22
        - im*2.0*p.g*ad_s23*s23 - im*2.0*p.g*conj(s23)*a*s23 - im*2.0*p.g*a*s22*s33;
    dy[kP2212] =
        -(0.25*p.chi)*p2212 + p.gamma*p3312 - im*p.w21*p2212 - im*p.om*p1221*emc + im*2.0*p.om*p2222*emc
        + im*p.om*p2233*emc - im*p.om*s22*emc + im*p.om*p1212*em - im*p.g*conj(a)*p1223
        - im*p.g*conj(a)*p2213 + im*p.g*conj(ad_s23)*s12 + im*p.g*conj(s23)*a_s12
        + im*p.g*a*p1232 - im*p.g*ad_s12*s23 - im*p.g*ad_s13*s22 - im*p.g*ad_s22*s13
        - im*p.g*ad_s23*s12 + im*2.0*p.g*conj(a)*s12*s23 + im*2.0*p.g*conj(a)*s13*s22
        - im*2.0*p.g*conj(s23)*a*s12;
    dy[kP3312] =
        -(0.25*p.chi)*p3312 - p.gamma*p3312 - im*p.w21*p3312 + im*2.0*p.om*p2233*emc + im*p.om*p3333*emc
        - im*p.om*s33*emc + im*p.g*conj(a)*p1223 - im*p.g*conj(a)*p3313
        - im*p.g*conj(ad_s23)*s12 - im*p.g*conj(s23)*a_s12 - im*p.g*a*p1232 + im*p.g*ad_s12*s23
        - im*p.g*ad_s13*s33 + im*p.g*ad_s23*s12 - im*p.g*ad_s33*s13 - im*2.0*p.g*conj(a)*s12*s23
        + im*2.0*p.g*conj(a)*s13*s33 + im*2.0*p.g*conj(s23)*a*s12;
    if (p.n < 1.5) zero_pair_slots(dy);
}

void diffusion_lab(const MomentState& y, const LabRhsParams& p, double t, MomentState& dy) {
    require_finite(y);
    using std::conj;
    if (p.meas == 0.0) {
        dy = MomentState{};
        return;
    }
    const cx ep = std::polar(1.0, p.wp * t);
    const cx epc = conj(ep);
    const cx a = y[kA], s12 = y[kS12], s13 = y[kS13], s23 = y[kS23], s22 = y[kS22], s33 = y[kS33];
    const cx ada = y[kAdA], aa = y[kAA], ad_s12 = y[kAdS12], ad_s13 = y[kAdS13], ad_s23 = y[kAdS23], ad_s22 = y[kAdS22];
    const cx ad_s33 = y[kAdS33], a_s12 = y[kAS12], a_s13 = y[kAS13], a_s23 = y[kAS23];
    dy[kA] = p.meas*(
        ada*epc - a*a*ep + aa*ep - conj(a)*a*epc);
    dy[kS12] = p.meas*(
        ad_s12*epc + a_s12*ep - conj(a)*s12*epc - a*s12*ep);
    dy[kS13] = p.meas*(
        ad_s13*epc + a_s13*ep - conj(a)*s13*epc - a*s13*ep);
    dy[kS23] = p.meas*(
        ad_s23*epc + a_s23*ep - conj(a)*s23*epc - a*s23*ep);
    dy[kS22] = p.meas*(
        ad_s22*epc + conj(ad_s22)*ep - conj(a)*s22*epc - a*s22*ep);
    dy[kS33] = p.meas*(
        ad_s33*epc + conj(ad_s33)*ep - conj(a)*s33*epc - a*s33*ep);
    dy[kAdA] = p.meas*(
        conj(a)*ada*epc - 2.0*a*conj(a)*conj(a)*epc + conj(aa)*a*epc - 2.0*conj(a)*a*a*ep + conj(a)*aa*ep
        + a*ada*ep);
    dy[kAA] = p.meas*(
        -2.0*a*a*a*ep - 2.0*conj(a)*a*a*epc + 2.0*a*ada*epc + 2.0*a*aa*ep);
    dy[kAdS12] = p.meas*(
        conj(a)*ad_s12*epc - 2.0*s12*conj(a)*conj(a)*epc + conj(aa)*s12*epc + conj(a)*a_s12*ep
        + ada*s12*ep - 2.0*conj(a)*a*s12*ep);
    dy[kAdS13] = p.meas*(
        conj(a)*ad_s13*epc - 2.0*s13*conj(a)*conj(a)*epc + conj(aa)*s13*epc + conj(a)*a_s13*ep
        + ada*s13*ep - 2.0*conj(a)*a*s13*ep);
    dy[kAdS23] = p.meas*(
        conj(a)*ad_s23*epc - 2.0*s23*conj(a)*conj(a)*epc + conj(aa)*s23*epc + conj(a)*a_s23*ep
        + ada*s23*ep - 2.0*conj(a)*a*s23*ep);
    dy[kAdS22] = p.meas*(
        conj(a)*ad_s22*epc - 2.0*s22*conj(a)*conj(a)*epc + conj(aa)*s22*epc + conj(a)*conj(ad_s22)*ep
        + ada*s22*ep - 2.0*conj(a)*a*s22*ep);
    dy[kAdS33] = p.meas*(
        conj(a)*ad_s33*epc - 2.0*s33*conj(a)*conj(a)*epc + conj(aa)*s33*epc + conj(a)*conj(ad_s33)*ep
        + ada*s33*ep - 2.0*conj(a)*a*s33*ep);
    dy[kAS12] = p.meas*(
        a*ad_s12*epc + ada*s12*epc + a*a_s12*ep - 2.0*s12*a*a*ep + aa*s12*ep - 2.0*conj(a)*a*s12*epc);
    dy[kAS13] = p.meas*(
        a*ad_s13*epc + ada*s13*epc + a*a_s13*ep - 2.0*s13*a*a*ep + aa*s13*ep - 2.0*conj(a)*a*s13*epc);
    dy[kAS23] = p.meas*(
        a*ad_s23*epc + ada*s23*epc + a*a_s23*ep - 2.0*s23*a*a*ep + aa*s23*ep - 2.0*conj(a)*a*s23*epc);
    dy[kP1212] = p.meas*(
        -2.0*conj(a)*s12*s12*epc + 2.0*ad_s12*s12*epc - 2.0*a*s12*s12*ep + 2.0*a_s12*s12*ep);
    dy[kP2222] = p.meas*(
        -2.0*conj(a)*s22*s22*epc + 2.0*ad_s22*s22*epc + 2.0*conj(ad_s22)*s22*ep - 2.0*a*s22*s22*ep);
    dy[kP2323] = p.meas*(
        -2.0*conj(a)*s23*s23*epc + 2.0*ad_s23*s23*epc - 2.0*a*s23*s23*ep + 2.0*a_s23*s23*ep);
    dy[kP3333] = p.meas*(
        -2.0*conj(a)*s33*s33*epc + 2.0*ad_s33*s33*epc + 2.0*conj(ad_s33)*s33*ep - 2.0*a*s33*s33*ep);
    dy[kP1313] = p.meas*(
        -2.0*conj(a)*s13*s13*epc + 2.0*ad_s13*s13*epc - 2.0*a*s13*s13*ep + 2.0*a_s13*s13*ep);
    dy[kP1221] = p.meas*(
        conj(a_s12)*s12*epc + conj(s12)*ad_s12*epc + conj(ad_s12)*s12*ep + conj(s12)*a_s12*ep
        - 2.0*conj(a)*conj(s12)*s12*epc - 2.0*conj(s12)*a*s12*ep);
    dy[kP1213] = p.meas*(
        ad_s12*s13*epc + ad_s13*s12*epc + a_s12*s13*ep + a_s13*s12*ep - 2.0*conj(a)*s12*s13*epc
        - 2.0*a*s12*s13*ep);
    dy[kP2113] = p.meas*(
        conj(a_s12)*s13*epc + conj(s12)*ad_s13*epc + conj(ad_s12)*s13*ep + conj(s12)*a_s13*ep
        - 2.0*conj(a)*conj(s12)*s13*epc - 2.0*conj(s12)*a*s13*ep);
    dy[kP3223] = p.meas*(
        conj(a_s23)*s23*epc + conj(s23)*ad_s23*epc + conj(ad_s23)*s23*ep + conj(s23)*a_s23*ep
        - 2.0*conj(a)*conj(s23)*s23*epc - 2.0*conj(s23)*a*s23*ep);
    dy[kP3213] = p.meas*(
        conj(a_s23)*s13*epc + conj(s23)*ad_s13*epc + conj(ad_s23)*s13*ep + conj(s23)*a_s13*ep
        - 2.0*conj(a)*conj(s23)*s13*epc - 2.0*conj(s23)*a*s13*ep);
    dy[kP1232] = p.meas*(
        conj(a_s23)*s12*epc + conj(s23)*ad_s12*epc + conj(ad_s23)*s12*ep + conj(s23)*a_s12*ep
        - 2.0*conj(a)*conj(s23)*s12*epc - 2.0*conj(s23)*a*s12*ep);
    dy[kP1223] = p.meas*(
        ad_s12*s23*epc + ad_s23*s12*epc + a_s12*s23*ep + a_s23*s12*ep - 2.0*conj(a)*s12*s23*epc
        - 2.0*a*s12*s23*ep);
    dy[kP3113] = p.meas*(
        conj(a_s13)*s13*epc + conj(s13)*ad_s13*epc + conj(ad_s13)*s13*ep + conj(s13)*a_s13*ep
        - 2.0*conj(a)*conj(s13)*s13*epc - 2.0*conj(s13)*a*s13*ep);
    dy[kP2313] = p.meas*(
        ad_s13*s23*epc + ad_s23*s13*epc + a_s13*s23*ep + a_s23*s13*ep - 2.0*conj(a)*s13*s23*epc
        - 2.0*a*s13*s23*ep);
    dy[kP2213] = p.meas*(
        ad_s13*s22*epc + ad_s22*s13*epc + conj(ad_s22)*s13*ep + a_s13*s22*ep - 2.0*conj(a)*s13*s22*epc
        - 2.0*a*s13*s22*ep);
    dy[kP3313] = p.meas*(
        ad_s13*s33*epc + ad_s33*s13*epc + conj(ad_s33)*s13*ep + a_s13*s33*ep - 2.0*conj(a)*s13*s33*epc
        - 2.0*a*s13*s33*ep);
    dy[kP3332] = p.meas*(
        conj(a_s23)*s33*epc + conj(s23)*ad_s33*epc + conj(ad_s23)*s33*ep + conj(ad_s33)*conj(s23)*ep
        - 2.0*conj(a)*conj(s23)*s33*epc - 2.0*conj(s23)*a*s33*ep);
    dy[kP2233] = p.meas*(
        ad_s22*s33*epc + ad_s33*s22*epc + conj(ad_s22)*s33*ep + conj(ad_s33)*s22*ep
        - 2.0*conj(a)*s22*s33*epc - 2.0*a*s22*s33*ep);
    dy[kP2223] = p.meas*(
        ad_s22*s23*epc + ad_s23*s22*epc + conj(ad_s22)*s23*ep + a_s23*s22*ep - 2.0*conj(a)*s22*s23*epc
        - 2.0*a*s22*s23*ep);
    dy[kP2212] = p.meas*(
        ad_s12*s22*epc + ad_s22*s12*epc + conj(ad_s22)*s12*ep + a_s12*s22*ep - 2.0*conj(a)*s12*s22*epc
        - 2.0*a*s12*s22*ep);
    dy[kP3312] = p.meas*(
        ad_s12*s33*epc + ad_s33*s12*epc + conj(ad_s33)*s12*ep + a_s12*s33*ep - 2.0*conj(a)*s12*s33*epc
        - 2.0*a*s12*s33*ep);
    if (p.n < 1.5) zero_pair_slots(dy);
}

}  // namespace sqz
