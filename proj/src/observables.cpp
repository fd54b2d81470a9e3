#include "sqz/observables.hpp"

#include <cmath>

namespace sqz {

SpinVector collective_spin(const MomentState& st, std::int64_t n_atoms) {
    const double n = static_cast<double>(n_atoms);
    const cx s12 = st[kS12];
    return {n * s12.real(),                       // (N/2)(<s12> + conj) = N Re<s12>
            -n * s12.imag(),                      // (iN/2)(<s12> - conj) = -N Im<s12>
            n * (st[kS22].real() - 0.5)};
}

SpinVariances spin_variances(const MomentState& st, std::int64_t n_atoms) {
    if (n_atoms < 2) throw DomainError("spin variances need N >= 2 (pair moments undefined at N = 1)");
    const double n = static_cast<double>(n_atoms);
    const cx p12_12 = st[kP1212];
    const cx p12_21 = st[kP1221];
    // <J_{x/y}^2> = +-(N/4)[(N-1)(<s12 s12> +- <s12 s21> +- <s21 s12> + <s21 s21>) +- 1]
    const double sum_x = (p12_12 + p12_21 + std::conj(p12_21) + std::conj(p12_12)).real();
    const double sum_y = (p12_12 - p12_21 - std::conj(p12_21) + std::conj(p12_12)).real();
    const double jx2 = 0.25 * n * ((n - 1.0) * sum_x + 1.0);
    const double jy2 = -0.25 * n * ((n - 1.0) * sum_y - 1.0);
    const double jz2 = 0.25 * n * (4.0 * (n - 1.0) * (st[kP2222].real() - st[kS22].real()) + n);

    const SpinVector j = collective_spin(st, n_atoms);
    SpinVariances out;
    out.raw_var_jx = jx2 - j.jx * j.jx;
    out.raw_var_jy = jy2 - j.jy * j.jy;
    out.raw_var_jz = jz2 - j.jz * j.jz;
    const double floor = -1e-6 * n * n;
    out.closure_violation = out.raw_var_jx < floor || out.raw_var_jy < floor || out.raw_var_jz < floor;
    out.var_jx = std::max(out.raw_var_jx, 0.0);
    out.var_jy = std::max(out.raw_var_jy, 0.0);
    out.var_jz = std::max(out.raw_var_jz, 0.0);
    return out;
}

double squeezing_parameter(const MomentState& st, std::int64_t n_atoms) {
    const SpinVector j = collective_spin(st, n_atoms);
    const double j_perp2 = j.jx * j.jx + j.jy * j.jy;
    if (!(j_perp2 > 0.0)) throw DomainError("squeezing parameter undefined: zero transverse spin");
    const SpinVariances v = spin_variances(st, n_atoms);
    return static_cast<double>(n_atoms) * v.var_jz / j_perp2;
}

DressedFrequencies dressed_frequencies(const PhysicalParams& p) {
    const double split = p.collective_g();
    return {p.omega_32 + split, p.omega_32 - split};
}

DressedFrequencies dressed_frequencies(const PhysicalParams& p, double jz) {
    const double arg = jz + 0.5 * static_cast<double>(p.n_atoms);
    if (arg < 0.0) throw DomainError("dressed frequency undefined: J_z below -N/2");
    const double split = std::sqrt(arg) * p.g;
    return {p.omega_32 + split, p.omega_32 - split};
}

namespace {

// Integrates the deterministic equations until <a> settles (relative change
// below rel_tol over one cavity lifetime).
cx settle_cavity_amplitude(const PhysicalParams& params, const MomentState& initial,
                           const SteadyScanOptions& opts) {
    PhysicalParams p = params;
    p.eta = 0.0;
    const DriveFlags flags{.probe_on = true, .microwave_on = false, .measurement_on = false};
    const RhsParams rhs = make_rhs_params(p, flags);
    const double dt = opts.dt > 0.0 ? opts.dt : default_dt(p);
    const auto chunk = static_cast<std::size_t>(std::ceil(1.0 / (p.kappa * dt)));

    MomentState y = initial;
    cx prev = y[kA];
    for (std::size_t n = 0; n < opts.max_steps; n += chunk) {
        for (std::size_t k = 0; k < chunk; ++k) step(y, rhs, dt, 0.0);
        if (!y.is_finite()) throw IntegrationError("steady-state scan diverged", n);
        const cx cur = y[kA];
        if (std::abs(cur - prev) <= opts.rel_tol * std::max(std::abs(cur), 1e-300)) return cur;
        prev = cur;
    }
    throw IntegrationError("steady-state scan did not converge within the step budget", opts.max_steps);
}

}  // namespace

std::vector<cx> steady_scan_frequency(const PhysicalParams& params, const std::vector<double>& omega_p_grid,
                                      const SteadyScanOptions& opts) {
    std::vector<cx> out(omega_p_grid.size());
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(omega_p_grid.size()); ++i) {
        try {
            PhysicalParams p = params;
            p.omega_p = omega_p_grid[i];
            out[i] = settle_cavity_amplitude(p, init_spin_coherent(p, 0.5 * std::numbers::pi), opts);
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return out;
}

std::vector<cx> steady_scan_jz(const PhysicalParams& params, const std::vector<double>& jz_grid,
                               const SteadyScanOptions& opts) {
    const double n = static_cast<double>(params.n_atoms);
    std::vector<cx> out(jz_grid.size());
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(jz_grid.size()); ++i) {
        try {
            const double pop = jz_grid[i] / n + 0.5;  // <s22> for this imbalance
            if (pop < 0.0 || pop > 1.0) throw DomainError("J_z outside [-N/2, N/2] in scan grid");
            const double polar = 2.0 * std::asin(std::sqrt(pop));
            out[i] = settle_cavity_amplitude(params,
                                             init_product_state(params, polar, 0.5 * std::numbers::pi), opts);
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return out;
}

}  // namespace sqz
