#include "sqz/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

namespace sqz {

double squeezing_model(double t, double A, double k1, double k2) {
    return A / (1.0 + k1 * t) + (1.0 - A) * std::exp(k2 * t);
}

namespace {

double rms_residual(const std::vector<double>& t, const std::vector<double>& y,
                    double A, double k1, double k2) {
    double ss = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double r = squeezing_model(t[i], A, k1, k2) - y[i];
        ss += r * r;
    }
    return std::sqrt(ss / static_cast<double>(t.size()));
}

// Damped Gauss-Newton on (A, k1, k2), with time rescaled so the rates are
// O(1)-conditioned. Rates are capped at 20 inverse sample spacings: a faster
// squeezing knee is not resolvable by the data and only feeds a degenerate
// spike solution. Returns the rms residual.
double refine(const std::vector<double>& t, const std::vector<double>& y,
              double& A, double& k1, double& k2) {
    const double t_scale = t.back() > 0.0 ? t.back() : 1.0;
    const double dt_sample = t_scale / static_cast<double>(t.size());
    const double k_cap = 20.0 / dt_sample * t_scale;
    std::vector<double> ts(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) ts[i] = t[i] / t_scale;

    double a = A, q1 = k1 * t_scale, q2 = k2 * t_scale;
    auto rms = [&](double aa, double b1, double b2) {
        double ss = 0.0;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            const double r = aa / (1.0 + b1 * ts[i]) + (1.0 - aa) * std::exp(b2 * ts[i]) - y[i];
            ss += r * r;
        }
        return std::sqrt(ss / static_cast<double>(ts.size()));
    };
    double lambda = 1e-3;
    double best = rms(a, q1, q2);
    for (int iter = 0; iter < 300; ++iter) {
        std::array<double, 9> jtj{};
        std::array<double, 3> jtr{};
        for (std::size_t i = 0; i < ts.size(); ++i) {
            const double u = 1.0 + q1 * ts[i];
            const double e = std::exp(q2 * ts[i]);
            const double r = a / u + (1.0 - a) * e - y[i];
            const std::array<double, 3> j = {1.0 / u - e, -a * ts[i] / (u * u), (1.0 - a) * ts[i] * e};
            for (int m = 0; m < 3; ++m) {
                for (int n = 0; n < 3; ++n) jtj[m * 3 + n] += j[m] * j[n];
                jtr[m] += j[m] * r;
            }
        }
        bool stepped = false;
        for (int tries = 0; tries < 10 && !stepped; ++tries) {
            std::array<double, 9> m = jtj;
            for (int d = 0; d < 3; ++d) m[d * 3 + d] *= 1.0 + lambda;
            const double det = m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
                               m[2] * (m[3] * m[7] - m[4] * m[6]);
            if (std::abs(det) < 1e-300) break;
            auto solve = [&](int col) {
                std::array<double, 9> mm = m;
                for (int d = 0; d < 3; ++d) mm[d * 3 + col] = -jtr[d];
                return (mm[0] * (mm[4] * mm[8] - mm[5] * mm[7]) - mm[1] * (mm[3] * mm[8] - mm[5] * mm[6]) +
                        mm[2] * (mm[3] * mm[7] - mm[4] * mm[6])) / det;
            };
            const double an = std::clamp(a + solve(0), 1e-6, 1.0);
            const double q1n = std::clamp(q1 + solve(1), 0.0, k_cap);
            const double q2n = std::clamp(q2 + solve(2), 0.0, k_cap);
            const double res = rms(an, q1n, q2n);
            if (res < best * (1.0 - 1e-14)) {
                a = an;
                q1 = q1n;
                q2 = q2n;
                best = res;
                lambda = std::max(lambda * 0.3, 1e-12);
                stepped = true;
            } else {
                lambda *= 10.0;
            }
        }
        if (!stepped) break;
    }
    A = a;
    k1 = q1 / t_scale;
    k2 = q2 / t_scale;
    return best;
}

}  // namespace

FitResult fit_squeezing_curve(const std::vector<double>& times, const std::vector<double>& xi_values) {
    if (times.size() != xi_values.size()) throw DomainError("fit: times and values differ in length");
    if (times.size() < 10) throw DomainError("fit: need at least 10 samples");
    for (double v : xi_values)
        if (!(v > 0.0)) throw DomainError("fit: squeezing values must be positive");

    const double mean = std::accumulate(xi_values.begin(), xi_values.end(), 0.0) /
                        static_cast<double>(xi_values.size());
    double var = 0.0;
    for (double v : xi_values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(xi_values.size());
    FitResult out;
    if (std::sqrt(var) < 1e-9 * std::abs(mean)) {
        out.A = 1.0;
        out.low_information = true;
        out.residual_norm = rms_residual(times, xi_values, 1.0, 0.0, 0.0);
        return out;
    }

    double best = std::numeric_limits<double>::infinity();
    const std::array<double, 3> a_grid = {0.3, 0.6, 0.9};
    const std::array<double, 5> k_grid = {1e3, 1e4, 1e5, 1e6, 1e7};
    for (double A0 : a_grid) {
        for (double k10 : k_grid) {
            for (double k20 : k_grid) {
                double A = A0, k1 = k10, k2 = k20;
                const double res = refine(times, xi_values, A, k1, k2);
                if (res < best) {
                    best = res;
                    out.A = A;
                    out.k1 = k1;
                    out.k2 = k2;
                }
            }
        }
    }
    if (!std::isfinite(best)) throw DomainError("fit did not converge");
    out.residual_norm = best;
    if (out.A > 0.0 && out.A < 1.0 && out.k1 > 0.0 && out.k2 > 0.0) {
        const MinimumResult m = minimal_squeezing_time(out);
        out.tau = m.tau;
        out.xi_min = m.xi_min;
    } else {
        // monotone fit: report the endpoint value
        out.tau = times.back();
        out.xi_min = squeezing_model(times.back(), out.A, out.k1, out.k2);
    }
    return out;
}

double lambert_w0(double s) {
    const double branch = -1.0 / std::numbers::e;
    if (s < branch - 1e-15 * std::abs(branch)) throw DomainError("lambert_w0: argument below -1/e");
    if (s < branch) s = branch;
    if (s == 0.0) return 0.0;
    double w;
    if (s < -0.25) {
        const double p = std::sqrt(2.0 * (std::numbers::e * s + 1.0));
        w = -1.0 + p - p * p / 3.0 + 11.0 * p * p * p / 72.0;
    } else if (s < std::numbers::e) {
        w = std::log1p(s) * 0.7;
    } else {
        const double l = std::log(s);
        w = l - std::log(l);
    }
    for (int i = 0; i < 64; ++i) {
        const double ew = std::exp(w);
        const double f = w * ew - s;
        const double fp = ew * (1.0 + w);
        const double fpp = ew * (2.0 + w);
        const double dw = f / (fp - 0.5 * f * fpp / fp);
        w -= dw;
        if (std::abs(dw) < 1e-15 * std::max(1.0, std::abs(w))) break;
    }
    return w;
}

namespace {

// Golden-section minimum of f on [lo, hi].
template <class F>
double golden_min(F f, double lo, double hi, double tol) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - phi * (b - a), d = a + phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol * std::max(1.0, std::abs(a) + std::abs(b))) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

MinimumResult minimal_squeezing_time(const FitResult& fit) {
    if (!(fit.A > 0.0 && fit.A < 1.0) || !(fit.k1 > 0.0) || !(fit.k2 > 0.0)) {
        throw DomainError("no interior minimum: need 0 < A < 1 and positive rates");
    }
    const double ratio = fit.k2 / fit.k1;
    const double s = 0.5 * ratio * std::sqrt(fit.A / (1.0 - fit.A) / ratio * std::exp(ratio));
    const double tau = 2.0 * lambert_w0(s) / fit.k2 - 1.0 / fit.k1;
    auto f = [&](double t) { return squeezing_model(t, fit.A, fit.k1, fit.k2); };
    // cross-check against direct minimization of the fitted curve
    const double hi = std::max(4.0 * std::abs(tau), 4.0 / fit.k1);
    const double tau_num = golden_min(f, 0.0, hi, 1e-10);
    if (tau > 1e-12 / fit.k1 && std::abs(tau_num - tau) > 1e-3 * std::max(tau, 1e-12)) {
        throw DomainError("closed-form minimum disagrees with numeric minimization");
    }
    return {tau, f(tau)};
}

double fit_power_law(const std::vector<double>& n_values, const std::vector<double>& y_values) {
    if (n_values.size() != y_values.size() || n_values.size() < 3) {
        throw DomainError("power-law fit needs >= 3 points");
    }
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        if (!(n_values[i] > 0.0) || !(y_values[i] > 0.0)) {
            throw DomainError("power-law fit needs positive inputs");
        }
        const double x = std::log(n_values[i]);
        const double y = std::log(y_values[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(n_values.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

struct SinusoidLs {
    double amplitude, phase, offset, rss;
};

// For fixed angular frequency w the model a sin(wt) + b cos(wt) + c is linear.
SinusoidLs sinusoid_ls(const std::vector<double>& t, const std::vector<double>& y, double w) {
    double s_ss = 0, s_cc = 0, s_sc = 0, s_s = 0, s_c = 0, s_ys = 0, s_yc = 0, s_y = 0;
    const double n = static_cast<double>(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double si = std::sin(w * t[i]);
        const double ci = std::cos(w * t[i]);
        s_ss += si * si;
        s_cc += ci * ci;
        s_sc += si * ci;
        s_s += si;
        s_c += ci;
        s_ys += y[i] * si;
        s_yc += y[i] * ci;
        s_y += y[i];
    }
    // solve [s_ss s_sc s_s; s_sc s_cc s_c; s_s s_c n] [a b c]^T = [s_ys s_yc s_y]^T
    const std::array<double, 9> m = {s_ss, s_sc, s_s, s_sc, s_cc, s_c, s_s, s_c, n};
    const std::array<double, 3> r = {s_ys, s_yc, s_y};
    const double det = m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
                       m[2] * (m[3] * m[7] - m[4] * m[6]);
    SinusoidLs out{0.0, 0.0, 0.0, std::numeric_limits<double>::infinity()};
    if (std::abs(det) < 1e-300) return out;
    auto solve = [&](int col) {
        std::array<double, 9> mm = m;
        for (int a = 0; a < 3; ++a) mm[a * 3 + col] = r[a];
        return (mm[0] * (mm[4] * mm[8] - mm[5] * mm[7]) - mm[1] * (mm[3] * mm[8] - mm[5] * mm[6]) +
                mm[2] * (mm[3] * mm[7] - mm[4] * mm[6])) / det;
    };
    const double a = solve(0), b = solve(1), c = solve(2);
    double rss = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double e = a * std::sin(w * t[i]) + b * std::cos(w * t[i]) + c - y[i];
        rss += e * e;
    }
    return {std::hypot(a, b), std::atan2(b, a), c, rss};
}

}  // namespace

OscillationFit oscillation_frequency(const std::vector<double>& times, const std::vector<double>& series) {
    if (times.size() != series.size() || times.size() < 16) {
        throw DomainError("oscillation fit needs >= 16 samples");
    }
    const double span = times.back() - times.front();
    if (!(span > 0.0)) throw DomainError("oscillation fit needs increasing times");
    const double w_min = 3.0 * two_pi / span;  // at least three periods in the record
    const double w_max = 0.5 * two_pi * static_cast<double>(times.size() - 1) / span;  // Nyquist
    const int n_scan = 400;
    double best_w = w_min;
    double best_rss = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= n_scan; ++i) {
        const double w = w_min * std::pow(w_max / w_min, static_cast<double>(i) / n_scan);
        const double rss = sinusoid_ls(times, series, w).rss;
        if (rss < best_rss) {
            best_rss = rss;
            best_w = w;
        }
    }
    const double w_ref = golden_min([&](double w) { return sinusoid_ls(times, series, w).rss; },
                                    best_w / 1.1, best_w * 1.1, 1e-12);
    const SinusoidLs fit = sinusoid_ls(times, series, w_ref);
    const double resid_sd = std::sqrt(fit.rss / static_cast<double>(times.size()));
    const double floor = 4.0 * resid_sd / std::sqrt(static_cast<double>(times.size()) / 4.0);
    if (!(fit.amplitude > floor)) {
        throw DomainError("no oscillation detected: amplitude below the noise floor");
    }
    // an in-band sinusoid must actually explain the record; a fraction of a
    // period (or a pure drift) fails here
    double ss_tot = 0.0, mean = 0.0;
    for (double v : series) mean += v;
    mean /= static_cast<double>(series.size());
    for (double v : series) ss_tot += (v - mean) * (v - mean);
    if (fit.rss > 0.7 * ss_tot) {
        throw DomainError("no oscillation detected: record shorter than three periods or non-periodic");
    }
    return {w_ref, fit.amplitude, fit.phase, fit.offset};
}

double pearson_correlation(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw DomainError("correlation needs >= 2 pairs");
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (!(sxx > 0.0) || !(syy > 0.0)) throw DomainError("correlation undefined: zero variance");
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace sqz
