#include <doctest.h>

#include <cmath>
#include <random>

#include "sqz/analysis.hpp"

using namespace sqz;

namespace {

// Independent bisection oracle for w e^w = s on the principal branch.
double lambert_bisect(double s) {
    double lo = -1.0, hi = std::max(1.0, std::log(std::max(s, 1.0)) + 1.0);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (mid * std::exp(mid) < s ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Independent coarse-grid + refinement minimizer for the fitted model.
double argmin_model(double A, double k1, double k2) {
    const double t_hi = 50.0 / std::min(k1, k2);
    auto f = [&](double t) { return squeezing_model(t, A, k1, k2); };
    double best_t = 0.0, best = f(0.0);
    const int n = 20000;
    for (int i = 1; i <= n; ++i) {
        const double t = t_hi * i / n;
        const double v = f(t);
        if (v < best) {
            best = v;
            best_t = t;
        }
    }
    double lo = std::max(0.0, best_t - t_hi / n), hi = best_t + t_hi / n;
    for (int i = 0; i < 200; ++i) {
        const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        (f(m1) < f(m2) ? hi : lo) = (f(m1) < f(m2) ? m2 : m1);
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("lambert w: anchor values") {
    CHECK(lambert_w0(0.0) == 0.0);
    CHECK(lambert_w0(std::numbers::e) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(lambert_w0(1.0) == doctest::Approx(0.567143290410).epsilon(1e-11));
    CHECK(lambert_w0(1.0) == doctest::Approx(lambert_bisect(1.0)).epsilon(1e-12));
    CHECK_THROWS_AS(lambert_w0(-1.0), DomainError);
}

TEST_CASE("lambert w satisfies its defining equation across the domain") {
    // log grid over [-1/e + 1e-6, 1e6]
    const double lo = -1.0 / std::numbers::e + 1e-6;
    for (int i = 0; i <= 300; ++i) {
        const double s = lo + (1e6 - lo) * std::pow(static_cast<double>(i) / 300.0, 6.0);
        const double w = lambert_w0(s);
        CHECK(std::abs(w * std::exp(w) - s) < 1e-12 * std::max(1.0, std::abs(s)));
    }
}

TEST_CASE("squeezing fit: noiseless round trip") {
    const double A = 0.9, k1 = 3e5, k2 = 5e4;
    std::vector<double> t, y;
    for (int i = 0; i < 200; ++i) {
        t.push_back(i * 0.15e-6);
        y.push_back(squeezing_model(t.back(), A, k1, k2));
    }
    const FitResult fit = fit_squeezing_curve(t, y);
    CHECK(fit.A == doctest::Approx(A).epsilon(1e-6));
    CHECK(fit.k1 == doctest::Approx(k1).epsilon(1e-6));
    CHECK(fit.k2 == doctest::Approx(k2).epsilon(1e-6));
}

TEST_CASE("squeezing fit: recovery over the parameter box") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ua(0.2, 0.99), ur(2.0, 50.0), uk(4.0, 6.0);
    for (int trial = 0; trial < 25; ++trial) {
        const double A = ua(rng);
        const double k2 = std::pow(10.0, uk(rng));
        const double k1 = ur(rng) * k2;
        std::vector<double> t, y;
        const double t_max = 5.0 / k2;  // covers the knee and the rise
        for (int i = 0; i < 800; ++i) {
            t.push_back(i * t_max / 800.0);
            y.push_back(squeezing_model(t.back(), A, k1, k2));
        }
        const FitResult fit = fit_squeezing_curve(t, y);
        CHECK(fit.A == doctest::Approx(A).epsilon(1e-4));
        CHECK(fit.k1 == doctest::Approx(k1).epsilon(1e-4));
        CHECK(fit.k2 == doctest::Approx(k2).epsilon(1e-4));
    }
}

TEST_CASE("flat series is flagged low-information") {
    std::vector<double> t, y;
    for (int i = 0; i < 50; ++i) {
        t.push_back(i * 1e-7);
        y.push_back(1.0);
    }
    const FitResult fit = fit_squeezing_curve(t, y);
    CHECK(fit.low_information);
    CHECK(fit.A == 1.0);
    CHECK(fit.k1 == 0.0);
}

TEST_CASE("fit input validation") {
    std::vector<double> t = {1, 2, 3}, y = {1, 1, 1};
    CHECK_THROWS_AS(fit_squeezing_curve(t, y), DomainError);
    t.assign(12, 0.0);
    y.assign(12, -1.0);
    CHECK_THROWS_AS(fit_squeezing_curve(t, y), DomainError);
}

TEST_CASE("closed-form minimum matches direct minimization") {
    FitResult fit;
    fit.A = 0.9;
    fit.k1 = 3e5;
    fit.k2 = 5e4;
    const MinimumResult m = minimal_squeezing_time(fit);
    const double t_num = argmin_model(fit.A, fit.k1, fit.k2);
    CHECK(m.tau == doctest::Approx(t_num).epsilon(1e-3));
    CHECK(m.xi_min == doctest::Approx(squeezing_model(t_num, fit.A, fit.k1, fit.k2)).epsilon(1e-6));
}

TEST_CASE("closed-form minimum: 1000 random parameter sets") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ua(0.05, 0.99), uk(3.5, 6.5);
    for (int i = 0; i < 1000; ++i) {
        FitResult fit;
        fit.A = ua(rng);
        fit.k1 = std::pow(10.0, uk(rng));
        fit.k2 = std::pow(10.0, uk(rng));
        const MinimumResult m = minimal_squeezing_time(fit);
        if (m.tau <= 0.0) continue;  // minimum at or before t = 0
        const double t_num = argmin_model(fit.A, fit.k1, fit.k2);
        CHECK(m.tau == doctest::Approx(t_num).epsilon(1e-6));
    }
}

TEST_CASE("pure squeezing branch has no interior minimum") {
    FitResult fit;
    fit.A = 1.0;
    fit.k1 = 1e5;
    fit.k2 = 1e4;
    CHECK_THROWS_AS(minimal_squeezing_time(fit), DomainError);
    fit.A = 0.9;
    fit.k2 = 0.0;
    CHECK_THROWS_AS(minimal_squeezing_time(fit), DomainError);
}

TEST_CASE("power-law exponents") {
    const std::vector<double> n = {1e3, 3e3, 1e4, 3e4, 1e5};
    std::vector<double> inv, inv2;
    for (double v : n) {
        inv.push_back(1.0 / v);
        inv2.push_back(1.0 / (v * v));
    }
    CHECK(fit_power_law(n, inv) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(fit_power_law(n, inv2) == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK_THROWS_AS(fit_power_law({1.0, 2.0}, {1.0, 2.0}), DomainError);
    CHECK_THROWS_AS(fit_power_law({1.0, 2.0, -3.0}, {1.0, 2.0, 3.0}), DomainError);
}

TEST_CASE("oscillation frequency: synthetic round trip") {
    std::vector<double> t, y;
    const double f = 1e5;
    for (int i = 0; i < 512; ++i) {
        t.push_back(i * 1e-7);  // 51.2 us, ~5 periods
        y.push_back(3.0 * std::sin(two_pi * f * t.back() + 0.4) + 7.0);
    }
    const OscillationFit fit = oscillation_frequency(t, y);
    CHECK(fit.frequency / two_pi == doctest::Approx(f).epsilon(1e-3));
    CHECK(fit.amplitude == doctest::Approx(3.0).epsilon(1e-3));
    CHECK(fit.offset == doctest::Approx(7.0).epsilon(1e-3));
}

TEST_CASE("oscillation detection rejects flat and short records") {
    std::vector<double> t, y;
    for (int i = 0; i < 256; ++i) {
        t.push_back(i * 1e-7);
        y.push_back(5.0);
    }
    CHECK_THROWS_AS(oscillation_frequency(t, y), DomainError);
    // fewer than three periods in the record
    t.clear();
    y.clear();
    for (int i = 0; i < 256; ++i) {
        t.push_back(i * 1e-7);
        y.push_back(std::sin(two_pi * 3e4 * t.back()));
    }
    CHECK_THROWS_AS(oscillation_frequency(t, y), DomainError);
}

TEST_CASE("pearson correlation") {
    CHECK(pearson_correlation({1, 2, 3}, {2, 4, 6}) == doctest::Approx(1.0));
    CHECK(pearson_correlation({1, 2, 3}, {3, 2, 1}) == doctest::Approx(-1.0));
    CHECK_THROWS_AS(pearson_correlation({1.0}, {1.0}), DomainError);
    CHECK_THROWS_AS(pearson_correlation({1, 1, 1}, {1, 2, 3}), DomainError);
}
