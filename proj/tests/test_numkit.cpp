#include <algorithm>
#include <cmath>
#include <random>

#include "constangle/numkit.hpp"
#include "doctest.h"

using namespace constangle;

namespace {

constexpr double kPi = 3.14159265358979323846;

ScalarFn make_fn(Interval dom, double (*f)(double)) {
    return {dom, [f](double t) { return f(t); }};
}

}  // namespace

TEST_CASE("fd_derive matches analytic derivatives") {
    ScalarFn square{{-10.0, 10.0}, [](double t) { return t * t; }};
    CHECK(std::abs(fd_derive(square, 1.0, 1, 1e-4) - 2.0) < 1e-7);

    ScalarFn constant{{-10.0, 10.0}, [](double) { return 3.5; }};
    CHECK(fd_derive(constant, 0.3, 1) == 0.0);

    ScalarFn sine = make_fn({-10.0, 10.0}, std::sin);
    CHECK(std::abs(fd_derive(sine, 0.0, 2, 1e-3) - 0.0) < 1e-6);

    // Third derivative of sin is -cos. Rounding dominates near the default
    // step for order 3, so check a looser bound there and a tight one at
    // the truncation/rounding balance point.
    CHECK(std::abs(fd_derive(sine, 0.4, 3) + std::cos(0.4)) < 1e-4);
    CHECK(std::abs(fd_derive(sine, 0.4, 3, 1e-3) + std::cos(0.4)) < 1e-6);
}

TEST_CASE("fd_derive error halves-squared (O(h^2) convergence)") {
    ScalarFn sine = make_fn({-10.0, 10.0}, std::sin);
    const double t = 0.5;
    for (int order = 1; order <= 2; ++order) {
        const double exact = order == 1 ? std::cos(t) : -std::sin(t);
        double prev_err = std::abs(fd_derive(sine, t, order, 1e-2) - exact);
        for (double h : {5e-3, 2.5e-3}) {
            const double err = std::abs(fd_derive(sine, t, order, h) - exact);
            CHECK(err <= 0.3 * prev_err);
            prev_err = err;
        }
    }
}

TEST_CASE("fd_derive convergence order on sin and cos is >= 1.9") {
    // Derivatives of sin(t) cycle through cos, -sin, -cos; cos is sin
    // shifted by pi/2, so one table covers both.
    struct Case {
        double shift;
    };
    for (const Case& c : {Case{0.0}, Case{0.5 * kPi}}) {
        ScalarFn fn{{-10.0, 10.0}, [c](double t) { return std::sin(t + c.shift); }};
        for (int order = 1; order <= 3; ++order) {
            const double t = 0.7;
            double exact = 0.0;
            switch (order % 4) {
                case 1: exact = std::cos(t + c.shift); break;
                case 2: exact = -std::sin(t + c.shift); break;
                default: exact = -std::cos(t + c.shift); break;
            }
            const double e1 = std::abs(fd_derive(fn, t, order, 1e-2) - exact);
            const double e2 = std::abs(fd_derive(fn, t, order, 5e-3) - exact);
            const double rate = std::log2(e1 / e2);
            CHECK(rate >= 1.9);
        }
    }
}

TEST_CASE("fd_derive rejects stencils outside the domain") {
    ScalarFn f{{0.0, 1.0}, [](double t) { return t; }};
    CHECK_THROWS_AS(fd_derive(f, 0.0, 1, 1e-3), DomainExceeded);
    CHECK_THROWS_AS(fd_derive(f, 1.0, 2, 1e-3), DomainExceeded);
    CHECK_NOTHROW(fd_derive(f, 0.5, 1, 1e-3));
}

TEST_CASE("quad integrates smooth functions to tolerance") {
    ScalarFn sine = make_fn({-10.0, 10.0}, std::sin);
    CHECK(std::abs(quad(sine, 0.0, kPi, 1e-10) - 2.0) < 1e-9);

    ScalarFn zero{{-10.0, 10.0}, [](double) { return 0.0; }};
    CHECK(quad(zero, 0.0, 1.0, 1e-10) == 0.0);

    // Integration by parts: Int_0^{pi/2} (pi/2 - tau) sin(tau) dtau = pi/2 - 1.
    ScalarFn ramp_sine{{-10.0, 10.0},
                       [](double t) { return (0.5 * kPi - t) * std::sin(t); }};
    CHECK(std::abs(quad(ramp_sine, 0.0, 0.5 * kPi, 1e-10) - (0.5 * kPi - 1.0)) < 1e-9);
}

TEST_CASE("quad is exact on cubics and linear in the integrand") {
    ScalarFn cubic{{-10.0, 10.0}, [](double t) { return t * t * t - 2.0 * t; }};
    // Antiderivative t^4/4 - t^2 over [0, 2]: 4 - 4 = 0.
    CHECK(std::abs(quad(cubic, 0.0, 2.0, 1e-12)) < 1e-12);

    std::mt19937 rng(42);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    for (int rep = 0; rep < 10; ++rep) {
        const double a = coeff(rng), b = coeff(rng), c = coeff(rng);
        ScalarFn f{{-10.0, 10.0}, [a, b](double t) { return a * std::sin(t) + b * t; }};
        ScalarFn g{{-10.0, 10.0}, [c](double t) { return c * std::cos(2.0 * t); }};
        ScalarFn sum{{-10.0, 10.0},
                     [a, b, c](double t) {
                         return a * std::sin(t) + b * t + c * std::cos(2.0 * t);
                     }};
        const double tol = 1e-10;
        const double split = quad(f, -1.0, 2.0, tol) + quad(g, -1.0, 2.0, tol);
        CHECK(std::abs(quad(sum, -1.0, 2.0, tol) - split) <= 2.0 * tol + 1e-12);
    }
}

TEST_CASE("quad rejects reversed ranges and reports non-convergence") {
    ScalarFn sine = make_fn({-10.0, 10.0}, std::sin);
    CHECK_THROWS_AS(quad(sine, 1.0, 0.0, 1e-10), std::invalid_argument);

    // A discontinuity keeps the halving estimate from settling at an
    // impossible tolerance.
    ScalarFn step{{-1.0, 1.0}, [](double t) { return t < 0.12345 ? 0.0 : 1.0; }};
    CHECK_THROWS_AS(quad(step, -1.0, 1.0, 1e-300), NoConvergence);
}

TEST_CASE("invert_monotone solves f(t) = y") {
    ScalarFn expf = make_fn({0.0, 2.0}, std::exp);
    CHECK(std::abs(invert_monotone(expf, std::exp(1.0), {0.0, 2.0}, 1e-12) - 1.0) < 1e-10);

    ScalarFn ident{{-1.0, 1.0}, [](double t) { return t; }};
    CHECK(invert_monotone(ident, 0.0, {-1.0, 1.0}, 1e-12) == doctest::Approx(0.0));

    // Decreasing profile: lambda(s) = -s, the circular-helix turning function.
    ScalarFn neg{{-2.0, 2.0}, [](double t) { return -t; }};
    CHECK(std::abs(invert_monotone(neg, 0.5, {-2.0, 2.0}, 1e-12) + 0.5) < 1e-10);
}

TEST_CASE("invert_monotone round-trips random monotone functions") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> coeff(0.1, 2.0);
    std::uniform_real_distribution<double> pick(-0.95, 0.95);
    for (int rep = 0; rep < 20; ++rep) {
        const double a = coeff(rng), b = coeff(rng), c = coeff(rng);
        const bool flip = rep % 2 == 0;
        ScalarFn f{{-1.0, 1.0}, [a, b, c, flip](double t) {
                       const double val = a * t + b * t * t * t + c * std::atan(t);
                       return flip ? -val : val;
                   }};
        const double t_true = pick(rng);
        const double y = f(t_true);
        const double t_found = invert_monotone(f, y, {-1.0, 1.0}, 1e-12);
        CHECK(std::abs(f(t_found) - y) <= 1e-12);
        CHECK(std::abs(t_found - t_true) < 1e-9);
    }
}

TEST_CASE("invert_monotone rejects bad inputs") {
    ScalarFn sine = make_fn({0.0, 3.0 * kPi}, std::sin);
    CHECK_THROWS_AS(invert_monotone(sine, 0.5, {0.0, 3.0 * kPi}, 1e-10), NotMonotone);

    ScalarFn ident{{0.0, 1.0}, [](double t) { return t; }};
    CHECK_THROWS_AS(invert_monotone(ident, 2.0, {0.0, 1.0}, 1e-10), NotBracketed);
}

TEST_CASE("sphere_grid covers the upper hemisphere") {
    const auto tiny = sphere_grid(2);
    bool has_pole = false;
    for (const Vec3& v : tiny)
        if (max_abs_diff(v, {0.0, 0.0, 1.0}) == 0.0) has_pole = true;
    CHECK(has_pole);
    CHECK(tiny.size() >= 4);

    const auto grid = sphere_grid(10);
    CHECK(grid.size() >= 100);
    for (const Vec3& v : grid) CHECK(std::abs(v.norm() - 1.0) <= 1e-12);

    // Random upper-hemisphere directions are within pi/(2n) of a grid point.
    std::mt19937 rng(11);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double max_gap = 0.5 * kPi / 10.0;
    for (int rep = 0; rep < 500; ++rep) {
        Vec3 dir{gauss(rng), gauss(rng), std::abs(gauss(rng))};
        dir = dir / dir.norm();
        double best = kPi;
        for (const Vec3& v : grid)
            best = std::min(best, std::acos(std::clamp(dot(dir, v), -1.0, 1.0)));
        CHECK(best <= max_gap);
    }
}
