#include <cmath>
#include <random>

#include "constangle/curve.hpp"
#include "constangle/generators.hpp"
#include "doctest.h"

using namespace constangle;

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kSqrt2Half = std::sqrt(2.0) / 2.0;

Curve unit_circle_xy() {
    return arclength_reparam(
        planar_curve(circle_profile(1.0), {0, 0, 0}, {1, 0, 0}, {0, 1, 0}), {});
}

Curve twisted_cubic_arclength() {
    Curve c;
    c.domain = {-1.0, 1.0};
    c.position = [](double t) { return Vec3{t, t * t, t * t * t}; };
    c.d1 = [](double t) { return Vec3{1.0, 2.0 * t, 3.0 * t * t}; };
    c.d2 = [](double t) { return Vec3{0.0, 2.0, 6.0 * t}; };
    c.d3 = [](double) { return Vec3{0.0, 0.0, 6.0}; };
    return arclength_reparam(c, {});
}

}  // namespace

TEST_CASE("frenet apparatus of the circular helix at s = 0") {
    const Tolerances tol;
    const Curve helix = circular_helix(kPi / 4.0);
    const FrenetApparatus f = frenet_apparatus(helix, 0.0, tol);
    CHECK(max_abs_diff(f.t, {0.0, kSqrt2Half, kSqrt2Half}) < 1e-9);
    CHECK(max_abs_diff(f.n, {-1.0, 0.0, 0.0}) < 1e-9);
    CHECK(max_abs_diff(f.b, {0.0, -kSqrt2Half, kSqrt2Half}) < 1e-9);
    CHECK(std::abs(f.kappa - kSqrt2Half) < 1e-9);
    CHECK(std::abs(f.tau - kSqrt2Half) < 1e-8);
}

TEST_CASE("frenet apparatus of the planar unit circle") {
    const Tolerances tol;
    const Curve circle = unit_circle_xy();
    for (double s : {0.5, 2.0, 5.0}) {
        const FrenetApparatus f = frenet_apparatus(circle, s, tol);
        CHECK(std::abs(f.kappa - 1.0) < 1e-6);
        CHECK(std::abs(f.tau) < 1e-6);
    }
}

TEST_CASE("frenet apparatus is undefined on a straight line") {
    const Tolerances tol;
    Curve line;
    line.domain = {0.0, 10.0};
    line.arclength = true;
    line.position = [](double s) { return Vec3{s, 0.0, 0.0}; };
    line.d1 = [](double) { return Vec3{1.0, 0.0, 0.0}; };
    line.d2 = [](double) { return Vec3{}; };
    CHECK_THROWS_AS(frenet_apparatus(line, 5.0, tol), CurvatureVanishes);
}

TEST_CASE("frenet apparatus rejects non-arc-length curves") {
    const Tolerances tol;
    Curve fast;
    fast.domain = {0.0, 1.0};
    fast.arclength = false;
    fast.position = [](double t) { return Vec3{2.0 * std::cos(t), 2.0 * std::sin(t), 0.0}; };
    CHECK_THROWS_AS(frenet_apparatus(fast, 0.5, tol), NotArcLength);
}

TEST_CASE("arclength_reparam of a radius-2 circle") {
    const Tolerances tol;
    Curve c;
    c.domain = {0.0, 2.0 * kPi};
    c.position = [](double t) { return Vec3{2.0 * std::cos(t), 2.0 * std::sin(t), 0.0}; };
    c.d1 = [](double t) { return Vec3{-2.0 * std::sin(t), 2.0 * std::cos(t), 0.0}; };
    const Curve al = arclength_reparam(c, tol);
    CHECK(al.arclength);
    CHECK(std::abs(al.domain.lo) < 1e-12);
    CHECK(std::abs(al.domain.hi - 4.0 * kPi) < 1e-8);
    // s = 2t, so s = pi lands at t = pi/2.
    CHECK(max_abs_diff(al.position(kPi), {0.0, 2.0, 0.0}) < 1e-6);
}

TEST_CASE("arclength_reparam is the identity on arc-length input") {
    const Tolerances tol;
    const Curve helix = circular_helix(kPi / 3.0);
    const Curve re = arclength_reparam(helix, tol);
    for (double s : {0.3, 1.7, 4.0}) {
        const Vec3 expect = helix.position(helix.domain.lo + s);
        CHECK(max_abs_diff(re.position(s), expect) < 1e-9);
    }
}

TEST_CASE("arclength_reparam rescales a constant-speed segment") {
    const Tolerances tol;
    Curve c;
    c.domain = {0.0, 1.0};
    c.position = [](double t) { return Vec3{2.0 * t, 0.0, 0.0}; };
    const Curve al = arclength_reparam(c, tol);
    CHECK(std::abs(al.domain.hi - 2.0) < 1e-9);
    for (double s : {0.25, 1.0, 1.75})
        CHECK(max_abs_diff(al.position(s), {s, 0.0, 0.0}) < 1e-8);
}

TEST_CASE("arclength_reparam rejects singular parametrizations") {
    const Tolerances tol;
    Curve c;
    c.domain = {-1.0, 1.0};
    c.position = [](double t) { return Vec3{t * t * t, 0.0, 0.0}; };
    c.d1 = [](double t) { return Vec3{3.0 * t * t, 0.0, 0.0}; };
    CHECK_THROWS_AS(arclength_reparam(c, tol), SingularParametrization);
}

TEST_CASE("arclength_reparam output has unit speed") {
    const Tolerances tol;
    Curve c;
    c.domain = {0.0, 2.0 * kPi};
    c.position = [](double t) {
        return Vec3{std::cos(t), 1.5 * std::sin(t), 0.2 * t};
    };
    const Curve al = arclength_reparam(c, tol);
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> pick(al.domain.lo + 0.01, al.domain.hi - 0.01);
    for (int i = 0; i < 50; ++i)
        CHECK(std::abs(al.deriv(pick(rng), 1).norm() - 1.0) < 1e-6);
}

TEST_CASE("geodesic curvature of spherical circles") {
    const Tolerances tol;
    const Curve great = spherical_circle(kPi / 2.0);
    CHECK(std::abs(geodesic_curvature_spherical(great, 1.0, tol)) < 1e-6);

    // Small circle at colatitude phi has geodesic curvature cot(phi).
    const Curve c3 = spherical_circle(kPi / 3.0);
    CHECK(std::abs(geodesic_curvature_spherical(c3, 0.7, tol) - 1.0 / std::sqrt(3.0)) <
          1e-5);
    const Curve c6 = spherical_circle(kPi / 6.0);
    CHECK(std::abs(geodesic_curvature_spherical(c6, 0.4, tol) - std::sqrt(3.0)) < 1e-5);
}

TEST_CASE("geodesic curvature rejects non-spherical curves") {
    const Tolerances tol;
    Curve c;
    c.domain = {0.0, 4.0 * kPi};
    c.arclength = true;
    c.position = [](double s) { return Vec3{2.0 * std::cos(s / 2.0), 2.0 * std::sin(s / 2.0), 0.0}; };
    CHECK_THROWS_AS(geodesic_curvature_spherical(c, 1.0, tol), NotSpherical);
}

TEST_CASE("spherical proof identities hold along arc-length spherical curves") {
    const Tolerances tol;
    for (const Curve& c : {spherical_circle(kPi / 3.0), spherical_wave()}) {
        std::mt19937 rng(5);
        std::uniform_real_distribution<double> pick(c.domain.lo + 0.05 * c.domain.width(),
                                                    c.domain.hi - 0.05 * c.domain.width());
        for (int i = 0; i < 25; ++i) {
            const double s = pick(rng);
            const Vec3 alpha = c.position(s);
            const Vec3 ap = c.deriv(s, 1);
            const Vec3 app = c.deriv(s, 2);
            CHECK(std::abs(dot(app, ap)) < 1e-6);
            CHECK(std::abs(dot(app, alpha) + 1.0) < 1e-6);
        }
    }
}

TEST_CASE("helix_test recognizes circular helices") {
    const Tolerances tol;
    const HelixTestResult r = helix_test(circular_helix(kPi / 6.0), 100, tol);
    CHECK(r.is_helix);
    REQUIRE(r.axis.has_value());
    CHECK(max_abs_diff(*r.axis, {0.0, 0.0, 1.0}) < 1e-6);
    REQUIRE(r.theta.has_value());
    CHECK(std::abs(*r.theta - kPi / 6.0) < 1e-4);
    CHECK(r.lancret_constant);
}

TEST_CASE("helix_test treats plane curves as degenerate helices") {
    const Tolerances tol;
    const HelixTestResult r = helix_test(unit_circle_xy(), 60, tol);
    CHECK(r.is_helix);
    REQUIRE(r.theta.has_value());
    CHECK(std::abs(*r.theta) < 1e-5);
    REQUIRE(r.axis.has_value());
    CHECK(max_abs_diff(*r.axis, {0.0, 0.0, 1.0}) < 1e-6);
}

TEST_CASE("helix_test accepts a generalized helix at the construction angle") {
    const Tolerances tol;
    ScalarFn lambda{{-8.0, 8.0}, [](double s) { return s + 0.3 * std::sin(s); }};
    const Curve c = generalized_helix({kPi / 6.0, lambda}, {0.0, 2.0 * kPi}, tol);
    const HelixTestResult r = helix_test(c, 80, tol);
    CHECK(r.is_helix);
    REQUIRE(r.theta.has_value());
    CHECK(std::abs(*r.theta - kPi / 6.0) < 1e-3);
}

TEST_CASE("helix_test rejects the twisted cubic") {
    const Tolerances tol;
    const HelixTestResult r = helix_test(twisted_cubic_arclength(), 80, tol);
    CHECK_FALSE(r.is_helix);
    CHECK_FALSE(r.lancret_constant);
    CHECK(r.max_dev > 1e-2);
}

TEST_CASE("Frenet-Serret residuals vanish along analytic generators") {
    const Tolerances tol;
    const double h = 1e-4;
    for (const Curve& c :
         {circular_helix(kPi / 4.0), circular_helix(kPi / 6.0), spherical_circle(kPi / 3.0)}) {
        std::mt19937 rng(17);
        std::uniform_real_distribution<double> pick(c.domain.lo + 0.05 * c.domain.width(),
                                                    c.domain.hi - 0.05 * c.domain.width());
        for (int i = 0; i < 100; ++i) {
            const double s = pick(rng);
            const FrenetApparatus f = frenet_apparatus(c, s, tol);
            auto frame_at = [&](double x) { return frenet_apparatus(c, x, tol); };
            const FrenetApparatus fp = frame_at(s + h);
            const FrenetApparatus fm = frame_at(s - h);
            const Vec3 tprime = (fp.t - fm.t) / (2.0 * h);
            const Vec3 nprime = (fp.n - fm.n) / (2.0 * h);
            const Vec3 bprime = (fp.b - fm.b) / (2.0 * h);
            CHECK((tprime - f.n * f.kappa).norm() < 1e-6);
            CHECK((nprime + f.t * f.kappa - f.b * f.tau).norm() < 1e-6);
            CHECK((bprime + f.n * f.tau).norm() < 1e-6);
        }
    }
}

TEST_CASE("Frenet frame is orthonormal and right-handed") {
    const Tolerances tol;
    const Curve c = circular_helix(0.9);
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> pick(c.domain.lo + 0.1, c.domain.hi - 0.1);
    for (int i = 0; i < 50; ++i) {
        const FrenetApparatus f = frenet_apparatus(c, pick(rng), tol);
        CHECK(std::abs(f.t.norm() - 1.0) < 1e-9);
        CHECK(std::abs(f.n.norm() - 1.0) < 1e-9);
        CHECK(std::abs(f.b.norm() - 1.0) < 1e-9);
        CHECK(std::abs(dot(f.t, f.n)) < 1e-9);
        CHECK(std::abs(dot(f.t, f.b)) < 1e-9);
        CHECK(std::abs(dot(f.n, f.b)) < 1e-9);
        CHECK(max_abs_diff(cross(f.t, f.n), f.b) < 1e-9);
    }
}
