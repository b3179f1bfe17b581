#pragma once

#include <functional>
#include <vector>

#include "constangle/errors.hpp"
#include "constangle/vec.hpp"

namespace constangle {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    double midpoint() const { return 0.5 * (lo + hi); }
    bool contains(double t, double slack = 0.0) const {
        return t >= lo - slack && t <= hi + slack;
    }
};

// A scalar function together with the closed interval on which it is defined.
// Evaluation must be total and deterministic on the domain.
struct ScalarFn {
    Interval domain;
    std::function<double(double)> f;
    double operator()(double t) const { return f(t); }
};

// Vector-valued counterpart; differentiated and integrated componentwise.
struct VectorFn {
    Interval domain;
    std::function<Vec3(double)> f;
    Vec3 operator()(double t) const { return f(t); }
};

struct Tolerances {
    double fd_step = 1e-5;          // finite-difference step for orders 1-2
    double quad_tol = 1e-10;        // absolute quadrature tolerance
    double root_tol = 1e-12;        // |f(t) - y| bound for inversion
    double angle_tol = 1e-3;        // radians; constant-angle verdicts
    double curvature_floor = 1e-8;  // minimum kappa for a defined frame

    bool valid() const {
        return fd_step > 0 && quad_tol > 0 && root_tol > 0 && angle_tol > 0 &&
               curvature_floor > 0 && angle_tol < 0.25 * 3.14159265358979323846 &&
               curvature_floor < 1.0;
    }
};

// Default step for third derivatives; first and second use Tolerances::fd_step.
inline constexpr double kFdStepOrder3 = 1e-4;

inline double default_fd_step(int order) { return order == 3 ? kFdStepOrder3 : 1e-5; }

// Central-difference derivative of the given order (1, 2 or 3) at t.
// Pass h = 0 to use the default step for the order.
// Throws DomainExceeded when the stencil leaves f's domain.
double fd_derive(const ScalarFn& f, double t, int order, double h = 0.0);
Vec3 fd_derive(const VectorFn& f, double t, int order, double h = 0.0);

// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.
// Throws NoConvergence when the refinement budget (1e6 evaluations) runs out.
double quad(const ScalarFn& f, double a, double b, double tol);
Vec3 quad(const VectorFn& f, double a, double b, double tol);

// Solves f(t) = y for a function strictly monotone on the bracket.
// Monotonicity is checked at 64 equispaced samples; inversion is bisection
// with secant acceleration. Throws NotMonotone / NotBracketed.
double invert_monotone(const ScalarFn& f, double y, Interval bracket, double tol);

// At least n^2 approximately equidistributed unit vectors covering the upper
// hemisphere (z >= 0); the pole (0,0,1) is always included. Any unit vector
// with z >= 0 is within angular distance pi/(2n) of some grid point.
std::vector<Vec3> sphere_grid(int n);

}  // namespace constangle
