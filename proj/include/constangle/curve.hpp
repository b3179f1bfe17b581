#pragma once

#include <functional>
#include <optional>

#include "constangle/numkit.hpp"

namespace constangle {

// A space curve over a closed parameter interval. Analytic derivative
// suppliers are optional; deriv() falls back to central differences of the
// highest-order supplier available (stencils are shifted inward near the
// domain ends so evaluation stays total).
struct Curve {
    Interval domain;
    std::function<Vec3(double)> position;
    std::function<Vec3(double)> d1;  // optional analytic derivatives
    std::function<Vec3(double)> d2;
    std::function<Vec3(double)> d3;
    bool arclength = false;  // asserts |alpha'(s)| = 1 on the domain

    Vec3 eval(double t) const { return position(t); }
    Vec3 deriv(double t, int order, double h = 0.0) const;
};

// Frenet frame plus curvature and torsion at one parameter value.
struct FrenetApparatus {
    Vec3 t;
    Vec3 n;
    Vec3 b;
    double kappa = 0.0;
    double tau = 0.0;
};

struct HelixTestResult {
    bool is_helix = false;
    std::optional<Vec3> axis;    // canonical-sign representative
    std::optional<double> theta; // radians in [0, pi/2]
    double max_dev = 0.0;        // max |<b(s), axis> - cos(theta)| over samples
    bool lancret_constant = false;  // secondary evidence: tau/kappa constant
};

// Frenet apparatus at s: t = alpha', kappa = |alpha''|, n = alpha''/kappa,
// b = t x n, tau = <n', b>. The curve must be arc-length parameterized and
// kappa must exceed the curvature floor.
FrenetApparatus frenet_apparatus(const Curve& c, double s, const Tolerances& tol);

// Arc-length reparametrization. The result has domain [0, L], the arclength
// flag set and chain-rule derivative suppliers attached.
Curve arclength_reparam(const Curve& c, const Tolerances& tol);

// Geodesic curvature <alpha'', alpha x alpha'> of an arc-length curve on the
// unit sphere. Also verifies <alpha'', alpha'> = 0 and <alpha'', alpha> = -1.
double geodesic_curvature_spherical(const Curve& c, double s, const Tolerances& tol);

// Tests whether the binormal makes a constant angle with some fixed axis by
// fitting the best axis to sampled binormals. The tau/kappa (Lancret) ratio
// is reported as a cross-check only; the verdict uses the <b,k> criterion.
HelixTestResult helix_test(const Curve& c, int samples, const Tolerances& tol);

}  // namespace constangle
