#pragma once

#include <vector>

#include "constangle/curve.hpp"

namespace constangle {

// Cylindrical-helix specification: axis angle theta in (0, pi/2) and the
// turning profile lambda. The planar speed is cos(theta) and the vertical
// speed sin(theta), so the generated curve is unit speed by construction.
struct HelixSpec {
    double theta = 0.0;
    ScalarFn lambda;
};

// alpha(s) = (cos(theta) cos s, cos(theta) sin s, sin(theta) s), arc length,
// with analytic derivatives attached. Domain [-2*pi, 4*pi].
Curve circular_helix(double theta);

// alpha(s) = (cos(theta) Int sin(lambda), cos(theta) Int cos(lambda), sin(theta) s)
// with the planar integrals anchored at s_range.lo. Analytic first
// derivative; higher orders fall back to finite differences of it.
Curve generalized_helix(const HelixSpec& spec, Interval s_range,
                        const Tolerances& tol = {});

// A plane curve profile: t -> (x(t), y(t)) with optional analytic
// derivatives per component.
struct PlanarProfile {
    Interval domain;
    std::function<double(double)> x, y;
    std::function<double(double)> dx, dy;      // optional
    std::function<double(double)> ddx, ddy;    // optional
    std::function<double(double)> dddx, dddy;  // optional
};

// Embeds the profile in the plane through plane_origin spanned by the
// orthonormal pair (basis_u, basis_v). The result keeps the profile's
// parametrization; apply arclength_reparam before taking Frenet data.
Curve planar_curve(const PlanarProfile& profile, const Vec3& plane_origin,
                   const Vec3& basis_u, const Vec3& basis_v);

// Arc-length circle of colatitude phi on the unit sphere:
// alpha(s) = (sin(phi) cos(s/sin(phi)), sin(phi) sin(s/sin(phi)), cos(phi)).
Curve spherical_circle(double phi);

// Non-circular director on the unit sphere (normalized wavy loop),
// arc-length reparameterized; its geodesic curvature varies with s.
Curve spherical_wave(double z0 = 0.6, double amplitude = 0.25, int frequency = 2,
                     const Tolerances& tol = {});

// Builtin planar profiles for the CLI and tests.
PlanarProfile circle_profile(double radius);
PlanarProfile parabola_profile(double half_width = 1.0);
PlanarProfile ellipse_profile(double a, double b);

// Natural cubic spline through (t_i, p_i); knots must be strictly increasing.
// Intended for sampled polyline input; the spline is C^2 so curvature is
// continuous but torsion is only piecewise smooth.
Curve curve_from_samples(const std::vector<double>& t, const std::vector<Vec3>& p);

}  // namespace constangle
