#pragma once

#include <array>
#include <memory>
#include <optional>

#include "constangle/generators.hpp"

namespace constangle {

enum class SurfaceFamily {
    TangentDevelopable,
    NormalSurface,
    BinormalSurface,
    Cone,
    TheoremA,
    Custom,
};

enum class RuledKind { TangentDevelopable, NormalSurface, BinormalSurface };

// Which derivatives the differential operators use: attached analytic
// closures when available (Auto), or forced finite differences of the
// position map (FiniteDifference), useful as an independent route.
enum class DerivativeMode { Auto, FiniteDifference };

// A parametric surface over a rectangle [s_range] x [v_range]. Builders
// attach partial-derivative closures where cheap exact forms exist and
// declare the singular ruling (v = singular_v) when the family has one.
struct Surface {
    Interval s_range;
    Interval v_range;
    std::function<Vec3(double, double)> position;
    SurfaceFamily family = SurfaceFamily::Custom;
    std::optional<double> singular_v;

    std::function<Vec3(double, double)> d_s, d_v;          // optional
    std::function<Vec3(double, double)> d_ss, d_sv, d_vv;  // optional

    std::shared_ptr<const Curve> generator;  // provenance, when built on a curve
    std::optional<double> theta;             // provenance, Theorem A family

    Vec3 eval(double s, double v) const { return position(s, v); }
};

struct FundamentalForms {
    double E = 0.0, F = 0.0, G = 0.0;    // first form
    double L = 0.0, M = 0.0, N2 = 0.0;   // second form against the unit normal
    Vec3 normal;                         // orientation-folded unit normal
};

// Ruled surface alpha(s) + v * {t|n|b}(s) over the curve's domain.
// The curve must be arc-length; kinds needing the frame require
// kappa >= curvature_floor along the domain.
Surface build_ruled(const Curve& c, RuledKind kind, Interval v_range,
                    const Tolerances& tol = {});

// Cone (s,v) -> v * alpha(s) over a unit-sphere, arc-length director.
Surface build_cone(const Curve& director, Interval v_range, const Tolerances& tol = {});

// Canonical constant-angle surface
//   (u1, u2) -> (u1 cos(theta) cos u2 + gamma1, u1 cos(theta) sin u2 + gamma2,
//                u1 sin(theta))
// with gamma(u2) = cos(theta) * (-Int_0^{u2} eta sin, Int_0^{u2} eta cos).
// The surface's (s, v) parameters are (u1, u2).
Surface theorem_a_surface(double theta, const ScalarFn& eta, Interval u1_range,
                          Interval u2_range, const Tolerances& tol = {});

// The gamma(u2) profile of the canonical surface, exposed for direct checks.
std::array<double, 2> theorem_a_gamma(double theta, const ScalarFn& eta, double u2,
                                      const Tolerances& tol = {});

// Unit normal (r_s x r_v)/|r_s x r_v| folded to the canonical sign
// (nonnegative z; ties by y, then x). Throws DegenerateNormal when
// |r_s x r_v| < 1e-9 (singular rulings, cone vertex).
Vec3 surface_normal(const Surface& S, double s, double v, const Tolerances& tol,
                    DerivativeMode mode = DerivativeMode::Auto);

// The closed-form unit normals of the ruled families expressed in the
// generator's Frenet frame, same orientation convention:
//   tangent developable: +-b
//   normal surface:      ((1 - kappa v) b - tau v t)/sqrt(Delta),
//                        Delta = (1 - kappa v)^2 + tau^2 v^2
//   binormal surface:    (-n - tau v t)/sqrt(Delta), Delta = 1 + tau^2 v^2
Vec3 closed_form_ruled_normal(RuledKind kind, const FrenetApparatus& frame, double v);

FundamentalForms fundamental_forms(const Surface& S, double s, double v,
                                   const Tolerances& tol,
                                   DerivativeMode mode = DerivativeMode::Auto);

// K = (L * N2 - M^2) / (E * G - F^2).
double gaussian_curvature(const Surface& S, double s, double v, const Tolerances& tol,
                          DerivativeMode mode = DerivativeMode::Auto);

}  // namespace constangle
