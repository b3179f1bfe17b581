#pragma once

#include <map>
#include <string>

#include "constangle/surface.hpp"

namespace constangle {

// Key-value surface description, the format the CLI consumes. Keys:
//
//   family  = tangent-developable | normal-surface | binormal-surface |
//             cone | theorem-a | custom
//   curve   = circular-helix | generalized-helix | planar | spherical-circle |
//             spherical-wave | polyline            (families built on a curve)
//   theta   = <radians>                            (helices, theorem-a)
//   lambda  = neg-s | s | 2s | s+0.3sin | s+0.2sin | table
//   lambda_file = <csv of "t,value" rows>          (lambda = table)
//   phi     = <radians>                            (spherical-circle)
//   profile = circle | parabola | ellipse          (planar)
//   radius, a, b = <reals>                         (profile parameters)
//   origin, basis_u, basis_v = x,y,z               (planar embedding)
//   polyline_file = <csv of "t,x,y,z" rows>
//   eta     = pi/2-minus-tau | zero | sin-tau | cos-tau | from-lambda
//   shape   = sphere-patch | cylinder | plane      (custom)
//   s_min, s_max, v_min, v_max = <reals>           (u1_*/u2_* accepted for
//                                                   theorem-a)
//
// Curves that are not arc length by construction (planar, polyline) are
// arc-length reparameterized before the surface is built.
std::map<std::string, std::string> parse_keyvals(const std::string& text);

Surface surface_from_keyvals(const std::map<std::string, std::string>& kv,
                             const Tolerances& tol);

Surface load_surface_spec(const std::string& path, const Tolerances& tol);

}  // namespace constangle
