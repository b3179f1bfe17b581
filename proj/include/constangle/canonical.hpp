#pragma once

#include <functional>
#include <utility>

#include "constangle/surface.hpp"

namespace constangle {

// The reparametrization tying the tangent developable of a helix with
// profile lambda to the canonical constant-angle form:
//   u1 = s + v,  u2 = pi/2 - lambda(s).
// lambda must be strictly monotone so that lambda^{-1} (and hence eta) exists.
struct CanonicalMap {
    ScalarFn lambda;
    double theta = 0.0;

    std::pair<double, double> forward(double s, double v) const;
};

// eta(tau) = -lambda^{-1}(pi/2 - tau), defined on the image of the u2 map.
ScalarFn eta_from_lambda(const ScalarFn& lambda, const Tolerances& tol);

// (u1, u2) = (s + v, pi/2 - lambda(s)).
std::pair<double, double> canonical_params(double s, double v, const ScalarFn& lambda);

struct TranslationEquivalence {
    bool equivalent = false;
    Vec3 translation;      // mean of B(forward(s,v)) - A(s,v)
    double max_dev = 0.0;  // max |difference - translation| over the grid
};

// Compares A(s,v) with B(forward(s,v)) on an ns x nv grid over A's
// rectangle. Equivalent when the differences agree with their mean to
// pos_tol and the mean's vertical component vanishes (the shift the
// integration limits induce is horizontal). Throws GridMismatch when the
// forward image leaves B's rectangle.
TranslationEquivalence verify_translation_equivalence(
    const Surface& A, const Surface& B,
    const std::function<std::pair<double, double>(double, double)>& forward, int ns,
    int nv, double pos_tol);

TranslationEquivalence verify_translation_equivalence(const Surface& A,
                                                      const Surface& B,
                                                      const CanonicalMap& map, int ns,
                                                      int nv, double pos_tol);

}  // namespace constangle
