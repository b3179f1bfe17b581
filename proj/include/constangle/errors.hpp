#pragma once

#include <stdexcept>
#include <string>

namespace constangle {

// Base class for all failures raised by the toolkit's numerical operations.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A finite-difference stencil or integration range left the function's domain.
struct DomainExceeded : Error { using Error::Error; };

// Adaptive refinement exhausted its evaluation budget.
struct NoConvergence : Error { using Error::Error; };

// Sampled values of a function required to be monotone were not strictly ordered.
struct NotMonotone : Error { using Error::Error; };

// The target value lies outside the sampled range of the bracket.
struct NotBracketed : Error { using Error::Error; };

// |alpha''| fell below the curvature floor; the Frenet frame is undefined.
struct CurvatureVanishes : Error { using Error::Error; };

// A curve required to be arc-length parameterized has |alpha'| deviating from 1.
struct NotArcLength : Error { using Error::Error; };

// The curve's speed vanishes somewhere; arc-length reparametrization impossible.
struct SingularParametrization : Error { using Error::Error; };

// A curve required to lie on the unit sphere does not.
struct NotSpherical : Error { using Error::Error; };

// |r_s x r_v| (or the closed-form denominator) is too small for a unit normal.
struct DegenerateNormal : Error { using Error::Error; };

// The direction fit is rank-deficient; no unique axis exists.
struct DegenerateFit : Error { using Error::Error; };

// No valid sample exists on the requested grid.
struct AllSingular : Error { using Error::Error; };

// Mapped grid points fall outside the target surface's parameter rectangle.
struct GridMismatch : Error { using Error::Error; };

// The grid has absent positions and cannot be exported as a mesh.
struct IncompleteGrid : Error { using Error::Error; };

}  // namespace constangle
