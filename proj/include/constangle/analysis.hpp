#pragma once

#include <optional>
#include <string>
#include <vector>

#include "constangle/surface.hpp"

namespace constangle {

struct AngleSample {
    double s = 0.0;
    double v = 0.0;
    double angle = 0.0;  // radians in [0, pi/2]
};

// Angles between the surface normal and a fixed direction, sampled on an
// inset grid. Angles are orientation-folded: angle = arccos |<N, k>|.
struct AngleField {
    std::vector<AngleSample> samples;
    Vec3 direction;  // canonical-sign representative of k
    const Surface* surface = nullptr;
};

struct AngleVerdict {
    bool is_constant = false;
    double theta_mean = 0.0;
    double max_dev = 0.0;
};

struct DirectionFit {
    Vec3 axis;            // canonical-sign representative
    double theta = 0.0;   // arccos |c| of the fitted plane <N, k> = c
    double residual = 0.0;  // RMS of <N_i, k> - c
};

// The three coefficients of the vanishing polynomial in v obtained by
// requiring a normal surface to have constant angle theta against k:
//   c0 = <b,k>^2 - cos^2(theta)
//   c1 = kappa <b,k>^2 + tau <b,k><t,k> - kappa cos^2(theta)
//   c2 = (kappa <b,k> + tau <t,k>)^2 - (kappa^2 + tau^2) cos^2(theta)
struct NormalSurfaceResiduals {
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
};

enum class CaseLabel { TheoremAI, Plane, Cylinder, CircularCone };

// Verdict tolerance calibrated for surfaces evaluated purely by finite
// differences of the position map (the default Tolerances::angle_tol of 1e-3
// is calibrated for analytic or semi-analytic derivative data).
inline constexpr double kAngleTolFiniteDifference = 5e-3;

const char* to_string(CaseLabel label);

struct ClassificationEvidence {
    double max_angle_dev = 0.0;
    double fit_residual = 0.0;
    std::optional<double> tau_max;        // max |tau| along the generator
    std::optional<double> kappa_g_spread; // max - min geodesic curvature (cones)
    std::optional<double> helix_max_dev;  // helix_test deviation (tangent dev)
    std::optional<double> cone_witness;   // max |<alpha x alpha'', k>| (cones)
};

struct ClassificationReport {
    bool constant_angle = false;
    std::optional<CaseLabel> label;
    std::optional<double> theta;
    std::optional<Vec3> axis;
    ClassificationEvidence evidence;
};

// Samples angle(s,v) = arccos |<N(s,v), k>| on an ns x nv grid inset 1% from
// the parameter-rectangle edges and from the singular ruling. Nodes whose
// normal is degenerate are skipped; AllSingular if none remain.
AngleField angle_field(const Surface& S, const Vec3& k, int ns, int nv,
                       const Tolerances& tol);

AngleVerdict constant_angle_verdict(const AngleField& field, const Tolerances& tol);

// Best-fit plane <N, k> = c through unit normals, solved as a symmetric
// 3x3 eigenproblem on the centered covariance (closed-form characteristic
// cubic, no external solver). If all normals coincide the common direction
// is returned with theta = 0; rank-deficient inputs throw DegenerateFit.
DirectionFit fit_direction_to_circle(const std::vector<Vec3>& normals,
                                     const Tolerances& tol);

// Exhaustive search over sphere_grid(grid_n); the acceptance oracle for the
// plane fit, never the production path.
DirectionFit fit_direction_brute_force(const std::vector<Vec3>& normals, int grid_n);

NormalSurfaceResiduals normal_surface_residuals(const FrenetApparatus& frame,
                                                const Vec3& k, double theta);

// End-to-end constant-angle classification: fit an axis to sampled normals,
// verify constancy of the angle field against it, and name the case from
// the family tag (tangent developables of helices, planes, cylinders,
// circular cones) or from the fit structure for custom surfaces.
ClassificationReport classify(const Surface& S, const Tolerances& tol, int ns = 32,
                              int nv = 32);

// Flat key-value record of a report, one "key = value" line per field.
std::string to_record(const ClassificationReport& report);

}  // namespace constangle
