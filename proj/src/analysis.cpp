#include "constangle/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "constangle/curve.hpp"

namespace constangle {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Sym3 {
    // Symmetric 3x3 matrix, unique entries.
    double xx = 0, xy = 0, xz = 0, yy = 0, yz = 0, zz = 0;

    Vec3 apply(const Vec3& v) const {
        return {xx * v.x + xy * v.y + xz * v.z, xy * v.x + yy * v.y + yz * v.z,
                xz * v.x + yz * v.y + zz * v.z};
    }
    double trace() const { return xx + yy + zz; }
};

// Eigenvalues of a symmetric 3x3 matrix by the trigonometric solution of the
// characteristic cubic, ascending order.
std::array<double, 3> sym3_eigenvalues(const Sym3& a) {
    const double p1 = a.xy * a.xy + a.xz * a.xz + a.yz * a.yz;
    if (p1 < 1e-30) {
        std::array<double, 3> d{a.xx, a.yy, a.zz};
        std::sort(d.begin(), d.end());
        return d;
    }
    const double q = a.trace() / 3.0;
    const double dxx = a.xx - q, dyy = a.yy - q, dzz = a.zz - q;
    const double p2 = dxx * dxx + dyy * dyy + dzz * dzz + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    // det((A - qI)/p) / 2
    const double bxx = dxx / p, byy = dyy / p, bzz = dzz / p;
    const double bxy = a.xy / p, bxz = a.xz / p, byz = a.yz / p;
    const double detb = bxx * (byy * bzz - byz * byz) - bxy * (bxy * bzz - byz * bxz) +
                        bxz * (bxy * byz - byy * bxz);
    const double r = std::clamp(detb / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double e1 = q + 2.0 * p * std::cos(phi);
    const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * kPi / 3.0);
    const double e2 = 3.0 * q - e1 - e3;
    std::array<double, 3> d{e3, e2, e1};
    std::sort(d.begin(), d.end());
    return d;
}

// Eigenvector for an isolated eigenvalue: the largest cross product of two
// rows of (A - lambda I).
Vec3 sym3_eigenvector(const Sym3& a, double lambda) {
    const Vec3 r0{a.xx - lambda, a.xy, a.xz};
    const Vec3 r1{a.xy, a.yy - lambda, a.yz};
    const Vec3 r2{a.xz, a.yz, a.zz - lambda};
    const Vec3 c01 = cross(r0, r1);
    const Vec3 c02 = cross(r0, r2);
    const Vec3 c12 = cross(r1, r2);
    const double n01 = c01.norm2(), n02 = c02.norm2(), n12 = c12.norm2();
    Vec3 best = c01;
    double best_n = n01;
    if (n02 > best_n) { best = c02; best_n = n02; }
    if (n12 > best_n) { best = c12; best_n = n12; }
    if (best_n < 1e-60)
        throw DegenerateFit("fit_direction_to_circle: eigenvector is not isolated");
    return best / std::sqrt(best_n);
}

double fold_angle(double cosine) { return std::acos(std::clamp(std::abs(cosine), 0.0, 1.0)); }

std::vector<double> interior_samples(const Interval& range, int count) {
    std::vector<double> out(count);
    for (int i = 0; i < count; ++i)
        out[i] = range.lo + range.width() * (i + 0.5) / count;
    return out;
}

struct GridNodeSample {
    double s, v;
    Vec3 normal;
};

// Normals on the same inset grid the angle field uses.
std::vector<GridNodeSample> sample_normals(const Surface& S, int ns, int nv,
                                           const Tolerances& tol) {
    const double inset_s = 0.01 * S.s_range.width();
    const double inset_v = 0.01 * S.v_range.width();
    const Interval si{S.s_range.lo + inset_s, S.s_range.hi - inset_s};
    const Interval vi{S.v_range.lo + inset_v, S.v_range.hi - inset_v};
    std::vector<GridNodeSample> out;
    out.reserve(static_cast<size_t>(ns) * nv);
    for (int j = 0; j < nv; ++j) {
        const double v = nv == 1 ? vi.midpoint() : vi.lo + vi.width() * j / (nv - 1);
        if (S.singular_v && std::abs(v - *S.singular_v) < inset_v) continue;
        for (int i = 0; i < ns; ++i) {
            const double s = ns == 1 ? si.midpoint() : si.lo + si.width() * i / (ns - 1);
            try {
                out.push_back({s, v, surface_normal(S, s, v, tol)});
            } catch (const Error&) {
                // singular node, skip
            }
        }
    }
    return out;
}

bool tau_vanishes(const Curve& gen, const Tolerances& tol, double* tau_max_out) {
    double tau_max = 0.0;
    for (double s : interior_samples(gen.domain, 100)) {
        const FrenetApparatus f = frenet_apparatus(gen, s, tol);
        tau_max = std::max(tau_max, std::abs(f.tau));
    }
    if (tau_max_out) *tau_max_out = tau_max;
    return tau_max <= 1e-4;
}

}  // namespace

const char* to_string(CaseLabel label) {
    switch (label) {
        case CaseLabel::TheoremAI: return "theorem-a-i";
        case CaseLabel::Plane: return "plane";
        case CaseLabel::Cylinder: return "cylinder";
        default: return "circular-cone";
    }
}

AngleField angle_field(const Surface& S, const Vec3& k, int ns, int nv,
                       const Tolerances& tol) {
    if (ns < 2 || nv < 2)
        throw std::invalid_argument("angle_field: grid must be at least 2x2");
    const Vec3 dir = canonical_sign(k.normalized());
    AngleField field;
    field.direction = dir;
    field.surface = &S;
    for (const GridNodeSample& node : sample_normals(S, ns, nv, tol))
        field.samples.push_back({node.s, node.v, fold_angle(dot(node.normal, dir))});
    if (field.samples.empty())
        throw AllSingular("angle_field: no valid sample on the grid");
    return field;
}

AngleVerdict constant_angle_verdict(const AngleField& field, const Tolerances& tol) {
    if (field.samples.empty())
        throw std::invalid_argument("constant_angle_verdict: empty field");
    double mean = 0.0;
    for (const AngleSample& s : field.samples) mean += s.angle;
    mean /= field.samples.size();
    double max_dev = 0.0;
    for (const AngleSample& s : field.samples)
        max_dev = std::max(max_dev, std::abs(s.angle - mean));
    return {max_dev <= tol.angle_tol, mean, max_dev};
}

DirectionFit fit_direction_to_circle(const std::vector<Vec3>& normals,
                                     const Tolerances& tol) {
    (void)tol;
    const size_t n = normals.size();
    if (n < 3)
        throw std::invalid_argument("fit_direction_to_circle: need at least 3 normals");

    Vec3 mean;
    for (const Vec3& v : normals) mean += v;
    mean = mean / static_cast<double>(n);

    double spread = 0.0;
    for (const Vec3& v : normals) spread = std::max(spread, (v - mean).norm());
    if (spread <= 1e-8) {
        // All normals coincide: plane case, any axis through them fits.
        return {canonical_sign(mean.normalized()), 0.0, 0.0};
    }

    Sym3 cov;
    for (const Vec3& v : normals) {
        const Vec3 d = v - mean;
        cov.xx += d.x * d.x;
        cov.xy += d.x * d.y;
        cov.xz += d.x * d.z;
        cov.yy += d.y * d.y;
        cov.yz += d.y * d.z;
        cov.zz += d.z * d.z;
    }

    const auto eig = sym3_eigenvalues(cov);
    if (eig[1] <= 1e-10 * std::max(eig[2], 1e-30))
        throw DegenerateFit("fit_direction_to_circle: normals span a degenerate set");
    const Vec3 axis = canonical_sign(sym3_eigenvector(cov, eig[0]));

    const double c = dot(mean, axis);
    double ss = 0.0;
    for (const Vec3& v : normals) {
        const double r = dot(v, axis) - c;
        ss += r * r;
    }
    return {axis, fold_angle(c), std::sqrt(ss / static_cast<double>(n))};
}

DirectionFit fit_direction_brute_force(const std::vector<Vec3>& normals, int grid_n) {
    if (normals.size() < 3)
        throw std::invalid_argument("fit_direction_brute_force: need at least 3 normals");
    DirectionFit best;
    double best_ss = std::numeric_limits<double>::infinity();
    for (const Vec3& k : sphere_grid(grid_n)) {
        double mean = 0.0;
        for (const Vec3& v : normals) mean += dot(v, k);
        mean /= static_cast<double>(normals.size());
        double ss = 0.0;
        for (const Vec3& v : normals) {
            const double r = dot(v, k) - mean;
            ss += r * r;
        }
        if (ss < best_ss) {
            best_ss = ss;
            best.axis = k;
            best.theta = fold_angle(mean);
        }
    }
    best.residual = std::sqrt(best_ss / static_cast<double>(normals.size()));
    best.axis = canonical_sign(best.axis);
    return best;
}

NormalSurfaceResiduals normal_surface_residuals(const FrenetApparatus& frame,
                                                const Vec3& k, double theta) {
    const double bk = dot(frame.b, k);
    const double tk = dot(frame.t, k);
    const double c2t = std::cos(theta) * std::cos(theta);
    NormalSurfaceResiduals out;
    out.c0 = bk * bk - c2t;
    out.c1 = frame.kappa * bk * bk + frame.tau * bk * tk - frame.kappa * c2t;
    const double lead = frame.kappa * bk + frame.tau * tk;
    out.c2 = lead * lead - (frame.kappa * frame.kappa + frame.tau * frame.tau) * c2t;
    return out;
}

ClassificationReport classify(const Surface& S, const Tolerances& tol, int ns, int nv) {
    const auto nodes = sample_normals(S, ns, nv, tol);
    if (nodes.empty()) throw AllSingular("classify: no valid sample on the grid");

    std::vector<Vec3> normals;
    normals.reserve(nodes.size());
    for (const auto& node : nodes) normals.push_back(node.normal);

    ClassificationReport report;

    DirectionFit fit;
    bool fit_ok = true;
    try {
        fit = fit_direction_to_circle(normals, tol);
    } catch (const DegenerateFit&) {
        fit_ok = false;
    }
    if (!fit_ok) {
        report.constant_angle = false;
        report.evidence.fit_residual = std::numeric_limits<double>::infinity();
        report.evidence.max_angle_dev = std::numeric_limits<double>::infinity();
        return report;
    }

    double mean_angle = 0.0, max_dev = 0.0;
    {
        std::vector<double> angles;
        angles.reserve(nodes.size());
        for (const auto& node : nodes) angles.push_back(fold_angle(dot(node.normal, fit.axis)));
        for (double a : angles) mean_angle += a;
        mean_angle /= angles.size();
        for (double a : angles) max_dev = std::max(max_dev, std::abs(a - mean_angle));
    }

    report.evidence.fit_residual = fit.residual;
    report.evidence.max_angle_dev = max_dev;
    report.axis = fit.axis;
    report.theta = mean_angle;
    report.constant_angle = fit.residual <= tol.angle_tol && max_dev <= tol.angle_tol;

    // Family-specific evidence, gathered even for negative verdicts.
    const Curve* gen = S.generator ? S.generator.get() : nullptr;
    std::optional<bool> tau_zero;
    if (gen && (S.family == SurfaceFamily::NormalSurface ||
                S.family == SurfaceFamily::BinormalSurface)) {
        double tau_max = 0.0;
        tau_zero = tau_vanishes(*gen, tol, &tau_max);
        report.evidence.tau_max = tau_max;
    }
    std::optional<bool> helix_ok;
    if (gen && S.family == SurfaceFamily::TangentDevelopable) {
        const HelixTestResult h = helix_test(*gen, 100, tol);
        helix_ok = h.is_helix;
        report.evidence.helix_max_dev = h.max_dev;
    }
    std::optional<bool> kappa_g_const;
    if (gen && S.family == SurfaceFamily::Cone) {
        double kg_min = std::numeric_limits<double>::infinity();
        double kg_max = -kg_min;
        double witness = 0.0;
        double kg_mean = 0.0;
        const auto samples = interior_samples(gen->domain, 100);
        for (double s : samples) {
            const double kg = geodesic_curvature_spherical(*gen, s, tol);
            kg_min = std::min(kg_min, kg);
            kg_max = std::max(kg_max, kg);
            kg_mean += kg;
            const Vec3 alpha = gen->position(s);
            const Vec3 app = gen->deriv(s, 2, tol.fd_step);
            witness = std::max(witness, std::abs(dot(cross(alpha, app), fit.axis)));
        }
        kg_mean /= samples.size();
        report.evidence.kappa_g_spread = kg_max - kg_min;
        report.evidence.cone_witness = witness;
        kappa_g_const = (kg_max - kg_min) <= 1e-3 * (1.0 + std::abs(kg_mean));
    }

    if (!report.constant_angle) return report;

    auto label_from_fit_structure = [&]() {
        double spread = 0.0;
        Vec3 mean;
        for (const Vec3& v : normals) mean += v;
        mean = mean / static_cast<double>(normals.size());
        for (const Vec3& v : normals) spread = std::max(spread, (v - mean).norm());
        if (spread <= 1e-8) return CaseLabel::Plane;
        if (std::abs(mean_angle - 0.5 * kPi) <= tol.angle_tol) return CaseLabel::Cylinder;
        return CaseLabel::TheoremAI;
    };

    switch (S.family) {
        case SurfaceFamily::TangentDevelopable:
            report.label = (helix_ok && *helix_ok) ? CaseLabel::TheoremAI
                                                   : label_from_fit_structure();
            break;
        case SurfaceFamily::NormalSurface:
            report.label = (tau_zero && *tau_zero) ? CaseLabel::Plane
                                                   : label_from_fit_structure();
            break;
        case SurfaceFamily::BinormalSurface:
            report.label = (tau_zero && *tau_zero &&
                            std::abs(mean_angle - 0.5 * kPi) <= tol.angle_tol)
                               ? CaseLabel::Cylinder
                               : label_from_fit_structure();
            break;
        case SurfaceFamily::Cone:
            report.label = (kappa_g_const && *kappa_g_const) ? CaseLabel::CircularCone
                                                             : label_from_fit_structure();
            break;
        case SurfaceFamily::TheoremA:
            report.label = CaseLabel::TheoremAI;
            break;
        default:
            report.label = label_from_fit_structure();
            break;
    }
    return report;
}

std::string to_record(const ClassificationReport& report) {
    std::ostringstream os;
    os.precision(12);
    os << "verdict = " << (report.constant_angle ? "constant-angle" : "not-constant-angle")
       << "\n";
    if (report.label) os << "case = " << to_string(*report.label) << "\n";
    if (report.theta) os << "theta = " << *report.theta << "\n";
    if (report.axis)
        os << "axis = " << report.axis->x << "," << report.axis->y << ","
           << report.axis->z << "\n";
    os << "max_angle_dev = " << report.evidence.max_angle_dev << "\n";
    os << "fit_residual = " << report.evidence.fit_residual << "\n";
    if (report.evidence.tau_max) os << "tau_max = " << *report.evidence.tau_max << "\n";
    if (report.evidence.kappa_g_spread)
        os << "kappa_g_spread = " << *report.evidence.kappa_g_spread << "\n";
    if (report.evidence.helix_max_dev)
        os << "helix_max_dev = " << *report.evidence.helix_max_dev << "\n";
    if (report.evidence.cone_witness)
        os << "cone_witness = " << *report.evidence.cone_witness << "\n";
    return os.str();
}

}  // namespace constangle
