#include "constangle/curve.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

#include "constangle/analysis.hpp"

namespace constangle {

namespace {

// Central difference with the stencil shifted inward when t sits within a
// stencil span of a domain end. Keeps derivative evaluation total on the
// domain at the cost of a small O(h) shift error at the very edges.
Vec3 fd_clamped(const std::function<Vec3(double)>& f, const Interval& dom, double t,
                int order, double h) {
    if (h == 0.0) h = default_fd_step(order);
    const double span = (order == 3 ? 2.0 : 1.0) * h;
    if (dom.width() < 2.0 * span)
        throw DomainExceeded("curve derivative: domain narrower than the stencil");
    const double tc = std::clamp(t, dom.lo + span, dom.hi - span);
    switch (order) {
        case 1:
            return (f(tc + h) - f(tc - h)) / (2.0 * h);
        case 2:
            return (f(tc + h) - f(tc) * 2.0 + f(tc - h)) / (h * h);
        default:
            return (f(tc + 2.0 * h) - f(tc + h) * 2.0 + f(tc - h) * 2.0 - f(tc - 2.0 * h)) /
                   (2.0 * h * h * h);
    }
}

}  // namespace

Vec3 Curve::deriv(double t, int order, double h) const {
    switch (order) {
        case 1:
            if (d1) return d1(t);
            return fd_clamped(position, domain, t, 1, h);
        case 2:
            if (d2) return d2(t);
            if (d1) return fd_clamped(d1, domain, t, 1, h);
            return fd_clamped(position, domain, t, 2, h);
        case 3:
            if (d3) return d3(t);
            if (d2) return fd_clamped(d2, domain, t, 1, h == 0.0 ? kFdStepOrder3 : h);
            if (d1) return fd_clamped(d1, domain, t, 2, h);
            return fd_clamped(position, domain, t, 3, h);
        default:
            throw std::invalid_argument("Curve::deriv: order must be 1, 2 or 3");
    }
}

FrenetApparatus frenet_apparatus(const Curve& c, double s, const Tolerances& tol) {
    const Vec3 v = c.deriv(s, 1, tol.fd_step);
    if (std::abs(v.norm() - 1.0) > 1e-6)
        throw NotArcLength("frenet_apparatus: |alpha'| deviates from 1");

    const Vec3 a = c.deriv(s, 2, tol.fd_step);
    const double kappa = a.norm();
    if (kappa < tol.curvature_floor)
        throw CurvatureVanishes("frenet_apparatus: |alpha''| below the curvature floor");

    FrenetApparatus frame;
    frame.t = v;
    frame.kappa = kappa;
    frame.n = a / kappa;
    frame.b = cross(frame.t, frame.n);

    // tau = <n', b> with n' by a central difference of the normalized
    // alpha''/kappa field; avoids the triple-product cancellation at small kappa.
    auto unit_normal = [&c, &tol](double x) {
        const Vec3 acc = c.deriv(x, 2, tol.fd_step);
        return acc / acc.norm();
    };
    const Vec3 nprime = fd_clamped(unit_normal, c.domain, s, 1, tol.fd_step);
    frame.tau = dot(nprime, frame.b);
    return frame;
}

Curve arclength_reparam(const Curve& c, const Tolerances& tol) {
    constexpr int kPanels = 1024;
    const double t0 = c.domain.lo;
    const double dt = c.domain.width() / kPanels;
    if (dt <= 0.0)
        throw std::invalid_argument("arclength_reparam: empty parameter interval");

    auto source = std::make_shared<Curve>(c);
    auto speed = [source, &tol](double t) { return source->deriv(t, 1, tol.fd_step).norm(); };

    // Cumulative length at the panel knots, one Simpson rule per panel.
    auto table = std::make_shared<std::vector<double>>(kPanels + 1, 0.0);
    double prev = speed(t0);
    for (int i = 0; i < kPanels; ++i) {
        const double a = t0 + i * dt;
        const double mid_speed = speed(a + 0.5 * dt);
        const double next = speed(a + dt);
        if (prev < 1e-9 || mid_speed < 1e-9)
            throw SingularParametrization("arclength_reparam: speed vanishes on the grid");
        (*table)[i + 1] = (*table)[i] + dt / 6.0 * (prev + 4.0 * mid_speed + next);
        prev = next;
    }
    if (prev < 1e-9)
        throw SingularParametrization("arclength_reparam: speed vanishes on the grid");
    const double total = table->back();

    // s(t): table entry of the enclosing panel plus one local Simpson rule.
    auto speed_fn = std::make_shared<std::function<double(double)>>(
        [source, tol](double t) { return source->deriv(t, 1, tol.fd_step).norm(); });
    ScalarFn s_of_t{c.domain, [table, speed_fn, t0, dt](double t) {
        int i = static_cast<int>(std::floor((t - t0) / dt));
        i = std::clamp(i, 0, kPanels - 1);
        const double a = t0 + i * dt;
        const double len = t - a;
        if (len <= 0.0) return (*table)[i];
        const double fa = (*speed_fn)(a);
        const double fm = (*speed_fn)(a + 0.5 * len);
        const double fb = (*speed_fn)(t);
        return (*table)[i] + len / 6.0 * (fa + 4.0 * fm + fb);
    }};

    const double root_tol = tol.root_tol;
    const Interval source_domain = c.domain;
    auto t_of_s = [s_of_t, source_domain, root_tol](double s) {
        return invert_monotone(s_of_t, s, source_domain, root_tol);
    };

    Curve out;
    out.domain = {0.0, total};
    out.arclength = true;
    out.position = [source, t_of_s](double s) { return source->position(t_of_s(s)); };
    // Chain rule through t(s); the source derivatives may themselves be
    // finite differences, which keeps row noise away from the root finder.
    out.d1 = [source, t_of_s, tol](double s) {
        const double t = t_of_s(s);
        const Vec3 cp = source->deriv(t, 1, tol.fd_step);
        return cp / cp.norm();
    };
    out.d2 = [source, t_of_s, tol](double s) {
        const double t = t_of_s(s);
        const Vec3 cp = source->deriv(t, 1, tol.fd_step);
        const Vec3 cpp = source->deriv(t, 2, tol.fd_step);
        const double sigma2 = cp.norm2();
        return cpp / sigma2 - cp * (dot(cp, cpp) / (sigma2 * sigma2));
    };
    out.d3 = [source, t_of_s, tol](double s) {
        const double t = t_of_s(s);
        const Vec3 cp = source->deriv(t, 1, tol.fd_step);
        const Vec3 cpp = source->deriv(t, 2, tol.fd_step);
        const Vec3 cppp = source->deriv(t, 3, tol.fd_step);
        const double sigma = cp.norm();
        const double s2 = sigma * sigma;
        const double s4 = s2 * s2;
        const double sprime = dot(cp, cpp) / sigma;
        const Vec3 dt_term = cppp / s2 - cpp * (2.0 * sprime / (s2 * sigma)) -
                             (cpp * dot(cp, cpp) + cp * (cpp.norm2() + dot(cp, cppp))) / s4 +
                             cp * (4.0 * dot(cp, cpp) * sprime / (s4 * sigma));
        return dt_term / sigma;
    };
    return out;
}

double geodesic_curvature_spherical(const Curve& c, double s, const Tolerances& tol) {
    const Vec3 alpha = c.position(s);
    if (std::abs(alpha.norm() - 1.0) > 1e-6)
        throw NotSpherical("geodesic_curvature_spherical: |alpha| deviates from 1");
    const Vec3 ap = c.deriv(s, 1, tol.fd_step);
    if (std::abs(ap.norm() - 1.0) > 1e-6)
        throw NotArcLength("geodesic_curvature_spherical: |alpha'| deviates from 1");
    const Vec3 app = c.deriv(s, 2, tol.fd_step);
    if (std::abs(dot(app, ap)) > 1e-4)
        throw NotArcLength("geodesic_curvature_spherical: <alpha'', alpha'> != 0");
    if (std::abs(dot(app, alpha) + 1.0) > 1e-4)
        throw NotSpherical("geodesic_curvature_spherical: <alpha'', alpha> != -1");
    return dot(app, cross(alpha, ap));
}

HelixTestResult helix_test(const Curve& c, int samples, const Tolerances& tol) {
    if (samples < 3) throw std::invalid_argument("helix_test: need at least 3 samples");
    std::vector<Vec3> binormals;
    std::vector<double> ratios;
    binormals.reserve(samples);
    ratios.reserve(samples);
    const double width = c.domain.width();
    for (int i = 0; i < samples; ++i) {
        const double s = c.domain.lo + width * (i + 0.5) / samples;
        const FrenetApparatus f = frenet_apparatus(c, s, tol);
        binormals.push_back(f.b);
        ratios.push_back(f.tau / f.kappa);
    }

    const DirectionFit fit = fit_direction_to_circle(binormals, tol);

    // Deviation against the fit's own signed offset so that curves whose
    // binormal points "down" the axis are not penalized by the sign fold.
    double mean_dot = 0.0;
    for (const Vec3& b : binormals) mean_dot += dot(b, fit.axis);
    mean_dot /= binormals.size();
    double max_dev = 0.0;
    for (const Vec3& b : binormals)
        max_dev = std::max(max_dev, std::abs(dot(b, fit.axis) - mean_dot));

    HelixTestResult out;
    out.max_dev = max_dev;
    out.is_helix = max_dev <= tol.angle_tol;
    out.axis = fit.axis;
    out.theta = fit.theta;

    const auto [lo_it, hi_it] = std::minmax_element(ratios.begin(), ratios.end());
    double mean_ratio = 0.0;
    for (double r : ratios) mean_ratio += r;
    mean_ratio /= ratios.size();
    out.lancret_constant = (*hi_it - *lo_it) <= 1e-3 * (1.0 + std::abs(mean_ratio));
    return out;
}

}  // namespace constangle
