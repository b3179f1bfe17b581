#include "constangle/generators.hpp"

#include <cmath>
#include <memory>

namespace constangle {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_theta_open(double theta) {
    if (!(theta > 0.0 && theta < 0.5 * kPi))
        throw std::invalid_argument("helix: theta must lie in (0, pi/2)");
}

}  // namespace

Curve circular_helix(double theta) {
    check_theta_open(theta);
    const double a = std::cos(theta);
    const double b = std::sin(theta);
    Curve c;
    c.domain = {-2.0 * kPi, 4.0 * kPi};
    c.arclength = true;
    c.position = [a, b](double s) { return Vec3{a * std::cos(s), a * std::sin(s), b * s}; };
    c.d1 = [a, b](double s) { return Vec3{-a * std::sin(s), a * std::cos(s), b}; };
    c.d2 = [a](double s) { return Vec3{-a * std::cos(s), -a * std::sin(s), 0.0}; };
    c.d3 = [a](double s) { return Vec3{a * std::sin(s), -a * std::cos(s), 0.0}; };
    return c;
}

Curve generalized_helix(const HelixSpec& spec, Interval s_range, const Tolerances& tol) {
    check_theta_open(spec.theta);
    if (!spec.lambda.f)
        throw std::invalid_argument("generalized_helix: lambda is empty");
    if (!spec.lambda.domain.contains(s_range.lo) || !spec.lambda.domain.contains(s_range.hi))
        throw std::invalid_argument("generalized_helix: s_range leaves lambda's domain");

    const double a = std::cos(spec.theta);
    const double b = std::sin(spec.theta);
    auto lambda = std::make_shared<ScalarFn>(spec.lambda);
    const double s0 = s_range.lo;
    const double quad_tol = tol.quad_tol;

    Curve c;
    c.domain = s_range;
    c.arclength = true;
    c.position = [a, b, lambda, s0, quad_tol](double s) {
        ScalarFn sin_l{lambda->domain, [lambda](double u) { return std::sin((*lambda)(u)); }};
        ScalarFn cos_l{lambda->domain, [lambda](double u) { return std::cos((*lambda)(u)); }};
        const double x = a * quad(sin_l, s0, s, quad_tol);
        const double y = a * quad(cos_l, s0, s, quad_tol);
        return Vec3{x, y, b * s};
    };
    c.d1 = [a, b, lambda](double s) {
        const double l = (*lambda)(s);
        return Vec3{a * std::sin(l), a * std::cos(l), b};
    };
    return c;
}

Curve planar_curve(const PlanarProfile& profile, const Vec3& plane_origin,
                   const Vec3& basis_u, const Vec3& basis_v) {
    if (std::abs(basis_u.norm() - 1.0) > 1e-9 || std::abs(basis_v.norm() - 1.0) > 1e-9 ||
        std::abs(dot(basis_u, basis_v)) > 1e-9)
        throw std::invalid_argument("planar_curve: plane basis must be orthonormal");

    auto p = std::make_shared<PlanarProfile>(profile);
    Curve c;
    c.domain = profile.domain;
    c.position = [p, plane_origin, basis_u, basis_v](double t) {
        return plane_origin + basis_u * p->x(t) + basis_v * p->y(t);
    };
    if (profile.dx && profile.dy)
        c.d1 = [p, basis_u, basis_v](double t) {
            return basis_u * p->dx(t) + basis_v * p->dy(t);
        };
    if (profile.ddx && profile.ddy)
        c.d2 = [p, basis_u, basis_v](double t) {
            return basis_u * p->ddx(t) + basis_v * p->ddy(t);
        };
    if (profile.dddx && profile.dddy)
        c.d3 = [p, basis_u, basis_v](double t) {
            return basis_u * p->dddx(t) + basis_v * p->dddy(t);
        };
    return c;
}

Curve spherical_circle(double phi) {
    if (!(phi > 0.0 && phi <= 0.5 * kPi))
        throw std::invalid_argument("spherical_circle: phi must lie in (0, pi/2]");
    const double r = std::sin(phi);
    const double h = std::cos(phi);
    Curve c;
    c.domain = {0.0, 2.0 * kPi * r};
    c.arclength = true;
    c.position = [r, h](double s) {
        const double u = s / r;
        return Vec3{r * std::cos(u), r * std::sin(u), h};
    };
    c.d1 = [r](double s) {
        const double u = s / r;
        return Vec3{-std::sin(u), std::cos(u), 0.0};
    };
    c.d2 = [r](double s) {
        const double u = s / r;
        return Vec3{-std::cos(u) / r, -std::sin(u) / r, 0.0};
    };
    c.d3 = [r](double s) {
        const double u = s / r;
        return Vec3{std::sin(u) / (r * r), -std::cos(u) / (r * r), 0.0};
    };
    return c;
}

Curve spherical_wave(double z0, double amplitude, int frequency, const Tolerances& tol) {
    if (std::abs(z0) + std::abs(amplitude) >= 4.0)
        throw std::invalid_argument("spherical_wave: loop parameters too large");
    const double a = amplitude;
    const int m = frequency;
    auto raw = [z0, a, m](double t) {
        return Vec3{std::cos(t), std::sin(t), z0 + a * std::cos(m * t)};
    };
    auto raw_d = [a, m](double t) {
        return Vec3{-std::sin(t), std::cos(t), -a * m * std::sin(m * t)};
    };
    Curve c;
    c.domain = {0.0, 2.0 * kPi};
    c.position = [raw](double t) { return raw(t).normalized(); };
    c.d1 = [raw, raw_d](double t) {
        const Vec3 p = raw(t);
        const Vec3 dp = raw_d(t);
        const double n = p.norm();
        return dp / n - p * (dot(p, dp) / (n * n * n));
    };
    return arclength_reparam(c, tol);
}

PlanarProfile circle_profile(double radius) {
    if (radius <= 0.0) throw std::invalid_argument("circle_profile: radius must be positive");
    PlanarProfile p;
    p.domain = {0.0, 2.0 * kPi};
    p.x = [radius](double t) { return radius * std::cos(t); };
    p.y = [radius](double t) { return radius * std::sin(t); };
    p.dx = [radius](double t) { return -radius * std::sin(t); };
    p.dy = [radius](double t) { return radius * std::cos(t); };
    p.ddx = [radius](double t) { return -radius * std::cos(t); };
    p.ddy = [radius](double t) { return -radius * std::sin(t); };
    p.dddx = [radius](double t) { return radius * std::sin(t); };
    p.dddy = [radius](double t) { return -radius * std::cos(t); };
    return p;
}

PlanarProfile parabola_profile(double half_width) {
    if (half_width <= 0.0)
        throw std::invalid_argument("parabola_profile: half_width must be positive");
    PlanarProfile p;
    p.domain = {-half_width, half_width};
    p.x = [](double t) { return t; };
    p.y = [](double t) { return t * t; };
    p.dx = [](double) { return 1.0; };
    p.dy = [](double t) { return 2.0 * t; };
    p.ddx = [](double) { return 0.0; };
    p.ddy = [](double) { return 2.0; };
    p.dddx = [](double) { return 0.0; };
    p.dddy = [](double) { return 0.0; };
    return p;
}

PlanarProfile ellipse_profile(double a, double b) {
    if (a <= 0.0 || b <= 0.0)
        throw std::invalid_argument("ellipse_profile: semi-axes must be positive");
    PlanarProfile p;
    p.domain = {0.0, 2.0 * kPi};
    p.x = [a](double t) { return a * std::cos(t); };
    p.y = [b](double t) { return b * std::sin(t); };
    p.dx = [a](double t) { return -a * std::sin(t); };
    p.dy = [b](double t) { return b * std::cos(t); };
    p.ddx = [a](double t) { return -a * std::cos(t); };
    p.ddy = [b](double t) { return -b * std::sin(t); };
    p.dddx = [a](double t) { return a * std::sin(t); };
    p.dddy = [b](double t) { return -b * std::cos(t); };
    return p;
}

Curve curve_from_samples(const std::vector<double>& t, const std::vector<Vec3>& p) {
    const size_t n = t.size();
    if (n < 3 || p.size() != n)
        throw std::invalid_argument("curve_from_samples: need >= 3 matching samples");
    for (size_t i = 0; i + 1 < n; ++i)
        if (!(t[i] < t[i + 1]))
            throw std::invalid_argument("curve_from_samples: knots must be strictly increasing");

    // Natural cubic spline per component: solve the tridiagonal system for
    // the second derivatives at the knots.
    struct Spline {
        std::vector<double> t;
        std::vector<Vec3> p;
        std::vector<Vec3> m;  // second derivatives
    };
    auto sp = std::make_shared<Spline>();
    sp->t = t;
    sp->p = p;
    sp->m.assign(n, Vec3{});

    std::vector<double> h(n - 1);
    for (size_t i = 0; i + 1 < n; ++i) h[i] = t[i + 1] - t[i];

    for (int comp = 0; comp < 3; ++comp) {
        std::vector<double> diag(n, 2.0), rhs(n, 0.0), sub(n, 0.0), sup(n, 0.0);
        diag[0] = diag[n - 1] = 1.0;  // natural ends: m = 0
        for (size_t i = 1; i + 1 < n; ++i) {
            sub[i] = h[i - 1] / 6.0;
            diag[i] = (h[i - 1] + h[i]) / 3.0;
            sup[i] = h[i] / 6.0;
            rhs[i] = (p[i + 1][comp] - p[i][comp]) / h[i] -
                     (p[i][comp] - p[i - 1][comp]) / h[i - 1];
        }
        // Thomas algorithm.
        for (size_t i = 1; i < n; ++i) {
            const double w = sub[i] / diag[i - 1];
            diag[i] -= w * sup[i - 1];
            rhs[i] -= w * rhs[i - 1];
        }
        sp->m[n - 1][comp] = rhs[n - 1] / diag[n - 1];
        for (size_t i = n - 1; i-- > 0;)
            sp->m[i][comp] = (rhs[i] - sup[i] * sp->m[i + 1][comp]) / diag[i];
    }

    auto locate = [sp](double x) {
        const auto& knots = sp->t;
        size_t lo = 0, hi = knots.size() - 1;
        while (hi - lo > 1) {
            const size_t mid = (lo + hi) / 2;
            if (knots[mid] <= x) lo = mid; else hi = mid;
        }
        return lo;
    };

    Curve c;
    c.domain = {t.front(), t.back()};
    c.position = [sp, locate](double x) {
        const size_t i = locate(x);
        const double hi = sp->t[i + 1] - sp->t[i];
        const double A = (sp->t[i + 1] - x) / hi;
        const double B = (x - sp->t[i]) / hi;
        return sp->p[i] * A + sp->p[i + 1] * B +
               (sp->m[i] * (A * A * A - A) + sp->m[i + 1] * (B * B * B - B)) * (hi * hi / 6.0);
    };
    c.d1 = [sp, locate](double x) {
        const size_t i = locate(x);
        const double hi = sp->t[i + 1] - sp->t[i];
        const double A = (sp->t[i + 1] - x) / hi;
        const double B = (x - sp->t[i]) / hi;
        return (sp->p[i + 1] - sp->p[i]) / hi +
               (sp->m[i + 1] * (3.0 * B * B - 1.0) - sp->m[i] * (3.0 * A * A - 1.0)) * (hi / 6.0);
    };
    c.d2 = [sp, locate](double x) {
        const size_t i = locate(x);
        const double hi = sp->t[i + 1] - sp->t[i];
        const double A = (sp->t[i + 1] - x) / hi;
        const double B = (x - sp->t[i]) / hi;
        return sp->m[i] * A + sp->m[i + 1] * B;
    };
    return c;
}

}  // namespace constangle
