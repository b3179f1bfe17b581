#include "constangle/numkit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace constangle {

namespace {

constexpr double kPi = 3.14159265358979323846;

double stencil_halfwidth(int order, double h) {
    return order == 3 ? 2.0 * h : h;
}

void check_order(int order) {
    if (order < 1 || order > 3)
        throw std::invalid_argument("fd_derive: order must be 1, 2 or 3");
}

template <typename Fn, typename Value>
Value central_difference(const Fn& f, double t, int order, double h) {
    switch (order) {
        case 1:
            return (f(t + h) - f(t - h)) / (2.0 * h);
        case 2:
            return (f(t + h) - f(t) * 2.0 + f(t - h)) / (h * h);
        default:
            return (f(t + 2.0 * h) - f(t + h) * 2.0 + f(t - h) * 2.0 - f(t - 2.0 * h)) /
                   (2.0 * h * h * h);
    }
}

template <typename Fn, typename Value>
Value fd_derive_impl(const Fn& fn, double t, int order, double h) {
    check_order(order);
    if (h == 0.0) h = default_fd_step(order);
    if (h <= 0.0) throw std::invalid_argument("fd_derive: step must be positive");
    const double span = stencil_halfwidth(order, h);
    if (!fn.domain.contains(t - span) || !fn.domain.contains(t + span))
        throw DomainExceeded("fd_derive: stencil leaves the function domain");
    return central_difference<decltype(fn.f), Value>(fn.f, t, order, h);
}

struct QuadBudget {
    long evals = 0;
    static constexpr long kMax = 1'000'000;
    void charge(long n) {
        evals += n;
        if (evals > kMax)
            throw NoConvergence("quad: evaluation budget exhausted");
    }
};

double simpson(double fa, double fm, double fb, double len) {
    return len / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, QuadBudget& budget, double a,
             double b, double fa, double fm, double fb, double whole, double tol,
             int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    budget.charge(2);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    if (depth >= 50)
        throw NoConvergence("quad: interval refinement exhausted before tolerance");
    return adapt(f, budget, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           adapt(f, budget, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

double quad_impl(const std::function<double(double)>& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    QuadBudget budget;
    budget.charge(3);
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = simpson(fa, fm, fb, b - a);
    return adapt(f, budget, a, b, fa, fm, fb, whole, tol, 0);
}

void check_quad_range(const Interval& domain, double a, double b) {
    if (a > b) throw std::invalid_argument("quad: requires a <= b");
    const double slack = 1e-12 * (1.0 + std::abs(a) + std::abs(b));
    if (!domain.contains(a, slack) || !domain.contains(b, slack))
        throw DomainExceeded("quad: integration range leaves the function domain");
}

}  // namespace

double fd_derive(const ScalarFn& f, double t, int order, double h) {
    return fd_derive_impl<ScalarFn, double>(f, t, order, h);
}

Vec3 fd_derive(const VectorFn& f, double t, int order, double h) {
    return fd_derive_impl<VectorFn, Vec3>(f, t, order, h);
}

double quad(const ScalarFn& f, double a, double b, double tol) {
    check_quad_range(f.domain, a, b);
    return quad_impl(f.f, a, b, tol);
}

Vec3 quad(const VectorFn& f, double a, double b, double tol) {
    check_quad_range(f.domain, a, b);
    Vec3 out;
    for (int i = 0; i < 3; ++i) {
        auto component = [&f, i](double t) { return f.f(t)[i]; };
        out[i] = quad_impl(component, a, b, tol);
    }
    return out;
}

double invert_monotone(const ScalarFn& f, double y, Interval bracket, double tol) {
    constexpr int kSamples = 64;
    const double width = bracket.width();
    if (width <= 0.0)
        throw std::invalid_argument("invert_monotone: empty bracket");

    double ts[kSamples];
    double vs[kSamples];
    for (int i = 0; i < kSamples; ++i) {
        ts[i] = bracket.lo + width * i / (kSamples - 1);
        vs[i] = f(ts[i]);
    }
    bool increasing = true, decreasing = true;
    for (int i = 0; i + 1 < kSamples; ++i) {
        if (!(vs[i] < vs[i + 1])) increasing = false;
        if (!(vs[i] > vs[i + 1])) decreasing = false;
    }
    if (!increasing && !decreasing)
        throw NotMonotone("invert_monotone: sampled values are not strictly ordered");

    const double vmin = std::min(vs[0], vs[kSamples - 1]);
    const double vmax = std::max(vs[0], vs[kSamples - 1]);
    const double slack = 1e-12 * (1.0 + std::abs(vmin) + std::abs(vmax));
    if (y < vmin - slack || y > vmax + slack)
        throw NotBracketed("invert_monotone: target outside the sampled range");
    y = std::clamp(y, vmin, vmax);

    // Locate the bracketing sample pair.
    int idx = 0;
    for (int i = 0; i + 1 < kSamples; ++i) {
        const double a = std::min(vs[i], vs[i + 1]);
        const double b = std::max(vs[i], vs[i + 1]);
        if (y >= a && y <= b) { idx = i; break; }
    }
    double lo = ts[idx], hi = ts[idx + 1];
    double glo = vs[idx] - y, ghi = vs[idx + 1] - y;
    if (std::abs(glo) <= tol) return lo;
    if (std::abs(ghi) <= tol) return hi;

    double t = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        // Secant candidate, falling back to bisection when it leaves the bracket.
        double cand = 0.5 * (lo + hi);
        const double denom = ghi - glo;
        if (denom != 0.0) {
            const double sec = lo - glo * (hi - lo) / denom;
            if (sec > lo && sec < hi) cand = sec;
        }
        t = cand;
        const double gt = f(t) - y;
        if (std::abs(gt) <= tol) return t;
        if ((gt > 0.0) == (ghi > 0.0)) {
            hi = t;
            ghi = gt;
        } else {
            lo = t;
            glo = gt;
        }
        if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(t)))
            break;
    }
    return t;
}

std::vector<Vec3> sphere_grid(int n) {
    if (n < 2) throw std::invalid_argument("sphere_grid: n must be >= 2");
    std::vector<Vec3> out;
    out.reserve(static_cast<size_t>(3 * n * n));
    out.push_back({0.0, 0.0, 1.0});
    const double dphi = 0.5 * kPi / n;
    for (int i = 1; i <= n; ++i) {
        const double phi = i * dphi;
        const double sp = std::sin(phi), cp = std::cos(phi);
        const int ring = std::max(6, static_cast<int>(std::ceil(2.0 * kPi * sp / dphi)));
        for (int j = 0; j < ring; ++j) {
            const double az = 2.0 * kPi * j / ring;
            out.push_back({sp * std::cos(az), sp * std::sin(az), cp});
        }
    }
    return out;
}

}  // namespace constangle
