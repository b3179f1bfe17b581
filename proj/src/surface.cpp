#include "constangle/surface.hpp"

#include <algorithm>
#include <cmath>

namespace constangle {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kCrossFloor = 1e-9;
constexpr double kDeltaFloor = 1e-18;
constexpr double kSecondStep = 1e-4;  // nested central differences

double clamp_into(double t, const Interval& range, double span) {
    return std::clamp(t, range.lo + span, range.hi - span);
}

// Frame-field derivative helpers for the normal/binormal builders: central
// differences of the unit n (or b) field along the generator.
Vec3 frame_field_d1(const std::shared_ptr<const Curve>& c,
                    const std::function<Vec3(double)>& field, double s, double h) {
    const double sc = clamp_into(s, c->domain, h);
    return (field(sc + h) - field(sc - h)) / (2.0 * h);
}

Vec3 frame_field_d2(const std::shared_ptr<const Curve>& c,
                    const std::function<Vec3(double)>& field, double s, double h) {
    const double sc = clamp_into(s, c->domain, h);
    return (field(sc + h) - field(sc) * 2.0 + field(sc - h)) / (h * h);
}

struct Partials {
    Vec3 r_s, r_v;
};

Partials first_partials(const Surface& S, double s, double v, const Tolerances& tol,
                        DerivativeMode mode) {
    if (mode == DerivativeMode::Auto && S.d_s && S.d_v)
        return {S.d_s(s, v), S.d_v(s, v)};
    const double hs = std::min(tol.fd_step, 0.25 * S.s_range.width());
    const double hv = std::min(tol.fd_step, 0.25 * S.v_range.width());
    const double sc = clamp_into(s, S.s_range, hs);
    const double vc = clamp_into(v, S.v_range, hv);
    const Vec3 rs = (S.position(sc + hs, v) - S.position(sc - hs, v)) / (2.0 * hs);
    const Vec3 rv = (S.position(s, vc + hv) - S.position(s, vc - hv)) / (2.0 * hv);
    return {rs, rv};
}

Vec3 second_partial_ss(const Surface& S, double s, double v, DerivativeMode mode) {
    if (mode == DerivativeMode::Auto && S.d_ss) return S.d_ss(s, v);
    const double h = std::min(kSecondStep, 0.25 * S.s_range.width());
    const double sc = clamp_into(s, S.s_range, h);
    return (S.position(sc + h, v) - S.position(sc, v) * 2.0 + S.position(sc - h, v)) /
           (h * h);
}

Vec3 second_partial_vv(const Surface& S, double s, double v, DerivativeMode mode) {
    if (mode == DerivativeMode::Auto && S.d_vv) return S.d_vv(s, v);
    const double h = std::min(kSecondStep, 0.25 * S.v_range.width());
    const double vc = clamp_into(v, S.v_range, h);
    return (S.position(s, vc + h) - S.position(s, vc) * 2.0 + S.position(s, vc - h)) /
           (h * h);
}

Vec3 second_partial_sv(const Surface& S, double s, double v, DerivativeMode mode) {
    if (mode == DerivativeMode::Auto && S.d_sv) return S.d_sv(s, v);
    const double hs = std::min(kSecondStep, 0.25 * S.s_range.width());
    const double hv = std::min(kSecondStep, 0.25 * S.v_range.width());
    const double sc = clamp_into(s, S.s_range, hs);
    const double vc = clamp_into(v, S.v_range, hv);
    return (S.position(sc + hs, vc + hv) - S.position(sc + hs, vc - hv) -
            S.position(sc - hs, vc + hv) + S.position(sc - hs, vc - hv)) /
           (4.0 * hs * hv);
}

void check_arclength_flag(const Curve& c, const char* where) {
    if (!c.arclength)
        throw NotArcLength(std::string(where) + ": generator must be arc-length");
}

}  // namespace

Surface build_ruled(const Curve& c, RuledKind kind, Interval v_range,
                    const Tolerances& tol) {
    check_arclength_flag(c, "build_ruled");
    auto gen = std::make_shared<const Curve>(c);

    Surface S;
    S.s_range = c.domain;
    S.v_range = v_range;
    S.generator = gen;

    if (kind == RuledKind::TangentDevelopable) {
        S.family = SurfaceFamily::TangentDevelopable;
        S.singular_v = 0.0;
        const double h = tol.fd_step;
        S.position = [gen, h](double s, double v) {
            return gen->position(s) + gen->deriv(s, 1, h) * v;
        };
        S.d_s = [gen, h](double s, double v) {
            return gen->deriv(s, 1, h) + gen->deriv(s, 2, h) * v;
        };
        S.d_v = [gen, h](double s, double) { return gen->deriv(s, 1, h); };
        S.d_ss = [gen, h](double s, double v) {
            return gen->deriv(s, 2, h) + gen->deriv(s, 3, h) * v;
        };
        S.d_sv = [gen, h](double s, double) { return gen->deriv(s, 2, h); };
        S.d_vv = [](double, double) { return Vec3{}; };
        return S;
    }

    // Normal and binormal surfaces need the frame; fail fast if the
    // curvature floor is violated somewhere obvious.
    for (int i = 0; i <= 16; ++i) {
        const double s = c.domain.lo + c.domain.width() * (i + 0.5) / 17.0;
        (void)frenet_apparatus(*gen, s, tol);
    }

    auto frame_vector = std::make_shared<std::function<Vec3(double)>>();
    if (kind == RuledKind::NormalSurface) {
        S.family = SurfaceFamily::NormalSurface;
        Tolerances t = tol;
        *frame_vector = [gen, t](double s) {
            const Vec3 acc = gen->deriv(s, 2, t.fd_step);
            return acc / acc.norm();
        };
    } else {
        S.family = SurfaceFamily::BinormalSurface;
        Tolerances t = tol;
        *frame_vector = [gen, t](double s) {
            const Vec3 tangent = gen->deriv(s, 1, t.fd_step);
            const Vec3 acc = gen->deriv(s, 2, t.fd_step);
            return cross(tangent, acc / acc.norm());
        };
    }

    const double h = tol.fd_step;
    S.position = [gen, frame_vector](double s, double v) {
        return gen->position(s) + (*frame_vector)(s)*v;
    };
    S.d_s = [gen, frame_vector, h](double s, double v) {
        return gen->deriv(s, 1, h) + frame_field_d1(gen, *frame_vector, s, h) * v;
    };
    S.d_v = [frame_vector](double s, double) { return (*frame_vector)(s); };
    S.d_ss = [gen, frame_vector, h](double s, double v) {
        return gen->deriv(s, 2, h) +
               frame_field_d2(gen, *frame_vector, s, kSecondStep) * v;
    };
    S.d_sv = [gen, frame_vector, h](double s, double) {
        return frame_field_d1(gen, *frame_vector, s, h);
    };
    S.d_vv = [](double, double) { return Vec3{}; };
    return S;
}

Surface build_cone(const Curve& director, Interval v_range, const Tolerances& tol) {
    check_arclength_flag(director, "build_cone");
    for (int i = 0; i <= 32; ++i) {
        const double s = director.domain.lo + director.domain.width() * i / 32.0;
        if (std::abs(director.position(s).norm() - 1.0) > 1e-6)
            throw NotSpherical("build_cone: director must lie on the unit sphere");
    }
    auto gen = std::make_shared<const Curve>(director);
    const double h = tol.fd_step;

    Surface S;
    S.s_range = director.domain;
    S.v_range = v_range;
    S.family = SurfaceFamily::Cone;
    S.singular_v = 0.0;
    S.generator = gen;
    S.position = [gen](double s, double v) { return gen->position(s) * v; };
    S.d_s = [gen, h](double s, double v) { return gen->deriv(s, 1, h) * v; };
    S.d_v = [gen](double s, double) { return gen->position(s); };
    S.d_ss = [gen, h](double s, double v) { return gen->deriv(s, 2, h) * v; };
    S.d_sv = [gen, h](double s, double) { return gen->deriv(s, 1, h); };
    S.d_vv = [](double, double) { return Vec3{}; };
    return S;
}

std::array<double, 2> theorem_a_gamma(double theta, const ScalarFn& eta, double u2,
                                      const Tolerances& tol) {
    const double ct = std::cos(theta);
    ScalarFn eta_sin{eta.domain, [&eta](double t) { return eta.f(t) * std::sin(t); }};
    ScalarFn eta_cos{eta.domain, [&eta](double t) { return eta.f(t) * std::cos(t); }};
    // Signed integral from 0 to u2 in either direction.
    auto signed_quad = [&tol](const ScalarFn& f, double b) {
        return b >= 0.0 ? quad(f, 0.0, b, tol.quad_tol) : -quad(f, b, 0.0, tol.quad_tol);
    };
    return {-ct * signed_quad(eta_sin, u2), ct * signed_quad(eta_cos, u2)};
}

Surface theorem_a_surface(double theta, const ScalarFn& eta, Interval u1_range,
                          Interval u2_range, const Tolerances& tol) {
    if (!(theta >= 0.0 && theta < 0.5 * kPi))
        throw std::invalid_argument("theorem_a_surface: theta must lie in [0, pi/2)");
    if (!eta.f) throw std::invalid_argument("theorem_a_surface: eta is empty");
    const double lo = std::min(0.0, u2_range.lo);
    const double hi = std::max(0.0, u2_range.hi);
    if (!eta.domain.contains(lo, 1e-12) || !eta.domain.contains(hi, 1e-12))
        throw std::invalid_argument(
            "theorem_a_surface: eta's domain must cover u2_range and the anchor 0");

    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    auto eta_fn = std::make_shared<ScalarFn>(eta);
    const Tolerances t = tol;

    Surface S;
    S.s_range = u1_range;  // s plays u1
    S.v_range = u2_range;  // v plays u2
    S.family = SurfaceFamily::TheoremA;
    S.theta = theta;
    S.position = [theta, eta_fn, ct, st, t](double u1, double u2) {
        const auto g = theorem_a_gamma(theta, *eta_fn, u2, t);
        return Vec3{u1 * ct * std::cos(u2) + g[0], u1 * ct * std::sin(u2) + g[1],
                    u1 * st};
    };
    S.d_s = [ct, st](double, double u2) {
        return Vec3{ct * std::cos(u2), ct * std::sin(u2), st};
    };
    S.d_v = [eta_fn, ct](double u1, double u2) {
        const double e = (*eta_fn)(u2);
        return Vec3{-ct * (u1 + e) * std::sin(u2), ct * (u1 + e) * std::cos(u2), 0.0};
    };
    S.d_ss = [](double, double) { return Vec3{}; };
    S.d_sv = [ct](double, double u2) {
        return Vec3{-ct * std::sin(u2), ct * std::cos(u2), 0.0};
    };
    S.d_vv = [eta_fn, ct, t](double u1, double u2) {
        const double e = (*eta_fn)(u2);
        const double h = t.fd_step;
        const double span = h;
        const double uc = std::clamp(u2, eta_fn->domain.lo + span, eta_fn->domain.hi - span);
        const double eprime = ((*eta_fn)(uc + h) - (*eta_fn)(uc - h)) / (2.0 * h);
        const double c = std::cos(u2), s = std::sin(u2);
        return Vec3{-ct * ((u1 + e) * c + eprime * s),
                    -ct * ((u1 + e) * s - eprime * c), 0.0};
    };
    return S;
}

Vec3 surface_normal(const Surface& S, double s, double v, const Tolerances& tol,
                    DerivativeMode mode) {
    const Partials p = first_partials(S, s, v, tol, mode);
    const Vec3 c = cross(p.r_s, p.r_v);
    const double n = c.norm();
    if (n < kCrossFloor)
        throw DegenerateNormal("surface_normal: |r_s x r_v| below threshold");
    return canonical_sign(c / n);
}

Vec3 closed_form_ruled_normal(RuledKind kind, const FrenetApparatus& frame, double v) {
    switch (kind) {
        case RuledKind::TangentDevelopable:
            return canonical_sign(frame.b);
        case RuledKind::NormalSurface: {
            const double a = 1.0 - frame.kappa * v;
            const double delta = a * a + frame.tau * frame.tau * v * v;
            if (delta < kDeltaFloor)
                throw DegenerateNormal("closed_form_ruled_normal: Delta below threshold");
            return canonical_sign((frame.b * a - frame.t * (frame.tau * v)) /
                                  std::sqrt(delta));
        }
        default: {
            const double delta = 1.0 + frame.tau * frame.tau * v * v;
            if (delta < kDeltaFloor)
                throw DegenerateNormal("closed_form_ruled_normal: Delta below threshold");
            return canonical_sign((-frame.n - frame.t * (frame.tau * v)) /
                                  std::sqrt(delta));
        }
    }
}

FundamentalForms fundamental_forms(const Surface& S, double s, double v,
                                   const Tolerances& tol, DerivativeMode mode) {
    const Partials p = first_partials(S, s, v, tol, mode);
    const Vec3 c = cross(p.r_s, p.r_v);
    const double n = c.norm();
    if (n < kCrossFloor)
        throw DegenerateNormal("fundamental_forms: |r_s x r_v| below threshold");
    const Vec3 normal = canonical_sign(c / n);

    FundamentalForms out;
    out.E = dot(p.r_s, p.r_s);
    out.F = dot(p.r_s, p.r_v);
    out.G = dot(p.r_v, p.r_v);
    out.L = dot(second_partial_ss(S, s, v, mode), normal);
    out.M = dot(second_partial_sv(S, s, v, mode), normal);
    out.N2 = dot(second_partial_vv(S, s, v, mode), normal);
    out.normal = normal;
    return out;
}

double gaussian_curvature(const Surface& S, double s, double v, const Tolerances& tol,
                          DerivativeMode mode) {
    const FundamentalForms f = fundamental_forms(S, s, v, tol, mode);
    const double w = f.E * f.G - f.F * f.F;
    if (w < kDeltaFloor)
        throw DegenerateNormal("gaussian_curvature: first form is degenerate");
    return (f.L * f.N2 - f.M * f.M) / w;
}

}  // namespace constangle
