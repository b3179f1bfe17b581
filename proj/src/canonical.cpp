#include "constangle/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

namespace constangle {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Strict monotonicity at 64 equispaced samples; returns true when increasing.
bool check_monotone(const ScalarFn& f) {
    constexpr int kSamples = 64;
    const double w = f.domain.width();
    double prev = f(f.domain.lo);
    bool increasing = true, decreasing = true;
    for (int i = 1; i < kSamples; ++i) {
        const double cur = f(f.domain.lo + w * i / (kSamples - 1));
        if (!(prev < cur)) increasing = false;
        if (!(prev > cur)) decreasing = false;
        prev = cur;
    }
    if (!increasing && !decreasing)
        throw NotMonotone("eta_from_lambda: lambda is not strictly monotone");
    return increasing;
}

}  // namespace

std::pair<double, double> CanonicalMap::forward(double s, double v) const {
    return canonical_params(s, v, lambda);
}

std::pair<double, double> canonical_params(double s, double v, const ScalarFn& lambda) {
    return {s + v, 0.5 * kPi - lambda(s)};
}

ScalarFn eta_from_lambda(const ScalarFn& lambda, const Tolerances& tol) {
    const bool increasing = check_monotone(lambda);
    const double lam_lo = lambda(lambda.domain.lo);
    const double lam_hi = lambda(lambda.domain.hi);
    const double img_lo = increasing ? lam_lo : lam_hi;
    const double img_hi = increasing ? lam_hi : lam_lo;

    auto lam = std::make_shared<ScalarFn>(lambda);
    const double root_tol = tol.root_tol;
    ScalarFn eta;
    // tau ranges over the image of the u2 map: pi/2 - image(lambda).
    eta.domain = {0.5 * kPi - img_hi, 0.5 * kPi - img_lo};
    eta.f = [lam, root_tol](double tau) {
        return -invert_monotone(*lam, 0.5 * kPi - tau, lam->domain, root_tol);
    };
    return eta;
}

TranslationEquivalence verify_translation_equivalence(
    const Surface& A, const Surface& B,
    const std::function<std::pair<double, double>(double, double)>& forward, int ns,
    int nv, double pos_tol) {
    if (ns < 2 || nv < 2)
        throw std::invalid_argument("verify_translation_equivalence: grid too small");

    const double slack_s = 1e-9 * (1.0 + std::abs(B.s_range.lo) + std::abs(B.s_range.hi));
    const double slack_v = 1e-9 * (1.0 + std::abs(B.v_range.lo) + std::abs(B.v_range.hi));

    std::vector<Vec3> diffs;
    diffs.reserve(static_cast<size_t>(ns) * nv);
    for (int j = 0; j < nv; ++j) {
        const double v = A.v_range.lo + A.v_range.width() * j / (nv - 1);
        for (int i = 0; i < ns; ++i) {
            const double s = A.s_range.lo + A.s_range.width() * i / (ns - 1);
            const auto [u1, u2] = forward(s, v);
            if (!B.s_range.contains(u1, slack_s) || !B.v_range.contains(u2, slack_v))
                throw GridMismatch(
                    "verify_translation_equivalence: forward image leaves B's rectangle");
            diffs.push_back(B.position(u1, u2) - A.position(s, v));
        }
    }

    Vec3 mean;
    for (const Vec3& d : diffs) mean += d;
    mean = mean / static_cast<double>(diffs.size());

    double max_dev = 0.0;
    for (const Vec3& d : diffs) max_dev = std::max(max_dev, (d - mean).norm());

    TranslationEquivalence out;
    out.translation = mean;
    out.max_dev = max_dev;
    out.equivalent = max_dev <= pos_tol && std::abs(mean.z) <= 1e-6;
    return out;
}

TranslationEquivalence verify_translation_equivalence(const Surface& A,
                                                      const Surface& B,
                                                      const CanonicalMap& map, int ns,
                                                      int nv, double pos_tol) {
    return verify_translation_equivalence(
        A, B, [&map](double s, double v) { return map.forward(s, v); }, ns, nv, pos_tol);
}

}  // namespace constangle
