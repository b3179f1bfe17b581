#pragma once

#include <cmath>

namespace constangle {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double a) const { return {x * a, y * a, z * a}; }
    constexpr Vec3 operator/(double a) const { return {x / a, y / a, z / a}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double a) { x *= a; y *= a; z *= a; return *this; }

    constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    constexpr Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    constexpr double norm2() const { return x * x + y * y + z * z; }
    Vec3 normalized() const { return *this / norm(); }

    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
};

inline constexpr Vec3 operator*(double a, const Vec3& v) { return v * a; }

inline double dot(const Vec3& a, const Vec3& b) { return a.dot(b); }
inline Vec3 cross(const Vec3& a, const Vec3& b) { return a.cross(b); }

// Maximum absolute component difference, handy for tolerance checks.
inline double max_abs_diff(const Vec3& a, const Vec3& b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

// Antipodal representative with nonnegative z (ties broken by y, then x).
// Fixed directions and surface normals are reported in this form so that
// k and -k describe the same angle property.
inline Vec3 canonical_sign(const Vec3& v, double tie_eps = 1e-12) {
    if (v.z > tie_eps) return v;
    if (v.z < -tie_eps) return -v;
    if (v.y > tie_eps) return v;
    if (v.y < -tie_eps) return -v;
    return v.x >= 0.0 ? v : -v;
}

}  // namespace constangle
