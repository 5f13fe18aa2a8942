#pragma once

#include <array>
#include <cmath>

namespace zerosurf {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double c) const { return {x * c, y * c, z * c}; }
    constexpr Vec3 operator/(double c) const { return {x / c, y / c, z / c}; }
    constexpr bool operator==(const Vec3&) const = default;
};

using Point3 = Vec3;

constexpr Vec3 operator*(double c, const Vec3& v) { return v * c; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalized(const Vec3& v) { return v / norm(v); }

inline bool is_finite(const Vec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

/// Symmetric 3x3 matrix stored as the packed upper triangle
/// (00, 01, 02, 11, 12, 22). Symmetry is exact by construction.
struct SymMat3 {
    std::array<double, 6> m{};

    static constexpr int index(int i, int j) {
        if (i > j) { const int t = i; i = j; j = t; }
        return i == 0 ? j : (i == 1 ? 2 + j : 5);
    }

    constexpr double operator()(int i, int j) const { return m[index(i, j)]; }
    constexpr double& at(int i, int j) { return m[index(i, j)]; }

    constexpr double trace() const { return m[0] + m[3] + m[5]; }

    /// Quadratic form n^T M n.
    constexpr double quad(const Vec3& n) const {
        return m[0] * n.x * n.x + m[3] * n.y * n.y + m[5] * n.z * n.z +
               2.0 * (m[1] * n.x * n.y + m[2] * n.x * n.z + m[4] * n.y * n.z);
    }

    constexpr SymMat3 operator+(const SymMat3& o) const {
        SymMat3 r;
        for (int i = 0; i < 6; ++i) r.m[i] = m[i] + o.m[i];
        return r;
    }
    constexpr SymMat3 operator*(double c) const {
        SymMat3 r;
        for (int i = 0; i < 6; ++i) r.m[i] = m[i] * c;
        return r;
    }

    static constexpr SymMat3 scaled_identity(double c) {
        SymMat3 r;
        r.m[0] = r.m[3] = r.m[5] = c;
        return r;
    }

    bool finite() const {
        for (double v : m)
            if (!std::isfinite(v)) return false;
        return true;
    }
};

} // namespace zerosurf
