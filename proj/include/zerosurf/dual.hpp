#pragma once

#include <cmath>

#include "zerosurf/errors.hpp"
#include "zerosurf/vec3.hpp"

namespace zerosurf {

/// Second-order forward-mode AD scalar over the three coordinates:
/// value, the 3 first derivatives and the 6 packed second derivatives
/// are propagated together in a single pass, so one expression walk
/// yields value, gradient and Hessian.
struct Dual2 {
    double v = 0.0;
    std::array<double, 3> g{};
    std::array<double, 6> h{}; // packed like SymMat3

    static Dual2 constant(double c) { return Dual2{c, {}, {}}; }

    static Dual2 variable(double value, int axis) {
        Dual2 d;
        d.v = value;
        d.g[axis] = 1.0;
        return d;
    }
};

inline Dual2 operator+(const Dual2& a, const Dual2& b) {
    Dual2 r;
    r.v = a.v + b.v;
    for (int i = 0; i < 3; ++i) r.g[i] = a.g[i] + b.g[i];
    for (int i = 0; i < 6; ++i) r.h[i] = a.h[i] + b.h[i];
    return r;
}

inline Dual2 operator-(const Dual2& a, const Dual2& b) {
    Dual2 r;
    r.v = a.v - b.v;
    for (int i = 0; i < 3; ++i) r.g[i] = a.g[i] - b.g[i];
    for (int i = 0; i < 6; ++i) r.h[i] = a.h[i] - b.h[i];
    return r;
}

inline Dual2 operator-(const Dual2& a) {
    Dual2 r;
    r.v = -a.v;
    for (int i = 0; i < 3; ++i) r.g[i] = -a.g[i];
    for (int i = 0; i < 6; ++i) r.h[i] = -a.h[i];
    return r;
}

inline Dual2 operator*(const Dual2& a, const Dual2& b) {
    Dual2 r;
    r.v = a.v * b.v;
    for (int i = 0; i < 3; ++i) r.g[i] = a.g[i] * b.v + a.v * b.g[i];
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            const int k = SymMat3::index(i, j);
            r.h[k] = a.h[k] * b.v + a.g[i] * b.g[j] + a.g[j] * b.g[i] + a.v * b.h[k];
        }
    return r;
}

inline Dual2 operator/(const Dual2& a, const Dual2& b) {
    if (b.v == 0.0) throw DomainError("division by zero");
    Dual2 r;
    r.v = a.v / b.v;
    for (int i = 0; i < 3; ++i) r.g[i] = (a.g[i] - r.v * b.g[i]) / b.v;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            const int k = SymMat3::index(i, j);
            r.h[k] = (a.h[k] - r.v * b.h[k] - r.g[i] * b.g[j] - r.g[j] * b.g[i]) / b.v;
        }
    return r;
}

/// Chain rule for f(u) given f(u.v), f'(u.v), f''(u.v).
inline Dual2 chain(const Dual2& u, double f0, double f1, double f2) {
    Dual2 r;
    r.v = f0;
    for (int i = 0; i < 3; ++i) r.g[i] = f1 * u.g[i];
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            const int k = SymMat3::index(i, j);
            r.h[k] = f1 * u.h[k] + f2 * u.g[i] * u.g[j];
        }
    return r;
}

inline Dual2 sin(const Dual2& u) {
    const double s = std::sin(u.v), c = std::cos(u.v);
    return chain(u, s, c, -s);
}

inline Dual2 cos(const Dual2& u) {
    const double s = std::sin(u.v), c = std::cos(u.v);
    return chain(u, c, -s, -c);
}

inline Dual2 exp(const Dual2& u) {
    const double e = std::exp(u.v);
    return chain(u, e, e, e);
}

inline Dual2 sqrt(const Dual2& u) {
    // Derivatives are singular at exactly zero, so zero is rejected too.
    if (u.v <= 0.0) throw DomainError("sqrt of non-positive value");
    const double s = std::sqrt(u.v);
    return chain(u, s, 0.5 / s, -0.25 / (s * u.v));
}

/// x^n by repeated multiplication; n < 0 takes the reciprocal.
/// Deterministic and exact for the 0^0 == 1 convention.
inline double ipow(double x, int n) {
    if (n < 0) {
        if (x == 0.0) throw DomainError("zero base with negative exponent");
        return 1.0 / ipow(x, -n);
    }
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

inline double pow_int(double x, int n) { return ipow(x, n); }

inline Dual2 pow_int(const Dual2& u, int n) {
    if (n == 0) return Dual2::constant(1.0);
    if (n == 1) return u;
    if (n < 0 && u.v == 0.0) throw DomainError("zero base with negative exponent");
    const double f0 = ipow(u.v, n);
    const double f1 = static_cast<double>(n) * ipow(u.v, n - 1);
    const double f2 = static_cast<double>(n) * static_cast<double>(n - 1) * ipow(u.v, n - 2);
    return chain(u, f0, f1, f2);
}

} // namespace zerosurf
