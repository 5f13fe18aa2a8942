#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>
#include <utility>

#include "zerosurf/errors.hpp"
#include "zerosurf/vec3.hpp"

namespace zerosurf {

/// Value, gradient and Hessian of a scalar field at one point.
struct FieldEval {
    double value = 0.0;
    Vec3 gradient{};
    SymMat3 hessian{};

    bool finite() const {
        return std::isfinite(value) && is_finite(gradient) && hessian.finite();
    }
};

struct FieldBackend {
    virtual ~FieldBackend() = default;
    virtual FieldEval eval(const Point3& p) const = 0;
    /// Value-only path; backends override it when that is cheaper.
    virtual double value(const Point3& p) const { return eval(p).value; }
    virtual std::string descriptor() const = 0;
};

/// Immutable evaluable C^3 scalar field. Evaluation is pure: the same
/// point always yields bit-identical results, so concurrent evaluation
/// from any number of workers is safe.
class ScalarField {
public:
    ScalarField() = default;
    explicit ScalarField(std::shared_ptr<const FieldBackend> backend)
        : backend_(std::move(backend)) {}

    FieldEval eval(const Point3& p) const { return backend_->eval(p); }
    double value(const Point3& p) const { return backend_->value(p); }
    std::string descriptor() const { return backend_->descriptor(); }
    bool valid() const { return backend_ != nullptr; }

private:
    std::shared_ptr<const FieldBackend> backend_;
};

namespace detail {

struct SphereField final : FieldBackend {
    double radius;
    explicit SphereField(double r) : radius(r) {}

    FieldEval eval(const Point3& p) const override {
        FieldEval e;
        e.value = dot(p, p) - radius * radius;
        e.gradient = 2.0 * p;
        e.hessian = SymMat3::scaled_identity(2.0);
        return e;
    }
    double value(const Point3& p) const override { return dot(p, p) - radius * radius; }
    std::string descriptor() const override { return "sphere(R=" + std::to_string(radius) + ")"; }
};

struct EllipsoidField final : FieldBackend {
    double a, b, c;
    EllipsoidField(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {}

    FieldEval eval(const Point3& p) const override {
        FieldEval e;
        const double ia = 1.0 / (a * a), ib = 1.0 / (b * b), ic = 1.0 / (c * c);
        e.value = p.x * p.x * ia + p.y * p.y * ib + p.z * p.z * ic - 1.0;
        e.gradient = {2.0 * p.x * ia, 2.0 * p.y * ib, 2.0 * p.z * ic};
        e.hessian.at(0, 0) = 2.0 * ia;
        e.hessian.at(1, 1) = 2.0 * ib;
        e.hessian.at(2, 2) = 2.0 * ic;
        return e;
    }
    std::string descriptor() const override {
        return "ellipsoid(a=" + std::to_string(a) + ",b=" + std::to_string(b) +
               ",c=" + std::to_string(c) + ")";
    }
};

/// Torus as a polynomial level set:
///   (|x|^2 + R^2 - r^2)^2 - 4 R^2 (x1^2 + x2^2) = 0.
struct TorusField final : FieldBackend {
    double ring_radius, tube_radius;
    TorusField(double ring, double tube) : ring_radius(ring), tube_radius(tube) {}

    FieldEval eval(const Point3& p) const override {
        const double R2 = ring_radius * ring_radius;
        const double q = dot(p, p) + R2 - tube_radius * tube_radius;
        FieldEval e;
        e.value = q * q - 4.0 * R2 * (p.x * p.x + p.y * p.y);
        e.gradient = {4.0 * q * p.x - 8.0 * R2 * p.x, 4.0 * q * p.y - 8.0 * R2 * p.y,
                      4.0 * q * p.z};
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j)
                e.hessian.at(i, j) = 8.0 * p[i] * p[j];
        e.hessian.at(0, 0) += 4.0 * q - 8.0 * R2;
        e.hessian.at(1, 1) += 4.0 * q - 8.0 * R2;
        e.hessian.at(2, 2) += 4.0 * q;
        return e;
    }
    double value(const Point3& p) const override {
        const double R2 = ring_radius * ring_radius;
        const double q = dot(p, p) + R2 - tube_radius * tube_radius;
        return q * q - 4.0 * R2 * (p.x * p.x + p.y * p.y);
    }
    std::string descriptor() const override {
        return "torus(R=" + std::to_string(ring_radius) + ",r=" + std::to_string(tube_radius) + ")";
    }
};

struct AffineField final : FieldBackend {
    Vec3 a;
    double b;
    AffineField(const Vec3& a_, double b_) : a(a_), b(b_) {}

    FieldEval eval(const Point3& p) const override {
        FieldEval e;
        e.value = dot(a, p) + b;
        e.gradient = a;
        return e;
    }
    double value(const Point3& p) const override { return dot(a, p) + b; }
    std::string descriptor() const override { return "affine"; }
};

/// (|x|^2 - R^2)^2: nonnegative with the sphere as its zero set and a
/// vanishing gradient there.
struct SphereSquaredField final : FieldBackend {
    double radius;
    explicit SphereSquaredField(double r) : radius(r) {}

    FieldEval eval(const Point3& p) const override {
        const double w = dot(p, p) - radius * radius;
        FieldEval e;
        e.value = w * w;
        e.gradient = 4.0 * w * p;
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j)
                e.hessian.at(i, j) = 8.0 * p[i] * p[j];
        e.hessian.at(0, 0) += 4.0 * w;
        e.hessian.at(1, 1) += 4.0 * w;
        e.hessian.at(2, 2) += 4.0 * w;
        return e;
    }
    double value(const Point3& p) const override {
        const double w = dot(p, p) - radius * radius;
        return w * w;
    }
    std::string descriptor() const override {
        return "sphere_squared(R=" + std::to_string(radius) + ")";
    }
};

struct ScaledField final : FieldBackend {
    ScalarField base;
    double factor;
    ScaledField(ScalarField f, double c) : base(std::move(f)), factor(c) {}

    FieldEval eval(const Point3& p) const override {
        FieldEval e = base.eval(p);
        e.value *= factor;
        e.gradient = e.gradient * factor;
        e.hessian = e.hessian * factor;
        return e;
    }
    double value(const Point3& p) const override { return factor * base.value(p); }
    std::string descriptor() const override {
        return std::to_string(factor) + "*(" + base.descriptor() + ")";
    }
};

/// u + epsilon * v as a single evaluable field.
struct LinCombField final : FieldBackend {
    ScalarField u, v;
    double epsilon;
    LinCombField(ScalarField u_, ScalarField v_, double eps)
        : u(std::move(u_)), v(std::move(v_)), epsilon(eps) {}

    FieldEval eval(const Point3& p) const override {
        const FieldEval eu = u.eval(p);
        const FieldEval ev = v.eval(p);
        FieldEval e;
        e.value = eu.value + epsilon * ev.value;
        e.gradient = eu.gradient + epsilon * ev.gradient;
        e.hessian = eu.hessian + ev.hessian * epsilon;
        return e;
    }
    double value(const Point3& p) const override {
        return u.value(p) + epsilon * v.value(p);
    }
    std::string descriptor() const override {
        return u.descriptor() + " + " + std::to_string(epsilon) + "*(" + v.descriptor() + ")";
    }
};

} // namespace detail

inline ScalarField make_sphere(double radius = 1.0) {
    return ScalarField(std::make_shared<detail::SphereField>(radius));
}

inline ScalarField make_ellipsoid(double a, double b, double c) {
    return ScalarField(std::make_shared<detail::EllipsoidField>(a, b, c));
}

inline ScalarField make_torus(double ring_radius, double tube_radius) {
    return ScalarField(std::make_shared<detail::TorusField>(ring_radius, tube_radius));
}

inline ScalarField make_affine(const Vec3& a, double b) {
    return ScalarField(std::make_shared<detail::AffineField>(a, b));
}

inline ScalarField make_sphere_squared(double radius = 1.0) {
    return ScalarField(std::make_shared<detail::SphereSquaredField>(radius));
}

inline ScalarField scaled(const ScalarField& f, double factor) {
    return ScalarField(std::make_shared<detail::ScaledField>(f, factor));
}

/// The perturbed field u + epsilon*v.
inline ScalarField perturbed_field(const ScalarField& u, const ScalarField& v, double epsilon) {
    return ScalarField(std::make_shared<detail::LinCombField>(u, v, epsilon));
}

/// Max absolute deviation between the field's gradient/Hessian and
/// central finite differences of step h at p.
inline double fd_check(const ScalarField& field, const Point3& p, double h) {
    if (!(h > 0.0)) throw InvalidArgument("fd_check: step must be positive");
    const FieldEval e = field.eval(p);

    const auto shifted = [&](int i, double si, int j = -1, double sj = 0.0) {
        std::array<double, 3> q{p.x, p.y, p.z};
        q[i] += si;
        if (j >= 0) q[j] += sj;
        return Point3{q[0], q[1], q[2]};
    };

    double dev = 0.0;
    const double f0 = field.value(p);
    for (int i = 0; i < 3; ++i) {
        const double fp = field.value(shifted(i, h));
        const double fm = field.value(shifted(i, -h));
        dev = std::max(dev, std::abs((fp - fm) / (2.0 * h) - e.gradient[i]));
        dev = std::max(dev, std::abs((fp - 2.0 * f0 + fm) / (h * h) - e.hessian(i, i)));
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const double fd = (field.value(shifted(i, h, j, h)) - field.value(shifted(i, h, j, -h)) -
                               field.value(shifted(i, -h, j, h)) +
                               field.value(shifted(i, -h, j, -h))) /
                              (4.0 * h * h);
            dev = std::max(dev, std::abs(fd - e.hessian(i, j)));
        }
    return dev;
}

} // namespace zerosurf
