// Riemann-sphere geometry shared by the Majorana pipeline: extended complex
// numbers (finite value or point at infinity), the chordal metric, the unit-sphere
// embedding, and Moebius maps induced by single-qubit rotations.
#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace stellar {

using Complex = std::complex<double>;

struct Vec3 {
    double x = 0, y = 0, z = 0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 normalized() const {
        double n = norm();
        if (n == 0.0) throw std::domain_error("cannot normalize zero vector");
        return {x / n, y / n, z / n};
    }
};

// A point of the extended complex plane C u {inf}.
struct ExtComplex {
    Complex value{0.0, 0.0};
    bool at_infinity = false;

    static ExtComplex finite(Complex v) { return {v, false}; }
    static ExtComplex infinity() { return {{0.0, 0.0}, true}; }
};

// Inverse stereographic projection from the north pole: 0 -> +z, inf -> -z.
inline Vec3 to_unit_vector(const ExtComplex& e) {
    if (e.at_infinity) return {0.0, 0.0, -1.0};
    double a2 = std::norm(e.value);
    double d = 1.0 + a2;
    return {2.0 * e.value.real() / d, 2.0 * e.value.imag() / d, (1.0 - a2) / d};
}

inline ExtComplex from_unit_vector(const Vec3& v, double pole_tol = 1e-12) {
    if (1.0 + v.z <= pole_tol) return ExtComplex::infinity();
    return ExtComplex::finite({v.x / (1.0 + v.z), v.y / (1.0 + v.z)});
}

// Chordal distance: euclidean distance between the sphere images, range [0, 2].
inline double chordal_distance(const ExtComplex& a, const ExtComplex& b) {
    if (a.at_infinity && b.at_infinity) return 0.0;
    if (a.at_infinity) return 2.0 / std::sqrt(1.0 + std::norm(b.value));
    if (b.at_infinity) return 2.0 / std::sqrt(1.0 + std::norm(a.value));
    return 2.0 * std::abs(a.value - b.value) /
           std::sqrt((1.0 + std::norm(a.value)) * (1.0 + std::norm(b.value)));
}

// SU(2) matrix acting on spinor components (w0, w1) -> (a w0 + b w1, c w0 + d w1).
struct Su2 {
    Complex a, b, c, d;

    // Rotation by angle about the y axis; maps the +z spinor toward +x.
    static Su2 rotation_y(double angle) {
        double ch = std::cos(angle / 2), sh = std::sin(angle / 2);
        return {{ch, 0}, {-sh, 0}, {sh, 0}, {ch, 0}};
    }
    // Rotation by angle about an arbitrary unit axis.
    static Su2 rotation(const Vec3& axis, double angle) {
        Vec3 u = axis.normalized();
        double ch = std::cos(angle / 2), sh = std::sin(angle / 2);
        const Complex i{0, 1};
        return {ch - i * sh * u.z, -i * sh * (u.x - i * u.y),
                -i * sh * (u.x + i * u.y), ch + i * sh * u.z};
    }
};

// Action of an SU(2) rotation on a stereographic root.  A spinor |0> + eps|1>
// maps to (a + b eps)|0> + (c + d eps)|1>, i.e. eps -> (c + d eps)/(a + b eps).
inline ExtComplex mobius(const Su2& u, const ExtComplex& e, double tol = 1e-14) {
    Complex num, den;
    if (e.at_infinity) {
        num = u.d;
        den = u.b;
    } else {
        num = u.c + u.d * e.value;
        den = u.a + u.b * e.value;
    }
    if (std::abs(den) <= tol * (std::abs(num) + 1.0)) return ExtComplex::infinity();
    return ExtComplex::finite(num / den);
}

// Rodrigues rotation of a 3-vector about a unit axis.
inline Vec3 rotate_about_axis(const Vec3& v, const Vec3& axis, double angle) {
    Vec3 u = axis.normalized();
    double c = std::cos(angle), s = std::sin(angle);
    return v * c + u.cross(v) * s + u * (u.dot(v) * (1.0 - c));
}

}  // namespace stellar
