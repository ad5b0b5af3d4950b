/*
   Copyright 2026 The qlucas Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file quat.hpp
 * @brief Quaternions q = w + xi + yj + zk, imaginary units and slice planes.
 *
 * Every non-real q lies in exactly one slice plane C_I = span(1, I), where
 * I = im(q)/|im(q)|. Real quaternions lie in all of them; axis() refuses
 * them so callers have to branch explicitly.
 */

#ifndef QLUCAS_QUAT_HPP
#define QLUCAS_QUAT_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "errors.hpp"

namespace qlucas {

struct Quaternion {
    double w = 0, x = 0, y = 0, z = 0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_) : w(w_) {}  // NOLINT: reals embed implicitly
    constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion i() { return {0, 1, 0, 0}; }
    static constexpr Quaternion j() { return {0, 0, 1, 0}; }
    static constexpr Quaternion k() { return {0, 0, 0, 1}; }

    constexpr bool operator==(const Quaternion&) const = default;

    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
    constexpr Quaternion& operator+=(const Quaternion& o) {
        w += o.w, x += o.x, y += o.y, z += o.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        w -= o.w, x -= o.x, y -= o.y, z -= o.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        w *= s, x *= s, y *= s, z *= s;
        return *this;
    }

    constexpr double re() const { return w; }
    constexpr Quaternion im() const { return {0, x, y, z}; }
    constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
    constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }
    double im_norm() const { return std::sqrt(x * x + y * y + z * z); }
    constexpr bool is_zero() const { return w == 0 && x == 0 && y == 0 && z == 0; }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return {a.w / s, a.x / s, a.y / s, a.z / s}; }

/// Hamilton product.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline Quaternion mul(const Quaternion& a, const Quaternion& b) { return a * b; }

inline Quaternion inverse(const Quaternion& q) {
    const double n2 = q.norm2();
    if (n2 == 0) throw DomainError("inverse of the zero quaternion");
    return q.conj() / n2;
}

/// Euclidean inner product on R^4.
constexpr double dot(const Quaternion& a, const Quaternion& b) {
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double distance(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

/// |a - b| <= tol * (1 + max(|a|, |b|)).
inline bool approx_equal(const Quaternion& a, const Quaternion& b, double tol) {
    return distance(a, b) <= tol * (1.0 + std::max(a.norm(), b.norm()));
}

/// An imaginary unit: w == 0, |u| == 1, so u*u == -1.
class ImUnit {
   public:
    /// Normalizes im(q). Throws if im(q) vanishes.
    static ImUnit from(const Quaternion& q) {
        const double n = q.im_norm();
        if (n == 0) throw DomainError("imaginary unit from a real quaternion");
        return ImUnit(Quaternion{0, q.x / n, q.y / n, q.z / n});
    }
    static ImUnit i() { return ImUnit(Quaternion::i()); }
    static ImUnit j() { return ImUnit(Quaternion::j()); }
    static ImUnit k() { return ImUnit(Quaternion::k()); }

    const Quaternion& value() const { return u_; }
    operator const Quaternion&() const { return u_; }  // NOLINT
    ImUnit operator-() const { return ImUnit(-u_); }

   private:
    explicit ImUnit(Quaternion u) : u_(u) {}
    Quaternion u_;
};

/// The conjugacy class S_x, encoded by the common real part and the
/// imaginary norm. rad == 0 is a single real point.
struct Sphere {
    double re = 0;
    double rad = 0;

    bool operator==(const Sphere&) const = default;

    bool contains(const Quaternion& q, double tol) const {
        const double scale = 1.0 + std::hypot(re, rad);
        return std::abs(q.re() - re) <= tol * scale && std::abs(q.im_norm() - rad) <= tol * scale;
    }
    static Sphere of(const Quaternion& q) { return {q.re(), q.im_norm()}; }
};

/// Returns im(q)/|im(q)|. Near-real input (|im q| < 1e-13 (1 + |q|)) is
/// rejected rather than turned into noise.
inline ImUnit axis(const Quaternion& q) {
    if (q.im_norm() < 1e-13 * (1.0 + q.norm())) throw DomainError("axis of a real quaternion");
    return ImUnit::from(q);
}

inline bool is_real(const Quaternion& q) { return q.im_norm() < 1e-13 * (1.0 + q.norm()); }

/// Coordinates of a point in C_I: alpha + I * beta.
struct PlanePoint {
    double alpha = 0;
    double beta = 0;
    bool operator==(const PlanePoint&) const = default;
};

/// Orthogonal projection onto C_I in plane coordinates.
inline PlanePoint project_plane(const Quaternion& q, const ImUnit& unit) {
    return {q.re(), dot(q.im(), unit.value())};
}

inline Quaternion from_plane(const PlanePoint& p, const ImUnit& unit) {
    return Quaternion(p.alpha) + unit.value() * p.beta;
}

inline bool same_sphere(const Quaternion& a, const Quaternion& b, double tol) {
    return std::abs(a.re() - b.re()) <= tol && std::abs(a.im_norm() - b.im_norm()) <= tol;
}

/// A unit orthogonal to `unit`, picked deterministically (for I = i this is j).
inline ImUnit orthogonal_unit(const ImUnit& unit) {
    const Quaternion& u = unit.value();
    Quaternion seed = std::abs(u.y) > 0.9 ? Quaternion::k() : Quaternion::j();
    Quaternion v = seed - u * dot(seed, u);
    return ImUnit::from(v);
}

inline std::string format_real(double v) {
    if (v == 0) return "0";  // folds -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Text form `(w,x,y,z)`, 17 significant digits.
inline std::string to_string(const Quaternion& q) {
    return "(" + format_real(q.w) + "," + format_real(q.x) + "," + format_real(q.y) + "," +
           format_real(q.z) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << to_string(q); }

}  // namespace qlucas

#endif
