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
 * @file qpoly.hpp
 * @brief The ring H[X] of quaternionic polynomials with right coefficients.
 *
 * P(X) = sum_k X^k a_k. The product treats X as commuting with the
 * coefficients (the "star" product), so (P*Q)_n = sum_{h+k=n} a_h b_k with
 * the factors multiplied in that order. Evaluation puts the powers of the
 * argument on the left: P(x) = sum_k x^k a_k.
 */

#ifndef QLUCAS_QPOLY_HPP
#define QLUCAS_QPOLY_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "quat.hpp"

namespace qlucas {

namespace detail {

template <class T, class IsZero>
void trim(std::vector<T>& v, IsZero is_zero) {
    while (!v.empty() && is_zero(v.back())) v.pop_back();
}

}  // namespace detail

/// Polynomial with real coefficients, index = degree, trailing zeros trimmed.
class RealPoly {
   public:
    RealPoly() = default;
    explicit RealPoly(std::vector<double> coeffs) : c_(std::move(coeffs)) { normalize(); }
    RealPoly(std::initializer_list<double> coeffs) : c_(coeffs) { normalize(); }

    static RealPoly monomial(std::size_t k, double a = 1.0) {
        std::vector<double> c(k + 1, 0.0);
        c[k] = a;
        return RealPoly(std::move(c));
    }

    /// nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }
    bool is_zero() const { return c_.empty(); }
    double operator[](std::size_t k) const { return k < c_.size() ? c_[k] : 0.0; }
    const std::vector<double>& coeffs() const { return c_; }

    double operator()(double x) const {
        double r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    double max_abs() const {
        double m = 0;
        for (double v : c_) m = std::max(m, std::abs(v));
        return m;
    }

    bool operator==(const RealPoly&) const = default;

    friend RealPoly operator*(const RealPoly& a, const RealPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<double> r(a.c_.size() + b.c_.size() - 1, 0.0);
        for (std::size_t h = 0; h < a.c_.size(); ++h)
            for (std::size_t k = 0; k < b.c_.size(); ++k) r[h + k] += a.c_[h] * b.c_[k];
        return RealPoly(std::move(r));
    }
    friend RealPoly operator+(const RealPoly& a, const RealPoly& b) {
        std::vector<double> r(std::max(a.c_.size(), b.c_.size()), 0.0);
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = a[k] + b[k];
        return RealPoly(std::move(r));
    }

   private:
    void normalize() {
        detail::trim(c_, [](double v) { return v == 0.0; });
    }
    std::vector<double> c_;
};

class QPoly {
   public:
    QPoly() = default;
    explicit QPoly(std::vector<Quaternion> coeffs) : c_(std::move(coeffs)) { normalize(); }
    QPoly(std::initializer_list<Quaternion> coeffs) : c_(coeffs) { normalize(); }
    explicit QPoly(const RealPoly& p) {
        for (double v : p.coeffs()) c_.emplace_back(v);
    }

    /// X^k a
    static QPoly monomial(std::size_t k, const Quaternion& a = 1.0) {
        std::vector<Quaternion> c(k + 1);
        c[k] = a;
        return QPoly(std::move(c));
    }
    /// X - x
    static QPoly linear_factor(const Quaternion& root) { return QPoly({-root, 1.0}); }

    std::optional<std::size_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }
    /// Degree as a signed number with the zero polynomial mapped to -1; only
    /// for comparisons against small constants.
    long deg_or_neg() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    Quaternion operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Quaternion{}; }
    const std::vector<Quaternion>& coeffs() const { return c_; }
    const Quaternion& leading() const {
        if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == Quaternion(1.0); }
    bool has_real_coeffs() const {
        return std::all_of(c_.begin(), c_.end(), [](const Quaternion& q) { return q.im().is_zero(); });
    }
    /// Largest coefficient norm.
    double max_norm() const {
        double m = 0;
        for (const auto& q : c_) m = std::max(m, q.norm());
        return m;
    }

    bool operator==(const QPoly&) const = default;

    QPoly operator-() const {
        auto c = c_;
        for (auto& q : c) q = -q;
        return QPoly(std::move(c));
    }
    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        std::vector<Quaternion> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = a[k] + b[k];
        return QPoly(std::move(r));
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

    /// Star product: X commutes with the coefficients.
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Quaternion> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t h = 0; h < a.c_.size(); ++h)
            for (std::size_t k = 0; k < b.c_.size(); ++k) r[h + k] += a.c_[h] * b.c_[k];
        return QPoly(std::move(r));
    }

    /// Right multiplication of every coefficient by a constant.
    friend QPoly operator*(const QPoly& a, const Quaternion& s) {
        auto c = a.c_;
        for (auto& q : c) q = q * s;
        return QPoly(std::move(c));
    }

   private:
    void normalize() {
        detail::trim(c_, [](const Quaternion& q) { return q.is_zero(); });
    }
    std::vector<Quaternion> c_;
};

inline QPoly star_mul(const QPoly& p, const QPoly& q) { return p * q; }

/// sum_k x^k a_k, Horner with the argument on the left.
inline Quaternion eval_left(const QPoly& p, const Quaternion& x) {
    const auto& c = p.coeffs();
    Quaternion r;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = x * r + *it;
    return r;
}

/// sum_k |x|^k |a_k|: the natural magnitude of eval_left(p, x), used to
/// scale residual tolerances.
inline double eval_scale(const QPoly& p, double abs_x) {
    const auto& c = p.coeffs();
    double r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = abs_x * r + it->norm();
    return r;
}

inline QPoly conj_poly(const QPoly& p) {
    std::vector<Quaternion> c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) c.push_back(q.conj());
    return QPoly(std::move(c));
}

/// N(P) = P * P^c as a real polynomial. The imaginary parts of the product
/// must vanish; a residue above 1e-10 (1 + max |coefficient|) is a bug.
inline RealPoly normal_poly(const QPoly& p) {
    const QPoly n = p * conj_poly(p);
    double scale = 0;
    for (const auto& q : n.coeffs()) scale = std::max(scale, q.norm());
    std::vector<double> r;
    r.reserve(n.coeffs().size());
    for (const auto& q : n.coeffs()) {
        if (q.im_norm() > 1e-10 * (1.0 + scale))
            throw ConsistencyError("normal polynomial has an imaginary coefficient " + to_string(q));
        r.push_back(q.re());
    }
    return RealPoly(std::move(r));
}

/// sum_{k>=1} X^{k-1} k a_k
inline QPoly derivative(const QPoly& p) {
    const auto& c = p.coeffs();
    if (c.size() <= 1) return {};
    std::vector<Quaternion> r(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) r[k - 1] = c[k] * static_cast<double>(k);
    return QPoly(std::move(r));
}

inline RealPoly derivative(const RealPoly& p) {
    const auto& c = p.coeffs();
    if (c.size() <= 1) return {};
    std::vector<double> r(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) r[k - 1] = c[k] * static_cast<double>(k);
    return RealPoly(std::move(r));
}

/// P * a_d^{-1}. The leading coefficient is set to exactly 1.
inline QPoly monicize(const QPoly& p) {
    if (p.is_zero()) throw DomainError("monicize of the zero polynomial");
    const Quaternion inv = inverse(p.leading());
    auto c = p.coeffs();
    for (auto& q : c) q = q * inv;
    c.back() = 1.0;
    return QPoly(std::move(c));
}

/// P = Psi * quotient + (X c1 + c0) with Psi = X^2 - 2 re X + sqnorm.
struct QuadraticDivision {
    QPoly quotient;
    Quaternion c1;
    Quaternion c0;
};

/// Division by the characteristic polynomial of a sphere. Psi is real, so on
/// every y with re(y) = re and |y|^2 = sqnorm one gets P(y) = y c1 + c0.
inline QuadraticDivision divide_by_real_quadratic(const QPoly& p, double re, double sqnorm) {
    if (sqnorm < re * re * (1.0 - 1e-12) - 1e-300)
        throw DomainError("divisor X^2 - 2 re X + sqnorm has two distinct real roots");
    if (p.deg_or_neg() < 2) return {QPoly{}, p[1], p[0]};

    std::vector<Quaternion> r = p.coeffs();
    const std::size_t n = r.size() - 1;
    std::vector<Quaternion> q(n - 1);
    for (std::size_t k = n; k >= 2; --k) {
        const Quaternion t = r[k];
        q[k - 2] = t;
        r[k] = Quaternion{};
        r[k - 1] += t * (2.0 * re);
        r[k - 2] -= t * sqnorm;
    }
    return {QPoly(std::move(q)), r[1], r[0]};
}

/// X^2 - 2 re X + (re^2 + rad^2)
inline QPoly sphere_char_poly(const Sphere& s) {
    return QPoly({Quaternion(s.re * s.re + s.rad * s.rad), Quaternion(-2.0 * s.re), 1.0});
}

}  // namespace qlucas

#endif
