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
 * @file qroots.hpp
 * @brief Left roots of quaternionic polynomials.
 *
 * The zero set of N(P) is the circularization of V(P). Each conjugate pair
 * re +- i rad of roots of N(P) names a sphere S with characteristic
 * polynomial Psi = X^2 - 2 re X + re^2 + rad^2. Dividing P by Psi leaves
 * X c1 + c0, and P(y) = y c1 + c0 on S, so S is either entirely a root
 * (c1 = c0 = 0) or carries the single root y = -c0 c1^{-1}. Real roots of
 * N(P) are exactly the real roots of P and are checked by evaluation.
 */

#ifndef QLUCAS_QROOTS_HPP
#define QLUCAS_QROOTS_HPP

#include <algorithm>
#include <cmath>
#include <tuple>
#include <vector>

#include "croots.hpp"
#include "qpoly.hpp"
#include "quat.hpp"

namespace qlucas {

struct RootSet {
    std::vector<Quaternion> isolated;
    std::vector<Sphere> spheres;
    /// Sphere candidates whose extracted point fell off the sphere.
    std::vector<Sphere> discarded;

    bool empty() const { return isolated.empty() && spheres.empty(); }

    /// re +- i rad over spheres and isolated roots, the complex picture of
    /// the circularization. Real points appear once.
    std::vector<Complex> circularization() const {
        std::vector<Complex> out;
        auto add = [&](double re, double rad) {
            out.emplace_back(re, rad);
            if (rad != 0) out.emplace_back(re, -rad);
        };
        for (const auto& s : spheres) add(s.re, s.rad);
        for (const auto& q : isolated) add(q.re(), q.im_norm());
        return out;
    }

    double max_norm() const {
        double m = 0;
        for (const auto& q : isolated) m = std::max(m, q.norm());
        for (const auto& s : spheres) m = std::max(m, std::hypot(s.re, s.rad));
        return m;
    }
};

/// Left roots of P. `tol` is relative to the evaluation scale
/// sum_k |a_k| |y|^k and decides both point validation and whether a
/// sphere is spherical.
inline RootSet left_roots(const QPoly& p, double tol = 1e-9) {
    if (p.deg_or_neg() < 1) throw DomainError("left_roots needs degree >= 1");
    const CRootList nroots = complex_roots(normal_poly(p));

    RootSet out;
    for (const auto& r : nroots) {
        const double re = r.value.real();
        const double im = r.value.imag();
        const double mod = std::abs(r.value);
        if (std::abs(im) <= 1e-7 * (1.0 + mod)) {
            const Quaternion y(re);
            if (eval_left(p, y).norm() > tol * eval_scale(p, mod))
                throw ValidationError("real root " + format_real(re) + " of N(P) is not a root of P");
            out.isolated.push_back(y);
            continue;
        }
        if (im < 0) continue;

        const Sphere sphere{re, im};
        const auto div = divide_by_real_quadratic(p, re, re * re + im * im);
        const double scale = eval_scale(p, mod);
        if (div.c1.norm() * mod + div.c0.norm() <= tol * scale) {
            out.spheres.push_back(sphere);
            continue;
        }
        const Quaternion y = -(div.c0 * inverse(div.c1));
        if (eval_left(p, y).norm() > tol * eval_scale(p, y.norm()))
            throw ValidationError("root extracted on sphere (re=" + format_real(re) +
                                  ", rad=" + format_real(im) + ") fails evaluation");
        if (!sphere.contains(y, 1e-6)) {
            out.discarded.push_back(sphere);
            continue;
        }
        out.isolated.push_back(y);
    }

    auto key = [](const Quaternion& q) { return std::tuple(q.re(), q.im_norm(), q.x, q.y, q.z); };
    std::sort(out.isolated.begin(), out.isolated.end(),
              [&](const Quaternion& a, const Quaternion& b) { return key(a) < key(b); });
    std::sort(out.spheres.begin(), out.spheres.end(),
              [](const Sphere& a, const Sphere& b) { return std::tie(a.re, a.rad) < std::tie(b.re, b.rad); });
    for (std::size_t s = 1; s < out.isolated.size(); ++s)
        if (same_sphere(out.isolated[s - 1], out.isolated[s], 0.0))
            throw ConsistencyError("two isolated roots on one sphere");
    return out;
}

/// Left roots of P'.
inline RootSet critical_points(const QPoly& p, double tol = 1e-9) {
    if (p.deg_or_neg() < 2) throw DomainError("critical_points needs degree >= 2");
    return left_roots(derivative(p), tol);
}

}  // namespace qlucas

#endif
