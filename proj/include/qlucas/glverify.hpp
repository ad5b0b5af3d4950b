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
 * @file glverify.hpp
 * @brief Gauss-Lucas classification and the snail inclusion check.
 *
 * P is Gauss-Lucas when V(P') lies in K(N(P)), the circular convex hull of
 * the roots of N(P). That inclusion fails in general from degree 3 on; the
 * inclusion V(P') in sn(P) always holds and theorem_check() treats a
 * failure as a bug.
 */

#ifndef QLUCAS_GLVERIFY_HPP
#define QLUCAS_GLVERIFY_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

#include "croots.hpp"
#include "errors.hpp"
#include "family.hpp"
#include "hull2d.hpp"
#include "parallel.hpp"
#include "qpoly.hpp"
#include "qroots.hpp"
#include "snail.hpp"

namespace qlucas {

struct SnailWitness {
    Quaternion point;
    /// Accepting plane; for real points found by sampling.
    std::optional<ImUnit> plane;
    bool sampled = false;
    double distance = 0;
    bool contained = true;
};

struct GLReport {
    bool is_gauss_lucas = true;
    /// Critical points farther than 10 tol from K(N(P)).
    std::vector<Quaternion> violating_points;
    bool theorem_holds = true;
    /// theorem_check() ran and filled the two fields below.
    bool theorem_checked = false;
    std::vector<SnailWitness> snail_witnesses;
};

/// Eight points of a sphere: two on each coordinate great circle and two
/// generic ones.
inline std::vector<Quaternion> sphere_representatives(const Sphere& s) {
    static const Quaternion dirs[] = {{0, 1, 1, 0}, {0, 1, -1, 0}, {0, 0, 1, 1}, {0, 0, 1, -1},
                                      {0, 1, 0, 1}, {0, -1, 0, 1}, {0, 1, 2, 3}, {0, -3, 1, 2}};
    std::vector<Quaternion> out;
    for (const auto& d : dirs) out.push_back(Quaternion(s.re) + ImUnit::from(d).value() * s.rad);
    return out;
}

inline GLReport is_gauss_lucas(const QPoly& p, double tol = 1e-9) {
    if (p.deg_or_neg() < 2) throw DomainError("is_gauss_lucas needs degree >= 2");
    const Hull2D hull = root_hull(normal_poly(p));
    const RootSet crit = critical_points(p, tol);

    GLReport r;
    auto check = [&](const Quaternion& x) {
        if (circular_hull_distance(hull, x) > 10.0 * tol * (1.0 + x.norm())) r.violating_points.push_back(x);
    };
    for (const auto& x : crit.isolated) check(x);
    // K(N(P)) is circular: two points of a sphere are as good as all of them.
    for (const auto& s : crit.spheres) {
        check(Quaternion(s.re) + Quaternion::i() * s.rad);
        check(Quaternion(s.re) - Quaternion::i() * s.rad);
    }
    r.is_gauss_lucas = r.violating_points.empty();
    return r;
}

/// Tests every critical point for membership in sn(P) and records the
/// witnesses. Never throws on a failed inclusion.
inline GLReport snail_inclusion(const QPoly& p, const SnailConfig& cfg = {}, GLReport r = {}) {
    if (p.deg_or_neg() < 2) throw DomainError("snail_inclusion needs degree >= 2");
    const RootSet crit = critical_points(p);

    std::vector<Quaternion> points = crit.isolated;
    for (const auto& s : crit.spheres)
        for (const auto& q : sphere_representatives(s)) points.push_back(q);

    r.theorem_checked = true;
    r.theorem_holds = true;
    r.snail_witnesses.assign(points.size(), {});
    parallel_for(points.size(), [&](std::size_t n) {
        const auto m = snail_contains(p, points[n], cfg);
        r.snail_witnesses[n] = {points[n], m.plane, m.sampled, m.distance, m.contains};
    });
    for (const auto& w : r.snail_witnesses) r.theorem_holds = r.theorem_holds && w.contained;
    return r;
}

/// snail_inclusion() that throws InvariantViolation listing the offending
/// points when some critical point lies outside sn(P).
inline GLReport theorem_check(const QPoly& p, const SnailConfig& cfg = {}, GLReport r = {}) {
    r = snail_inclusion(p, cfg, std::move(r));
    if (!r.theorem_holds) {
        std::ostringstream diag;
        for (const auto& w : r.snail_witnesses)
            if (!w.contained) diag << " " << to_string(w.point) << " (distance " << w.distance << ")";
        throw InvariantViolation("critical points outside the snail:" + diag.str());
    }
    return r;
}

struct Obstruction {
    bool applies = false;
    std::optional<std::size_t> e;
};

/// Certificate of failure without root finding: N(P) = X^{2e} (X^2+1)^{d-e}
/// with e < d and a single odd monomial in N(P') force a critical point off
/// the imaginary hyperplane, while K(N(P)) lies inside it.
inline Obstruction odd_monomial_obstruction(const QPoly& p, double tol = 1e-9) {
    if (p.deg_or_neg() < 3) throw DomainError("odd_monomial_obstruction needs degree >= 3");
    const std::size_t d = *p.degree();
    const RealPoly np = normal_poly(p);

    std::size_t low = 0;
    while (np[low] == 0) ++low;
    Obstruction out;
    if (low % 2 == 1 || low / 2 >= d) return out;
    const std::size_t e = low / 2;

    RealPoly target = RealPoly::monomial(2 * e);
    for (std::size_t k = e; k < d; ++k) target = target * RealPoly{1, 0, 1};
    const double scale = 1.0 + std::max(np.max_abs(), target.max_abs());
    const std::size_t len = std::max(np.coeffs().size(), target.coeffs().size());
    for (std::size_t k = 0; k < len; ++k)
        if (std::abs(np[k] - target[k]) > tol * scale) return out;

    if (real_poly_odd_part(normal_poly(derivative(p))).size() != 1) return out;
    out.applies = true;
    out.e = e;
    return out;
}

namespace detail {

/// Uniform in the 4-ball of radius eps.
inline Quaternion random_in_ball(std::mt19937_64& rng, double eps) {
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    Quaternion g;
    do {
        g = {gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
    } while (g.norm2() == 0);
    return g / g.norm() * (eps * std::pow(unif(rng), 0.25));
}

}  // namespace detail

/// Fraction of random perturbations (every coefficient moved by at most
/// eps) that keep the Gauss-Lucas classification of P. A statistical
/// witness of openness, not a proof.
inline double perturbation_probe(const QPoly& p, double eps, std::size_t n_trials, std::uint64_t seed,
                                 double tol = 1e-9) {
    if (p.deg_or_neg() < 2) throw DomainError("perturbation_probe needs degree >= 2");
    if (eps < 0) throw DomainError("perturbation_probe needs eps >= 0");
    if (n_trials == 0) throw DomainError("perturbation_probe needs n_trials >= 1");
    if (eps == 0) return 1.0;

    const bool base = is_gauss_lucas(p, tol).is_gauss_lucas;
    std::mt19937_64 rng(seed);
    std::size_t agree = 0;
    for (std::size_t t = 0; t < n_trials; ++t) {
        auto c = p.coeffs();
        for (auto& a : c) a += detail::random_in_ball(rng, eps);
        if (is_gauss_lucas(QPoly(std::move(c)), tol).is_gauss_lucas == base) ++agree;
    }
    return static_cast<double>(agree) / static_cast<double>(n_trials);
}

}  // namespace qlucas

#endif
