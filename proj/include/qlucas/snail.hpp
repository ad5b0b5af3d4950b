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
 * @file snail.hpp
 * @brief Slice projections and the Gauss-Lucas snail.
 *
 * For an imaginary unit I, P^I is the C_I-polynomial whose coefficients
 * are the orthogonal projections of those of P onto C_I. The snail sn(P)
 * is the union over I of the convex hulls of the roots of P^I inside C_I,
 * with the whole plane standing in for the hull when P^I is constant.
 *
 * A non-real q lies in exactly one plane, so its membership is decided
 * there. A real q lies in every plane and is decided by sampling planes.
 * Plane coordinates are (alpha, beta) with q = alpha + I beta.
 */

#ifndef QLUCAS_SNAIL_HPP
#define QLUCAS_SNAIL_HPP

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <variant>
#include <vector>

#include "croots.hpp"
#include "hull2d.hpp"
#include "parallel.hpp"
#include "qpoly.hpp"
#include "quat.hpp"

namespace qlucas {

struct AllPlane {};

struct SliceHull {
    ImUnit plane;
    std::variant<Hull2D, AllPlane> region;

    bool all_plane() const { return std::holds_alternative<AllPlane>(region); }
    const Hull2D& hull() const { return std::get<Hull2D>(region); }

    double distance(const PlanePoint& p) const {
        if (all_plane()) return 0.0;
        return hull().distance({p.alpha, p.beta});
    }
};

struct SnailConfig {
    std::size_t n_samples = 2048;
    double tol = 1e-6;
    std::size_t refine_depth = 2;

    void validate() const {
        if (n_samples < 1) throw DomainError("SnailConfig: n_samples must be >= 1");
        if (!(tol > 0)) throw DomainError("SnailConfig: tol must be > 0");
    }
};

struct SnailMembership {
    bool contains = false;
    /// Accepting plane, or the best plane found when rejected.
    std::optional<ImUnit> plane;
    /// Distance from q to the slice hull in that plane.
    double distance = std::numeric_limits<double>::infinity();
    /// Decided by sampling planes (q real).
    bool sampled = false;
    /// Sampled decision on a non-monic polynomial, where slice hulls need
    /// not vary continuously.
    bool approximate = false;
};

/// P^I as a complex polynomial, I mapped to i.
inline CPoly slice_poly(const QPoly& p, const ImUnit& unit) {
    std::vector<Complex> c;
    c.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) {
        const PlanePoint pp = project_plane(a, unit);
        c.emplace_back(pp.alpha, pp.beta);
    }
    return CPoly(std::move(c));
}

inline SliceHull slice_hull(const QPoly& p, const ImUnit& unit, double tol = 1e-7) {
    const CPoly s = slice_poly(p, unit);
    if (s.is_constant()) return {unit, AllPlane{}};
    std::vector<Point2> pts;
    for (const auto& r : complex_roots(s, tol)) pts.push_back({r.value.real(), r.value.imag()});
    return {unit, convex_hull(pts)};
}

/// Fibonacci lattice on the upper hemisphere (k-component > 0), one unit
/// per unoriented plane.
inline std::vector<ImUnit> sample_sphere(std::size_t n) {
    if (n < 1) throw DomainError("sample_sphere needs n >= 1");
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    std::vector<ImUnit> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double z = 1.0 - (static_cast<double>(k) + 0.5) / static_cast<double>(n);
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden * static_cast<double>(k);
        out.push_back(ImUnit::from({0, r * std::cos(phi), r * std::sin(phi), z}));
    }
    return out;
}

namespace detail {

/// Unit at angle `angle` from `centre` in direction `heading` (radians)
/// of the tangent frame.
inline ImUnit tilt(const ImUnit& centre, double angle, double heading) {
    const ImUnit e1 = orthogonal_unit(centre);
    const Quaternion e2 = centre.value() * e1.value();  // imaginary, orthogonal to both
    const Quaternion dir = e1.value() * std::cos(heading) + e2 * std::sin(heading);
    return ImUnit::from(centre.value() * std::cos(angle) + dir * std::sin(angle));
}

}  // namespace detail

/// Membership of q in sn(P).
inline SnailMembership snail_contains(const QPoly& p, const Quaternion& q, const SnailConfig& cfg = {}) {
    cfg.validate();
    const double tol = cfg.tol * (1.0 + q.norm());
    SnailMembership m;
    if (!is_real(q)) {
        const ImUnit unit = axis(q);
        const SliceHull h = slice_hull(p, unit);
        m.plane = unit;
        m.distance = h.distance(project_plane(q, unit));
        m.contains = m.distance <= tol;
        return m;
    }

    m.sampled = true;
    m.approximate = !p.is_monic();
    const PlanePoint pt{q.re(), 0.0};
    const auto units = sample_sphere(cfg.n_samples);
    std::vector<double> dist(units.size());
    parallel_for(units.size(), [&](std::size_t k) { dist[k] = slice_hull(p, units[k]).distance(pt); });
    std::size_t best = 0;
    for (std::size_t k = 1; k < dist.size(); ++k)
        if (dist[k] < dist[best]) best = k;
    ImUnit best_unit = units[best];
    double best_dist = dist[best];

    double step = std::sqrt(2.0 * std::numbers::pi / static_cast<double>(cfg.n_samples));
    for (std::size_t round = 0; round < cfg.refine_depth && best_dist > tol; ++round, step *= 0.5) {
        const ImUnit centre = best_unit;
        for (int h = 0; h < 8; ++h) {
            const ImUnit cand = detail::tilt(centre, step, h * std::numbers::pi / 4.0);
            const double d = slice_hull(p, cand).distance(pt);
            if (d < best_dist) best_dist = d, best_unit = cand;
        }
    }
    m.plane = best_unit;
    m.distance = best_dist;
    m.contains = best_dist <= tol;
    return m;
}

struct SectionSample {
    double theta = 0;
    double rho_max = 0;
};

/// Largest rho with rho (cos(theta) I + sin(theta) J) in sn(P), J the
/// orthogonal_unit of I; theta runs over [0, pi] in `theta_steps` equal
/// steps, both ends included. Each ray sits in a single plane, so one slice
/// hull per ray is enough. The ray is scanned outward in 256 steps up to the
/// Cauchy radius of the slice, then the last inside/outside change is
/// bisected (60 rounds). rho_max is +inf where the slice is constant.
inline std::vector<SectionSample> snail_cross_section(const QPoly& p, const ImUnit& unit, std::size_t theta_steps,
                                                      double theta_max = std::numbers::pi) {
    if (theta_steps < 2) throw DomainError("snail_cross_section needs theta_steps >= 2");
    const ImUnit other = orthogonal_unit(unit);
    std::vector<SectionSample> out(theta_steps);
    parallel_for(theta_steps, [&](std::size_t k) {
        const double theta = theta_max * static_cast<double>(k) / static_cast<double>(theta_steps - 1);
        const ImUnit dir = ImUnit::from(unit.value() * std::cos(theta) + other.value() * std::sin(theta));
        out[k].theta = theta;
        const CPoly s = slice_poly(p, dir);
        if (s.is_constant()) {
            out[k].rho_max = std::numeric_limits<double>::infinity();
            return;
        }
        const SliceHull h = slice_hull(p, dir);
        const double radius = cauchy_bound(s.coeffs());
        auto inside = [&](double rho) { return h.distance({0.0, rho}) <= 1e-12 * (1.0 + rho); };
        constexpr int kScan = 256;
        int last = 0;
        for (int s_ = 1; s_ <= kScan; ++s_)
            if (inside(radius * s_ / kScan)) last = s_;
        if (last == 0) {
            out[k].rho_max = 0.0;
            return;
        }
        double lo = radius * last / kScan;
        double hi = radius * (last + 1) / kScan;
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            (inside(mid) ? lo : hi) = mid;
        }
        out[k].rho_max = lo;
    });
    return out;
}

/// sqrt(sum |a_k|^2): radius of a ball containing sn(P) for monic P.
inline double snail_radius_bound(const QPoly& p) {
    if (!p.is_monic()) throw DomainError("snail_radius_bound needs a monic polynomial");
    if (p.deg_or_neg() < 2) throw DomainError("snail_radius_bound needs degree >= 2");
    double s = 0;
    for (const auto& a : p.coeffs()) s += a.norm2();
    return std::sqrt(s);
}

}  // namespace qlucas

#endif
