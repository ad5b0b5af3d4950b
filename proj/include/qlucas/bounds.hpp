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
 * @file bounds.hpp
 * @brief Cauchy-type bounds on the norms of roots and critical points.
 *
 * C(P) = |a_d|^{-1} sqrt(sum |a_k|^2), +inf on constants. With
 * b_k = |a_k a_d^{-1}| the real polynomial h(z) = z^d - sum_{k<d} b_k z^k
 * has a single positive root rho, and every root x of P satisfies
 * |x| <= rho < C(P).
 *
 * The slice estimate sup_I C(P^I) bounds the roots of P and of P' alike;
 * the supremum over the sphere of units is approximated on the same
 * Fibonacci lattice the snail uses.
 */

#ifndef QLUCAS_BOUNDS_HPP
#define QLUCAS_BOUNDS_HPP

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "family.hpp"
#include "parallel.hpp"
#include "qpoly.hpp"
#include "qroots.hpp"
#include "snail.hpp"

namespace qlucas {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline double cauchy_C(const QPoly& p) {
    if (p.is_constant()) return kInf;
    double s = 0;
    for (const auto& a : p.coeffs()) s += a.norm2();
    return std::sqrt(s) / p.leading().norm();
}

inline double cauchy_C(const CPoly& p) { return cauchy_bound(p.coeffs()); }

namespace detail {

struct CauchyAux {
    std::vector<double> b;  // b_0 .. b_{d-1}
    std::size_t degree = 0;

    double h(double z) const {
        double r = 1.0;
        for (std::size_t k = degree; k-- > 0;) r = r * z - b[k];
        return r;
    }
    double dh(double z) const {
        double r = static_cast<double>(degree);
        for (std::size_t k = degree - 1; k-- > 0;) r = r * z - static_cast<double>(k + 1) * b[k + 1];
        return r;
    }
};

inline CauchyAux cauchy_aux(const QPoly& p) {
    CauchyAux aux;
    aux.degree = *p.degree();
    const double lead = p.leading().norm();
    for (std::size_t k = 0; k < aux.degree; ++k) aux.b.push_back(p[k].norm() / lead);
    return aux;
}

}  // namespace detail

/// The unique positive root of h(z) = z^d - sum_{k<d} |a_k a_d^{-1}| z^k.
inline double cauchy_rho(const QPoly& p) {
    if (p.deg_or_neg() < 1) throw DomainError("cauchy_rho needs degree >= 1");
    const auto aux = detail::cauchy_aux(p);
    std::size_t low = 0;
    while (low < aux.degree && aux.b[low] == 0) ++low;
    if (low == aux.degree) throw DomainError("cauchy_rho of a monomial: every root is 0");

    // h(z) = z^low g(z) with g(0) = -b_low < 0, so bisect g's sign on (0, hi].
    auto g = [&](double z) {
        double r = 1.0;
        for (std::size_t k = aux.degree; k-- > low;) r = r * z - aux.b[k];
        return r;
    };
    double lo = 0.0;
    double hi = cauchy_C(p);
    while (g(hi) <= 0) hi *= 2;
    for (int it = 0; it < 200 && hi - lo > 4 * std::numeric_limits<double>::epsilon() * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < 0 ? lo : hi) = mid;
    }
    double rho = 0.5 * (lo + hi);
    for (int it = 0; it < 3; ++it) {
        const double d = aux.dh(rho);
        if (d == 0) break;
        const double cand = rho - aux.h(rho) / d;
        if (cand > 0 && std::abs(aux.h(cand)) < std::abs(aux.h(rho))) rho = cand;
        else break;
    }
    return rho;
}

/// Value of the auxiliary polynomial h at z (exposed for tests).
inline double cauchy_h(const QPoly& p, double z) { return detail::cauchy_aux(p).h(z); }

struct SliceSup {
    double estimate = 0;
    ImUnit argmax = ImUnit::i();
    std::size_t samples = 0;
    /// Some sampled slice was constant; `argmax` is that plane.
    bool hit_constant = false;
};

/// max over sampled I of C(P^I). A constant slice yields +inf with the
/// plane reported as witness.
inline SliceSup slice_sup_C(const QPoly& p, std::size_t n_samples = 2048) {
    const auto units = sample_sphere(n_samples);
    std::vector<double> c(units.size());
    parallel_for(units.size(), [&](std::size_t k) { c[k] = cauchy_C(slice_poly(p, units[k])); });
    SliceSup out;
    out.samples = units.size();
    std::size_t best = 0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (std::isinf(c[k])) {
            best = k;
            out.hit_constant = true;
            break;
        }
        if (c[k] > c[best]) best = k;
    }
    out.estimate = c[best];
    out.argmax = units[best];
    return out;
}

struct BoundReport {
    double c_of_p = kInf;
    /// Undefined for monomials X^d a.
    std::optional<double> rho;
    double max_root_norm = 0;
    double slice_sup_estimate = kInf;
    std::size_t slice_sup_samples = 0;
};

/// Computes the roots of P and checks max |x| <= rho + tol' <= C(P) + tol'
/// with tol' = tol (1 + rho). A failure is a library bug.
inline BoundReport verify_root_bound(const QPoly& p, double tol = 1e-9, std::size_t samples = 2048) {
    if (p.deg_or_neg() < 1) throw DomainError("verify_root_bound needs degree >= 1");
    BoundReport r;
    r.c_of_p = cauchy_C(p);
    r.max_root_norm = left_roots(p, tol).max_norm();
    const bool monomial = [&] {
        for (std::size_t k = 0; k + 1 < p.coeffs().size(); ++k)
            if (!p[k].is_zero()) return false;
        return true;
    }();
    if (!monomial) r.rho = cauchy_rho(p);
    const auto sup = slice_sup_C(p, samples);
    r.slice_sup_estimate = sup.estimate;
    r.slice_sup_samples = sup.samples;

    const double rho = r.rho.value_or(0.0);
    const double slack = tol * (1.0 + rho);
    if (r.max_root_norm > rho + slack || rho > r.c_of_p + slack)
        throw InvariantViolation("root bound chain violated: max |x| = " + format_real(r.max_root_norm) +
                                 ", rho = " + format_real(rho) + ", C = " + format_real(r.c_of_p));
    return r;
}

/// Classic bound C(P') against the slice estimate sup_I C(P^I) for the
/// family member of degree d. Both bound the critical points of P.
struct EstimateComparison {
    double classic = 0;
    double slice = 0;
    bool slice_better = false;
};

inline EstimateComparison estimate_comparison(int d, std::size_t samples = 2048) {
    if (d < 3) throw DomainError("estimate_comparison needs d >= 3");
    const QPoly p = family_member(d);
    EstimateComparison e;
    e.classic = cauchy_C(derivative(p));
    e.slice = slice_sup_C(p, samples).estimate;
    e.slice_better = e.slice < e.classic - 1e-9;
    return e;
}

}  // namespace qlucas

#endif
