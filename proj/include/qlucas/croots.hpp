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
 * @file croots.hpp
 * @brief Roots of complex (and real) polynomials with multiplicities.
 *
 * Aberth-Ehrlich simultaneous iteration started on the Cauchy circle,
 * stopped per root once the residual reaches the rounding level of Horner
 * evaluation. Iterates of a multiple root converge to a cloud of radius
 * roughly (n eps)^(1/m); such clouds are found by single-linkage clustering
 * at decreasing radii and accepted as one m-fold root only if the Taylor
 * coefficients q^(j)(c)/j!, j < m, vanish to rounding accuracy at the
 * refined centre c (Newton on q^(m-1)). Whatever remains within the user
 * tolerance is merged unconditionally.
 */

#ifndef QLUCAS_CROOTS_HPP
#define QLUCAS_CROOTS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <numeric>
#include <span>
#include <sstream>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "qpoly.hpp"

namespace qlucas {

using Complex = std::complex<double>;

class CPoly {
   public:
    CPoly() = default;
    explicit CPoly(std::vector<Complex> coeffs) : c_(std::move(coeffs)) { normalize(); }
    CPoly(std::initializer_list<Complex> coeffs) : c_(coeffs) { normalize(); }
    explicit CPoly(const RealPoly& p) : c_(p.coeffs().begin(), p.coeffs().end()) {}

    std::optional<std::size_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Complex operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Complex{}; }
    const std::vector<Complex>& coeffs() const { return c_; }
    bool is_real() const {
        return std::all_of(c_.begin(), c_.end(), [](const Complex& z) { return z.imag() == 0; });
    }

    Complex operator()(Complex x) const {
        Complex r{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    bool operator==(const CPoly&) const = default;

   private:
    void normalize() {
        detail::trim(c_, [](const Complex& z) { return z == Complex{}; });
    }
    std::vector<Complex> c_;
};

struct CRoot {
    Complex value;
    std::size_t multiplicity = 1;
};

using CRootList = std::vector<CRoot>;

/// |a_d|^{-1} sqrt(sum |a_k|^2); +inf for constants.
inline double cauchy_bound(std::span<const Complex> c) {
    if (c.size() <= 1) return std::numeric_limits<double>::infinity();
    double s = 0;
    for (const auto& z : c) s += std::norm(z);
    return std::sqrt(s) / std::abs(c.back());
}

namespace detail {

constexpr double kEps = std::numeric_limits<double>::epsilon();

/// Taylor coefficients of the polynomial around `center` up to order `m`,
/// i.e. t[j] = q^(j)(center)/j!.
inline std::vector<Complex> taylor(std::span<const Complex> a, Complex center, std::size_t m) {
    std::vector<Complex> b(a.begin(), a.end());
    const std::size_t n = b.size() - 1;
    std::vector<Complex> t;
    for (std::size_t j = 0; j <= std::min(m, n); ++j) {
        for (std::size_t k = n; k-- > j;) b[k] += center * b[k + 1];
        t.push_back(b[j]);
    }
    t.resize(m + 1);
    return t;
}

/// Same recursion on |a_k| and |center|: magnitude bound for each t[j].
inline std::vector<double> taylor_bound(std::span<const Complex> a, double r, std::size_t m) {
    std::vector<double> b;
    for (const auto& z : a) b.push_back(std::abs(z));
    const std::size_t n = b.size() - 1;
    std::vector<double> t;
    for (std::size_t j = 0; j <= std::min(m, n); ++j) {
        for (std::size_t k = n; k-- > j;) b[k] += r * b[k + 1];
        t.push_back(b[j]);
    }
    t.resize(m + 1, 0.0);
    return t;
}

inline double horner_abs(std::span<const Complex> a, double r) {
    double v = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * r + std::abs(*it);
    return v;
}

/// Simultaneous Aberth-Ehrlich iteration. Returns true if every root hit
/// the rounding-level stopping rule.
inline bool aberth(std::span<const Complex> a, std::vector<Complex>& z, int max_iter = 2000) {
    const std::size_t n = a.size() - 1;
    const double radius = cauchy_bound(a);
    z.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double ang = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.7;
        z[k] = std::polar(radius, ang);
    }
    std::vector<bool> done(n, false);
    const double slack = 4.0 * static_cast<double>(n + 1) * kEps;
    for (int it = 0; it < max_iter; ++it) {
        bool all = true;
        for (std::size_t k = 0; k < n; ++k) {
            if (done[k]) continue;
            Complex p{}, dp{};
            for (auto c = a.rbegin(); c != a.rend(); ++c) {
                dp = dp * z[k] + p;
                p = p * z[k] + *c;
            }
            if (std::abs(p) <= slack * horner_abs(a, std::abs(z[k]))) {
                done[k] = true;
                continue;
            }
            all = false;
            if (dp == Complex{}) {
                z[k] *= Complex(1.0 + 1e-8, 1e-8);
                continue;
            }
            const Complex ratio = p / dp;
            Complex s{};
            for (std::size_t j = 0; j < n; ++j)
                if (j != k && z[j] != z[k]) s += 1.0 / (z[k] - z[j]);
            const Complex corr = ratio / (1.0 - ratio * s);
            z[k] -= corr;
            if (std::abs(corr) <= kEps * std::abs(z[k])) done[k] = true;
        }
        if (all) return true;
    }
    return std::all_of(done.begin(), done.end(), [](bool b) { return b; });
}

/// Single-linkage grouping of `idx` at distance `radius`.
inline std::vector<std::vector<std::size_t>> link_groups(const std::vector<Complex>& z,
                                                         const std::vector<std::size_t>& idx,
                                                         double radius) {
    std::vector<int> label(idx.size(), -1);
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t s = 0; s < idx.size(); ++s) {
        if (label[s] >= 0) continue;
        label[s] = static_cast<int>(groups.size());
        std::vector<std::size_t> members{s};
        for (std::size_t h = 0; h < members.size(); ++h)
            for (std::size_t t = 0; t < idx.size(); ++t)
                if (label[t] < 0 && std::abs(z[idx[members[h]]] - z[idx[t]]) <= radius) {
                    label[t] = label[s];
                    members.push_back(t);
                }
        std::vector<std::size_t> g;
        for (auto m : members) g.push_back(idx[m]);
        std::sort(g.begin(), g.end());
        groups.push_back(std::move(g));
    }
    return groups;
}

/// Newton on q^(m-1) from `c`, staying within `radius`. Returns the refined
/// centre and whether q, ..., q^(m-1) vanish there to rounding accuracy.
inline std::pair<Complex, bool> refine_multiple(std::span<const Complex> a, Complex c, std::size_t m,
                                                double radius) {
    const Complex start = c;
    const std::size_t n = a.size() - 1;
    for (int it = 0; it < 60; ++it) {
        const auto t = taylor(a, c, m);
        if (t[m] == Complex{}) break;
        const Complex step = t[m - 1] / (static_cast<double>(m) * t[m]);
        if (std::abs(c - step - start) > radius) return {start, false};
        c -= step;
        if (std::abs(step) <= 2.0 * kEps * std::abs(c)) break;
    }
    const auto t = taylor(a, c, m);
    const auto e = taylor_bound(a, std::abs(c), m);
    const double slack = 1000.0 * static_cast<double>(n + 1) * kEps;
    for (std::size_t j = 0; j < m; ++j)
        if (std::abs(t[j]) > slack * e[j]) return {c, false};
    return {c, true};
}

inline Complex polish_simple(std::span<const Complex> a, Complex z) {
    auto eval = [&](Complex x) {
        Complex p{}, dp{};
        for (auto c = a.rbegin(); c != a.rend(); ++c) {
            dp = dp * x + p;
            p = p * x + *c;
        }
        return std::pair{p, dp};
    };
    for (int it = 0; it < 3; ++it) {
        auto [p, dp] = eval(z);
        if (dp == Complex{}) break;
        const Complex cand = z - p / dp;
        if (std::abs(eval(cand).first) < std::abs(p)) z = cand;
        else break;
    }
    return z;
}

inline Complex mean_of(const std::vector<Complex>& z, const std::vector<std::size_t>& g) {
    Complex s{};
    for (auto k : g) s += z[k];
    return s / static_cast<double>(g.size());
}

inline void cluster(std::span<const Complex> a, const std::vector<Complex>& z,
                    const std::vector<std::size_t>& idx, double radius, double floor_radius,
                    CRootList& out) {
    for (const auto& g : link_groups(z, idx, radius)) {
        if (g.size() == 1) {
            out.push_back({polish_simple(a, z[g[0]]), 1});
            continue;
        }
        const Complex c = mean_of(z, g);
        auto [refined, ok] = refine_multiple(a, c, g.size(), radius);
        if (ok) {
            out.push_back({refined, g.size()});
        } else if (radius <= floor_radius) {
            out.push_back({c, g.size()});
        } else {
            cluster(a, z, g, std::max(radius * 0.1, floor_radius), floor_radius, out);
        }
    }
}

}  // namespace detail

/// All roots of `p` with multiplicities, sorted by (real, imaginary).
/// Roots closer than tol (1 + max |root|) are reported as one entry.
/// For real input the list is made exactly conjugate-symmetric.
inline CRootList complex_roots(const CPoly& p, double tol = 1e-7) {
    if (p.is_constant()) throw DomainError("complex_roots of a constant polynomial");
    const auto& full = p.coeffs();
    const std::size_t deg = full.size() - 1;

    std::size_t zeros = 0;
    while (full[zeros] == Complex{}) ++zeros;
    std::span<const Complex> a(full.begin() + static_cast<std::ptrdiff_t>(zeros), full.end());
    const std::size_t n = a.size() - 1;

    CRootList roots;
    if (zeros > 0) roots.push_back({Complex{}, zeros});
    std::vector<Complex> z;
    if (n == 1) {
        roots.push_back({-a[0] / a[1], 1});
    } else if (n > 1) {
        detail::aberth(a, z);
        double m = 0;
        for (const auto& v : z) m = std::max(m, std::abs(v));
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        const double floor_radius = tol * (1.0 + m);
        detail::cluster(a, z, idx, std::max(0.1 * (1.0 + m), floor_radius), floor_radius, roots);
    }

    // Final merge at the user tolerance (also folds the exact zero roots into
    // nearby clusters).
    double m = 0;
    for (const auto& r : roots) m = std::max(m, std::abs(r.value));
    const double merge = tol * (1.0 + m);
    for (bool merged = true; merged;) {
        merged = false;
        for (std::size_t s = 0; s < roots.size() && !merged; ++s)
            for (std::size_t t = s + 1; t < roots.size() && !merged; ++t)
                if (std::abs(roots[s].value - roots[t].value) <= merge) {
                    const double ws = static_cast<double>(roots[s].multiplicity);
                    const double wt = static_cast<double>(roots[t].multiplicity);
                    // the stripped zeros are exact, keep them exact
                    const bool exact = zeros > 0 && (roots[s].value == Complex{} || roots[t].value == Complex{});
                    const Complex v = exact ? Complex{} : (roots[s].value * ws + roots[t].value * wt) / (ws + wt);
                    roots[s] = {v, roots[s].multiplicity + roots[t].multiplicity};
                    roots.erase(roots.begin() + static_cast<std::ptrdiff_t>(t));
                    merged = true;
                }
    }

    if (p.is_real()) {
        CRootList sym;
        std::size_t count = 0;
        for (const auto& r : roots) {
            const double thr = merge;
            if (std::abs(r.value.imag()) <= thr) {
                sym.push_back({Complex(r.value.real(), 0.0), r.multiplicity});
                count += r.multiplicity;
            } else if (r.value.imag() > 0) {
                sym.push_back({r.value, r.multiplicity});
                sym.push_back({std::conj(r.value), r.multiplicity});
                count += 2 * r.multiplicity;
            }
        }
        if (count == deg) roots = std::move(sym);
    }

    std::sort(roots.begin(), roots.end(), [](const CRoot& l, const CRoot& r) {
        if (l.value.real() != r.value.real()) return l.value.real() < r.value.real();
        return l.value.imag() < r.value.imag();
    });

    const double scale = std::accumulate(full.begin(), full.end(), 0.0,
                                         [](double s, const Complex& c) { return std::max(s, std::abs(c)); });
    for (const auto& r : roots) {
        const double bound = 1e-8 * scale * std::pow(1.0 + std::abs(r.value), static_cast<double>(deg));
        if (std::abs(p(r.value)) > bound) {
            std::ostringstream best;
            best.precision(17);
            for (const auto& s : roots) best << s.value << "^" << s.multiplicity << " ";
            throw ConvergenceError("root finder did not converge (residual above bound)", best.str());
        }
    }
    return roots;
}

inline CRootList complex_roots(const RealPoly& p, double tol = 1e-7) { return complex_roots(CPoly(p), tol); }

/// Flattened root values, each repeated by multiplicity.
inline std::vector<Complex> expand(const CRootList& roots) {
    std::vector<Complex> v;
    for (const auto& r : roots) v.insert(v.end(), r.multiplicity, r.value);
    return v;
}

/// Odd-degree monomials with a coefficient above 1e-12 * max |coefficient|.
inline std::vector<std::pair<std::size_t, double>> real_poly_odd_part(const RealPoly& p) {
    std::vector<std::pair<std::size_t, double>> out;
    const double thr = 1e-12 * p.max_abs();
    const auto& c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;)
        if (k % 2 == 1 && std::abs(c[k]) > thr) out.emplace_back(k, c[k]);
    return out;
}

}  // namespace qlucas

#endif
