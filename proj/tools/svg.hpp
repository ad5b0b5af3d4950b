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

#ifndef QLUCAS_TOOLS_SVG_HPP
#define QLUCAS_TOOLS_SVG_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "qlucas/qlucas.hpp"

namespace qlucas {

/// Radius of the section of K(N(P)) by the purely imaginary space, or a
/// negative value when the hull misses the imaginary axis.
inline double imaginary_hull_radius(const QPoly& p) {
    const Hull2D h = root_hull(normal_poly(p));
    // symmetric about the real axis, so the section is a ball about 0 or empty
    if (h.distance({0.0, 0.0}) > 1e-12) return -1.0;
    double lo = 0, hi = 0;
    for (const auto& v : h.vertices()) hi = std::max(hi, std::abs(v.y));
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (h.distance({0.0, mid}) <= 1e-12 * (1 + mid) ? lo : hi) = mid;
    }
    return lo;
}

/// Self-contained 600x600 figure of the section of sn(P) by span(I, J):
/// the section in gray, the imaginary section of K(N(P)) dashed, and the
/// purely imaginary critical spheres as dotted circles.
inline std::string section_svg(const QPoly& p, const ImUnit& unit, std::size_t steps) {
    constexpr double kSize = 600.0;
    const std::size_t n = 2 * (steps - 1) + 1;
    const auto sec = snail_cross_section(p, unit, n, 2.0 * std::numbers::pi);
    const double hull_r = imaginary_hull_radius(p);

    std::vector<double> circles;
    if (p.deg_or_neg() >= 2)
        for (const auto& s : critical_points(p).spheres)
            if (std::abs(s.re) <= 1e-9) circles.push_back(s.rad);

    double extent = std::max(hull_r, 0.0);
    for (double r : circles) extent = std::max(extent, r);
    for (const auto& s : sec)
        if (std::isfinite(s.rho_max)) extent = std::max(extent, s.rho_max);
    if (!(extent > 0)) extent = 1.0;
    const double scale = 0.5 * kSize * 0.9 / extent;
    const double c = 0.5 * kSize;

    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", v);
        return std::string(buf);
    };

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
    out += "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
    out += "<line x1=\"0\" y1=\"300\" x2=\"600\" y2=\"300\" stroke=\"#bbb\" stroke-width=\"0.5\"/>\n";
    out += "<line x1=\"300\" y1=\"0\" x2=\"300\" y2=\"600\" stroke=\"#bbb\" stroke-width=\"0.5\"/>\n";
    out += "<polygon fill=\"#999\" fill-opacity=\"0.6\" stroke=\"#444\" stroke-width=\"1\" points=\"";
    for (std::size_t k = 0; k + 1 < sec.size(); ++k) {
        const double r = std::min(sec[k].rho_max, extent / 0.9);
        out += num(c + scale * r * std::cos(sec[k].theta)) + "," + num(c - scale * r * std::sin(sec[k].theta)) + " ";
    }
    out += "\"/>\n";
    if (hull_r > 0)
        out += "<circle cx=\"300\" cy=\"300\" r=\"" + num(scale * hull_r) +
               "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n";
    for (double r : circles)
        out += "<circle cx=\"300\" cy=\"300\" r=\"" + num(scale * r) +
               "\" fill=\"none\" stroke=\"#b22222\" stroke-width=\"1.5\" stroke-dasharray=\"2 3\"/>\n";
    out += "</svg>\n";
    return out;
}

}  // namespace qlucas

#endif
