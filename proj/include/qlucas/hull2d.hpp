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

#ifndef QLUCAS_HULL2D_HPP
#define QLUCAS_HULL2D_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "croots.hpp"
#include "qpoly.hpp"
#include "quat.hpp"

namespace qlucas {

struct Point2 {
    double x = 0;
    double y = 0;
    bool operator==(const Point2&) const = default;
};

inline double cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline double distance_to_segment(const Point2& p, const Point2& a, const Point2& b) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double t = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

/// Convex polygon, counterclockwise from the lexicographic minimum. Fewer
/// than three vertices encode the degenerate hulls (empty, point, segment).
class Hull2D {
   public:
    Hull2D() = default;
    explicit Hull2D(std::vector<Point2> ccw) : v_(std::move(ccw)) {}

    const std::vector<Point2>& vertices() const { return v_; }
    bool empty() const { return v_.empty(); }
    bool is_point() const { return v_.size() == 1; }
    bool is_segment() const { return v_.size() == 2; }

    /// Euclidean distance from p to the hull, 0 inside. +inf for the empty hull.
    double distance(const Point2& p) const {
        if (v_.empty()) return std::numeric_limits<double>::infinity();
        if (v_.size() == 1) return std::hypot(p.x - v_[0].x, p.y - v_[0].y);
        if (v_.size() == 2) return distance_to_segment(p, v_[0], v_[1]);
        bool inside = true;
        double d = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < v_.size(); ++k) {
            const Point2& a = v_[k];
            const Point2& b = v_[(k + 1) % v_.size()];
            if (cross(a, b, p) < 0) inside = false;
            d = std::min(d, distance_to_segment(p, a, b));
        }
        return inside ? 0.0 : d;
    }

   private:
    std::vector<Point2> v_;
};

/// Andrew's monotone chain with a zero-tolerance turn test, followed by removal of
/// vertices that are collinear with their neighbours (cross product below
/// 1e-12 scale^2) and lie between them. The second pass never drops an
/// extreme point, which a tolerant turn test inside the chain could.
inline Hull2D convex_hull(std::span<const Point2> input) {
    std::vector<Point2> pts(input.begin(), input.end());
    std::sort(pts.begin(), pts.end(),
              [](const Point2& a, const Point2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 1) return Hull2D(std::move(pts));

    std::vector<Point2> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    for (std::size_t s = pts.size() - 1, lower = k + 1; s-- > 0;) {
        while (k >= lower && cross(h[k - 2], h[k - 1], pts[s]) <= 0) --k;
        h[k++] = pts[s];
    }
    h.resize(k - 1);

    double scale = 1.0;
    for (const auto& p : pts) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
    const double eps = 1e-12 * scale * scale;
    for (bool changed = true; changed && h.size() > 2;) {
        changed = false;
        for (std::size_t v = 0; v < h.size() && h.size() > 2; ++v) {
            const Point2& a = h[(v + h.size() - 1) % h.size()];
            const Point2& b = h[v];
            const Point2& c = h[(v + 1) % h.size()];
            const double along = (b.x - a.x) * (c.x - a.x) + (b.y - a.y) * (c.y - a.y);
            const double len2 = (c.x - a.x) * (c.x - a.x) + (c.y - a.y) * (c.y - a.y);
            if (std::abs(cross(a, b, c)) <= eps && along >= 0 && along <= len2) {
                h.erase(h.begin() + static_cast<std::ptrdiff_t>(v));
                changed = true;
                break;
            }
        }
    }
    // restart from the lexicographic minimum
    auto first = std::min_element(h.begin(), h.end(), [](const Point2& a, const Point2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    std::rotate(h.begin(), first, h.end());
    return Hull2D(std::move(h));
}

inline Hull2D convex_hull(std::initializer_list<Point2> pts) {
    return convex_hull(std::span<const Point2>(pts.begin(), pts.size()));
}

inline bool hull_contains(const Hull2D& h, const Point2& p, double tol) { return h.distance(p) <= tol; }

/// Hull of the roots of a real polynomial as points (re, im) of C.
inline Hull2D root_hull(const RealPoly& np) {
    std::vector<Point2> pts;
    for (const auto& r : complex_roots(np)) pts.push_back({r.value.real(), r.value.imag()});
    return convex_hull(pts);
}

/// Point of the complex plane representing the sphere S_q.
inline Point2 circular_point(const Quaternion& q) { return {q.re(), q.im_norm()}; }

/// Distance from S_q to K(N(P)) measured in the complex picture.
inline double circular_hull_distance(const Hull2D& h, const Quaternion& q) { return h.distance(circular_point(q)); }

/// Membership in the circular convex hull of the zero set of a real
/// polynomial: K(NP) is the circularization of the planar hull of its
/// complex roots, so only (re q, |im q|) matters.
inline bool circular_hull_contains(const RealPoly& np, const Quaternion& q, double tol) {
    if (np.degree().value_or(0) < 1) throw DomainError("circular_hull_contains needs degree >= 1");
    return hull_contains(root_hull(np), circular_point(q), tol);
}

}  // namespace qlucas

#endif
