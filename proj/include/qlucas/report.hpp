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
 * @file report.hpp
 * @brief JSON forms of roots, bound and classification reports.
 *
 * Quaternions are `[w,x,y,z]`, spheres `{"re":..,"rad":..}`. Infinite
 * reals are written as the string "inf" (JSON has no infinity).
 * Requires nlohmann/json.
 */

#ifndef QLUCAS_REPORT_HPP
#define QLUCAS_REPORT_HPP

#include <cmath>

#include <nlohmann/json.hpp>

#include "bounds.hpp"
#include "glverify.hpp"
#include "qpoly.hpp"
#include "qroots.hpp"
#include "snail.hpp"

namespace qlucas {

using nlohmann::json;

inline json real_json(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0) return 0.0;  // no -0 in output
    return v;
}

inline json to_json(const Quaternion& q) { return json::array({real_json(q.w), real_json(q.x), real_json(q.y), real_json(q.z)}); }

inline json to_json(const Sphere& s) { return {{"re", real_json(s.re)}, {"rad", real_json(s.rad)}}; }

inline json to_json(const QPoly& p) {
    json a = json::array();
    for (const auto& q : p.coeffs()) a.push_back(to_json(q));
    return a;
}

inline json to_json(const RealPoly& p) {
    json a = json::array();
    for (double v : p.coeffs()) a.push_back(real_json(v));
    return a;
}

inline json to_json(const RootSet& r) {
    json iso = json::array(), sph = json::array(), disc = json::array();
    for (const auto& q : r.isolated) iso.push_back(to_json(q));
    for (const auto& s : r.spheres) sph.push_back(to_json(s));
    for (const auto& s : r.discarded) disc.push_back(to_json(s));
    return {{"isolated", iso}, {"spheres", sph}, {"discarded", disc}};
}

inline json to_json(const BoundReport& b) {
    return {{"c_of_p", real_json(b.c_of_p)},
            {"rho", b.rho ? real_json(*b.rho) : json(nullptr)},
            {"max_root_norm", real_json(b.max_root_norm)},
            {"slice_sup_estimate", real_json(b.slice_sup_estimate)},
            {"slice_sup_samples", b.slice_sup_samples}};
}

inline json to_json(const SnailWitness& w) {
    json j = {{"point", to_json(w.point)}, {"distance", real_json(w.distance)}};
    if (w.sampled) {
        j["plane"] = "sampled";
        if (w.plane) j["sampled_plane"] = to_json(w.plane->value());
    } else {
        j["plane"] = w.plane ? to_json(w.plane->value()) : json(nullptr);
    }
    return j;
}

inline json to_json(const GLReport& r) {
    json viol = json::array(), wit = json::array();
    for (const auto& q : r.violating_points) viol.push_back(to_json(q));
    for (const auto& w : r.snail_witnesses) wit.push_back(to_json(w));
    json j = {{"is_gauss_lucas", r.is_gauss_lucas}, {"violating_points", viol}};
    if (r.theorem_checked) {
        j["theorem_holds"] = r.theorem_holds;
        j["snail_witnesses"] = wit;
    }
    return j;
}

inline json to_json(const SnailMembership& m) {
    json j = {{"contains", m.contains}, {"distance", real_json(m.distance)}, {"sampled", m.sampled},
              {"approximate", m.approximate}};
    j["plane"] = m.plane ? to_json(m.plane->value()) : json(nullptr);
    return j;
}

}  // namespace qlucas

#endif
