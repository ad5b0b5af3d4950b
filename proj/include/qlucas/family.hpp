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

#ifndef QLUCAS_FAMILY_HPP
#define QLUCAS_FAMILY_HPP

#include "errors.hpp"
#include "qpoly.hpp"
#include "quat.hpp"

namespace qlucas {

/// X^{d-3} * (X - i) * (X - j) * (X - k), built with star products.
inline QPoly family_member(int d) {
    if (d < 3) throw DomainError("family member needs degree >= 3");
    return QPoly::monomial(static_cast<std::size_t>(d - 3)) * QPoly::linear_factor(Quaternion::i()) *
           QPoly::linear_factor(Quaternion::j()) * QPoly::linear_factor(Quaternion::k());
}

/// The family member together with the closed forms of P, P' and N(P').
/// All coefficients are small integers, so comparisons can be exact.
struct CounterexampleFamily {
    QPoly p;
    QPoly expected_p;
    QPoly expected_p1;
    RealPoly expected_np1;
};

inline CounterexampleFamily counterexample_family(int d) {
    CounterexampleFamily f;
    f.p = family_member(d);

    const auto u = static_cast<std::size_t>(d);
    const Quaternion ijk{0, 1, 1, 1};
    const Quaternion i_jk{0, 1, -1, 1};
    const double dd = d;

    f.expected_p = QPoly::monomial(u) + QPoly::monomial(u - 1, -ijk) + QPoly::monomial(u - 2, i_jk) +
                   QPoly::monomial(u - 3);

    f.expected_p1 = QPoly::monomial(u - 1, dd) + QPoly::monomial(u - 2, -ijk * (dd - 1)) +
                    QPoly::monomial(u - 3, i_jk * (dd - 2));
    if (d > 3) f.expected_p1 = f.expected_p1 + QPoly::monomial(u - 4, dd - 3);

    f.expected_np1 = RealPoly::monomial(2 * u - 2, dd * dd) + RealPoly::monomial(2 * u - 4, 3 * (dd - 1) * (dd - 1)) +
                     RealPoly::monomial(2 * u - 5, -4.0) + RealPoly::monomial(2 * u - 6, 3 * (dd - 2) * (dd - 2));
    if (d > 3) f.expected_np1 = f.expected_np1 + RealPoly::monomial(2 * u - 8, (dd - 3) * (dd - 3));
    return f;
}

}  // namespace qlucas

#endif
