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

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace qlucas {
namespace {

using testing::Rng;

const Quaternion I = Quaternion::i();
const Quaternion J = Quaternion::j();
const Quaternion K = Quaternion::k();

QPoly intro() { return QPoly::linear_factor(I) * QPoly::linear_factor(J); }
QPoly limacon() { return QPoly({I * 2.0, 3.0, 0.0, 1.0}); }
QPoly power_minus_one(std::size_t d) { return QPoly::monomial(d) - QPoly({1.0}); }

TEST(GLVerify, Classification) {
    EXPECT_TRUE(is_gauss_lucas(intro()).is_gauss_lucas);
    EXPECT_TRUE(is_gauss_lucas(limacon()).is_gauss_lucas);
    for (std::size_t d = 2; d <= 8; ++d) EXPECT_TRUE(is_gauss_lucas(power_minus_one(d)).is_gauss_lucas);
    for (int d = 3; d <= 8; ++d) {
        const GLReport r = is_gauss_lucas(family_member(d));
        EXPECT_FALSE(r.is_gauss_lucas);
        ASSERT_FALSE(r.violating_points.empty());
        EXPECT_GT(std::abs(r.violating_points[0].re()), 1e-6);
        EXPECT_FALSE(r.theorem_checked);
    }
    EXPECT_THROW(is_gauss_lucas(QPoly({I, 1.0})), DomainError);
}

TEST(GLVerify, TheoremCheck) {
    GLReport r = theorem_check(intro());
    EXPECT_TRUE(r.theorem_checked);
    EXPECT_TRUE(r.theorem_holds);
    ASSERT_EQ(r.snail_witnesses.size(), 1u);
    ASSERT_TRUE(r.snail_witnesses[0].plane.has_value());
    EXPECT_TRUE(approx_equal(r.snail_witnesses[0].plane->value(), axis((I + J) / 2.0), 1e-9));

    r = theorem_check(limacon());
    EXPECT_EQ(r.snail_witnesses.size(), 8u);
    for (const auto& w : r.snail_witnesses) EXPECT_TRUE(w.contained);

    r = theorem_check(family_member(5), {}, is_gauss_lucas(family_member(5)));
    EXPECT_FALSE(r.is_gauss_lucas);
    EXPECT_TRUE(r.theorem_holds);
}

TEST(GLVerify, SphereRepresentatives) {
    const auto reps = sphere_representatives({0.5, 2.0});
    ASSERT_EQ(reps.size(), 8u);
    for (const auto& q : reps) {
        EXPECT_DOUBLE_EQ(q.re(), 0.5);
        EXPECT_NEAR(q.im_norm(), 2.0, 1e-14);
    }
}

TEST(GLVerify, Obstruction) {
    for (int d = 3; d <= 12; ++d) {
        const Obstruction o = odd_monomial_obstruction(family_member(d));
        EXPECT_TRUE(o.applies);
        EXPECT_EQ(o.e, static_cast<std::size_t>(d - 3));
    }
    EXPECT_FALSE(odd_monomial_obstruction(power_minus_one(3)).applies);
    EXPECT_FALSE(odd_monomial_obstruction(limacon()).applies);
    EXPECT_THROW(odd_monomial_obstruction(QPoly({1.0, 0.0, 1.0})), DomainError);
}

TEST(GLVerify, ProbeArguments) {
    EXPECT_EQ(perturbation_probe(family_member(4), 0.0, 5, 0), 1.0);
    EXPECT_THROW(perturbation_probe(family_member(4), -1.0, 5, 0), DomainError);
    EXPECT_THROW(perturbation_probe(family_member(4), 1e-3, 0, 0), DomainError);
    EXPECT_EQ(perturbation_probe(family_member(4), 1e-3, 10, 7), perturbation_probe(family_member(4), 1e-3, 10, 7));
}

TEST(GLVerifyProperty, MonicReduction) {
    Rng rng(70);
    for (int n = 0; n < 100; ++n) {
        const QPoly p = testing::random_poly(rng, 2 + n % 5, false);
        EXPECT_EQ(is_gauss_lucas(p).is_gauss_lucas, is_gauss_lucas(monicize(p)).is_gauss_lucas);
    }
    for (int d = 3; d <= 6; ++d) {
        const Quaternion a = testing::random_quat(rng, 0.5, 1.5);
        EXPECT_FALSE(is_gauss_lucas(family_member(d) * a).is_gauss_lucas);
    }
}

TEST(GLVerifyProperty, DegreeTwoIsGaussLucas) {
    Rng rng(71);
    for (int n = 0; n < 200; ++n) {
        const QPoly p = testing::random_poly(rng, 2, n % 2 == 0);
        EXPECT_TRUE(is_gauss_lucas(p).is_gauss_lucas);
    }
}

TEST(GLVerifyProperty, ObstructionImpliesFailure) {
    Rng rng(72);
    for (int n = 0; n < 100; ++n) {
        const int d = 3 + n % 6;
        QPoly p = family_member(d);
        if (n % 2) p = p * testing::random_quat(rng, 0.5, 1.5);
        const auto o = odd_monomial_obstruction(p);
        if (o.applies) {
            EXPECT_FALSE(is_gauss_lucas(p).is_gauss_lucas);
        }
    }
    for (int n = 0; n < 100; ++n) {
        const QPoly p = testing::random_poly(rng, 3 + n % 4, true);
        if (odd_monomial_obstruction(p).applies) {
            EXPECT_FALSE(is_gauss_lucas(p).is_gauss_lucas);
        }
    }
}

TEST(GLVerifyProperty, PlanePolynomialsAreGaussLucas) {
    Rng rng(73);
    for (int n = 0; n < 150; ++n) {
        const ImUnit u = testing::random_unit(rng);
        EXPECT_TRUE(is_gauss_lucas(testing::random_plane_poly(rng, 2 + n % 6, u)).is_gauss_lucas);
    }
}

TEST(GLVerifyProperty, LimaconSnailRefinesHull) {
    const RealPoly np = normal_poly(limacon());
    for (const auto& s : snail_cross_section(limacon(), ImUnit::i(), 90))
        for (double f : {0.3, 0.7, 1.0}) {
            const Quaternion q = (I * std::cos(s.theta) + J * std::sin(s.theta)) * (f * s.rho_max);
            EXPECT_TRUE(circular_hull_contains(np, q, 1e-9));
            EXPECT_TRUE(snail_contains(limacon(), q).contains);
        }
    EXPECT_TRUE(circular_hull_contains(np, I * -1.5, 1e-9));
    EXPECT_FALSE(snail_contains(limacon(), I * -1.5).contains);
}

}  // namespace
}  // namespace qlucas
