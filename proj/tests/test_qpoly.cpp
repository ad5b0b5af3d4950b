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

// X^2 - X(i+j) + k
QPoly intro() { return QPoly({K, -(I + J), 1.0}); }

QPoly x_minus(const Quaternion& a) { return QPoly::linear_factor(a); }

void expect_poly_near(const QPoly& a, const QPoly& b, double tol) {
    const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    for (std::size_t k = 0; k < n; ++k) EXPECT_LE(distance(a[k], b[k]), tol) << "degree " << k;
}

TEST(QPoly, ZeroPolynomialHasNoDegree) {
    EXPECT_FALSE(QPoly().degree().has_value());
    EXPECT_FALSE(QPoly({0.0, 0.0}).degree().has_value());
    EXPECT_EQ(QPoly({1.0, 0.0}).degree(), 0u);
    EXPECT_THROW(QPoly().leading(), DomainError);
}

TEST(QPoly, StarProduct) {
    EXPECT_EQ(star_mul(x_minus(I), x_minus(J)), intro());
    EXPECT_EQ(star_mul(intro(), QPoly({1.0})), intro());
    EXPECT_EQ(star_mul(x_minus(J), x_minus(I)), QPoly({-K, -(I + J), 1.0}));
}

TEST(QPoly, EvalLeft) {
    EXPECT_EQ(eval_left(intro(), I), Quaternion{});
    EXPECT_EQ(eval_left(intro(), J), K * 2.0);
    EXPECT_EQ(eval_left(intro(), Quaternion{}), K);
}

TEST(QPoly, ConjPoly) {
    EXPECT_EQ(conj_poly(x_minus(I)), QPoly({I, 1.0}));
    EXPECT_EQ(conj_poly(QPoly({1.0, 2.0, -3.0})), QPoly({1.0, 2.0, -3.0}));
    EXPECT_EQ(conj_poly(intro()), QPoly({-K, I + J, 1.0}));
}

TEST(QPoly, NormalPoly) {
    EXPECT_EQ(normal_poly(x_minus(I)), RealPoly({1, 0, 1}));
    for (int d = 3; d <= 10; ++d) {
        RealPoly expected = RealPoly::monomial(2 * static_cast<std::size_t>(d) - 6);
        for (int n = 0; n < 3; ++n) expected = expected * RealPoly{1, 0, 1};
        EXPECT_EQ(normal_poly(family_member(d)), expected) << "d = " << d;
    }
    EXPECT_EQ(normal_poly(derivative(family_member(3))), RealPoly({3, -4, 12, 0, 9}));
}

TEST(QPoly, Derivative) {
    EXPECT_EQ(derivative(intro()), QPoly({-(I + J), 2.0}));
    EXPECT_TRUE(derivative(QPoly({I})).is_zero());
    EXPECT_EQ(derivative(family_member(3)), QPoly({I - J + K, -(I + J + K) * 2.0, 3.0}));
    EXPECT_EQ(derivative(RealPoly{1, 2, 3}), RealPoly({2, 6}));
}

TEST(QPoly, Monicize) {
    EXPECT_EQ(monicize(QPoly({0.0, 1.0, I})), QPoly({0.0, -I, 1.0}));
    EXPECT_EQ(monicize(intro()), intro());
    EXPECT_EQ(monicize(QPoly({I * 6.0, 3.0})), QPoly({I * 2.0, 1.0}));
    EXPECT_THROW(monicize(QPoly()), DomainError);
}

TEST(QPoly, DivideByRealQuadratic) {
    auto r = divide_by_real_quadratic(intro(), 0, 1);
    EXPECT_EQ(r.quotient, QPoly({1.0}));
    EXPECT_EQ(r.c1, -(I + J));
    EXPECT_EQ(r.c0, K - 1.0);

    r = divide_by_real_quadratic(QPoly({1.0, 0.0, 1.0}), 0, 1);
    EXPECT_EQ(r.quotient, QPoly({1.0}));
    EXPECT_TRUE(r.c1.is_zero());
    EXPECT_TRUE(r.c0.is_zero());

    r = divide_by_real_quadratic(QPoly::monomial(3), 0, 1);
    EXPECT_EQ(r.quotient, QPoly::monomial(1));
    EXPECT_EQ(r.c1, Quaternion(-1));
    EXPECT_TRUE(r.c0.is_zero());

    r = divide_by_real_quadratic(QPoly({I, J}), 0, 1);
    EXPECT_TRUE(r.quotient.is_zero());
    EXPECT_EQ(r.c1, J);
    EXPECT_EQ(r.c0, I);

    EXPECT_THROW(divide_by_real_quadratic(intro(), 2, 1), DomainError);
}

TEST(QPolyProperty, EvaluationIdentity) {
    Rng rng(10);
    for (int n = 0; n < 300; ++n) {
        const QPoly p = testing::random_poly(rng, 1 + n % 5, false);
        const QPoly q = testing::random_poly(rng, 1 + n % 4, false);
        const Quaternion x = testing::random_quat(rng, -1.5, 1.5);
        const Quaternion px = eval_left(p, x);
        const Quaternion lhs = eval_left(p * q, x);
        const Quaternion rhs = px * eval_left(q, inverse(px) * x * px);
        EXPECT_LE(distance(lhs, rhs), 1e-8 * (1 + lhs.norm()));
    }
}

TEST(QPolyProperty, ProductVanishesAtLeftFactorRoot) {
    Rng rng(11);
    for (int n = 0; n < 200; ++n) {
        const Quaternion x = testing::random_quat(rng);
        const QPoly q = testing::random_poly(rng, 3, false);
        EXPECT_LE(eval_left(x_minus(x) * q, x).norm(), 1e-13);
    }
}

TEST(QPolyProperty, RealLeftFactorEvaluatesPointwise) {
    Rng rng(12);
    for (int n = 0; n < 200; ++n) {
        const QPoly p(testing::random_real_poly(rng, 3));
        const QPoly q = testing::random_poly(rng, 2, false);
        const Quaternion x = testing::random_quat(rng);
        EXPECT_TRUE(approx_equal(eval_left(p * q, x), eval_left(p, x) * eval_left(q, x), 1e-13));
    }
}

TEST(QPolyProperty, NormalPolyLaws) {
    Rng rng(13);
    for (int n = 0; n < 200; ++n) {
        const QPoly p = testing::random_poly(rng, 1 + n % 6, false);
        const QPoly q = testing::random_poly(rng, 1 + n % 3, false);
        const RealPoly np = normal_poly(p);
        const RealPoly npc = normal_poly(conj_poly(p));
        const RealPoly prod = normal_poly(p * q);
        const RealPoly expected = np * normal_poly(q);
        ASSERT_EQ(np.degree(), npc.degree());
        for (std::size_t k = 0; k < np.coeffs().size(); ++k) EXPECT_NEAR(np[k], npc[k], 1e-12);
        ASSERT_EQ(prod.degree(), expected.degree());
        for (std::size_t k = 0; k < prod.coeffs().size(); ++k) EXPECT_NEAR(prod[k], expected[k], 1e-11);
        EXPECT_EQ(np.degree(), 2 * *p.degree());
    }
}

TEST(QPolyProperty, DerivativeCommutesWithRightConstant) {
    Rng rng(14);
    for (int n = 0; n < 100; ++n) {
        const QPoly p = testing::random_poly(rng, 4, false);
        const Quaternion c = testing::random_quat(rng);
        expect_poly_near(derivative(p * QPoly({c})), derivative(p) * c, 1e-14);
    }
}

TEST(QPolyProperty, QuadraticDivisionReconstructs) {
    Rng rng(15);
    for (int n = 0; n < 200; ++n) {
        const QPoly p = testing::random_poly(rng, 2 + n % 7, false);
        const Sphere s{testing::uniform(rng), std::abs(testing::uniform(rng))};
        const auto r = divide_by_real_quadratic(p, s.re, s.re * s.re + s.rad * s.rad);
        const QPoly rebuilt = sphere_char_poly(s) * r.quotient + QPoly({r.c0, r.c1});
        expect_poly_near(rebuilt, p, 1e-10 * (1 + p.max_norm()));

        // P(y) = y c1 + c0 on the sphere
        const Quaternion y = Quaternion(s.re) + testing::random_unit(rng).value() * s.rad;
        EXPECT_TRUE(approx_equal(eval_left(p, y), y * r.c1 + r.c0, 1e-12));
    }
}

}  // namespace
}  // namespace qlucas
