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

#include <algorithm>

#include "test_support.hpp"

namespace qlucas {
namespace {

using testing::Rng;

const Quaternion I = Quaternion::i();
const Quaternion J = Quaternion::j();
const Quaternion K = Quaternion::k();

QPoly intro() { return QPoly::linear_factor(I) * QPoly::linear_factor(J); }
QPoly limacon() { return QPoly({I * 2.0, 3.0, 0.0, 1.0}); }

bool contains_point(const std::vector<Quaternion>& v, const Quaternion& q, double tol) {
    return std::any_of(v.begin(), v.end(), [&](const Quaternion& x) { return distance(x, q) <= tol; });
}

TEST(QRoots, IntroExample) {
    const RootSet r = left_roots(intro());
    ASSERT_EQ(r.isolated.size(), 1u);
    EXPECT_TRUE(r.spheres.empty());
    EXPECT_LE(distance(r.isolated[0], I), 1e-9);

    const RootSet c = critical_points(intro());
    ASSERT_EQ(c.isolated.size(), 1u);
    EXPECT_TRUE(c.spheres.empty());
    EXPECT_LE(distance(c.isolated[0], (I + J) / 2.0), 1e-9);
}

TEST(QRoots, RealPolynomialGivesSphere) {
    const RootSet r = left_roots(QPoly({1.0, 0.0, 1.0}));
    EXPECT_TRUE(r.isolated.empty());
    ASSERT_EQ(r.spheres.size(), 1u);
    EXPECT_NEAR(r.spheres[0].re, 0.0, 1e-12);
    EXPECT_NEAR(r.spheres[0].rad, 1.0, 1e-12);
}

TEST(QRoots, Limacon) {
    const RootSet r = left_roots(limacon());
    ASSERT_EQ(r.isolated.size(), 2u);
    EXPECT_TRUE(r.spheres.empty());
    EXPECT_TRUE(contains_point(r.isolated, -I, 1e-9));
    EXPECT_TRUE(contains_point(r.isolated, I * 2.0, 1e-9));

    const RootSet c = critical_points(limacon());
    EXPECT_TRUE(c.isolated.empty());
    ASSERT_EQ(c.spheres.size(), 1u);
    EXPECT_NEAR(c.spheres[0].re, 0.0, 1e-9);
    EXPECT_NEAR(c.spheres[0].rad, 1.0, 1e-9);
}

TEST(QRoots, PowerMinusOneHasCriticalPointZero) {
    for (std::size_t d = 2; d <= 9; ++d) {
        QPoly p = QPoly::monomial(d) - QPoly({1.0});
        const RootSet c = critical_points(p);
        ASSERT_EQ(c.isolated.size(), 1u) << "d = " << d;
        EXPECT_TRUE(c.spheres.empty());
        EXPECT_EQ(c.isolated[0], Quaternion{});
    }
}

TEST(QRoots, MixedRealAndSpherical) {
    // (X - 2)(X^2 + 1)(X - (1+k))
    const QPoly p = QPoly::linear_factor(2.0) * QPoly({1.0, 0.0, 1.0}) * QPoly::linear_factor(1.0 + K);
    const RootSet r = left_roots(p);
    ASSERT_EQ(r.spheres.size(), 1u);
    EXPECT_TRUE(contains_point(r.isolated, 2.0, 1e-9));
    ASSERT_EQ(r.isolated.size(), 2u);
    // the isolated non-real root lies on the sphere of 1+k
    EXPECT_TRUE(std::any_of(r.isolated.begin(), r.isolated.end(),
                            [](const Quaternion& q) { return same_sphere(q, 1.0 + K, 1e-9); }));
    for (const auto& q : r.isolated) EXPECT_LE(eval_left(p, q).norm(), 1e-9);
}

TEST(QRoots, Preconditions) {
    EXPECT_THROW(left_roots(QPoly({I})), DomainError);
    EXPECT_THROW(left_roots(QPoly()), DomainError);
    EXPECT_THROW(critical_points(QPoly({I, 1.0})), DomainError);
}

TEST(QRootsProperty, RootsVanish) {
    Rng rng(30);
    for (int n = 0; n < 200; ++n) {
        const QPoly p = testing::random_poly(rng, 1 + n % 8, n % 2 == 0);
        const RootSet r = left_roots(p);
        for (const auto& q : r.isolated) EXPECT_LE(eval_left(p, q).norm(), 1e-7 * eval_scale(p, q.norm()));
        EXPECT_TRUE(r.discarded.empty());
    }
}

TEST(QRootsProperty, CircularizationMatchesNormalPolynomial) {
    Rng rng(31);
    for (int n = 0; n < 200; ++n) {
        const QPoly p = testing::random_poly(rng, 1 + n % 8, false);
        auto circ = left_roots(p).circularization();
        std::vector<Complex> expected;
        for (const auto& r : complex_roots(normal_poly(p))) expected.push_back(r.value);
        auto key = [](const Complex& a, const Complex& b) {
            return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
        };
        std::sort(circ.begin(), circ.end(), key);
        ASSERT_EQ(circ.size(), expected.size()) << to_string(p[0]);
        for (const auto& z : expected) {
            double best = 1e300;
            for (const auto& w : circ) best = std::min(best, std::abs(z - w));
            EXPECT_LE(best, 1e-6 * (1 + std::abs(z)));
        }
    }
}

TEST(QRootsProperty, LeftFactorRootIsARoot) {
    Rng rng(32);
    for (int n = 0; n < 300; ++n) {
        const Quaternion x1 = testing::random_quat(rng), x2 = testing::random_quat(rng);
        const QPoly p = QPoly::linear_factor(x1) * QPoly::linear_factor(x2);
        const RootSet r = left_roots(p);
        bool found = contains_point(r.isolated, x1, 1e-7);
        for (const auto& s : r.spheres) found = found || s.contains(x1, 1e-7);
        EXPECT_TRUE(found) << to_string(x1) << " " << to_string(x2);
    }
}

TEST(QRootsProperty, DegreeTwoMidpoint) {
    Rng rng(33);
    for (int n = 0; n < 300; ++n) {
        const Quaternion x1 = testing::random_quat(rng), x2 = testing::random_quat(rng);
        const Quaternion a = testing::random_quat(rng, 0.5, 1.5);
        const QPoly p = QPoly::linear_factor(x1) * QPoly::linear_factor(x2) * a;
        const RootSet c = critical_points(p);
        ASSERT_EQ(c.isolated.size() + c.spheres.size(), 1u);
        if (!c.isolated.empty()) EXPECT_LE(distance(c.isolated[0], (x1 + x2) / 2.0), 1e-8);
        else EXPECT_TRUE(c.spheres[0].contains((x1 + x2) / 2.0, 1e-8));
    }
}

TEST(QRootsProperty, SortedAndDistinctSpheres) {
    Rng rng(34);
    for (int n = 0; n < 100; ++n) {
        const RootSet r = left_roots(testing::random_poly(rng, 6, true));
        for (std::size_t k = 0; k + 1 < r.isolated.size(); ++k) {
            EXPECT_LE(r.isolated[k].re(), r.isolated[k + 1].re() + 1e-15);
            EXPECT_FALSE(same_sphere(r.isolated[k], r.isolated[k + 1], 1e-9));
        }
    }
}

}  // namespace
}  // namespace qlucas
