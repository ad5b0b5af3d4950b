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

QPoly intro() { return QPoly({K, -(I + J), 1.0}); }

double closed_form_C(int d) { return std::sqrt(8.0 * d * d - 24.0 * d + 24.0) / d; }

TEST(Bounds, CauchyC) {
    EXPECT_DOUBLE_EQ(cauchy_C(intro()), 2.0);
    EXPECT_TRUE(std::isinf(cauchy_C(QPoly({7.0}))));
    for (int d = 3; d <= 15; ++d) EXPECT_NEAR(cauchy_C(derivative(family_member(d))), closed_form_C(d), 1e-12);
}

TEST(Bounds, CauchyRho) {
    EXPECT_NEAR(cauchy_rho(QPoly({-1.0, 1.0})), 1.0, 1e-14);
    EXPECT_NEAR(cauchy_rho(intro()), (std::sqrt(2.0) + std::sqrt(6.0)) / 2, 1e-13);
    EXPECT_THROW(cauchy_rho(QPoly::monomial(3)), DomainError);
    EXPECT_THROW(cauchy_rho(QPoly({2.0})), DomainError);
}

TEST(Bounds, RootBoundReports) {
    auto r = verify_root_bound(QPoly({1.0, 0.0, 1.0}));
    EXPECT_NEAR(r.max_root_norm, 1.0, 1e-12);
    EXPECT_DOUBLE_EQ(r.c_of_p, std::sqrt(2.0));

    r = verify_root_bound(intro());
    EXPECT_NEAR(r.max_root_norm, 1.0, 1e-9);
    EXPECT_NEAR(*r.rho, (std::sqrt(2.0) + std::sqrt(6.0)) / 2, 1e-12);
    EXPECT_LE(*r.rho, 2.0);

    for (std::size_t d = 1; d <= 8; ++d) {
        r = verify_root_bound(QPoly::monomial(d) - QPoly({1.0}));
        EXPECT_NEAR(r.max_root_norm, 1.0, 1e-9);
        EXPECT_DOUBLE_EQ(r.c_of_p, std::sqrt(2.0));
    }
    r = verify_root_bound(QPoly::monomial(4, I));
    EXPECT_FALSE(r.rho.has_value());
    EXPECT_EQ(r.max_root_norm, 0.0);
}

TEST(Bounds, SliceSup) {
    // C(P^I) = sqrt(4 + 4 a1 a3) for the family member, I = a1 i + a2 j + a3 k
    for (int d : {3, 7, 11}) {
        const QPoly p = family_member(d);
        EXPECT_NEAR(cauchy_C(slice_poly(p, ImUnit::i())), 2.0, 1e-12);
        const auto sup = slice_sup_C(p, 4096);
        const Quaternion u = sup.argmax.value();
        EXPECT_NEAR(sup.estimate, std::sqrt(4 + 4 * u.x * u.z), 1e-9);
        EXPECT_LE(sup.estimate, std::sqrt(6.0) + 1e-9);
        EXPECT_GT(sup.estimate, std::sqrt(6.0) - 1e-3);
        EXPECT_LE(slice_sup_C(derivative(p), 4096).estimate, std::sqrt(6.0) + 1e-9);
    }
    const QPoly real_p = QPoly::monomial(5) - QPoly({1.0});
    for (const auto& u : sample_sphere(64)) EXPECT_DOUBLE_EQ(cauchy_C(slice_poly(real_p, u)), std::sqrt(2.0));
    EXPECT_DOUBLE_EQ(slice_sup_C(real_p, 64).estimate, std::sqrt(2.0));
    // X^2 J with J orthogonal to the first sampled plane
    const ImUnit first = sample_sphere(64)[0];
    const auto hit = slice_sup_C(QPoly({0.0, 0.0, orthogonal_unit(first).value()}), 64);
    EXPECT_TRUE(hit.hit_constant);
    EXPECT_TRUE(approx_equal(hit.argmax.value(), first.value(), 0));
    EXPECT_TRUE(std::isinf(hit.estimate));
}

TEST(Bounds, EstimateComparison) {
    auto e = estimate_comparison(3);
    EXPECT_NEAR(e.classic, std::sqrt(24.0) / 3, 1e-12);
    EXPECT_FALSE(e.slice_better);
    e = estimate_comparison(11);
    EXPECT_TRUE(e.slice_better);
    e = estimate_comparison(12);
    EXPECT_NEAR(e.classic, std::sqrt(888.0) / 12, 1e-12);
    EXPECT_TRUE(e.slice_better);
    for (int d = 3; d <= 10; ++d) EXPECT_LT(closed_form_C(d), std::sqrt(6.0));
    for (int d = 11; d <= 40; ++d) EXPECT_GT(closed_form_C(d), std::sqrt(6.0));
    EXPECT_THROW(estimate_comparison(2), DomainError);
}

TEST(BoundsProperty, ChainOnRandomPolynomials) {
    Rng rng(60);
    for (int n = 0; n < 300; ++n) {
        const QPoly p = testing::random_poly(rng, 1 + n % 10, n % 3 == 0);
        const BoundReport r = verify_root_bound(p, 1e-9, 64);
        ASSERT_TRUE(r.rho.has_value());
        EXPECT_LE(r.max_root_norm, *r.rho + 1e-6);
        EXPECT_LT(*r.rho, r.c_of_p);
    }
}

TEST(BoundsProperty, AuxiliaryHasOneSignChange) {
    Rng rng(61);
    for (int n = 0; n < 200; ++n) {
        const QPoly p = testing::random_poly(rng, 1 + n % 10, false);
        const double rho = cauchy_rho(p);
        EXPECT_LT(cauchy_h(p, rho * 0.5), 0);
        EXPECT_GT(cauchy_h(p, rho * 1.5), 0);
        EXPECT_NEAR(cauchy_h(p, rho), 0, 1e-10 * (1 + std::pow(rho, static_cast<double>(*p.degree()))));
        // a single change on a fine grid
        int changes = 0;
        double prev = cauchy_h(p, 1e-6);
        for (int s = 1; s <= 400; ++s) {
            const double v = cauchy_h(p, 1e-6 + 3 * rho * s / 400.0);
            if ((v > 0) != (prev > 0)) ++changes;
            prev = v;
        }
        EXPECT_EQ(changes, 1);
    }
}

TEST(BoundsProperty, SliceSupBoundsCriticalPoints) {
    Rng rng(62);
    for (int n = 0; n < 60; ++n) {
        const QPoly p = testing::random_poly(rng, 2 + n % 7, true);
        EXPECT_LE(critical_points(p).max_norm(), slice_sup_C(p).estimate + 1e-6);
    }
}

}  // namespace
}  // namespace qlucas
