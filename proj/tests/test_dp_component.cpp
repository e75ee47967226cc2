/*
   Copyright 2026 The a1lab Authors

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

#include "a1lab/dp_component.hpp"
#include "a1lab/error.hpp"
#include "a1lab/rng.hpp"

using namespace a1lab;

namespace {

BoundarySpec boundary(unsigned p, unsigned k, bool special, std::uint64_t seed = 2) {
    return BoundarySpec::make(Field::create(p, k, 0), special ? BoundaryChoice::special() : BoundaryChoice::random(seed));
}

FiberParams random_fiber(const FamilySpec& spec, Rng& rng) {
    const Field f = spec.field();
    return FiberParams(spec, f.sample(rng), f.sample(rng), f.sample(rng), f.sample(rng));
}

MultiPoly var(Field f, std::size_t i) { return MultiPoly::variable(f, 3, i); }

}  // namespace

TEST(Psi, ConicCase) {
    const auto b = boundary(2, 4, true);
    const Field f = b.field();
    Rng rng(1);
    const auto spec = FamilySpec::make(b, 2, {});
    const auto fiber = random_fiber(spec, rng);
    const auto& F = fiber.forms();
    const auto pi2 = fiber.pi().pow(2);
    EXPECT_EQ(fiber.psi(), F.L1.pow(2) + (var(f, 0) * var(f, 1) + var(f, 2).pow(2)) * pi2);
    EXPECT_TRUE(psi_pullback_zero(fiber).passed);
}

TEST(Psi, SmallMultiplicityForms) {
    const auto b = boundary(3, 3, false);
    Rng rng(2);
    const auto spec0 = FamilySpec::make(b, 3, {});
    const auto f0 = random_fiber(spec0, rng);
    const auto sign = f0.pi().pow(3);
    EXPECT_EQ(f0.psi(), f0.forms().L1.pow(3) + b.delta() * sign);
    const auto spec1 = FamilySpec::make(b, 4, {});
    const auto f1 = random_fiber(spec1, rng);
    EXPECT_EQ(f1.psi(), f1.forms().L1.pow(4) - b.delta() * f1.forms().L0 * f1.pi().pow(3));
    EXPECT_TRUE(psi_pullback_zero(f1).passed);
}

TEST(Psi, PullbackVanishesIncludingFlatFibers) {
    for (unsigned p : {2u, 3u, 5u}) {
        const auto b = boundary(p, 4, false, p);
        Rng rng(p);
        for (unsigned d = p; d <= p + 3; ++d) {
            const auto spec = FamilySpec::sample(b, d, rng);
            for (int i = 0; i < 4; ++i) EXPECT_TRUE(psi_pullback_zero(random_fiber(spec, rng)).passed);
            const Field f = b.field();
            const auto mu = f.sample_nonzero(rng), b0 = f.sample_nonzero(rng), b1 = f.sample(rng);
            const FiberParams flat(spec, b0, b1, mu * b0, mu * b1);
            EXPECT_TRUE(flat.pi().is_zero());
            EXPECT_EQ(flat.psi(), flat.forms().L1.pow(d));
            EXPECT_TRUE(psi_pullback_zero(flat).passed);
        }
    }
}

TEST(Gradient, ClosedForm) {
    for (unsigned p : {2u, 3u}) {
        const auto b = boundary(p, 3, false, 4);
        Rng rng(p);
        for (unsigned d = p; d <= p + 2; ++d) EXPECT_TRUE(gradient_check(FamilySpec::sample(b, d, rng)).passed);
    }
    const auto b = boundary(3, 3, false, 4);
    Rng rng(0);
    const auto spec = FamilySpec::sample(b, 5, rng);
    const auto psi = build_family_psi(spec).psi;
    EXPECT_TRUE(psi.partial_derivative(kFx2).is_zero());
}

TEST(Singularities, StrangePoint) {
    const auto b = boundary(3, 4, false);
    Rng rng(3);
    const auto f1 = sample_general_fiber(FamilySpec::sample(b, 4, rng), rng);
    auto r1 = singularity_classification(f1);
    EXPECT_TRUE(r1.str_checked);
    EXPECT_FALSE(r1.str_singular);
    const auto f2 = sample_general_fiber(FamilySpec::sample(b, 5, rng), rng);
    auto r2 = singularity_classification(f2);
    EXPECT_TRUE(r2.str_singular);
}

TEST(Cusps, ConicHasNone) {
    const auto b = boundary(2, 6, true);
    Rng rng(4);
    const auto fiber = sample_general_fiber(FamilySpec::make(b, 2, {}), rng);
    const auto cd = cusp_polynomial(fiber);
    EXPECT_EQ(cd.count, 0u);
    EXPECT_EQ(*cd.K.degree(), 0u);
    EXPECT_TRUE(cusp_image_certificates(fiber).passed);
}

TEST(Cusps, CharTwoSquare) {
    const auto b = boundary(2, 8, true);
    const Field f = b.field();
    Rng rng(5);
    const auto a1 = f.sample_nonzero(rng);
    const auto fiber = sample_general_fiber(FamilySpec::make(b, 4, {a1}), rng);
    EXPECT_TRUE(special_cusp_checks(fiber).passed);
    EXPECT_EQ(cusp_polynomial(fiber).count, 2u);
    EXPECT_TRUE(cusp_image_certificates(fiber).passed);
}

TEST(Cusps, SpecialPThreeMZero) {
    const auto b = boundary(3, 6, true);
    Rng rng(6);
    const auto fiber = sample_general_fiber(FamilySpec::make(b, 3, {}), rng);
    const auto cd = cusp_polynomial(fiber);
    EXPECT_EQ(cd.count, 1u);
    EXPECT_TRUE(special_cusp_checks(fiber).passed);
    EXPECT_TRUE(total_space_smoothness_at_cusps(fiber).passed);
}

TEST(Cusps, GeneralCounts) {
    for (unsigned p : {3u, 5u}) {
        const auto b = boundary(p, p == 3 ? 8 : 6, false, 11);
        Rng rng(p);
        for (unsigned d = p; d <= p + 3; ++d) {
            unsigned agree = 0;
            for (int i = 0; i < 6; ++i) {
                const auto fiber = sample_general_fiber(FamilySpec::sample(b, d, rng), rng);
                agree += cusp_polynomial(fiber).count == expected_cusp_count(p, d);
                EXPECT_TRUE(cusp_image_certificates(fiber).passed);
            }
            EXPECT_GE(agree, 5u);
        }
    }
    EXPECT_EQ(expected_cusp_count(2, 7), 5u);
    EXPECT_EQ(expected_cusp_count(5, 7), 7u);
    EXPECT_EQ(expected_cusp_count(3, 3), 1u);
}

TEST(TangentCone, Shapes) {
    const auto b = boundary(3, 6, false);
    Rng rng(7);
    const auto f1 = sample_general_fiber(FamilySpec::sample(b, 4, rng), rng);
    const auto c1 = tangent_cone_at_str(f1);
    EXPECT_EQ(c1.multiplicity, 1u);
    EXPECT_EQ(c1.cone, f1.forms().L0 * f1.pi().pow(3));
    const auto f2 = sample_general_fiber(FamilySpec::sample(b, 5, rng), rng);
    const auto c2 = tangent_cone_at_str(f2);
    EXPECT_EQ(c2.multiplicity, 2u);
    EXPECT_TRUE(c2.ordinary);
    const auto f0 = sample_general_fiber(FamilySpec::make(b, 3, {}), rng);
    EXPECT_EQ(tangent_cone_at_str(f0).multiplicity, 0u);
}

TEST(Family, Validation) {
    const auto b = boundary(3, 2, false);
    const Field f = b.field();
    EXPECT_THROW(FamilySpec::make(b, 2, {}), Error);
    EXPECT_THROW(FamilySpec::make(b, 5, {}), Error);
    EXPECT_THROW(FamilySpec::make(b, 5, {f.zero()}), Error);
    const auto tiny = BoundarySpec::make(Field::create(2, 1, 0), BoundaryChoice::special());
    Rng rng(1);
    const auto spec = FamilySpec::make(tiny, 4, {tiny.field().one()});
    try {
        const auto fiber = sample_general_fiber(spec, rng);
        EXPECT_FALSE(fiber.pi().is_zero());
        EXPECT_TRUE(cusp_polynomial(fiber).degree_exact);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::GenericityExhausted);
    }
}

TEST(Family, SamplingSucceedsOnLargeFields) {
    Rng rng(8);
    const auto b2 = boundary(2, 12, true);
    EXPECT_NO_THROW(sample_general_fiber(FamilySpec::sample(b2, 6, rng), rng));
    const auto b3 = boundary(3, 6, false);
    EXPECT_NO_THROW(sample_general_fiber(FamilySpec::sample(b3, 4, rng), rng));
}

TEST(Family, DeltaIdentity) {
    EXPECT_TRUE(delta_identity(2, 2));
    EXPECT_TRUE(delta_identity(3, 5));
    for (unsigned p : {2u, 3u, 5u, 7u, 11u})
        for (unsigned d = p; d <= 100; ++d) EXPECT_TRUE(delta_identity(p, d));
}
