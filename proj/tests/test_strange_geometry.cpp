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

#include "a1lab/error.hpp"
#include "a1lab/rng.hpp"
#include "a1lab/strange_geometry.hpp"

using namespace a1lab;

namespace {
MultiPoly var(Field f, std::size_t i) { return MultiPoly::variable(f, 3, i); }
}  // namespace

TEST(Boundary, ConicForPTwo) {
    const Field f = Field::create(2, 4, 0);
    const auto b = BoundarySpec::make(f, BoundaryChoice::random(3));
    EXPECT_EQ(b.delta(), var(f, 0) * var(f, 1) - var(f, 2).pow(2));
    EXPECT_EQ(boundary_cusp_census(b).count, 0u);
}

TEST(Boundary, SpecialPThree) {
    const Field f = Field::create(3, 2, 0);
    const auto b = BoundarySpec::make(f, BoundaryChoice::special());
    EXPECT_TRUE(b.is_special());
    const auto x0 = var(f, 0), x1 = var(f, 1), x2 = var(f, 2);
    EXPECT_EQ(b.delta(), x0 * x0 * x1 + x0 * x1 * x1 - x2.pow(3));
    const auto census = boundary_cusp_census(b);
    EXPECT_EQ(census.count, 1u);
    const auto y0 = MultiPoly::variable(f, 2, 0), y1 = MultiPoly::variable(f, 2, 1);
    EXPECT_EQ(b.sing_poly(), y1 + y0 * f.from_int(2));
}

TEST(Boundary, ExplicitPFive) {
    const Field f = Field::create(5, 2, 0);
    const auto s2 = f.from_encoding(7), s3 = f.from_encoding(13);
    const auto b = BoundarySpec::make(f, BoundaryChoice::explicit_list({f.one(), s2, s3, f.one()}));
    EXPECT_EQ(b.sigma(2), s2);
    EXPECT_EQ(b.sigma(3), s3);
    EXPECT_THROW(BoundarySpec::make(f, BoundaryChoice::explicit_list({f.from_int(2), s2, s3, f.one()})), Error);
    EXPECT_THROW(BoundarySpec::make(f, BoundaryChoice::explicit_list({f.one(), s2})), Error);
    EXPECT_EQ(BoundarySpec::parse(f, b.serialize()).delta(), b.delta());
}

TEST(Boundary, DeltaPartials) {
    for (unsigned p : {3u, 5u, 7u}) {
        const Field f = Field::create(p, 2, 0);
        const auto b = BoundarySpec::make(f, BoundaryChoice::random(p));
        const std::vector<std::size_t> map{0, 1};
        const auto P = b.sing_poly().embed(3, map);
        EXPECT_EQ(b.delta().partial_derivative(0), var(f, 1) * P);
        EXPECT_EQ(b.delta().partial_derivative(1), -(var(f, 0) * P));
        EXPECT_TRUE(b.delta().partial_derivative(2).is_zero());
    }
}

TEST(SigmaRoot, PowersAndSpecialCases) {
    const Field f = Field::create(3, 4, 0);
    Rng rng(12);
    const auto b = BoundarySpec::make(f, BoundaryChoice::random(5));
    const auto V = UniPoly(f, {f.sample(rng), f.sample(rng), f.sample_nonzero(rng)});
    const auto W = UniPoly(f, {f.sample(rng), f.sample(rng), f.sample_nonzero(rng)});
    EXPECT_EQ(sigma_root_eval(b, V, W).pow(3), sigma_eval(b, V.pow(3), W.pow(3)));
    EXPECT_EQ(sigma_root_eval(b, V, V), V.pow(3) * sigma_root_eval(b, f.one(), f.one()));
    const Field f2 = Field::create(2, 3, 0);
    const auto b2 = BoundarySpec::make(f2, BoundaryChoice::special());
    const auto V2 = UniPoly(f2, {f2.from_encoding(3), f2.one()});
    const auto W2 = UniPoly(f2, {f2.from_encoding(5), f2.from_encoding(6)});
    EXPECT_EQ(sigma_root_eval(b2, V2, W2), V2 * W2);
}

TEST(FrobeniusFactorization, AllModes) {
    for (unsigned p : {2u, 3u, 5u}) {
        const Field f = Field::create(p, 3, 0);
        EXPECT_TRUE(frobenius_factorization_check(BoundarySpec::make(f, BoundaryChoice::special())).passed);
        for (std::uint64_t s = 0; s < 10; ++s)
            EXPECT_TRUE(frobenius_factorization_check(BoundarySpec::make(f, BoundaryChoice::random(s))).passed);
    }
}

TEST(BoundaryCensus, GeneralCountIsPMinusTwo) {
    for (unsigned p : {5u, 7u}) {
        const Field f = Field::create(p, 4, 0);
        unsigned agree = 0;
        for (std::uint64_t s = 0; s < 10; ++s)
            agree += boundary_cusp_census(BoundarySpec::make(f, BoundaryChoice::random(s))).count == p - 2;
        EXPECT_GE(agree, 9u);
    }
}

TEST(Sigma0Derivative, LinearPairs) {
    for (unsigned p : {2u, 3u, 5u}) {
        const Field f = Field::create(p, 3, 0);
        const auto b = BoundarySpec::make(f, BoundaryChoice::special());
        Rng rng(p);
        for (int i = 0; i < 10; ++i) {
            const auto V = UniPoly(f, {f.sample(rng), f.sample_nonzero(rng)});
            const auto W = UniPoly(f, {f.sample(rng), f.sample_nonzero(rng)});
            EXPECT_TRUE(sigma0_derivative_check(b, V, W).passed);
            EXPECT_TRUE(sigma0_derivative_check(b, V, V).passed);
        }
    }
}
