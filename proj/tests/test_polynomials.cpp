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

#include <vector>

#include "a1lab/error.hpp"
#include "a1lab/multi_poly.hpp"
#include "a1lab/resultant.hpp"
#include "a1lab/rng.hpp"
#include "a1lab/uni_poly.hpp"

using namespace a1lab;

namespace {

UniPoly poly(Field f, std::vector<std::int64_t> c) {
    std::vector<FieldElement> out;
    for (auto v : c) out.push_back(f.from_int(v));
    return UniPoly(f, out);
}

UniPoly random_poly(Field f, std::size_t deg, Rng& rng) {
    std::vector<FieldElement> c;
    for (std::size_t i = 0; i <= deg; ++i) c.push_back(f.sample(rng));
    c.back() = f.sample_nonzero(rng);
    return UniPoly(f, c);
}

}  // namespace

TEST(UniPoly, GcdAndDivision) {
    const Field f = Field::create(5, 1, 0);
    EXPECT_EQ(gcd(poly(f, {-1, 0, 1}), poly(f, {-1, 1})), poly(f, {-1, 1}));
    const auto dr = divrem(poly(f, {0, 0, 0, 1}), poly(f, {0, 1}));
    EXPECT_EQ(dr.quotient, poly(f, {0, 0, 1}));
    EXPECT_TRUE(dr.remainder.is_zero());
    const auto g = poly(f, {1, 2, 3});
    EXPECT_EQ(gcd(g, UniPoly(f)), g.monic());
    EXPECT_THROW(divrem(g, UniPoly(f)), Error);
}

TEST(UniPoly, DivisionProperty) {
    const Field f = Field::create(3, 3, 1);
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        const auto a = random_poly(f, 7, rng), b = random_poly(f, 3, rng);
        const auto dr = divrem(a, b);
        EXPECT_EQ(dr.quotient * b + dr.remainder, a);
        EXPECT_LT(dr.remainder.is_zero() ? 0u : *dr.remainder.degree(), 3u);
        const auto g = gcd(a * b, b * b);
        EXPECT_TRUE(divrem(b, g).remainder.is_zero() || *g.degree() >= 3);
    }
}

TEST(UniPoly, DerivativeCharP) {
    const Field f = Field::create(3, 2, 0);
    EXPECT_TRUE(UniPoly::monomial(f.one(), 3).derivative().is_zero());
    EXPECT_TRUE(UniPoly::constant(f.from_int(2)).derivative().is_zero());
    const Field f2 = Field::create(2, 4, 0);
    Rng rng(1);
    const auto a1 = f2.sample(rng), a2 = f2.sample(rng);
    const std::vector<FieldElement> shifts{a1, a2};
    EXPECT_EQ(UniPoly::from_shifts(f2, shifts).derivative(), UniPoly::constant(a1 + a2));
}

TEST(UniPoly, Radical) {
    const Field f = Field::create(5, 1, 0);
    const auto tm1 = poly(f, {-1, 1}), tp1 = poly(f, {1, 1});
    EXPECT_EQ(squarefree_part(tm1 * tm1 * tp1), tm1 * tp1);
    EXPECT_EQ(distinct_root_count(tm1 * tm1 * tp1), 2u);
    const Field f9 = Field::create(3, 2, 0);
    const auto a = f9.from_encoding(5);
    const auto frob = UniPoly(f9, {-a, f9.zero(), f9.zero(), f9.one()});
    EXPECT_EQ(squarefree_part(frob), UniPoly(f9, {-a.pth_root(), f9.one()}));
    EXPECT_EQ(distinct_root_count(frob), 1u);
    const auto sq = poly(f, {2, 0, 1});
    EXPECT_EQ(squarefree_part(sq * f.from_int(3)), sq);
}

TEST(UniPoly, RadicalMixedMultiplicities) {
    const Field f = Field::create(3, 4, 2);
    Rng rng(9);
    for (int i = 0; i < 20; ++i) {
        const auto a = f.sample_distinct(3, rng);
        const auto l0 = UniPoly(f, {a[0], f.one()}), l1 = UniPoly(f, {a[1], f.one()}), l2 = UniPoly(f, {a[2], f.one()});
        const auto g = l0.pow(3) * l1.pow(4) * l2;
        EXPECT_EQ(squarefree_part(g), l0 * l1 * l2);
    }
}

TEST(UniPoly, Compose) {
    const Field f = Field::create(7, 1, 0);
    const auto t2 = UniPoly::monomial(f.one(), 2);
    EXPECT_EQ(t2.compose_affine(f.one(), f.zero()), t2);
    const auto lam = f.from_int(3), c = f.from_int(5);
    EXPECT_EQ(UniPoly::variable(f).compose_affine(lam, c), UniPoly(f, {c, lam}));
    EXPECT_THROW(t2.compose_affine(f.zero(), c), Error);
}

TEST(UniPoly, Roots) {
    const Field f2 = Field::create(2, 1, 0);
    const auto r = roots_in_field(poly(f2, {0, 1, 1}));
    ASSERT_EQ(r.size(), 2u);
    EXPECT_TRUE(r[0].is_zero());
    EXPECT_TRUE(r[1].is_one());
}

TEST(UniPoly, RabinRootsLargeField) {
    const Field f = Field::create(3, 12, 0);
    Rng rng(4);
    const auto a = f.sample_distinct(5, rng);
    UniPoly g = UniPoly::from_shifts(f, a) * UniPoly(f, {f.one(), f.zero(), f.one()}).pow(1);
    auto roots = roots_in_field(g);
    std::vector<FieldElement> expected;
    for (const auto& x : a) expected.push_back(-x);
    std::sort(expected.begin(), expected.end());
    for (const auto& x : roots) EXPECT_TRUE(g.eval(x).is_zero());
    for (const auto& x : expected) EXPECT_NE(std::find(roots.begin(), roots.end(), x), roots.end());
    EXPECT_THROW(roots_in_field(g, RootSearch::ExhaustiveOnly), Error);
}

TEST(UniPoly, Lagrange) {
    const Field f = Field::create(5, 2, 0);
    Rng rng(2);
    const auto p = random_poly(f, 4, rng);
    const auto nodes = f.sample_distinct(5, rng);
    std::vector<FieldElement> values;
    for (const auto& x : nodes) values.push_back(p.eval(x));
    EXPECT_EQ(lagrange_interpolate(nodes, values), p);
}

TEST(MultiPoly, Derivatives) {
    const Field f3 = Field::create(3, 1, 0);
    const auto x0 = MultiPoly::variable(f3, 3, 0), x1 = MultiPoly::variable(f3, 3, 1), x2 = MultiPoly::variable(f3, 3, 2);
    EXPECT_TRUE(x2.pow(3).partial_derivative(2).is_zero());
    EXPECT_EQ((x0 * x0 * x1).partial_derivative(0), x0 * x1 * f3.from_int(2));
    const Field f7 = Field::create(7, 1, 0);
    const auto y0 = MultiPoly::variable(f7, 3, 0), y1 = MultiPoly::variable(f7, 3, 1);
    const std::vector<FieldElement> pt{f7.from_int(2), f7.from_int(3), f7.from_int(4)};
    EXPECT_EQ((y0 * y1).eval(pt), f7.from_int(6));
}

TEST(MultiPoly, Pullback) {
    const Field f = Field::create(5, 1, 0);
    const auto t = UniPoly::variable(f);
    const auto x0 = MultiPoly::variable(f, 3, 0), x1 = MultiPoly::variable(f, 3, 1), x2 = MultiPoly::variable(f, 3, 2);
    const std::vector<UniPoly> a{t, t * t, UniPoly::constant(f.one())};
    EXPECT_EQ(pullback(x0, a), t);
    EXPECT_EQ(pullback(MultiPoly::constant(f, 3, f.from_int(4)), a), UniPoly::constant(f.from_int(4)));
    const std::vector<UniPoly> b{t, t, t * t};
    EXPECT_TRUE(pullback(x0 * x1 - x2, b).is_zero());
}

TEST(MultiPoly, LowestPart) {
    const Field f = Field::create(5, 1, 0);
    const auto x0 = MultiPoly::variable(f, 2, 0), x1 = MultiPoly::variable(f, 2, 1);
    EXPECT_EQ((x0 * x0 + x1).lowest_part(), x1);
    EXPECT_EQ((x0 * x1 + x0.pow(3) + x1.pow(3)).lowest_part(), x0 * x1);
    EXPECT_EQ((x0 * x0 + x1 * x1).lowest_part(), x0 * x0 + x1 * x1);
    EXPECT_THROW(MultiPoly(f, 2).lowest_part(), Error);
}

TEST(MultiPoly, ExactDivision) {
    const Field f = Field::create(5, 1, 0);
    const auto x0 = MultiPoly::variable(f, 2, 0), x1 = MultiPoly::variable(f, 2, 1);
    EXPECT_EQ(*divide_exact(x0 * x1, x0), x1);
    EXPECT_EQ(*divide_exact(x0 * x0 - x1 * x1, x0 + x1), x0 - x1);
    EXPECT_FALSE(divides(x0, x1));
}

TEST(MultiPoly, RingAxiomsRandom) {
    const Field f = Field::create(3, 3, 0);
    Rng rng(8);
    auto rnd = [&] {
        std::vector<Term> terms;
        for (int i = 0; i < 6; ++i)
            terms.push_back({Monomial{static_cast<std::uint16_t>(uniform_below(rng, 4)),
                                      static_cast<std::uint16_t>(uniform_below(rng, 4)),
                                      static_cast<std::uint16_t>(uniform_below(rng, 4))},
                             f.sample(rng)});
        return MultiPoly::from_terms(f, 3, terms);
    };
    for (int i = 0; i < 30; ++i) {
        const auto a = rnd(), b = rnd(), c = rnd();
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b).partial_derivative(1), a.partial_derivative(1) * b + a * b.partial_derivative(1));
        if (!b.is_zero()) EXPECT_EQ(*divide_exact(a * b, b), a);
    }
}

TEST(Resultant, Oracles) {
    const Field f = Field::create(7, 1, 0);
    const auto s = MultiPoly::variable(f, 2, 0), u = MultiPoly::variable(f, 2, 1);
    const auto one = MultiPoly::constant(f, 2, f.one());
    const RingUniPoly ta(f, 2, {-s, one}), tb(f, 2, {-u, one});
    EXPECT_EQ(sylvester_resultant(ta, tb), s - u);
    EXPECT_TRUE(sylvester_resultant(ta, ta).is_zero());
    const RingUniPoly q(f, 2, {-s, MultiPoly(f, 2), one});
    EXPECT_EQ(sylvester_resultant(q, tb), u * u - s);
    const RingUniPoly c(f, 2, {one});
    EXPECT_THROW(sylvester_resultant(c, tb), Error);
}
