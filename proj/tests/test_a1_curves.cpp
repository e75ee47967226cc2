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

#include "a1lab/a1_curves.hpp"
#include "a1lab/error.hpp"
#include "a1lab/rng.hpp"

using namespace a1lab;

namespace {

BoundarySpec boundary(unsigned p, unsigned k, bool special = false, std::uint64_t seed = 1) {
    const Field f = Field::create(p, k, 0);
    return BoundarySpec::make(f, special ? BoundaryChoice::special() : BoundaryChoice::random(seed));
}

}  // namespace

TEST(Curves, ConicParameterization) {
    const auto b = boundary(2, 4);
    const Field f = b.field();
    Rng rng(1);
    const CurveParams params = CurveParams::sample(b, 2, 0, rng);
    const auto c = build(params);
    const auto V = UniPoly(f, {params.vroot[0], params.vroot[1]});
    const auto W = UniPoly(f, {params.wroot[0], params.wroot[1]});
    EXPECT_EQ(c.x.x2, V * W - UniPoly::constant(f.one()));
    EXPECT_TRUE(contact_certificate(b, c.x).passed);
}

TEST(Curves, MinimalCurve) {
    const auto b = boundary(3, 2, true);
    const Field f = b.field();
    CurveParams params{b, 3, 0, {}, {f.zero(), f.one()}, {f.one(), f.zero()}};
    const auto c = build(params);
    const auto t = UniPoly::variable(f);
    EXPECT_EQ(c.x.x0, t.pow(3));
    EXPECT_EQ(c.x.x1, UniPoly::constant(f.one()));
    EXPECT_EQ(c.x.x2, sigma_root_eval(b, t, UniPoly::constant(f.one())) - UniPoly::constant(f.one()));
    EXPECT_TRUE(multiplicity_at_str(params).directions.empty());
}

TEST(Curves, ContactAcrossGrid) {
    for (unsigned p : {2u, 3u, 5u}) {
        const auto b = boundary(p, 2, false, p);
        Rng rng(100 + p);
        for (unsigned d = 1; d <= 12; ++d)
            for (unsigned m : admissible_multiplicities(d, p))
                for (int trial = 0; trial < 3; ++trial) {
                    const auto params = CurveParams::sample(b, d, m, rng);
                    EXPECT_TRUE(contact_certificate(b, build(params).x).passed);
                }
    }
}

TEST(Curves, InvalidParameters) {
    const auto b = boundary(3, 2);
    Rng rng(1);
    EXPECT_THROW(CurveParams::sample(b, 4, 2, rng), Error);
    auto params = CurveParams::sample(b, 4, 1, rng);
    params.vroot.pop_back();
    EXPECT_THROW(build(params), Error);
}

TEST(Curves, MultiplicityOrdinary) {
    const auto b = boundary(3, 4);
    const Field f = b.field();
    Rng rng(3);
    auto params = CurveParams::sample(b, 5, 2, rng);
    params.a = f.sample_distinct(2, rng);
    const auto rep = multiplicity_at_str(params);
    EXPECT_EQ(rep.m_realized, 2u);
    params.a[1] = params.a[0];
    EXPECT_FALSE(multiplicity_at_str(params).ordinary);
}

TEST(Curves, TangentFactorization) {
    for (unsigned p : {2u, 3u}) {
        const auto b = boundary(p, 3, false, 7);
        Rng rng(p);
        for (unsigned d = 1; d <= 6; ++d)
            for (unsigned m : admissible_multiplicities(d, p))
                EXPECT_TRUE(tangent_factorization_check(CurveParams::sample(b, d, m, rng)).passed);
    }
}

TEST(Curves, StrangenessAndLineCover) {
    const auto b = boundary(3, 3);
    Rng rng(4);
    EXPECT_TRUE(strangeness_certificate(CurveParams::sample(b, 4, 1, rng)).passed);
    const auto cover = CurveParams::sample(b, 3, 3, rng);
    const auto x = build(cover).x;
    EXPECT_TRUE(contact_certificate(b, x).passed);
    EXPECT_TRUE(x.x0 * cover.wroot[0].frobenius() == x.x1 * cover.vroot[0].frobenius());
}

TEST(Curves, Reparameterization) {
    const auto b = boundary(3, 2, true);
    const Field f = b.field();
    Rng rng(5);
    const auto params = CurveParams::sample(b, 3, 0, rng);
    const auto lam = f.from_int(2), c = f.one();
    const auto x = build(params).x;
    const auto y = build(reparameterize(params, lam, c)).x;
    const auto xs = x.as_array(), ys = y.as_array();
    for (int i = 0; i < 3; ++i) EXPECT_EQ(ys[i], xs[i].compose_affine(lam, c));
    const auto same = reparameterize(params, f.one(), f.zero());
    EXPECT_EQ(build(same).x.x2, x.x2);
    EXPECT_THROW(reparameterize(params, f.zero(), c), Error);
}

TEST(Curves, InseparableCover) {
    const auto b = boundary(3, 4);
    Rng rng(6);
    const auto x = build(CurveParams::sample(b, 3, 0, rng)).x;
    EXPECT_FALSE(inseparable_cover_check(x));
    const Field f = b.field();
    const XCoords constant{UniPoly::constant(f.one()), UniPoly::constant(f.one()), UniPoly(f)};
    EXPECT_TRUE(inseparable_cover_check(constant));
}

TEST(Curves, LiftPoint) {
    const auto b = boundary(5, 3);
    const Field f = b.field();
    const Point3 str{f.zero(), f.zero(), f.one()};
    const auto lifted = lift_point(b, str);
    EXPECT_TRUE(lifted.v.is_zero());
    EXPECT_TRUE(lifted.w.is_zero());
    const Point3 bad{f.one(), f.zero(), f.zero()};
    EXPECT_THROW(lift_point(b, bad), Error);
    Rng rng(9);
    for (int i = 0; i < 20; ++i) {
        const Point3 a{f.sample(rng), f.sample(rng), f.sample(rng)};
        const std::vector<FieldElement> pt(a.begin(), a.end());
        if (b.delta().eval(pt).is_zero()) continue;
        const auto l = lift_point(b, a);
        const Point3 image{l.v.frobenius(), l.w.frobenius(), sigma_root_eval(b, l.v, l.w) - f.one()};
        EXPECT_TRUE(projectively_equal(image, a));
    }
}

TEST(Curves, InterpolationThroughPoints) {
    const auto b = boundary(3, 2, true);
    const Field f = b.field();
    Rng rng(10);
    std::vector<Point3> pts;
    while (pts.size() < 2) {
        const Point3 a{f.sample(rng), f.sample(rng), f.one()};
        const std::vector<FieldElement> pt(a.begin(), a.end());
        if (!b.delta().eval(pt).is_zero()) pts.push_back(a);
    }
    if (projectively_equal(pts[0], pts[1])) GTEST_SKIP();
    const auto res = interpolate(b, pts, 1);
    EXPECT_EQ(res.params.d, 3u);
    const auto x = build(res.params).x;
    EXPECT_TRUE(contact_certificate(b, x).passed);
    for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_TRUE(projectively_equal(eval_point(x, res.nodes[i]), pts[i]));
    std::vector<Point3> dup{pts[0], pts[0]};
    EXPECT_EQ(interpolate(b, dup, 1).points.size(), 1u);
}

TEST(Curves, ImplicitizationOfLineCover) {
    const auto b = boundary(3, 3);
    Rng rng(11);
    const auto cover = CurveParams::sample(b, 6, 6, rng);
    const auto R = implicitize(build(cover).x);
    const Field f = b.field();
    const auto line = MultiPoly::variable(f, 3, 0) * cover.wroot[0].frobenius() -
                      MultiPoly::variable(f, 3, 1) * cover.vroot[0].frobenius();
    EXPECT_TRUE(divides(line, R));
}

TEST(Curves, Combinatorics) {
    for (unsigned p : {2u, 3u, 5u, 7u, 11u})
        for (unsigned d = 0; d <= 50; ++d) {
            const auto ms = admissible_multiplicities(d, p);
            EXPECT_EQ(ms.size(), d / p + 1);
            for (unsigned m : ms) EXPECT_TRUE(parameter_count_identity(d, m, p));
        }
}

TEST(Curves, ParsePoints) {
    const Field f = Field::create(3, 2, 0);
    std::vector<std::size_t> lines;
    const auto pts = parse_points_csv(f, "# header\n1,2,3\n\n4,5,6\n", &lines);
    ASSERT_EQ(pts.size(), 2u);
    EXPECT_EQ(lines[1], 4u);
    EXPECT_EQ(pts[1][2].encoding(), 6u);
    try {
        parse_points_csv(f, "1,2,3\n1,2\n");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::BadEncoding);
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
    EXPECT_THROW(parse_points_csv(f, "1,2,99\n"), Error);
}
