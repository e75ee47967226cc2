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

#include "a1lab/dp_component.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "a1lab/error.hpp"

namespace a1lab {

namespace {

constexpr const char* kVarNames[7] = {"x0", "x1", "x2", "b0", "b1", "c0", "c1"};

FieldElement sign_of(Field f, unsigned d) { return d % 2 == 0 ? f.one() : -f.one(); }

std::size_t deg0(const UniPoly& f) { return f.degree().value_or(0); }

// Assembles calL, calD, calE and Psi from L0, L1, pi and Delta in a common ring.
PsiForms assemble(const FamilySpec& spec, MultiPoly L0, MultiPoly L1, MultiPoly pi, const MultiPoly& delta) {
    const Field f = spec.field();
    const std::size_t n = L0.arity();
    const unsigned d = spec.d(), m = spec.m(), p = spec.p();
    const auto& e = spec.e();
    const FieldElement s = sign_of(f, d);
    const MultiPoly one = MultiPoly::constant(f, n, f.one());

    std::vector<MultiPoly> l0{one}, l1{one};
    for (unsigned i = 1; i <= d; ++i) {
        l0.push_back(l0.back() * L0);
        l1.push_back(l1.back() * L1);
    }
    const MultiPoly pip = pi.pow(p);

    MultiPoly calL = m == 0 ? one : MultiPoly(f, n);
    MultiPoly calE(f, n);
    MultiPoly dl(f, n);
    for (unsigned k = 0; k < m; ++k) {
        calL += l0[m - k] * l1[k] * e[k];
        calE += l0[m - k - 1] * l1[k] * (e[k] * f.from_int(m - k));
        if (k >= 1) dl += l0[m - k] * l1[k - 1] * (e[k] * f.from_int(k));
    }
    const MultiPoly spd = pip * delta * s;
    MultiPoly calD = l1[d - 1] * f.from_int(d) - spd * dl;
    MultiPoly psi = l1[d] - spd * calL;
    return {std::move(L0), std::move(L1), std::move(pi), std::move(calL), std::move(calD), std::move(calE),
            std::move(psi)};
}

PsiForms fiber_forms(const FamilySpec& spec, const std::array<FieldElement, 2>& b,
                     const std::array<FieldElement, 2>& c, const FieldElement& pi) {
    const Field f = spec.field();
    const MultiPoly x0 = MultiPoly::variable(f, 3, 0), x1 = MultiPoly::variable(f, 3, 1);
    return assemble(spec, x0 * c[0] - x1 * b[0], x0 * c[1] - x1 * b[1], MultiPoly::constant(f, 3, pi),
                    spec.boundary().delta());
}

}  // namespace

FamilySpec::FamilySpec(BoundarySpec boundary, unsigned d, std::vector<FieldElement> a_fixed)
    : boundary_(std::move(boundary)), d_(d), a_fixed_(std::move(a_fixed)) {
    const Field f = boundary_.field();
    e_ = {f.one()};
    for (const auto& a : a_fixed_) {
        const FieldElement root = -a.frobenius();
        std::vector<FieldElement> next(e_.size() + 1, f.zero());
        for (std::size_t k = 0; k < e_.size(); ++k) {
            next[k] += e_[k];
            next[k + 1] += e_[k] * root;
        }
        e_ = std::move(next);
    }
}

FamilySpec FamilySpec::make(const BoundarySpec& boundary, unsigned d, std::vector<FieldElement> a_fixed) {
    const unsigned p = static_cast<unsigned>(boundary.p());
    if (d < p) throw Error(ErrorCode::InvalidArgument, "family needs d >= p");
    const unsigned m = d - p;
    const std::size_t want = m > 0 ? m - 1 : 0;
    if (a_fixed.size() != want) {
        throw Error(ErrorCode::InvalidArgument,
                    "expected " + std::to_string(want) + " fixed roots, got " + std::to_string(a_fixed.size()));
    }
    if (m > 1) {
        FieldElement sum = boundary.field().zero();
        for (std::size_t i = 0; i < a_fixed.size(); ++i) {
            if (!(a_fixed[i].field() == boundary.field())) throw Error(ErrorCode::MixedFields, "root from another field");
            if (a_fixed[i].is_zero()) throw Error(ErrorCode::InvalidArgument, "fixed roots must be nonzero");
            for (std::size_t j = 0; j < i; ++j)
                if (a_fixed[i] == a_fixed[j]) throw Error(ErrorCode::InvalidArgument, "fixed roots must be distinct");
            sum += a_fixed[i];
        }
        if (sum.is_zero()) throw Error(ErrorCode::InvalidArgument, "e_1 vanishes for these fixed roots");
    }
    return FamilySpec(boundary, d, std::move(a_fixed));
}

FamilySpec FamilySpec::sample(const BoundarySpec& boundary, unsigned d, Rng& rng) {
    const unsigned p = static_cast<unsigned>(boundary.p());
    if (d < p) throw Error(ErrorCode::InvalidArgument, "family needs d >= p");
    const unsigned m = d - p;
    if (m <= 1) return make(boundary, d, {});
    const Field f = boundary.field();
    if (f.order() - 1 < m - 1) {
        throw Error(ErrorCode::GenericityExhausted, "field too small for " + std::to_string(m - 1) + " fixed roots");
    }
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<FieldElement> a = f.sample_distinct(m - 1, rng, true);
        FieldElement sum = f.zero();
        for (const auto& x : a) sum += x;
        if (!sum.is_zero()) return make(boundary, d, std::move(a));
    }
    throw Error(ErrorCode::GenericityExhausted, "e_1 kept vanishing for sampled fixed roots");
}

PsiForms build_family_psi(const FamilySpec& spec) {
    const Field f = spec.field();
    auto var = [&](std::size_t i) { return MultiPoly::variable(f, 7, i); };
    const MultiPoly x0 = var(kFx0), x1 = var(kFx1), b0 = var(kFb0), b1 = var(kFb1), c0 = var(kFc0), c1 = var(kFc1);
    const std::size_t to7[] = {kFx0, kFx1, kFx2};
    return assemble(spec, c0 * x0 - b0 * x1, c1 * x0 - b1 * x1, b1 * c0 - b0 * c1,
                    spec.boundary().delta().embed(7, to7));
}

FiberParams::FiberParams(FamilySpec spec, FieldElement broot0, FieldElement broot1, FieldElement croot0,
                         FieldElement croot1)
    : spec_(std::move(spec)),
      broot_{broot0, broot1},
      croot_{croot0, croot1},
      b_{broot0.frobenius(), broot1.frobenius()},
      c_{croot0.frobenius(), croot1.frobenius()},
      pi_(b_[1] * c_[0] - b_[0] * c_[1]),
      forms_(fiber_forms(spec_, b_, c_, pi_)) {}

CurveParams FiberParams::curve_params() const {
    std::vector<FieldElement> a = spec_.a_fixed();
    if (spec_.m() >= 1) a.push_back(spec_.field().zero());
    return CurveParams{spec_.boundary(), spec_.d(), spec_.m(), std::move(a), {broot_[0], broot_[1]},
                       {croot_[0], croot_[1]}};
}

std::array<FieldElement, 7> FiberParams::total_point(const Point3& x) const {
    return {x[0], x[1], x[2], b_[0], b_[1], c_[0], c_[1]};
}

Certificate psi_pullback_zero(const FiberParams& fiber) {
    const CurveParams cp = fiber.curve_params();
    const BuiltCurve curve = build(cp);
    const auto subs = curve.x.as_array();
    const Field f = fiber.spec().field();
    const unsigned p = fiber.spec().p(), d = fiber.spec().d();
    const PsiForms& F = fiber.forms();
    const UniPoly& M = curve.triple.M;
    const UniPoly pi = UniPoly::constant(fiber.pi());

    for (const auto& a : cp.a) {
        const UniPoly lhs = pullback(F.L0 - F.L1 * a.frobenius(), subs);
        const UniPoly rhs = pi * M * UniPoly(f, {a, f.one()}).pow(p);
        if (lhs != rhs) {
            std::ostringstream os;
            os << "pullback of L0 - a^p L1 for a=" << a << " is " << lhs.to_string() << ", expected " << rhs.to_string();
            throw Error(ErrorCode::IdentityFailure, os.str());
        }
    }
    const UniPoly l1d = pullback(F.L1, subs).pow(d);
    const UniPoly expect = (pi * M).pow(d) * sign_of(f, d);
    if (l1d != expect) throw Error(ErrorCode::IdentityFailure, "pullback of L1^d disagrees with (-1)^d pi^d M^d");
    const UniPoly psi = pullback(F.psi, subs);
    if (!psi.is_zero()) throw Error(ErrorCode::IdentityFailure, "pullback of Psi is " + psi.to_string());
    return {"psi_pullback_zero", true, "Psi(x(t)) = 0; L0 and L1 pullbacks match"};
}

Certificate gradient_check(const FamilySpec& spec) {
    const Field f = spec.field();
    const PsiForms F = build_family_psi(spec);
    auto var = [&](std::size_t i) { return MultiPoly::variable(f, 7, i); };
    const MultiPoly zero(f, 7);
    const MultiPoly x0 = var(kFx0), x1 = var(kFx1), b0 = var(kFb0), b1 = var(kFb1), c0 = var(kFc0), c1 = var(kFc1);
    const std::size_t to7[] = {kFx0, kFx1};
    const MultiPoly P = spec.boundary().sing_poly().embed(7, to7);
    const std::array<MultiPoly, 7> grad_l1{c1, -b1, zero, zero, -x1, zero, x0};
    const std::array<MultiPoly, 7> grad_l0{c0, -b0, zero, -x1, zero, x0, zero};
    const std::array<MultiPoly, 7> grad_delta{x1 * P, -(x0 * P), zero, zero, zero, zero, zero};

    const std::size_t to7x[] = {kFx0, kFx1, kFx2};
    const MultiPoly delta = spec.boundary().delta().embed(7, to7x);
    const MultiPoly spip = F.pi.pow(spec.p()) * sign_of(f, spec.d());
    const MultiPoly a = spip * F.calL;
    const MultiPoly b = spip * F.calE * delta;
    for (std::size_t i = 0; i < 7; ++i) {
        const MultiPoly direct = F.psi.partial_derivative(i);
        const MultiPoly closed = F.calD * grad_l1[i] - a * grad_delta[i] - b * grad_l0[i];
        if (direct != closed) {
            throw Error(ErrorCode::IdentityFailure, std::string("gradient entry d/d") + kVarNames[i] + " differs");
        }
    }
    return {"gradient", true, "7 entries match"};
}

std::array<FieldElement, 7> total_gradient(const FamilySpec& spec, const std::array<FieldElement, 7>& point) {
    const PsiForms F = build_family_psi(spec);
    std::array<FieldElement, 7> out{point};
    for (std::size_t i = 0; i < 7; ++i) out[i] = F.psi.partial_derivative(i).eval(point);
    return out;
}

ClassificationReport singularity_classification(const FiberParams& fiber, std::size_t max_points) {
    const FamilySpec& spec = fiber.spec();
    const Field f = spec.field();
    const PsiForms F = build_family_psi(spec);
    std::array<MultiPoly, 7> grad{F.psi, F.psi, F.psi, F.psi, F.psi, F.psi, F.psi};
    for (std::size_t i = 0; i < 7; ++i) grad[i] = F.psi.partial_derivative(i);
    auto gradient_at = [&](const Point3& x) {
        const auto pt = fiber.total_point(x);
        std::array<FieldElement, 7> g{pt};
        for (std::size_t i = 0; i < 7; ++i) g[i] = grad[i].eval(pt);
        return g;
    };
    auto is_zero = [](const std::array<FieldElement, 7>& g) {
        return std::all_of(g.begin(), g.end(), [](const FieldElement& x) { return x.is_zero(); });
    };
    auto on_fiber = [&](const Point3& x) { return fiber.psi().eval(x).is_zero(); };

    ClassificationReport out;
    const BoundarySpec& bd = spec.boundary();
    if (spec.p() > 2) {
        std::vector<std::pair<FieldElement, FieldElement>> sing;
        const MultiPoly& P = bd.sing_poly();
        const UniPoly affine = to_univariate(P.specialize(1, f.one()), 0);
        for (const auto& r : roots_in_field(affine)) sing.emplace_back(r, f.one());
        if (*affine.degree() < *P.total_degree()) sing.emplace_back(f.one(), f.zero());
        for (const auto& [a0, a1] : sing) {
            if (out.boundary_points >= max_points) break;
            const Point3 s{a0, a1, bd.sigma_form().eval(std::array{a0, a1}).pth_root()};
            if (!bd.delta().eval(s).is_zero()) {
                throw Error(ErrorCode::ClassificationMismatch, "computed singular point is not on the boundary");
            }
            if (!F.L1.is_zero() && !(fiber.c(1) * a0 - fiber.b(1) * a1).is_zero()) continue;
            if (!on_fiber(s) || !is_zero(gradient_at(s))) {
                throw Error(ErrorCode::ClassificationMismatch, "boundary singular point on the fiber is smooth in the total space");
            }
            ++out.boundary_points;
        }
    }

    if (fiber.pi().is_zero()) {
        const bool line = !(fiber.b(1).is_zero() && fiber.c(1).is_zero());
        const std::uint64_t limit = std::min<std::uint64_t>(f.order(), max_points);
        for (std::uint64_t e = 0; e < limit; ++e) {
            const FieldElement z = f.from_encoding(e);
            const Point3 s = line ? Point3{fiber.b(1), fiber.c(1), z} : Point3{f.one(), z, z};
            if (!on_fiber(s) || !is_zero(gradient_at(s))) {
                throw Error(ErrorCode::ClassificationMismatch, "point with pi = 0 and L1 = 0 is smooth in the total space");
            }
            ++out.degenerate_points;
        }
    }

    const Point3 str{f.zero(), f.zero(), f.one()};
    if (spec.m() >= 1) {
        const auto g = gradient_at(str);
        out.str_checked = true;
        out.str_singular = is_zero(g);
        if (spec.m() > 1 && !out.str_singular) {
            throw Error(ErrorCode::ClassificationMismatch, "strange point is smooth in the total space for m > 1");
        }
        if (spec.m() == 1 && !fiber.pi().is_zero()) {
            const FieldElement k = fiber.pi().pow(spec.p()) * sign_of(f, spec.d());
            const std::array<FieldElement, 7> want{k * fiber.c(0), -(k * fiber.b(0)), f.zero(), f.zero(),
                                                   f.zero(),       f.zero(),          f.zero()};
            if (g != want || out.str_singular) {
                throw Error(ErrorCode::ClassificationMismatch, "gradient at the strange point is not (-1)^d pi^p (c0, -b0, 0, ...)");
            }
        }
    }
    return out;
}

CuspData cusp_polynomial(const FiberParams& fiber) {
    const CurveParams cp = fiber.curve_params();
    const ParamTriple tr = param_triple(cp);
    const unsigned p = fiber.spec().p(), d = fiber.spec().d();
    CuspData out{cusp_factor(fiber.spec().boundary(), tr), UniPoly(fiber.spec().field())};
    out.pi_zero = fiber.pi().is_zero();
    if (out.K.is_zero()) return out;
    out.degree_exact = *out.K.degree() == 2 * d - p - 2;
    out.C = squarefree_part(out.K);
    out.count = deg0(out.C);
    out.meets_str_branch = deg0(gcd(out.C, tr.M)) > 0;
    return out;
}

std::size_t expected_cusp_count(unsigned p, unsigned d) { return p == 2 ? d - 2 : 2 * d - p - 2; }

Certificate special_cusp_checks(const FiberParams& fiber) {
    const BoundarySpec& bd = fiber.spec().boundary();
    if (!bd.is_special()) throw Error(ErrorCode::InvalidArgument, "special cusp checks need the special boundary");
    const ParamTriple tr = param_triple(fiber.curve_params());
    const unsigned p = fiber.spec().p();
    const UniPoly K = cusp_factor(bd, tr);
    const UniPoly Md = tr.M.derivative();
    const UniPoly rhs = Md - tr.M * tr.M * (tr.V - tr.W).pow(p - 2) * fiber.pi().pth_root();
    if (K != rhs) {
        throw Error(ErrorCode::IdentityFailure, "K = " + K.to_string() + " but M' - pi^(1/p) M^2 (V-W)^(p-2) = " + rhs.to_string());
    }
    if (p == 2) {
        const UniPoly half = Md.deflate().pth_root_coeffs();
        const UniPoly sq = (half - tr.M * fiber.pi().pth_root().pth_root()).pow(2);
        if (K != sq) throw Error(ErrorCode::IdentityFailure, "K is not ((M')^(1/2) - pi^(1/4) M)^2");
        return {"special_cusp", true, "K = ((M')^(1/2) - pi^(1/4) M)^2"};
    }
    return {"special_cusp", true, "K = M' - pi^(1/p) M^2 (V - W)^(p-2)"};
}

Certificate cusp_image_certificates(const FiberParams& fiber) {
    const CuspData cd = cusp_polynomial(fiber);
    if (cd.pi_zero || cd.K.is_zero()) return {"cusp_image", false, "precondition: pi != 0"};
    if (cd.meets_str_branch) return {"cusp_image", false, "precondition: gcd(C, M) = 1"};
    const BuiltCurve curve = build(fiber.curve_params());
    const auto subs = curve.x.as_array();
    auto divisible = [&](const UniPoly& g) { return g.is_zero() || divrem(g, cd.C).remainder.is_zero(); };

    for (std::size_t i = 0; i < 3; ++i) {
        if (!divisible(pullback(fiber.psi().partial_derivative(i), subs))) {
            throw Error(ErrorCode::CertificateFailure, "(i) C does not divide the pulled-back d/dx" + std::to_string(i) + " Psi");
        }
    }
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            const UniPoly wr = subs[i].derivative() * subs[j] - subs[j].derivative() * subs[i];
            if (!divisible(wr)) {
                throw Error(ErrorCode::CertificateFailure,
                            "(ii) C does not divide the Wronskian of x" + std::to_string(i) + ", x" + std::to_string(j));
            }
        }
    if (!pullback(fiber.psi(), subs).is_zero()) throw Error(ErrorCode::CertificateFailure, "(iii) Psi(x(t)) != 0");
    return {"cusp_image", true, std::to_string(cd.count) + " cusps certified"};
}

Certificate total_space_smoothness_at_cusps(const FiberParams& fiber) {
    const CuspData cd = cusp_polynomial(fiber);
    if (cd.pi_zero || cd.K.is_zero()) return {"total_space_smoothness", false, "precondition: pi != 0"};
    const BuiltCurve curve = build(fiber.curve_params());
    const auto subs = curve.x.as_array();
    if (fiber.spec().m() == 0) {
        const UniPoly pp = pullback(fiber.spec().boundary().sing_poly(), std::span(subs).first(2));
        if (!divrem(pp, cd.C).remainder.is_zero()) {
            throw Error(ErrorCode::CertificateFailure, "C does not divide the pullback of P");
        }
        return {"total_space_smoothness", true, "every cusp lies over Sing(Delta)"};
    }
    const UniPoly D = pullback(fiber.forms().calD, subs);
    const UniPoly E = pullback(fiber.forms().calE, subs);
    const UniPoly g = gcd(cd.C, gcd(D, E));
    if (deg0(g) > 0) return {"total_space_smoothness", false, "gcd(C, D, E) = " + g.to_string()};
    return {"total_space_smoothness", true, "gcd(C, D, E) = 1"};
}

TangentCone tangent_cone_at_str(const FiberParams& fiber) {
    if (fiber.pi().is_zero()) throw Error(ErrorCode::InvalidArgument, "tangent cone needs pi != 0");
    const FamilySpec& spec = fiber.spec();
    const Field f = spec.field();
    TangentCone out{fiber.psi().specialize(2, f.one()).lowest_part()};
    out.multiplicity = *out.cone.min_degree();
    const MultiPoly expect = fiber.forms().calL * (fiber.pi().pow(spec.p()) * sign_of(f, spec.d()));
    if (out.cone != expect) {
        throw Error(ErrorCode::ConeMismatch, "lowest part " + out.cone.to_string() + " differs from (-1)^d pi^p calL");
    }
    if (out.multiplicity != spec.m()) {
        throw Error(ErrorCode::ConeMismatch, "multiplicity " + std::to_string(out.multiplicity) + ", expected " +
                                                 std::to_string(spec.m()));
    }
    out.ordinary = spec.m() == 0 || projective_root_count(out.cone, 0, 1) == spec.m();
    return out;
}

bool delta_identity(unsigned p, unsigned d) {
    if (d < p) return false;
    const long long m = static_cast<long long>(d) - p;
    const long long D = d;
    const long long lhs2 = (D - 1) * (D - 2) - m * (m - 1);
    const long long rhs2 = (static_cast<long long>(p) - 1) * (2 * D - p - 2);
    return lhs2 == rhs2 && lhs2 % 2 == 0;
}

FiberParams sample_general_fiber(const FamilySpec& spec, Rng& rng) {
    const Field f = spec.field();
    std::map<std::string, int> failures;
    for (int attempt = 0; attempt < 64; ++attempt) {
        FiberParams fiber(spec, f.sample(rng), f.sample(rng), f.sample(rng), f.sample(rng));
        if (fiber.pi().is_zero()) {
            ++failures["pi = 0"];
            continue;
        }
        const FieldElement b1 = fiber.b(1), c1 = fiber.c(1);
        if ((b1.is_zero() && c1.is_zero()) ||
            (spec.p() > 2 && spec.boundary().sing_poly().eval(std::array{b1, c1}).is_zero())) {
            ++failures["point at infinity is singular on the boundary"];
            continue;
        }
        const CuspData cd = cusp_polynomial(fiber);
        if (!cd.degree_exact) {
            ++failures["cusp polynomial degree drops"];
            continue;
        }
        if (cd.meets_str_branch) {
            ++failures["gcd(C, M) != 1"];
            continue;
        }
        return fiber;
    }
    const auto worst = std::max_element(failures.begin(), failures.end(),
                                        [](const auto& a, const auto& b) { return a.second < b.second; });
    throw Error(ErrorCode::GenericityExhausted, "64 attempts failed; most frequent: " + worst->first + " (field " +
                                                    f.header() + ")");
}

}  // namespace a1lab
