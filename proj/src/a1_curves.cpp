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

#include "a1lab/a1_curves.hpp"

#include <algorithm>
#include <sstream>

#include "a1lab/error.hpp"
#include "a1lab/resultant.hpp"

namespace a1lab {

namespace {

std::size_t deg0(const UniPoly& f) { return f.degree().value_or(0); }

UniPoly from_list(Field field, const std::vector<FieldElement>& coeffs) { return UniPoly(field, coeffs); }

std::vector<FieldElement> padded_coeffs(const UniPoly& f, std::size_t length) {
    std::vector<FieldElement> out;
    out.reserve(length);
    for (std::size_t i = 0; i < length; ++i) out.push_back(f.coeff(i));
    return out;
}

// Univariate polynomial in t as a polynomial in (t, X0, X1, X2) with t as variable 0.
MultiPoly lift_t(const UniPoly& f, std::size_t arity) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        Monomial mono;
        mono.exps[0] = static_cast<std::uint16_t>(i);
        terms.push_back({mono, f.coeffs()[i]});
    }
    return MultiPoly::from_terms(f.field(), arity, std::move(terms));
}

}  // namespace

void CurveParams::validate() const {
    const auto p = boundary.p();
    if (m > d || (d - m) % p != 0) {
        throw Error(ErrorCode::BadCongruence,
                    "m=" + std::to_string(m) + " is not admissible for d=" + std::to_string(d) + ", p=" + std::to_string(p));
    }
    const std::size_t n = (d - m) / p + 1;
    if (a.size() != m || vroot.size() != n || wroot.size() != n) {
        throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(m) + " roots and " + std::to_string(n) +
                                                    " coefficients for V and W");
    }
    const Field f = boundary.field();
    for (const auto* list : {&a, &vroot, &wroot})
        for (const auto& x : *list)
            if (!(x.field() == f)) throw Error(ErrorCode::MixedFields, "curve parameter from a different field");
}

CurveParams CurveParams::sample(const BoundarySpec& boundary, unsigned d, unsigned m, Rng& rng) {
    const Field f = boundary.field();
    CurveParams out{boundary, d, m, {}, {}, {}};
    if (m > d || (d - m) % boundary.p() != 0) out.validate();
    const std::size_t n = (d - m) / boundary.p() + 1;
    for (unsigned i = 0; i < m; ++i) out.a.push_back(f.sample(rng));
    for (std::size_t j = 0; j < n; ++j) out.vroot.push_back(f.sample(rng));
    for (std::size_t j = 0; j < n; ++j) out.wroot.push_back(f.sample(rng));
    return out;
}

std::size_t XCoords::degree() const { return std::max({deg0(x0), deg0(x1), deg0(x2)}); }

ParamTriple param_triple(const CurveParams& params) {
    params.validate();
    const Field f = params.boundary.field();
    return {UniPoly::from_shifts(f, params.a), from_list(f, params.vroot), from_list(f, params.wroot)};
}

BuiltCurve build(const CurveParams& params) {
    const auto p = static_cast<unsigned>(params.boundary.p());
    BuiltCurve out{param_triple(params), {}, {UniPoly(params.boundary.field()), UniPoly(params.boundary.field()),
                                              UniPoly(params.boundary.field())}};
    const ParamTriple& tr = out.triple;

    out.z.u.reserve(p + 1);
    for (unsigned i = 0; i <= p; ++i) out.z.u.push_back(tr.M * tr.V.pow(p - i) * tr.W.pow(i));
    for (unsigned s = 0; s <= 2 * p; ++s) {
        std::optional<UniPoly> first;
        for (unsigned i = s > p ? s - p : 0; i <= s / 2; ++i) {
            UniPoly prod = out.z.u[i] * out.z.u[s - i];
            if (!first) {
                first = std::move(prod);
            } else if (prod != *first) {
                throw Error(ErrorCode::IdentityFailure, "binomial relation fails for index sum " + std::to_string(s));
            }
        }
    }

    out.x.x0 = tr.M * tr.V.pow(p);
    out.x.x1 = tr.M * tr.W.pow(p);
    out.x.x2 = tr.M * sigma_root_eval(params.boundary, tr.V, tr.W) - UniPoly::constant(params.boundary.field().one());
    if (out.x.x0 != out.z.u[0] || out.x.x1 != out.z.u[p]) {
        throw Error(ErrorCode::IdentityFailure, "x0, x1 disagree with u_0, u_p");
    }
    out.degenerate = out.x.degree() < params.d;
    return out;
}

Certificate contact_certificate(const BoundarySpec& boundary, const XCoords& x) {
    const auto subs = x.as_array();
    const UniPoly pulled = pullback(boundary.delta(), subs);
    if (pulled != UniPoly::constant(boundary.field().one())) {
        throw Error(ErrorCode::IdentityFailure, "pullback of Delta is " + pulled.to_string() + ", expected 1");
    }
    return {"contact", true, "contact order " + std::to_string(boundary.p() * x.degree())};
}

MultiplicityReport multiplicity_at_str(const CurveParams& params) {
    const ParamTriple tr = param_triple(params);
    MultiplicityReport out;
    out.m_realized = deg0(tr.M);
    for (const auto& ai : params.a) {
        const FieldElement t0 = -ai;
        FieldElement v = tr.V.eval(t0).frobenius(), w = tr.W.eval(t0).frobenius();
        if (v.is_zero() && w.is_zero()) out.has_zero_direction = true;
        out.directions.emplace_back(v, w);
    }
    std::vector<FieldElement> roots = params.a;
    std::sort(roots.begin(), roots.end());
    const bool distinct_roots = std::adjacent_find(roots.begin(), roots.end()) == roots.end();
    bool distinct_dirs = true;
    for (std::size_t i = 0; i < out.directions.size(); ++i)
        for (std::size_t j = i + 1; j < out.directions.size(); ++j) {
            const auto& [vi, wi] = out.directions[i];
            const auto& [vj, wj] = out.directions[j];
            if (vi * wj == vj * wi) distinct_dirs = false;
        }
    out.ordinary = distinct_roots && !out.has_zero_direction && distinct_dirs;
    return out;
}

UniPoly cusp_factor(const BoundarySpec& boundary, const ParamTriple& triple) {
    const UniPoly ds = sigma_root_eval(boundary, triple.V, triple.W).derivative();
    return triple.M.derivative() + triple.M * triple.M * ds;
}

Certificate tangent_factorization_check(const CurveParams& params) {
    const BuiltCurve c = build(params);
    const Field f = params.boundary.field();
    const auto p = static_cast<unsigned>(params.boundary.p());
    constexpr std::size_t n = 4;
    const MultiPoly X0 = MultiPoly::variable(f, n, 1), X1 = MultiPoly::variable(f, n, 2),
                    X2 = MultiPoly::variable(f, n, 3);
    const MultiPoly x0 = lift_t(c.x.x0, n), x1 = lift_t(c.x.x1, n), x2 = lift_t(c.x.x2, n);
    const MultiPoly d0 = lift_t(c.x.x0.derivative(), n), d1 = lift_t(c.x.x1.derivative(), n),
                    d2 = lift_t(c.x.x2.derivative(), n);
    const MultiPoly det = X0 * (x1 * d2 - x2 * d1) - X1 * (x0 * d2 - x2 * d0) + X2 * (x0 * d1 - x1 * d0);

    const UniPoly k = cusp_factor(params.boundary, c.triple);
    const MultiPoly rhs = lift_t(k, n) * (lift_t(c.triple.W.pow(p), n) * X0 - lift_t(c.triple.V.pow(p), n) * X1);
    if (det != rhs) {
        throw Error(ErrorCode::IdentityFailure, "tangent determinant residual " + (det - rhs).to_string());
    }
    return {"tangent_factorization", true, "det = (M' + M^2 s')(W^p X0 - V^p X1)"};
}

Certificate strangeness_certificate(const CurveParams& params, std::size_t max_points) {
    const BuiltCurve c = build(params);
    const Field f = params.boundary.field();
    const UniPoly k = cusp_factor(params.boundary, c.triple);
    const UniPoly d0 = c.x.x0.derivative(), d1 = c.x.x1.derivative(), d2 = c.x.x2.derivative();
    const std::uint64_t limit = std::min<std::uint64_t>(f.order(), max_points);
    std::size_t checked = 0, skipped = 0;
    for (std::uint64_t e = 0; e < limit; ++e) {
        const FieldElement t0 = f.from_encoding(e);
        const FieldElement a0 = c.x.x0.eval(t0), a1 = c.x.x1.eval(t0), a2 = c.x.x2.eval(t0);
        if (k.eval(t0).is_zero() || (a0.is_zero() && a1.is_zero())) {
            ++skipped;
            continue;
        }
        const FieldElement b0 = d0.eval(t0), b1 = d1.eval(t0), b2 = d2.eval(t0);
        const FieldElement l0 = a1 * b2 - a2 * b1, l1 = a2 * b0 - a0 * b2, l2 = a0 * b1 - a1 * b0;
        ++checked;
        if (!l2.is_zero() || (l0.is_zero() && l1.is_zero())) {
            std::ostringstream os;
            os << "tangent line at t=" << t0 << " misses the strange point";
            return {"strangeness", false, os.str()};
        }
    }
    return {"strangeness", true,
            std::to_string(checked) + " smooth points checked, " + std::to_string(skipped) + " skipped"};
}

CurveParams reparameterize(const CurveParams& params, const FieldElement& lambda, const FieldElement& c) {
    if (lambda.is_zero()) throw Error(ErrorCode::ZeroScale, "reparameterization with zero scale");
    const ParamTriple tr = param_triple(params);
    const FieldElement inv = lambda.inverse();
    const FieldElement beta = lambda.pow(params.m).pth_root();
    CurveParams out{params.boundary, params.d, params.m, {}, {}, {}};
    for (const auto& ai : params.a) out.a.push_back((ai + c) * inv);
    const std::size_t n = params.vroot.size();
    out.vroot = padded_coeffs(tr.V.compose_affine(lambda, c) * beta, n);
    out.wroot = padded_coeffs(tr.W.compose_affine(lambda, c) * beta, n);
    return out;
}

bool inseparable_cover_check(const XCoords& x) {
    return x.x0.in_frobenius_image() && x.x1.in_frobenius_image() && x.x2.in_frobenius_image();
}

LiftedPoint lift_point(const BoundarySpec& boundary, std::span<const FieldElement, 3> alpha) {
    const FieldElement delta = boundary.delta().eval(alpha);
    if (delta.is_zero()) throw Error(ErrorCode::PointOnBoundary, "point lies on the boundary");
    const FieldElement lambda = delta.inverse().pth_root();
    return {(lambda * alpha[0]).pth_root(), (lambda * alpha[1]).pth_root(), lambda};
}

bool projectively_equal(const Point3& a, const Point3& b) {
    const bool za = a[0].is_zero() && a[1].is_zero() && a[2].is_zero();
    const bool zb = b[0].is_zero() && b[1].is_zero() && b[2].is_zero();
    if (za || zb) return false;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

Point3 eval_point(const XCoords& x, const FieldElement& t) { return {x.x0.eval(t), x.x1.eval(t), x.x2.eval(t)}; }

Interpolation interpolate(const BoundarySpec& boundary, std::span<const Point3> points, std::uint64_t seed) {
    if (points.empty()) throw Error(ErrorCode::InvalidArgument, "no points to interpolate");
    const Field f = boundary.field();
    const auto p = static_cast<unsigned>(boundary.p());

    Interpolation out{CurveParams{boundary, 0, 0, {}, {}, {}}, {}, {}};
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Point3& pt = points[i];
        if (pt[0].is_zero() && pt[1].is_zero() && pt[2].is_zero()) {
            throw Error(ErrorCode::InvalidArgument, "point " + std::to_string(i + 1) + " is the zero vector");
        }
        if (boundary.delta().eval(pt).is_zero()) {
            throw Error(ErrorCode::PointOnBoundary, "point " + std::to_string(i + 1) + " lies on the boundary");
        }
        const bool seen = std::any_of(out.points.begin(), out.points.end(),
                                      [&](const Point3& q) { return projectively_equal(pt, q); });
        if (!seen) out.points.push_back(pt);
    }

    std::vector<FieldElement> vs, ws;
    for (const auto& pt : out.points) {
        const LiftedPoint l = lift_point(boundary, pt);
        vs.push_back(l.v);
        ws.push_back(l.w);
    }
    const std::size_t n = out.points.size();
    const std::size_t node_count = n == 1 ? 2 : n;
    if (node_count > f.order()) {
        throw Error(ErrorCode::NotEnoughNodes, std::to_string(node_count) + " nodes needed in a field of " +
                                                   std::to_string(f.order()) + " elements");
    }

    Rng rng(seed);
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<FieldElement> nodes = f.sample_distinct(node_count, rng);
        std::vector<FieldElement> v = vs, w = ws;
        if (n == 1) {
            v.push_back(f.sample(rng));
            w.push_back(f.sample(rng));
        }
        const UniPoly V = lagrange_interpolate(nodes, v);
        const UniPoly W = lagrange_interpolate(nodes, w);
        const std::size_t deg = std::max(deg0(V), deg0(W));
        if (deg < 1) continue;

        out.params.d = p * static_cast<unsigned>(deg);
        out.params.m = 0;
        out.params.vroot = padded_coeffs(V, deg + 1);
        out.params.wroot = padded_coeffs(W, deg + 1);
        out.nodes.assign(nodes.begin(), nodes.begin() + static_cast<std::ptrdiff_t>(n));
        const BuiltCurve c = build(out.params);
        for (std::size_t i = 0; i < n; ++i) {
            if (!projectively_equal(eval_point(c.x, out.nodes[i]), out.points[i])) {
                throw Error(ErrorCode::IdentityFailure, "interpolated curve misses point " + std::to_string(i + 1));
            }
        }
        return out;
    }
    throw Error(ErrorCode::NotEnoughNodes, "no non-degenerate node choice after 32 attempts");
}

MultiPoly implicitize(const XCoords& x) {
    const auto xs = x.as_array();
    std::size_t piv = 0;
    for (std::size_t i = 1; i < 3; ++i)
        if (deg0(xs[i]) > deg0(xs[piv])) piv = i;
    if (deg0(xs[piv]) == 0) throw Error(ErrorCode::ConstantMap, "all coordinates are constant");
    const Field f = x.x0.field();
    std::size_t others[2];
    for (std::size_t i = 0, k = 0; i < 3; ++i)
        if (i != piv) others[k++] = i;

    auto pencil = [&](std::size_t j) {
        const std::size_t len = deg0(xs[piv]) + 1;
        const MultiPoly Xp = MultiPoly::variable(f, 3, piv), Xj = MultiPoly::variable(f, 3, j);
        std::vector<MultiPoly> coeffs;
        for (std::size_t e = 0; e < len; ++e) coeffs.push_back(Xj * xs[piv].coeff(e) - Xp * xs[j].coeff(e));
        return RingUniPoly(f, 3, std::move(coeffs));
    };
    return sylvester_resultant(pencil(others[0]), pencil(others[1]));
}

std::vector<unsigned> admissible_multiplicities(unsigned d, unsigned p) {
    std::vector<unsigned> out;
    for (unsigned m = d % p; m <= d; m += p) out.push_back(m);
    return out;
}

bool parameter_count_identity(unsigned d, unsigned m, unsigned p) {
    if (m > d || (d - m) % p != 0) return false;
    const long long lhs = static_cast<long long>(p) * (m + 2 * ((d - m) / p + 1));
    const long long rhs = 2LL * d + (static_cast<long long>(p) - 2) * m + 2LL * p;
    return lhs == rhs;
}

std::vector<Point3> parse_points_csv(Field field, const std::string& text, std::vector<std::size_t>* line_numbers) {
    std::vector<Point3> out;
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::vector<FieldElement> coords;
        std::istringstream ls(line);
        std::string item;
        while (std::getline(ls, item, ',')) {
            const auto b = item.find_first_not_of(" \t\r");
            const auto e = item.find_last_not_of(" \t\r");
            const std::string tok = b == std::string::npos ? "" : item.substr(b, e - b + 1);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
                throw Error(ErrorCode::BadEncoding, "line " + std::to_string(lineno) + ": bad entry '" + tok + "'");
            }
            try {
                coords.push_back(field.from_encoding(std::stoull(tok)));
            } catch (const Error&) {
                throw Error(ErrorCode::BadEncoding, "line " + std::to_string(lineno) + ": entry out of range");
            } catch (const std::out_of_range&) {
                throw Error(ErrorCode::BadEncoding, "line " + std::to_string(lineno) + ": entry out of range");
            }
        }
        if (coords.size() != 3) {
            throw Error(ErrorCode::BadEncoding, "line " + std::to_string(lineno) + ": expected 3 entries");
        }
        out.push_back({coords[0], coords[1], coords[2]});
        if (line_numbers) line_numbers->push_back(lineno);
    }
    return out;
}

}  // namespace a1lab
