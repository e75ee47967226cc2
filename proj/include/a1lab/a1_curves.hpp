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

#ifndef A1LAB_A1_CURVES_HPP
#define A1LAB_A1_CURVES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "a1lab/certificate.hpp"
#include "a1lab/finite_field.hpp"
#include "a1lab/multi_poly.hpp"
#include "a1lab/strange_geometry.hpp"
#include "a1lab/uni_poly.hpp"

namespace a1lab {

/// Data of an A^1-curve of contact degree d and multiplicity m at the strange point.
///
/// The free coordinates are stored as p-th roots: a_i (roots -a_i of M), and the
/// coefficients b_j^(1/p), c_j^(1/p) of V and W. Each of vroot and wroot holds
/// (d - m)/p + 1 entries.
struct CurveParams {
    BoundarySpec boundary;
    unsigned d = 0;
    unsigned m = 0;
    std::vector<FieldElement> a;
    std::vector<FieldElement> vroot;
    std::vector<FieldElement> wroot;

    /// Throws BadCongruence unless 0 <= m <= d and m = d (mod p), and InvalidArgument
    /// when the list lengths do not match (d, m).
    void validate() const;

    /// Uniformly random parameters for (d, m).
    static CurveParams sample(const BoundarySpec& boundary, unsigned d, unsigned m, Rng& rng);
};

struct ParamTriple {
    UniPoly M;
    UniPoly V;
    UniPoly W;
};

/// u_i = M V^(p-i) W^i for i = 0..p.
struct ZCoords {
    std::vector<UniPoly> u;
};

struct XCoords {
    UniPoly x0;
    UniPoly x1;
    UniPoly x2;

    std::array<UniPoly, 3> as_array() const { return {x0, x1, x2}; }
    /// Maximum degree of the three coordinates (0 for constants).
    std::size_t degree() const;
};

struct BuiltCurve {
    ParamTriple triple;
    ZCoords z;
    XCoords x;
    /// Realized degree is below d (leading data vanished).
    bool degenerate = false;
};

/// Builds M, V, W, the Z-coordinates and the X-coordinates and checks every binomial
/// relation u_i u_j = u_k u_l (i + j = k + l). Throws BadCongruence or IdentityFailure.
BuiltCurve build(const CurveParams& params);

ParamTriple param_triple(const CurveParams& params);

/// Pullback of Delta along x must be the constant 1. Throws IdentityFailure.
Certificate contact_certificate(const BoundarySpec& boundary, const XCoords& x);

struct MultiplicityReport {
    std::size_t m_realized = 0;
    /// (V(-a_i)^p : W(-a_i)^p), unnormalized.
    std::vector<std::pair<FieldElement, FieldElement>> directions;
    bool has_zero_direction = false;
    bool ordinary = true;
};

MultiplicityReport multiplicity_at_str(const CurveParams& params);

/// det[(X0,X1,X2); x(t); x'(t)] == (M' + M^2 sigma^(1/p)(V,W)')(W^p X0 - V^p X1) as
/// polynomials in (t, X0, X1, X2). Throws IdentityFailure.
Certificate tangent_factorization_check(const CurveParams& params);

/// The cusp factor M' + M^2 (sigma^(1/p)(V, W))'.
UniPoly cusp_factor(const BoundarySpec& boundary, const ParamTriple& triple);

/// At every base-field parameter (up to `max_points`) where the cusp factor is nonzero and
/// the image is not the strange point, the tangent line must contain (0:0:1).
Certificate strangeness_certificate(const CurveParams& params, std::size_t max_points = 512);

/// Substitutes t -> lambda t + c while keeping M monic. Throws ZeroScale.
CurveParams reparameterize(const CurveParams& params, const FieldElement& lambda, const FieldElement& c);

/// True iff every coordinate lies in k[t^p].
bool inseparable_cover_check(const XCoords& x);

struct LiftedPoint {
    FieldElement v;
    FieldElement w;
    FieldElement lambda;
};

/// Lifts an interior point alpha so that (v^p, w^p, sigma^(1/p)(v, w) - 1) = lambda alpha.
/// Throws PointOnBoundary when Delta(alpha) = 0.
LiftedPoint lift_point(const BoundarySpec& boundary, std::span<const FieldElement, 3> alpha);

using Point3 = std::array<FieldElement, 3>;

/// True iff a and b are nonzero and proportional.
bool projectively_equal(const Point3& a, const Point3& b);

/// Evaluates x at t.
Point3 eval_point(const XCoords& x, const FieldElement& t);

struct Interpolation {
    CurveParams params;
    std::vector<FieldElement> nodes;
    /// Input points after projective de-duplication.
    std::vector<Point3> points;
};

/// An m = 0 curve through every input point. Throws PointOnBoundary, NotEnoughNodes,
/// InvalidArgument (no points or a zero vector).
Interpolation interpolate(const BoundarySpec& boundary, std::span<const Point3> points, std::uint64_t seed);

/// Res_t(x_piv X_j - x_j X_piv, x_piv X_k - x_k X_piv) with the pivot of maximal degree.
/// Throws ConstantMap.
MultiPoly implicitize(const XCoords& x);

/// {m : 0 <= m <= d, m = d mod p}
std::vector<unsigned> admissible_multiplicities(unsigned d, unsigned p);

/// Checks p(m + 2((d-m)/p + 1)) == p(dim + 2) with dim = 2d/p + (1 - 2/p)m, scaled by p so
/// that everything is integral.
bool parameter_count_identity(unsigned d, unsigned m, unsigned p);

/// CSV "x0,x1,x2" with element encodings; blank lines and '#' comments are skipped.
/// Throws BadEncoding with the 1-based line number. `line_numbers`, when given, receives
/// the source line of each returned point.
std::vector<Point3> parse_points_csv(Field field, const std::string& text,
                                     std::vector<std::size_t>* line_numbers = nullptr);

}  // namespace a1lab

#endif
