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

#ifndef A1LAB_DP_COMPONENT_HPP
#define A1LAB_DP_COMPONENT_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "a1lab/a1_curves.hpp"
#include "a1lab/certificate.hpp"
#include "a1lab/multi_poly.hpp"
#include "a1lab/strange_geometry.hpp"

namespace a1lab {

/// Variable order of the seven-variable family polynomial.
enum FamilyVar : std::size_t { kFx0 = 0, kFx1, kFx2, kFb0, kFb1, kFc0, kFc1 };

/// The family of curves of degree d with multiplicity m = d - p at the strange point,
/// with a_m = 0 and the remaining roots a_1..a_{m-1} fixed.
class FamilySpec {
   public:
    /// Throws InvalidArgument if d < p, if a_fixed does not have max(m - 1, 0) entries, or
    /// (for m > 1) if the a_j are not pairwise distinct and nonzero or e_1 = 0.
    static FamilySpec make(const BoundarySpec& boundary, unsigned d, std::vector<FieldElement> a_fixed);
    /// Random admissible a_1..a_{m-1}; throws GenericityExhausted after 64 attempts.
    static FamilySpec sample(const BoundarySpec& boundary, unsigned d, Rng& rng);

    const BoundarySpec& boundary() const noexcept { return boundary_; }
    Field field() const noexcept { return boundary_.field(); }
    unsigned p() const noexcept { return static_cast<unsigned>(boundary_.p()); }
    unsigned d() const noexcept { return d_; }
    unsigned m() const noexcept { return d_ - p(); }
    const std::vector<FieldElement>& a_fixed() const noexcept { return a_fixed_; }
    /// e_k(-a_1^p, ..., -a_{m-1}^p) for k = 0..m-1 (e_0 = 1).
    const std::vector<FieldElement>& e() const noexcept { return e_; }

   private:
    FamilySpec(BoundarySpec boundary, unsigned d, std::vector<FieldElement> a_fixed);
    BoundarySpec boundary_;
    unsigned d_;
    std::vector<FieldElement> a_fixed_;
    std::vector<FieldElement> e_;
};

/// Auxiliary forms of the family polynomial in some polynomial ring.
struct PsiForms {
    MultiPoly L0;
    MultiPoly L1;
    MultiPoly pi;
    /// L0 prod_{j<m} (L0 - a_j^p L1)
    MultiPoly calL;
    MultiPoly calD;
    MultiPoly calE;
    /// L1^d - (-1)^d pi^p Delta calL
    MultiPoly psi;
};

/// Psi and its auxiliary forms in the seven variables (x0, x1, x2, b0, b1, c0, c1).
PsiForms build_family_psi(const FamilySpec& spec);

/// One member of the family, given by the p-th roots of b0, b1, c0, c1.
class FiberParams {
   public:
    FiberParams(FamilySpec spec, FieldElement broot0, FieldElement broot1, FieldElement croot0,
                FieldElement croot1);

    const FamilySpec& spec() const noexcept { return spec_; }
    const FieldElement& broot(std::size_t i) const { return broot_.at(i); }
    const FieldElement& croot(std::size_t i) const { return croot_.at(i); }
    const FieldElement& b(std::size_t i) const { return b_.at(i); }
    const FieldElement& c(std::size_t i) const { return c_.at(i); }
    const FieldElement& pi() const noexcept { return pi_; }
    /// Forms in (x0, x1, x2).
    const PsiForms& forms() const noexcept { return forms_; }
    const MultiPoly& psi() const noexcept { return forms_.psi; }

    /// Curve parameters with a = (a_1, ..., a_{m-1}, 0), V = broot0 + broot1 t, W likewise.
    CurveParams curve_params() const;
    /// (x0, x1, x2, b0, b1, c0, c1) at a point of the plane.
    std::array<FieldElement, 7> total_point(const Point3& x) const;

   private:
    FamilySpec spec_;
    std::array<FieldElement, 2> broot_, croot_, b_, c_;
    FieldElement pi_;
    PsiForms forms_;
};

/// Pullback of Psi along the matching parameterization is 0, together with
/// pullback(L0 - a_i^p L1) = pi M (t + a_i)^p and pullback(L1)^d = (-1)^d pi^d M^d.
/// Throws IdentityFailure.
Certificate psi_pullback_zero(const FiberParams& fiber);

/// Compares each direct partial derivative of the family Psi with
/// D grad L1 - (-1)^d pi^p calL grad Delta - (-1)^d pi^p E Delta grad L0.
/// Throws IdentityFailure naming the coordinate.
Certificate gradient_check(const FamilySpec& spec);

/// Gradient of the family Psi evaluated at a point of the total space.
std::array<FieldElement, 7> total_gradient(const FamilySpec& spec, const std::array<FieldElement, 7>& point);

struct ClassificationReport {
    /// Base-field singular points of Delta on the fiber checked to be singular.
    std::size_t boundary_points = 0;
    /// Points with pi = 0 and L1 = 0 checked to be singular.
    std::size_t degenerate_points = 0;
    /// Strange point checked (singular for m > 1, smooth for m = 1).
    bool str_checked = false;
    bool str_singular = false;
};

/// Checks the three classes of singular points of the total space along one fiber.
/// Throws ClassificationMismatch.
ClassificationReport singularity_classification(const FiberParams& fiber, std::size_t max_points = 16);

struct CuspData {
    UniPoly K;
    UniPoly C;
    std::size_t count = 0;
    bool pi_zero = false;
    bool degree_exact = false;
    /// gcd(C, M) != 1: a cusp parameter collides with a branch through the strange point.
    bool meets_str_branch = false;
};

CuspData cusp_polynomial(const FiberParams& fiber);

/// Expected cusp count: d - 2 for p = 2, otherwise 2d - p - 2.
std::size_t expected_cusp_count(unsigned p, unsigned d);

/// For the special boundary: K == M' - pi^(1/p) M^2 (V - W)^(p-2), and for p = 2
/// K == ((M')^(1/2) - pi^(1/4) M)^2. Throws IdentityFailure.
Certificate special_cusp_checks(const FiberParams& fiber);

/// C divides the pulled-back partials of Psi and every Wronskian, and Psi pulls back to 0.
/// Throws CertificateFailure.
Certificate cusp_image_certificates(const FiberParams& fiber);

/// m >= 1: gcd(C, D(t), E(t)) = 1 (returned as a non-passing certificate otherwise).
/// m = 0: C divides the pullback of P; throws CertificateFailure when it does not.
Certificate total_space_smoothness_at_cusps(const FiberParams& fiber);

struct TangentCone {
    MultiPoly cone;
    unsigned multiplicity = 0;
    bool ordinary = false;
};

/// Lowest part of Psi(x0, x1, 1), which must equal (-1)^d pi^p calL. Throws ConeMismatch.
TangentCone tangent_cone_at_str(const FiberParams& fiber);

/// (d-1)(d-2)/2 - m(m-1)/2 == (p-1)(2d-p-2)/2 with m = d - p.
bool delta_identity(unsigned p, unsigned d);

/// Rejection-samples a fiber with pi != 0, the point at infinity off Sing(Delta), deg K
/// exact and gcd(C, M) = 1. Throws GenericityExhausted after 64 attempts.
FiberParams sample_general_fiber(const FamilySpec& spec, Rng& rng);

}  // namespace a1lab

#endif
