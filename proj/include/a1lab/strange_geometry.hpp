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

#ifndef A1LAB_STRANGE_GEOMETRY_HPP
#define A1LAB_STRANGE_GEOMETRY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "a1lab/certificate.hpp"
#include "a1lab/finite_field.hpp"
#include "a1lab/multi_poly.hpp"
#include "a1lab/uni_poly.hpp"

namespace a1lab {

enum class SigmaMode { Random, Special, Explicit };

/// How the boundary coefficients sigma_1..sigma_{p-1} are chosen.
struct BoundaryChoice {
    SigmaMode mode = SigmaMode::Special;
    std::uint64_t seed = 0;
    /// Explicit mode only: the full list sigma_1..sigma_{p-1}.
    std::vector<FieldElement> sigma;

    static BoundaryChoice random(std::uint64_t seed) { return {SigmaMode::Random, seed, {}}; }
    static BoundaryChoice special() { return {SigmaMode::Special, 0, {}}; }
    static BoundaryChoice explicit_list(std::vector<FieldElement> sigma) {
        return {SigmaMode::Explicit, 0, std::move(sigma)};
    }
};

/// The strange boundary curve sigma(x0, x1) - x2^p = 0 with sigma_1 = sigma_{p-1} = 1.
///
/// Coordinates are (x0, x1, x2); the strange point is (0:0:1). Construction checks the
/// normalization and the identities d/dx0 Delta = x1*P, d/dx1 Delta = -x0*P.
class BoundarySpec {
   public:
    /// Throws BadNormalization for an explicit list of the wrong length or with
    /// sigma_1 != 1 or sigma_{p-1} != 1.
    static BoundarySpec make(Field field, const BoundaryChoice& choice);

    Field field() const noexcept { return field_; }
    std::uint64_t p() const noexcept { return field_.characteristic(); }
    SigmaMode mode() const noexcept { return mode_; }
    /// True when every sigma_i equals 1 (the special curve).
    bool is_special() const noexcept;

    /// sigma_i for 0 <= i <= p (sigma_0 = sigma_p = 0).
    const FieldElement& sigma(std::size_t i) const { return sigma_.at(i); }
    const FieldElement& sigma_root(std::size_t i) const { return sigma_root_.at(i); }

    /// Delta in (x0, x1, x2).
    const MultiPoly& delta() const noexcept { return delta_; }
    /// sigma(x0, x1) in two variables.
    const MultiPoly& sigma_form() const noexcept { return sigma_form_; }
    /// P(x0, x1) = sum_i i*sigma_i x0^(i-1) x1^(p-i-1), homogeneous of degree p-2.
    const MultiPoly& sing_poly() const noexcept { return sing_poly_; }

    /// "p;k;sigma=s_2,...,s_{p-2}" with element encodings.
    std::string serialize() const;
    /// Inverse of serialize() for a matching field; throws BadEncoding or BadNormalization.
    static BoundarySpec parse(Field field, const std::string& text);

   private:
    BoundarySpec(Field field, SigmaMode mode, std::vector<FieldElement> sigma);

    Field field_;
    SigmaMode mode_;
    std::vector<FieldElement> sigma_;
    std::vector<FieldElement> sigma_root_;
    MultiPoly delta_;
    MultiPoly sigma_form_;
    MultiPoly sing_poly_;
};

/// sigma(A, B) = sum sigma_i A^i B^(p-i).
UniPoly sigma_eval(const BoundarySpec& spec, const UniPoly& a, const UniPoly& b);
/// sigma^(1/p)(V, W) = sum sigma_i^(1/p) V^i W^(p-i).
UniPoly sigma_root_eval(const BoundarySpec& spec, const UniPoly& v, const UniPoly& w);
FieldElement sigma_root_eval(const BoundarySpec& spec, const FieldElement& v, const FieldElement& w);

/// Checks sigma(z0^p, z1^p) - (sigma^(1/p)(z0, z1) - z2)^p == z2^p in k[z0, z1, z2] by full
/// expansion. Throws IdentityFailure with the residual.
Certificate frobenius_factorization_check(const BoundarySpec& spec);

struct BoundaryCuspCensus {
    MultiPoly sing_poly;
    std::size_t count = 0;
    bool separable = false;
};

/// Distinct projective roots of P, i.e. the number of singular points of the boundary.
BoundaryCuspCensus boundary_cusp_census(const BoundarySpec& spec);

/// For the special curve and linear V, W: d/dt sigma0(V, W) == -pi^(1/p) (V - W)^(p-2)
/// with pi = b1 c0 - b0 c1 and b_j, c_j the p-th powers of the coefficients of V, W.
/// Throws IdentityFailure (also when the preconditions fail).
Certificate sigma0_derivative_check(const BoundarySpec& spec, const UniPoly& v, const UniPoly& w);

}  // namespace a1lab

#endif
