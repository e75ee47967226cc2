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

#ifndef A1LAB_RESULTANT_HPP
#define A1LAB_RESULTANT_HPP

#include <optional>
#include <vector>

#include "a1lab/multi_poly.hpp"

namespace a1lab {

/// Polynomial in an elimination variable t whose coefficients are multivariate;
/// coeffs[i] multiplies t^i. Canonical: the last coefficient is nonzero.
class RingUniPoly {
   public:
    RingUniPoly(Field field, std::size_t arity, std::vector<MultiPoly> coeffs);

    Field field() const noexcept { return field_; }
    std::size_t arity() const noexcept { return arity_; }
    const std::vector<MultiPoly>& coeffs() const noexcept { return coeffs_; }
    std::optional<std::size_t> degree() const noexcept;

   private:
    Field field_;
    std::size_t arity_;
    std::vector<MultiPoly> coeffs_;
};

/// Determinant of a square matrix over the polynomial ring by fraction-free (Bareiss)
/// elimination with row pivoting.
MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> matrix);

/// Res_t(A, B) as the Sylvester determinant, rows of A first.
/// Throws DegenerateDegrees unless both t-degrees are at least 1.
MultiPoly sylvester_resultant(const RingUniPoly& a, const RingUniPoly& b);

}  // namespace a1lab

#endif
