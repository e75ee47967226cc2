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

#include "a1lab/resultant.hpp"

#include <utility>

#include "a1lab/error.hpp"

namespace a1lab {

RingUniPoly::RingUniPoly(Field field, std::size_t arity, std::vector<MultiPoly> coeffs)
    : field_(field), arity_(arity), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) {
        if (c.arity() != arity_) throw Error(ErrorCode::ArityMismatch, "coefficient arity differs from the ring");
        if (!(c.field() == field_)) throw Error(ErrorCode::MixedFields, "coefficient from a different field");
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> RingUniPoly::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m) {
    const std::size_t n = m.size();
    if (n == 0) throw Error(ErrorCode::DegenerateDegrees, "determinant of an empty matrix");
    const Field field = m[0][0].field();
    const std::size_t arity = m[0][0].arity();
    bool negate = false;
    MultiPoly previous = MultiPoly::constant(field, arity, field.one());
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return MultiPoly(field, arity);
            std::swap(m[k], m[pivot]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly numerator = m[k][k] * m[i][j];
                if (!m[i][k].is_zero()) numerator -= m[i][k] * m[k][j];
                auto quotient = divide_exact(numerator, previous);
                if (!quotient) throw Error(ErrorCode::IdentityFailure, "Bareiss step is not an exact division");
                m[i][j] = std::move(*quotient);
            }
            m[i][k] = MultiPoly(field, arity);
        }
        previous = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

MultiPoly sylvester_resultant(const RingUniPoly& a, const RingUniPoly& b) {
    if (!a.degree() || !b.degree() || *a.degree() == 0 || *b.degree() == 0) {
        throw Error(ErrorCode::DegenerateDegrees, "resultant needs positive t-degrees");
    }
    if (!(a.field() == b.field()) || a.arity() != b.arity()) {
        throw Error(ErrorCode::ArityMismatch, "resultant operands live in different rings");
    }
    const std::size_t da = *a.degree();
    const std::size_t db = *b.degree();
    const std::size_t n = da + db;
    const MultiPoly zero(a.field(), a.arity());
    std::vector<std::vector<MultiPoly>> matrix(n, std::vector<MultiPoly>(n, zero));
    // Row r of the A block holds A's coefficients from the top degree down, shifted by r.
    for (std::size_t r = 0; r < db; ++r)
        for (std::size_t i = 0; i <= da; ++i) matrix[r][r + i] = a.coeffs()[da - i];
    for (std::size_t r = 0; r < da; ++r)
        for (std::size_t i = 0; i <= db; ++i) matrix[db + r][r + i] = b.coeffs()[db - i];
    return bareiss_determinant(std::move(matrix));
}

}  // namespace a1lab
