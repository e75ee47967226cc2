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

#ifndef A1LAB_UNI_POLY_HPP
#define A1LAB_UNI_POLY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "a1lab/finite_field.hpp"

namespace a1lab {

/// Dense univariate polynomial over GF(p^k); coefficient i multiplies t^i.
///
/// Always canonical: the coefficient vector is empty for 0 and otherwise ends in a
/// nonzero entry. The zero polynomial has no degree (degree() == nullopt).
class UniPoly {
   public:
    explicit UniPoly(Field field) : field_(field) {}
    UniPoly(Field field, std::vector<FieldElement> coeffs);

    static UniPoly constant(const FieldElement& c);
    static UniPoly monomial(const FieldElement& c, std::size_t exponent);
    /// t
    static UniPoly variable(Field field);
    /// prod_i (t + shifts_i); the constant 1 for an empty list.
    static UniPoly from_shifts(Field field, std::span<const FieldElement> shifts);

    Field field() const noexcept { return field_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const noexcept;
    std::span<const FieldElement> coeffs() const noexcept { return coeffs_; }
    /// Zero past the degree.
    FieldElement coeff(std::size_t i) const;
    FieldElement leading() const;

    FieldElement eval(const FieldElement& x) const;

    UniPoly operator+(const UniPoly& rhs) const;
    UniPoly operator-(const UniPoly& rhs) const;
    UniPoly operator*(const UniPoly& rhs) const;
    UniPoly operator-() const;
    UniPoly operator*(const FieldElement& c) const;
    UniPoly& operator+=(const UniPoly& rhs) { return *this = *this + rhs; }
    UniPoly& operator-=(const UniPoly& rhs) { return *this = *this - rhs; }
    UniPoly& operator*=(const UniPoly& rhs) { return *this = *this * rhs; }

    UniPoly pow(unsigned n) const;
    /// Scaled to leading coefficient 1; zero stays zero.
    UniPoly monic() const;
    /// Formal derivative; coefficients i*c_i reduced mod p.
    UniPoly derivative() const;
    /// f(lambda*t + c). Throws ZeroScale for lambda = 0.
    UniPoly compose_affine(const FieldElement& lambda, const FieldElement& c) const;
    /// f(g(t)).
    UniPoly compose(const UniPoly& g) const;

    /// Coefficientwise Frobenius / p-th root.
    UniPoly frobenius_coeffs() const;
    UniPoly pth_root_coeffs() const;
    /// True iff every exponent in the support is divisible by p.
    bool in_frobenius_image() const;
    /// For f = g(t^p) returns g; throws IdentityFailure if f is not of that form.
    UniPoly deflate() const;

    std::string to_string() const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

   private:
    void normalize();
    Field field_;
    std::vector<FieldElement> coeffs_;
};

inline UniPoly operator*(const FieldElement& c, const UniPoly& f) { return f * c; }

struct DivRem {
    UniPoly quotient;
    UniPoly remainder;
};

/// Euclidean division f = q*g + r with deg r < deg g. Throws DivisionByZero for g = 0.
DivRem divrem(const UniPoly& f, const UniPoly& g);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& f, const UniPoly& g);
/// base^e mod modulus.
UniPoly powmod(const UniPoly& base, std::uint64_t e, const UniPoly& modulus);

/// Product of the distinct monic irreducible factors of f (its radical), computed with the
/// characteristic-p squarefree algorithm. Throws ZeroPolynomial.
UniPoly squarefree_part(const UniPoly& f);
/// Number of distinct roots in the algebraic closure (degree of the radical).
std::size_t distinct_root_count(const UniPoly& f);

enum class RootSearch {
    /// Exhaustive evaluation for p^k <= 2^16, otherwise gcd with t^q - t and random splitting.
    Automatic,
    /// Exhaustive only; throws FieldTooLarge past 2^16 elements.
    ExhaustiveOnly,
};

/// Distinct roots lying in the base field, sorted by encoding. Throws ZeroPolynomial.
std::vector<FieldElement> roots_in_field(const UniPoly& f, RootSearch mode = RootSearch::Automatic);

/// Unique polynomial of degree < n through (nodes_i, values_i); nodes must be distinct.
UniPoly lagrange_interpolate(std::span<const FieldElement> nodes, std::span<const FieldElement> values);

}  // namespace a1lab

#endif
