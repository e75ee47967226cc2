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

#ifndef A1LAB_MULTI_POLY_HPP
#define A1LAB_MULTI_POLY_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "a1lab/finite_field.hpp"
#include "a1lab/uni_poly.hpp"

namespace a1lab {

inline constexpr std::size_t kMaxVariables = 8;

/// Exponent vector; entries past the owning polynomial's arity are always zero.
struct Monomial {
    std::array<std::uint16_t, kMaxVariables> exps{};

    Monomial() = default;
    Monomial(std::initializer_list<std::uint16_t> e);

    unsigned total_degree() const noexcept;
    bool divides(const Monomial& other) const noexcept;
    Monomial operator*(const Monomial& other) const;
    /// Requires divides(other) to hold in the reverse direction (other | *this).
    Monomial operator/(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lex: total degree first, then lexicographic with x0 > x1 > ...
bool grlex_less(const Monomial& a, const Monomial& b) noexcept;

struct Term {
    Monomial monomial;
    FieldElement coeff;
    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in a fixed number of variables over GF(p^k).
///
/// Terms are kept sorted by ascending graded-lex order with no zero coefficients, so
/// equality is term-list equality and the leading term is terms().back().
class MultiPoly {
   public:
    MultiPoly(Field field, std::size_t arity);

    static MultiPoly constant(Field field, std::size_t arity, const FieldElement& c);
    static MultiPoly variable(Field field, std::size_t arity, std::size_t index);
    static MultiPoly term(Field field, std::size_t arity, const Monomial& m, const FieldElement& c);
    /// Combines duplicates and drops zeros.
    static MultiPoly from_terms(Field field, std::size_t arity, std::vector<Term> terms);

    Field field() const noexcept { return field_; }
    std::size_t arity() const noexcept { return arity_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    FieldElement coeff(const Monomial& m) const;
    const Term& leading_term() const;

    std::optional<unsigned> total_degree() const noexcept;
    std::optional<unsigned> min_degree() const noexcept;
    unsigned degree_in(std::size_t var) const noexcept;
    bool is_homogeneous() const noexcept;

    MultiPoly operator+(const MultiPoly& rhs) const;
    MultiPoly operator-(const MultiPoly& rhs) const;
    MultiPoly operator*(const MultiPoly& rhs) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const FieldElement& c) const;
    MultiPoly& operator+=(const MultiPoly& rhs) { return *this = *this + rhs; }
    MultiPoly& operator-=(const MultiPoly& rhs) { return *this = *this - rhs; }
    MultiPoly& operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

    MultiPoly pow(unsigned n) const;
    /// Formal partial derivative in variable `var`.
    MultiPoly partial_derivative(std::size_t var) const;
    /// Throws ArityMismatch unless point.size() == arity().
    FieldElement eval(std::span<const FieldElement> point) const;
    /// Substitutes a constant for one variable; the arity is unchanged.
    MultiPoly specialize(std::size_t var, const FieldElement& value) const;
    /// Sum of the terms of minimal total degree. Throws ZeroPolynomial.
    MultiPoly lowest_part() const;
    /// Reinterprets the polynomial in a larger ring, variable i mapping to var_map[i].
    MultiPoly embed(std::size_t new_arity, std::span<const std::size_t> var_map) const;

    std::string to_string(std::span<const std::string> names = {}) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) noexcept {
        return a.field_ == b.field_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

   private:
    Field field_;
    std::size_t arity_;
    std::vector<Term> terms_;
};

inline MultiPoly operator*(const FieldElement& c, const MultiPoly& f) { return f * c; }

/// F(subs_0(t), ..., subs_{n-1}(t)). Throws ArityMismatch.
UniPoly pullback(const MultiPoly& f, std::span<const UniPoly> subs);

/// Quotient Q with F = Q*G when G divides F, via graded-lex reduction by the single divisor G.
/// Throws ZeroPolynomial for G = 0.
std::optional<MultiPoly> divide_exact(const MultiPoly& f, const MultiPoly& g);
inline bool divides(const MultiPoly& g, const MultiPoly& f) { return divide_exact(f, g).has_value(); }

/// F restricted to variable `var` once every other variable is specialized away; throws
/// IdentityFailure if another variable still appears.
UniPoly to_univariate(const MultiPoly& f, std::size_t var);

/// Number of distinct points of P^1 where a nonzero binary form in variables (i, j) vanishes.
std::size_t projective_root_count(const MultiPoly& form, std::size_t i, std::size_t j);

}  // namespace a1lab

#endif
