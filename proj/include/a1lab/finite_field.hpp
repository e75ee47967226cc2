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

#ifndef A1LAB_FINITE_FIELD_HPP
#define A1LAB_FINITE_FIELD_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "a1lab/rng.hpp"

namespace a1lab {

namespace detail {
struct FieldData;
}

class FieldElement;

/// Handle to an interned GF(p^k) descriptor.
///
/// Descriptors are created once per (p, modulus) and live for the whole process.
/// Elements are stored by their base-p encoding N = sum coords_i * p^i in the power basis of the
/// modulus; multiplication uses log/antilog tables when p^k <= 2^20.
class Field {
   public:
    /// GF(p^k) with a seeded, deterministic irreducible modulus (k = 1 uses modulus t).
    /// Throws NotPrime, Overflow (p^k > 2^63, k > 32 or p > 101).
    static Field create(std::uint64_t p, unsigned k, std::uint64_t seed);

    std::uint64_t characteristic() const noexcept;
    unsigned degree() const noexcept;
    /// p^k.
    std::uint64_t order() const noexcept;
    /// Monic modulus coefficients c0..ck over Z/p.
    std::span<const std::uint64_t> modulus() const noexcept;
    /// "GF(p^k);modulus=c0,...,ck"
    std::string header() const;

    FieldElement zero() const;
    FieldElement one() const;
    /// Image of an integer in the prime subfield.
    FieldElement from_int(std::int64_t value) const;
    /// Element with base-p encoding N; throws BadEncoding when N >= p^k.
    FieldElement from_encoding(std::uint64_t encoding) const;
    FieldElement from_coords(std::span<const std::uint64_t> coords) const;

    /// Every element in encoding order; intended for small fields only.
    std::vector<FieldElement> elements() const;

    FieldElement sample(Rng& rng) const;
    FieldElement sample_nonzero(Rng& rng) const;
    /// n pairwise-distinct elements (optionally all nonzero). Throws NotEnoughElements.
    std::vector<FieldElement> sample_distinct(std::size_t n, Rng& rng, bool nonzero = false) const;

    friend bool operator==(const Field& a, const Field& b) noexcept { return a.data_ == b.data_; }

   private:
    explicit Field(const detail::FieldData* data) : data_(data) {}
    const detail::FieldData* data_;
    friend class FieldElement;
};

class FieldElement {
   public:
    Field field() const noexcept { return Field(field_); }
    std::uint64_t encoding() const noexcept { return value_; }
    std::vector<std::uint64_t> coords() const;

    bool is_zero() const noexcept { return value_ == 0; }
    bool is_one() const noexcept;

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;
    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
    FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
    FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

    /// Throws DivisionByZero for zero.
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t exponent) const;
    /// x^p.
    FieldElement frobenius() const;
    /// Unique y with y^p = x, computed as x^(p^(k-1)).
    FieldElement pth_root() const;

    /// Elements of different fields never compare equal.
    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }
    /// Total order by encoding (fields compared first); used for deterministic sorting.
    friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) noexcept {
        if (a.field_ != b.field_) return std::less<const void*>{}(a.field_, b.field_) ? std::strong_ordering::less : std::strong_ordering::greater;
        return a.value_ <=> b.value_;
    }

   private:
    FieldElement(const detail::FieldData* field, std::uint64_t value) : field_(field), value_(value) {}
    void check_same(const FieldElement& rhs) const;

    const detail::FieldData* field_;
    std::uint64_t value_;
    friend class Field;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

/// Deterministic primality test for 64-bit integers.
bool is_prime(std::uint64_t n) noexcept;

}  // namespace a1lab

#endif
