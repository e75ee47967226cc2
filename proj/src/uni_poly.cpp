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

#include "a1lab/uni_poly.hpp"

#include <algorithm>
#include <sstream>

#include "a1lab/error.hpp"

namespace a1lab {

UniPoly::UniPoly(Field field, std::vector<FieldElement> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (!(c.field() == field_)) throw Error(ErrorCode::MixedFields, "coefficient from a different field");
    normalize();
}

void UniPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const FieldElement& c) { return UniPoly(c.field(), {c}); }

UniPoly UniPoly::monomial(const FieldElement& c, std::size_t exponent) {
    if (c.is_zero()) return UniPoly(c.field());
    std::vector<FieldElement> v(exponent + 1, c.field().zero());
    v[exponent] = c;
    return UniPoly(c.field(), std::move(v));
}

UniPoly UniPoly::variable(Field field) { return monomial(field.one(), 1); }

UniPoly UniPoly::from_shifts(Field field, std::span<const FieldElement> shifts) {
    UniPoly out = constant(field.one());
    for (const auto& a : shifts) out *= UniPoly(field, {a, field.one()});
    return out;
}

std::optional<std::size_t> UniPoly::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

FieldElement UniPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }

FieldElement UniPoly::leading() const {
    if (coeffs_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero");
    return coeffs_.back();
}

FieldElement UniPoly::eval(const FieldElement& x) const {
    FieldElement acc = field_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::operator+(const UniPoly& rhs) const {
    if (!(field_ == rhs.field_)) throw Error(ErrorCode::MixedFields, "polynomials over different fields");
    std::vector<FieldElement> v(std::max(coeffs_.size(), rhs.coeffs_.size()), field_.zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] += rhs.coeffs_[i];
    UniPoly out(field_);
    out.coeffs_ = std::move(v);
    out.normalize();
    return out;
}

UniPoly UniPoly::operator-() const {
    UniPoly out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

UniPoly UniPoly::operator-(const UniPoly& rhs) const { return *this + (-rhs); }

UniPoly UniPoly::operator*(const UniPoly& rhs) const {
    if (!(field_ == rhs.field_)) throw Error(ErrorCode::MixedFields, "polynomials over different fields");
    if (is_zero() || rhs.is_zero()) return UniPoly(field_);
    std::vector<FieldElement> v(coeffs_.size() + rhs.coeffs_.size() - 1, field_.zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    UniPoly out(field_);
    out.coeffs_ = std::move(v);
    out.normalize();
    return out;
}

UniPoly UniPoly::operator*(const FieldElement& c) const {
    UniPoly out(*this);
    for (auto& x : out.coeffs_) x *= c;
    out.normalize();
    return out;
}

UniPoly UniPoly::pow(unsigned n) const {
    UniPoly result = constant(field_.one());
    UniPoly base = *this;
    while (n) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly(field_);
    std::vector<FieldElement> v;
    v.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        v.push_back(coeffs_[i] * field_.from_int(static_cast<std::int64_t>(i % field_.characteristic())));
    return UniPoly(field_, std::move(v));
}

UniPoly UniPoly::compose_affine(const FieldElement& lambda, const FieldElement& c) const {
    if (lambda.is_zero()) throw Error(ErrorCode::ZeroScale, "affine substitution with zero scale");
    return compose(UniPoly(field_, {c, lambda}));
}

UniPoly UniPoly::compose(const UniPoly& g) const {
    UniPoly acc(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * g + constant(*it);
    return acc;
}

UniPoly UniPoly::frobenius_coeffs() const {
    UniPoly out(*this);
    for (auto& c : out.coeffs_) c = c.frobenius();
    return out;
}

UniPoly UniPoly::pth_root_coeffs() const {
    UniPoly out(*this);
    for (auto& c : out.coeffs_) c = c.pth_root();
    return out;
}

bool UniPoly::in_frobenius_image() const {
    const auto p = field_.characteristic();
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (i % p != 0 && !coeffs_[i].is_zero()) return false;
    return true;
}

UniPoly UniPoly::deflate() const {
    if (!in_frobenius_image()) throw Error(ErrorCode::IdentityFailure, "polynomial is not in k[t^p]: " + to_string());
    const auto p = field_.characteristic();
    std::vector<FieldElement> v;
    for (std::size_t i = 0; i < coeffs_.size(); i += p) v.push_back(coeffs_[i]);
    return UniPoly(field_, std::move(v));
}

std::string UniPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || !coeffs_[i].is_one()) os << coeffs_[i];
        if (i > 0) {
            if (!coeffs_[i].is_one()) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

DivRem divrem(const UniPoly& f, const UniPoly& g) {
    if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    const Field field = f.field();
    if (f.is_zero() || *f.degree() < *g.degree()) return {UniPoly(field), f};
    const std::size_t dg = *g.degree();
    const FieldElement inv = g.leading().inverse();
    std::vector<FieldElement> r(f.coeffs().begin(), f.coeffs().end());
    std::vector<FieldElement> q(r.size() - dg, field.zero());
    for (std::size_t i = r.size(); i-- > dg;) {
        if (r[i].is_zero()) continue;
        const FieldElement c = r[i] * inv;
        q[i - dg] = c;
        for (std::size_t j = 0; j <= dg; ++j) r[i - dg + j] -= c * g.coeffs()[j];
    }
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(dg), r.end());
    return {UniPoly(field, std::move(q)), UniPoly(field, std::move(r))};
}

UniPoly gcd(const UniPoly& f, const UniPoly& g) {
    UniPoly a = f;
    UniPoly b = g;
    while (!b.is_zero()) {
        UniPoly r = divrem(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UniPoly powmod(const UniPoly& base, std::uint64_t e, const UniPoly& modulus) {
    UniPoly result = divrem(UniPoly::constant(base.field().one()), modulus).remainder;
    UniPoly b = divrem(base, modulus).remainder;
    while (e) {
        if (e & 1) result = divrem(result * b, modulus).remainder;
        e >>= 1;
        if (e) b = divrem(b * b, modulus).remainder;
    }
    return result;
}

UniPoly squarefree_part(const UniPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "radical of the zero polynomial");
    const Field field = f.field();
    if (*f.degree() == 0) return UniPoly::constant(field.one());
    const UniPoly monic = f.monic();
    const UniPoly df = monic.derivative();
    if (df.is_zero()) {
        // f = g(t)^p with g obtained from coefficient p-th roots; rad f = rad g.
        return squarefree_part(monic.deflate().pth_root_coeffs());
    }
    const UniPoly g = gcd(monic, df);
    // Factors whose multiplicity is prime to p.
    const UniPoly coprime_part = divrem(monic, g).quotient;
    // Strip those factors from g; what remains has multiplicities divisible by p.
    UniPoly rest = g;
    for (;;) {
        const UniPoly common = gcd(rest, coprime_part);
        if (*common.degree() == 0) break;
        rest = divrem(rest, common).quotient;
    }
    if (*rest.degree() == 0) return coprime_part;
    return coprime_part * squarefree_part(rest);
}

std::size_t distinct_root_count(const UniPoly& f) { return *squarefree_part(f).degree(); }

namespace {

// g is monic, squarefree and splits into distinct linear factors over the base field.
void split_linear(const UniPoly& g, Rng& rng, std::vector<FieldElement>& out) {
    const std::size_t deg = *g.degree();
    if (deg == 0) return;
    if (deg == 1) {
        out.push_back(-g.coeff(0));
        return;
    }
    const Field field = g.field();
    const auto p = field.characteristic();
    const UniPoly t = UniPoly::variable(field);
    for (;;) {
        const FieldElement delta = field.sample(rng);
        UniPoly h(field);
        if (p == 2) {
            // Trace map Tr(delta*t) = sum_{i<k} (delta*t)^(2^i) mod g.
            UniPoly term = divrem(t * delta, g).remainder;
            h = term;
            for (unsigned i = 1; i < field.degree(); ++i) {
                term = divrem(term * term, g).remainder;
                h += term;
            }
        } else {
            h = powmod(t + UniPoly::constant(delta), (field.order() - 1) / 2, g) - UniPoly::constant(field.one());
        }
        const UniPoly d = gcd(g, h);
        if (d.is_zero() || *d.degree() == 0 || *d.degree() == deg) continue;
        split_linear(d, rng, out);
        split_linear(divrem(g, d).quotient, rng, out);
        return;
    }
}

}  // namespace

std::vector<FieldElement> roots_in_field(const UniPoly& f, RootSearch mode) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
    const Field field = f.field();
    std::vector<FieldElement> out;
    constexpr std::uint64_t kExhaustiveLimit = std::uint64_t{1} << 16;
    if (field.order() <= kExhaustiveLimit) {
        for (const auto& x : field.elements())
            if (f.eval(x).is_zero()) out.push_back(x);
        return out;
    }
    if (mode == RootSearch::ExhaustiveOnly) {
        throw Error(ErrorCode::FieldTooLarge, "exhaustive root search over " + field.header());
    }
    if (*f.degree() == 0) return out;
    const UniPoly t = UniPoly::variable(field);
    const UniPoly monic = f.monic();
    const UniPoly split = gcd(monic, powmod(t, field.order(), monic) - t);
    Rng rng(0x5eed);
    split_linear(split, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

UniPoly lagrange_interpolate(std::span<const FieldElement> nodes, std::span<const FieldElement> values) {
    if (nodes.size() != values.size() || nodes.empty()) {
        throw Error(ErrorCode::NotEnoughNodes, "interpolation needs matching, non-empty node and value lists");
    }
    const Field field = nodes.front().field();
    UniPoly result(field);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        UniPoly basis = UniPoly::constant(field.one());
        FieldElement denom = field.one();
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (i == j) continue;
            basis *= UniPoly(field, {-nodes[j], field.one()});
            denom *= nodes[i] - nodes[j];
        }
        if (denom.is_zero()) throw Error(ErrorCode::NotEnoughNodes, "interpolation nodes are not distinct");
        result += basis * (values[i] / denom);
    }
    return result;
}

}  // namespace a1lab
