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

#include "a1lab/multi_poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "a1lab/error.hpp"

namespace a1lab {

Monomial::Monomial(std::initializer_list<std::uint16_t> e) {
    if (e.size() > kMaxVariables) throw Error(ErrorCode::ArityMismatch, "too many exponents");
    std::copy(e.begin(), e.end(), exps.begin());
}

unsigned Monomial::total_degree() const noexcept {
    unsigned s = 0;
    for (auto e : exps) s += e;
    return s;
}

bool Monomial::divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < kMaxVariables; ++i)
        if (exps[i] > other.exps[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        const unsigned e = unsigned{exps[i]} + other.exps[i];
        if (e > 0xffff) throw Error(ErrorCode::Overflow, "monomial exponent overflow");
        out.exps[i] = static_cast<std::uint16_t>(e);
    }
    return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
    Monomial out;
    for (std::size_t i = 0; i < kMaxVariables; ++i) out.exps[i] = static_cast<std::uint16_t>(exps[i] - other.exps[i]);
    return out;
}

bool grlex_less(const Monomial& a, const Monomial& b) noexcept {
    const unsigned da = a.total_degree();
    const unsigned db = b.total_degree();
    if (da != db) return da < db;
    return a.exps < b.exps;
}

namespace {

void check_compatible(const MultiPoly& a, const MultiPoly& b) {
    if (!(a.field() == b.field())) throw Error(ErrorCode::MixedFields, "polynomials over different fields");
    if (a.arity() != b.arity()) {
        throw Error(ErrorCode::ArityMismatch,
                    "arity " + std::to_string(a.arity()) + " vs " + std::to_string(b.arity()));
    }
}

bool term_less(const Term& a, const Term& b) { return grlex_less(a.monomial, b.monomial); }

// Sorts by monomial, merges equal monomials and drops zero coefficients.
void canonicalize(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(), term_less);
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        Term acc = terms[i];
        std::size_t j = i + 1;
        while (j < terms.size() && terms[j].monomial == acc.monomial) acc.coeff += terms[j++].coeff;
        if (!acc.coeff.is_zero()) terms[out++] = acc;
        i = j;
    }
    terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(out), terms.end());
}

}  // namespace

MultiPoly::MultiPoly(Field field, std::size_t arity) : field_(field), arity_(arity) {
    if (arity > kMaxVariables) throw Error(ErrorCode::ArityMismatch, "at most 8 variables are supported");
}

MultiPoly MultiPoly::constant(Field field, std::size_t arity, const FieldElement& c) {
    return term(field, arity, Monomial{}, c);
}

MultiPoly MultiPoly::variable(Field field, std::size_t arity, std::size_t index) {
    if (index >= arity) throw Error(ErrorCode::ArityMismatch, "variable index out of range");
    Monomial m;
    m.exps[index] = 1;
    return term(field, arity, m, field.one());
}

MultiPoly MultiPoly::term(Field field, std::size_t arity, const Monomial& m, const FieldElement& c) {
    MultiPoly out(field, arity);
    for (std::size_t i = arity; i < kMaxVariables; ++i)
        if (m.exps[i] != 0) throw Error(ErrorCode::ArityMismatch, "monomial uses a variable beyond the arity");
    if (!c.is_zero()) out.terms_.push_back({m, c});
    return out;
}

MultiPoly MultiPoly::from_terms(Field field, std::size_t arity, std::vector<Term> terms) {
    MultiPoly out(field, arity);
    for (const auto& t : terms) {
        for (std::size_t i = arity; i < kMaxVariables; ++i)
            if (t.monomial.exps[i] != 0) throw Error(ErrorCode::ArityMismatch, "monomial uses a variable beyond the arity");
    }
    canonicalize(terms);
    out.terms_ = std::move(terms);
    return out;
}

bool MultiPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.total_degree() == 0);
}

FieldElement MultiPoly::coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& x) { return grlex_less(t.monomial, x); });
    if (it != terms_.end() && it->monomial == m) return it->coeff;
    return field_.zero();
}

const Term& MultiPoly::leading_term() const {
    if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading term of zero");
    return terms_.back();
}

std::optional<unsigned> MultiPoly::total_degree() const noexcept {
    if (terms_.empty()) return std::nullopt;
    return terms_.back().monomial.total_degree();
}

std::optional<unsigned> MultiPoly::min_degree() const noexcept {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().monomial.total_degree();
}

unsigned MultiPoly::degree_in(std::size_t var) const noexcept {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max<unsigned>(d, t.monomial.exps[var]);
    return d;
}

bool MultiPoly::is_homogeneous() const noexcept {
    return terms_.empty() || *min_degree() == *total_degree();
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
    check_compatible(*this, rhs);
    MultiPoly out(field_, arity_);
    out.terms_.reserve(terms_.size() + rhs.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < rhs.terms_.size()) {
        if (j == rhs.terms_.size() || (i < terms_.size() && term_less(terms_[i], rhs.terms_[j]))) {
            out.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || term_less(rhs.terms_[j], terms_[i])) {
            out.terms_.push_back(rhs.terms_[j++]);
        } else {
            const FieldElement c = terms_[i].coeff + rhs.terms_[j].coeff;
            if (!c.is_zero()) out.terms_.push_back({terms_[i].monomial, c});
            ++i;
            ++j;
        }
    }
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(*this);
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const { return *this + (-rhs); }

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
    check_compatible(*this, rhs);
    MultiPoly out(field_, arity_);
    if (is_zero() || rhs.is_zero()) return out;
    out.terms_.reserve(terms_.size() * rhs.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : rhs.terms_) out.terms_.push_back({a.monomial * b.monomial, a.coeff * b.coeff});
    canonicalize(out.terms_);
    return out;
}

MultiPoly MultiPoly::operator*(const FieldElement& c) const {
    MultiPoly out(field_, arity_);
    if (c.is_zero()) return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
}

MultiPoly MultiPoly::pow(unsigned n) const {
    MultiPoly result = constant(field_, arity_, field_.one());
    MultiPoly base = *this;
    while (n) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

MultiPoly MultiPoly::partial_derivative(std::size_t var) const {
    if (var >= arity_) throw Error(ErrorCode::ArityMismatch, "derivative variable out of range");
    std::vector<Term> out;
    const auto p = field_.characteristic();
    for (const auto& t : terms_) {
        const unsigned e = t.monomial.exps[var];
        if (e % p == 0) continue;
        Term d = t;
        d.monomial.exps[var] = static_cast<std::uint16_t>(e - 1);
        d.coeff = t.coeff * field_.from_int(static_cast<std::int64_t>(e % p));
        out.push_back(d);
    }
    return from_terms(field_, arity_, std::move(out));
}

FieldElement MultiPoly::eval(std::span<const FieldElement> point) const {
    if (point.size() != arity_) {
        throw Error(ErrorCode::ArityMismatch,
                    "evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                        std::to_string(arity_));
    }
    FieldElement acc = field_.zero();
    for (const auto& t : terms_) {
        FieldElement v = t.coeff;
        for (std::size_t i = 0; i < arity_; ++i)
            if (t.monomial.exps[i]) v *= point[i].pow(t.monomial.exps[i]);
        acc += v;
    }
    return acc;
}

MultiPoly MultiPoly::specialize(std::size_t var, const FieldElement& value) const {
    if (var >= arity_) throw Error(ErrorCode::ArityMismatch, "specialized variable out of range");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term s = t;
        s.coeff *= value.pow(t.monomial.exps[var]);
        s.monomial.exps[var] = 0;
        out.push_back(s);
    }
    return from_terms(field_, arity_, std::move(out));
}

MultiPoly MultiPoly::lowest_part() const {
    if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "lowest part of zero");
    MultiPoly out(field_, arity_);
    const unsigned low = *min_degree();
    for (const auto& t : terms_) {
        if (t.monomial.total_degree() != low) break;
        out.terms_.push_back(t);
    }
    return out;
}

MultiPoly MultiPoly::embed(std::size_t new_arity, std::span<const std::size_t> var_map) const {
    if (var_map.size() != arity_) throw Error(ErrorCode::ArityMismatch, "variable map has the wrong length");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term e{Monomial{}, t.coeff};
        for (std::size_t i = 0; i < arity_; ++i) {
            if (var_map[i] >= new_arity) throw Error(ErrorCode::ArityMismatch, "variable map out of range");
            e.monomial.exps[var_map[i]] = static_cast<std::uint16_t>(e.monomial.exps[var_map[i]] + t.monomial.exps[i]);
        }
        out.push_back(e);
    }
    return from_terms(field_, new_arity, std::move(out));
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t k = terms_.size(); k-- > 0;) {
        const Term& t = terms_[k];
        if (k + 1 != terms_.size()) os << " + ";
        const bool unit = t.monomial.total_degree() == 0;
        if (unit || !t.coeff.is_one()) os << t.coeff;
        bool first = unit || !t.coeff.is_one() ? false : true;
        for (std::size_t i = 0; i < arity_; ++i) {
            const unsigned e = t.monomial.exps[i];
            if (!e) continue;
            if (!first) os << "*";
            first = false;
            if (i < names.size()) {
                os << names[i];
            } else {
                os << "x" << i;
            }
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

UniPoly pullback(const MultiPoly& f, std::span<const UniPoly> subs) {
    if (subs.size() != f.arity()) {
        throw Error(ErrorCode::ArityMismatch,
                    "pullback needs " + std::to_string(f.arity()) + " substitutions, got " + std::to_string(subs.size()));
    }
    const Field field = f.field();
    // Powers of each substitution, cached.
    std::vector<std::map<unsigned, UniPoly>> powers(f.arity());
    auto power = [&](std::size_t var, unsigned e) -> const UniPoly& {
        auto it = powers[var].find(e);
        if (it == powers[var].end()) it = powers[var].emplace(e, subs[var].pow(e)).first;
        return it->second;
    };
    UniPoly acc(field);
    for (const auto& t : f.terms()) {
        UniPoly v = UniPoly::constant(t.coeff);
        for (std::size_t i = 0; i < f.arity(); ++i)
            if (t.monomial.exps[i]) v *= power(i, t.monomial.exps[i]);
        acc += v;
    }
    return acc;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
    check_compatible(f, g);
    const Field field = f.field();
    const Term& lead = g.leading_term();
    const FieldElement inv = lead.coeff.inverse();
    MultiPoly remainder = f;
    std::vector<Term> quotient;
    while (!remainder.is_zero()) {
        const Term& top = remainder.leading_term();
        if (!lead.monomial.divides(top.monomial)) return std::nullopt;
        const Term q{top.monomial / lead.monomial, top.coeff * inv};
        quotient.push_back(q);
        remainder -= g * MultiPoly::term(field, f.arity(), q.monomial, q.coeff);
    }
    return MultiPoly::from_terms(field, f.arity(), std::move(quotient));
}

UniPoly to_univariate(const MultiPoly& f, std::size_t var) {
    const Field field = f.field();
    std::vector<FieldElement> coeffs;
    for (const auto& t : f.terms()) {
        for (std::size_t i = 0; i < f.arity(); ++i) {
            if (i != var && t.monomial.exps[i] != 0) {
                throw Error(ErrorCode::IdentityFailure, "polynomial is not univariate in x" + std::to_string(var));
            }
        }
        const unsigned e = t.monomial.exps[var];
        if (coeffs.size() <= e) coeffs.resize(e + 1, field.zero());
        coeffs[e] += t.coeff;
    }
    return UniPoly(field, std::move(coeffs));
}

std::size_t projective_root_count(const MultiPoly& form, std::size_t i, std::size_t j) {
    if (form.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of the zero form");
    const unsigned deg = *form.total_degree();
    // Chart x_j = 1 sees every root except (1:0); that one is present iff the degree drops.
    const UniPoly affine = to_univariate(form.specialize(j, form.field().one()), i);
    const std::size_t at_infinity = *affine.degree() < deg ? 1 : 0;
    return distinct_root_count(affine) + at_infinity;
}

}  // namespace a1lab
