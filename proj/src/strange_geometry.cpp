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

#include "a1lab/strange_geometry.hpp"

#include <sstream>

#include "a1lab/error.hpp"

namespace a1lab {

namespace {

constexpr std::size_t kX0 = 0, kX1 = 1, kX2 = 2;

Monomial mono(std::uint16_t e0, std::uint16_t e1, std::uint16_t e2 = 0) { return Monomial{e0, e1, e2}; }

}  // namespace

BoundarySpec::BoundarySpec(Field field, SigmaMode mode, std::vector<FieldElement> sigma)
    : field_(field),
      mode_(mode),
      sigma_(std::move(sigma)),
      delta_(field, 3),
      sigma_form_(field, 2),
      sing_poly_(field, 2) {
    const auto p = field_.characteristic();
    const auto pp = static_cast<std::uint16_t>(p);
    sigma_root_.reserve(sigma_.size());
    for (const auto& s : sigma_) sigma_root_.push_back(s.pth_root());

    std::vector<Term> sigma_terms, p_terms;
    for (std::size_t i = 1; i < p; ++i) {
        const auto ii = static_cast<std::uint16_t>(i);
        sigma_terms.push_back({mono(ii, static_cast<std::uint16_t>(p - i)), sigma_[i]});
        p_terms.push_back({mono(static_cast<std::uint16_t>(i - 1), static_cast<std::uint16_t>(p - i - 1)),
                           sigma_[i] * field_.from_int(static_cast<std::int64_t>(i))});
    }
    sigma_form_ = MultiPoly::from_terms(field_, 2, std::move(sigma_terms));
    sing_poly_ = MultiPoly::from_terms(field_, 2, std::move(p_terms));
    const std::size_t to3[] = {kX0, kX1};
    delta_ = sigma_form_.embed(3, to3) - MultiPoly::term(field_, 3, mono(0, 0, pp), field_.one());

    const MultiPoly x0 = MultiPoly::variable(field_, 3, kX0);
    const MultiPoly x1 = MultiPoly::variable(field_, 3, kX1);
    const MultiPoly p3 = sing_poly_.embed(3, to3);
    if (delta_.partial_derivative(kX0) != x1 * p3 || delta_.partial_derivative(kX1) != -(x0 * p3)) {
        throw Error(ErrorCode::IdentityFailure, "partial derivatives of Delta do not factor through P");
    }
}

BoundarySpec BoundarySpec::make(Field field, const BoundaryChoice& choice) {
    const auto p = field.characteristic();
    std::vector<FieldElement> sigma(p + 1, field.zero());
    switch (choice.mode) {
        case SigmaMode::Special:
            for (std::size_t i = 1; i < p; ++i) sigma[i] = field.one();
            break;
        case SigmaMode::Random: {
            Rng rng(choice.seed);
            sigma[1] = field.one();
            sigma[p - 1] = field.one();
            for (std::size_t i = 2; i + 1 < p; ++i) sigma[i] = field.sample(rng);
            break;
        }
        case SigmaMode::Explicit: {
            if (choice.sigma.size() != p - 1) {
                throw Error(ErrorCode::BadNormalization, "expected " + std::to_string(p - 1) + " coefficients, got " +
                                                             std::to_string(choice.sigma.size()));
            }
            for (std::size_t i = 1; i < p; ++i) {
                if (!(choice.sigma[i - 1].field() == field)) {
                    throw Error(ErrorCode::MixedFields, "boundary coefficient from a different field");
                }
                sigma[i] = choice.sigma[i - 1];
            }
            if (!sigma[1].is_one() || !sigma[p - 1].is_one()) {
                throw Error(ErrorCode::BadNormalization, "sigma_1 and sigma_{p-1} must both equal 1");
            }
            break;
        }
    }
    return BoundarySpec(field, choice.mode, std::move(sigma));
}

bool BoundarySpec::is_special() const noexcept {
    for (std::size_t i = 1; i < p(); ++i)
        if (!sigma_[i].is_one()) return false;
    return true;
}

std::string BoundarySpec::serialize() const {
    std::ostringstream os;
    os << p() << ";" << field_.degree() << ";sigma=";
    for (std::size_t i = 2; i + 1 < p(); ++i) os << (i > 2 ? "," : "") << sigma_[i].encoding();
    return os.str();
}

BoundarySpec BoundarySpec::parse(Field field, const std::string& text) {
    std::istringstream is(text);
    std::string p_text, k_text, rest;
    if (!std::getline(is, p_text, ';') || !std::getline(is, k_text, ';') || !std::getline(is, rest) ||
        rest.rfind("sigma=", 0) != 0) {
        throw Error(ErrorCode::BadEncoding, "malformed boundary string '" + text + "'");
    }
    try {
        if (std::stoull(p_text) != field.characteristic() || std::stoul(k_text) != field.degree()) {
            throw Error(ErrorCode::BadEncoding, "boundary string does not match " + field.header());
        }
    } catch (const std::logic_error&) {
        throw Error(ErrorCode::BadEncoding, "malformed boundary string '" + text + "'");
    }
    std::vector<FieldElement> sigma{field.one()};
    std::istringstream list(rest.substr(6));
    std::string item;
    while (std::getline(list, item, ',')) {
        try {
            sigma.push_back(field.from_encoding(std::stoull(item)));
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::BadEncoding, "bad element encoding '" + item + "'");
        }
    }
    if (field.characteristic() > 2) sigma.push_back(field.one());
    return make(field, BoundaryChoice::explicit_list(std::move(sigma)));
}

UniPoly sigma_eval(const BoundarySpec& spec, const UniPoly& a, const UniPoly& b) {
    const auto p = spec.p();
    UniPoly acc(spec.field());
    for (std::size_t i = 1; i < p; ++i) {
        if (spec.sigma(i).is_zero()) continue;
        acc += a.pow(static_cast<unsigned>(i)) * b.pow(static_cast<unsigned>(p - i)) * spec.sigma(i);
    }
    return acc;
}

UniPoly sigma_root_eval(const BoundarySpec& spec, const UniPoly& v, const UniPoly& w) {
    const auto p = spec.p();
    UniPoly acc(spec.field());
    for (std::size_t i = 1; i < p; ++i) {
        if (spec.sigma_root(i).is_zero()) continue;
        acc += v.pow(static_cast<unsigned>(i)) * w.pow(static_cast<unsigned>(p - i)) * spec.sigma_root(i);
    }
    return acc;
}

FieldElement sigma_root_eval(const BoundarySpec& spec, const FieldElement& v, const FieldElement& w) {
    const auto p = spec.p();
    FieldElement acc = spec.field().zero();
    for (std::size_t i = 1; i < p; ++i) acc += spec.sigma_root(i) * v.pow(i) * w.pow(p - i);
    return acc;
}

Certificate frobenius_factorization_check(const BoundarySpec& spec) {
    const Field f = spec.field();
    const auto p = static_cast<unsigned>(spec.p());
    const MultiPoly z0 = MultiPoly::variable(f, 3, kX0);
    const MultiPoly z1 = MultiPoly::variable(f, 3, kX1);
    const MultiPoly z2 = MultiPoly::variable(f, 3, kX2);
    MultiPoly sigma_of_powers(f, 3);
    MultiPoly root_form(f, 3);
    for (unsigned i = 1; i < p; ++i) {
        sigma_of_powers += z0.pow(i * p) * z1.pow((p - i) * p) * spec.sigma(i);
        root_form += z0.pow(i) * z1.pow(p - i) * spec.sigma_root(i);
    }
    const MultiPoly lhs = sigma_of_powers - (root_form - z2).pow(p);
    const MultiPoly rhs = z2.pow(p);
    if (lhs != rhs) {
        throw Error(ErrorCode::IdentityFailure, "Frobenius factorization residual " + (lhs - rhs).to_string());
    }
    return {"frobenius_factorization", true, "sigma(z0^p,z1^p) - (sigma^(1/p)(z0,z1) - z2)^p = z2^p"};
}

BoundaryCuspCensus boundary_cusp_census(const BoundarySpec& spec) {
    BoundaryCuspCensus out{spec.sing_poly(), 0, true};
    const auto p = spec.p();
    if (p == 2) return out;
    out.count = projective_root_count(spec.sing_poly(), 0, 1);
    out.separable = out.count == p - 2;
    return out;
}

Certificate sigma0_derivative_check(const BoundarySpec& spec, const UniPoly& v, const UniPoly& w) {
    if (!spec.is_special()) throw Error(ErrorCode::IdentityFailure, "sigma0 derivative check needs the special curve");
    if (v.degree().value_or(0) > 1 || w.degree().value_or(0) > 1) {
        throw Error(ErrorCode::IdentityFailure, "sigma0 derivative check needs linear V and W");
    }
    const auto p = static_cast<unsigned>(spec.p());
    const FieldElement b0 = v.coeff(0).frobenius(), b1 = v.coeff(1).frobenius();
    const FieldElement c0 = w.coeff(0).frobenius(), c1 = w.coeff(1).frobenius();
    const FieldElement pi = b1 * c0 - b0 * c1;
    const UniPoly lhs = sigma_root_eval(spec, v, w).derivative();
    const UniPoly rhs = (v - w).pow(p - 2) * (-pi.pth_root());
    if (lhs != rhs) {
        throw Error(ErrorCode::IdentityFailure,
                    "sigma0' = " + lhs.to_string() + " but -pi^(1/p)(V-W)^(p-2) = " + rhs.to_string());
    }
    return {"sigma0_derivative", true, "sigma0'(t) = -pi^(1/p) (V-W)^(p-2)"};
}

}  // namespace a1lab
