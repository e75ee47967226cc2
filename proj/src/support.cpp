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

#include <array>
#include <limits>

#include "a1lab/error.hpp"
#include "a1lab/rng.hpp"

namespace a1lab {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::MixedFields: return "MixedFields";
        case ErrorCode::NotEnoughElements: return "NotEnoughElements";
        case ErrorCode::BadEncoding: return "BadEncoding";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::DegenerateDegrees: return "DegenerateDegrees";
        case ErrorCode::FieldTooLarge: return "FieldTooLarge";
        case ErrorCode::BadNormalization: return "BadNormalization";
        case ErrorCode::IdentityFailure: return "IdentityFailure";
        case ErrorCode::BadCongruence: return "BadCongruence";
        case ErrorCode::ZeroScale: return "ZeroScale";
        case ErrorCode::PointOnBoundary: return "PointOnBoundary";
        case ErrorCode::NotEnoughNodes: return "NotEnoughNodes";
        case ErrorCode::ConstantMap: return "ConstantMap";
        case ErrorCode::ClassificationMismatch: return "ClassificationMismatch";
        case ErrorCode::CertificateFailure: return "CertificateFailure";
        case ErrorCode::ConeMismatch: return "ConeMismatch";
        case ErrorCode::GenericityExhausted: return "GenericityExhausted";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code), detail_(detail) {}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        const std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view text) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view check, std::uint64_t p, std::uint64_t k,
                          std::uint64_t d, std::uint64_t m, std::uint64_t trial) noexcept {
    std::uint64_t h = fnv1a(check);
    for (std::uint64_t v : std::array{p, k, d, m, trial}) h = splitmix64(h ^ v);
    return seed ^ h;
}

}  // namespace a1lab
