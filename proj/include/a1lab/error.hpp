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

#ifndef A1LAB_ERROR_HPP
#define A1LAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace a1lab {

enum class ErrorCode {
    NotPrime,
    Overflow,
    DivisionByZero,
    MixedFields,
    NotEnoughElements,
    BadEncoding,
    ZeroPolynomial,
    ArityMismatch,
    DegenerateDegrees,
    FieldTooLarge,
    BadNormalization,
    IdentityFailure,
    BadCongruence,
    ZeroScale,
    PointOnBoundary,
    NotEnoughNodes,
    ConstantMap,
    ClassificationMismatch,
    CertificateFailure,
    ConeMismatch,
    GenericityExhausted,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Library error carrying a machine-readable code; what() is "<Code>: <detail>".
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& detail);

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

   private:
    ErrorCode code_;
    std::string detail_;
};

}  // namespace a1lab

#endif
