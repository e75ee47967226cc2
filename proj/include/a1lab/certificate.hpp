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

#ifndef A1LAB_CERTIFICATE_HPP
#define A1LAB_CERTIFICATE_HPP

#include <string>

namespace a1lab {

/// Outcome of an exact check. Identity checks throw on failure, so a returned
/// certificate from them is always passing; genericity checks report failures here.
struct Certificate {
    std::string check;
    bool passed = true;
    std::string detail;
};

}  // namespace a1lab

#endif
