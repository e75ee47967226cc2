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

#ifndef A1LAB_RNG_HPP
#define A1LAB_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace a1lab {

/// All sampling goes through an explicit, caller-owned engine.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Stable 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view text) noexcept;

/// Per-trial seed: seed XOR hash(check, p, k, d, m, trial). Independent of scheduling.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view check, std::uint64_t p, std::uint64_t k,
                          std::uint64_t d, std::uint64_t m, std::uint64_t trial) noexcept;

}  // namespace a1lab

#endif
