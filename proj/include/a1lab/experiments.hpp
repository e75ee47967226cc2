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

#ifndef A1LAB_EXPERIMENTS_HPP
#define A1LAB_EXPERIMENTS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "a1lab/strange_geometry.hpp"

namespace a1lab {

using Json = nlohmann::ordered_json;

enum class CheckClass { Identity, Genericity };

struct RunConfig {
    std::vector<unsigned> p_list{3};
    /// Extension degree; 0 picks the smallest k with p^k >= 2^12 for each p.
    unsigned k = 0;
    unsigned d_min = 0;
    unsigned d_max = 0;
    /// Unset means every admissible m.
    std::optional<unsigned> m;
    unsigned trials = 10;
    std::uint64_t seed = 0;
    SigmaMode sigma = SigmaMode::Random;
    unsigned threads = 0;
};

struct CheckResult {
    std::string check;
    CheckClass cls = CheckClass::Identity;
    unsigned p = 0, k = 0, d = 0, m = 0, trial = 0;
    bool pass = true;
    std::string detail;
};

struct CensusRow {
    unsigned p = 0, k = 0, d = 0, m = 0;
    std::uint64_t seed = 0;
    bool pi_nonzero = false;
    /// Unset when no general fiber was found.
    std::optional<std::size_t> cusp_count;
    std::size_t expected = 0;
    bool tangent_cone_ordinary = false;
    bool total_space_smooth_at_cusps = false;
    std::string sigma;
    /// False when an identity-class certificate failed on this row.
    bool identity_ok = true;
    std::string detail;
};

struct BoundaryCensusRow {
    unsigned p = 0, k = 0;
    unsigned samples = 0;
    unsigned separable = 0;
};

struct Report {
    Json config;
    std::vector<CheckResult> results;
    std::vector<CensusRow> census;
    std::vector<BoundaryCensusRow> boundary_census;

    /// Failed identity-class results plus census rows with a failed certificate.
    std::size_t identity_failures() const;
    Json summary() const;
    Json to_json() const;
    /// Census rows when present, otherwise check results.
    std::string to_csv() const;
};

/// Worker count: A1LAB_THREADS when set, else `requested`, else hardware concurrency.
unsigned resolve_threads(unsigned requested);

/// Runs fn(0..n-1) on `threads` workers; results are stored by index.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

/// Extension degree used for p under the config.
unsigned extension_for(const RunConfig& cfg, unsigned p);

/// Per-trial certificate suite over the (p, d, m) grid.
Report run_verify(const RunConfig& cfg);

/// Cusp census over d in [max(d_min, p), d_max] with m = d - p, plus the boundary census.
Report run_census(const RunConfig& cfg, unsigned boundary_samples = 20);

struct SelftestOptions {
    std::vector<unsigned> primes{2, 3};
    /// Replaces the random boundary with explicit sigma_1..sigma_{p-1} encodings.
    std::optional<std::vector<std::uint64_t>> sigma;
};

/// Identity suites at minimal sizes. Throws BadNormalization for a bad sigma override.
Report run_selftest(const SelftestOptions& options);

std::string to_string(CheckClass cls);

}  // namespace a1lab

#endif
