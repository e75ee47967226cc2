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

#include "a1lab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "a1lab/a1_curves.hpp"
#include "a1lab/dp_component.hpp"
#include "a1lab/error.hpp"

namespace a1lab {

namespace {

constexpr std::uint64_t kFieldSeed = 0;

std::string sigma_name(SigmaMode mode) {
    switch (mode) {
        case SigmaMode::Random: return "random";
        case SigmaMode::Special: return "special";
        case SigmaMode::Explicit: return "explicit";
    }
    return "unknown";
}

class Collector {
   public:
    Collector(unsigned p, unsigned k, unsigned d, unsigned m, unsigned trial) : p_(p), k_(k), d_(d), m_(m), trial_(trial) {}

    void run(const std::string& name, CheckClass cls, const std::function<Certificate()>& fn) {
        try {
            const Certificate c = fn();
            add(name, cls, c.passed, c.detail);
        } catch (const Error& e) {
            add(name, cls, false, e.what());
        }
    }

    void add(const std::string& name, CheckClass cls, bool pass, std::string detail) {
        out.push_back({name, cls, p_, k_, d_, m_, trial_, pass, std::move(detail)});
    }

    std::vector<CheckResult> out;

   private:
    unsigned p_, k_, d_, m_, trial_;
};

bool same_params(const CurveParams& a, const CurveParams& b) {
    return a.d == b.d && a.m == b.m && a.a == b.a && a.vroot == b.vroot && a.wroot == b.wroot;
}

BoundarySpec trial_boundary(Field field, SigmaMode mode, Rng& rng) {
    return BoundarySpec::make(field, mode == SigmaMode::Special ? BoundaryChoice::special()
                                                                : BoundaryChoice::random(rng()));
}

Certificate reparameterization_check(const CurveParams& params, Rng& rng) {
    const Field f = params.boundary.field();
    const FieldElement l1 = f.sample_nonzero(rng), c1 = f.sample(rng);
    const FieldElement l2 = f.sample_nonzero(rng), c2 = f.sample(rng);
    const CurveParams once = reparameterize(params, l1, c1);
    const BuiltCurve base = build(params);
    const BuiltCurve moved = build(once);
    const auto xs = base.x.as_array();
    const auto ys = moved.x.as_array();
    for (std::size_t i = 0; i < 3; ++i) {
        if (ys[i] != xs[i].compose_affine(l1, c1)) {
            throw Error(ErrorCode::IdentityFailure, "x'_" + std::to_string(i) + "(t) != x_" + std::to_string(i) +
                                                        "(lambda t + c)");
        }
    }
    if (!same_params(reparameterize(once, l2, c2), reparameterize(params, l1 * l2, c1 + l1 * c2))) {
        throw Error(ErrorCode::IdentityFailure, "reparameterization is not a group action");
    }
    if (!same_params(reparameterize(params, f.one(), f.zero()), params)) {
        throw Error(ErrorCode::IdentityFailure, "identity reparameterization changed the parameters");
    }
    return {"reparameterization", true, "x'(t) = x(lambda t + c); composition law holds"};
}

Certificate sigma0_check(Field f, Rng& rng) {
    const BoundarySpec special = BoundarySpec::make(f, BoundaryChoice::special());
    const UniPoly v(f, {f.sample(rng), f.sample(rng)});
    const UniPoly w(f, {f.sample(rng), f.sample(rng)});
    return sigma0_derivative_check(special, v, w);
}

// Fiber-level suite for m = d - p.
void dp_suite(Collector& col, const BoundarySpec& boundary, unsigned d, unsigned trial, Rng& rng) {
    const Field f = boundary.field();
    const unsigned p = static_cast<unsigned>(boundary.p());
    const unsigned m = d - p;
    std::optional<FamilySpec> spec;
    try {
        spec = FamilySpec::sample(boundary, d, rng);
    } catch (const Error& e) {
        col.add("family", CheckClass::Genericity, false, e.what());
        return;
    }
    const FiberParams random_fiber(*spec, f.sample(rng), f.sample(rng), f.sample(rng), f.sample(rng));
    col.run("psi_pullback_zero", CheckClass::Identity, [&] { return psi_pullback_zero(random_fiber); });
    const FieldElement mu = f.sample(rng);
    const FieldElement r0 = f.sample(rng), r1 = f.sample(rng);
    const FiberParams flat(*spec, r0, r1, mu * r0, mu * r1);
    col.run("psi_pullback_zero_pi0", CheckClass::Identity, [&] { return psi_pullback_zero(flat); });
    col.run("singularity_classification", CheckClass::Identity, [&] {
        const ClassificationReport r = singularity_classification(flat, 4);
        const ClassificationReport s = singularity_classification(random_fiber, 4);
        return Certificate{"singularity_classification", true,
                           std::to_string(r.degenerate_points + s.degenerate_points) + " pi=0 points, " +
                               std::to_string(r.boundary_points + s.boundary_points) + " boundary points" +
                               (s.str_checked ? (s.str_singular ? ", str singular" : ", str smooth") : "")};
    });
    if (trial == 0) {
        col.run("gradient", CheckClass::Identity, [&] { return gradient_check(*spec); });
        col.run("delta_identity", CheckClass::Identity, [&] {
            if (!delta_identity(p, d)) throw Error(ErrorCode::IdentityFailure, "delta identity fails");
            return Certificate{"delta_identity", true, ""};
        });
    }
    if (boundary.is_special()) {
        col.run("special_cusp", CheckClass::Identity, [&] { return special_cusp_checks(random_fiber); });
    }

    std::optional<FiberParams> fiber;
    try {
        fiber.emplace(sample_general_fiber(*spec, rng));
    } catch (const Error& e) {
        col.add("general_fiber", CheckClass::Genericity, false, e.what());
        return;
    }
    const CuspData cd = cusp_polynomial(*fiber);
    const std::size_t expected = expected_cusp_count(p, d);
    col.add("cusp_count", CheckClass::Genericity, cd.count == expected,
            "observed " + std::to_string(cd.count) + ", expected " + std::to_string(expected));
    col.run("cusp_image", CheckClass::Identity, [&] { return cusp_image_certificates(*fiber); });
    col.run("total_space_smoothness", m > 1 ? CheckClass::Genericity : CheckClass::Identity,
            [&] { return total_space_smoothness_at_cusps(*fiber); });
    std::optional<TangentCone> cone;
    col.run("tangent_cone", CheckClass::Identity, [&] {
        cone = tangent_cone_at_str(*fiber);
        return Certificate{"tangent_cone", true, "multiplicity " + std::to_string(cone->multiplicity)};
    });
    if (cone) col.add("tangent_cone_ordinary", CheckClass::Genericity, cone->ordinary, "");
}

std::vector<CheckResult> verify_unit(const RunConfig& cfg, Field f, unsigned d, unsigned m, unsigned trial) {
    const unsigned p = static_cast<unsigned>(f.characteristic());
    const unsigned k = f.degree();
    Rng rng(derive_seed(cfg.seed, "verify", p, k, d, m, trial));
    Collector col(p, k, d, m, trial);
    const BoundarySpec boundary = trial_boundary(f, cfg.sigma, rng);
    col.run("frobenius_factorization", CheckClass::Identity, [&] { return frobenius_factorization_check(boundary); });

    const CurveParams params = CurveParams::sample(boundary, d, m, rng);
    std::optional<BuiltCurve> built;
    col.run("binomial", CheckClass::Identity, [&] {
        built = build(params);
        return Certificate{"binomial", true, std::to_string(p + 1) + " Z-coordinates"};
    });
    if (!built) return col.out;
    col.run("contact", CheckClass::Identity, [&] { return contact_certificate(boundary, built->x); });
    col.run("reparameterization", CheckClass::Identity, [&] { return reparameterization_check(params, rng); });
    col.run("tangent_factorization", CheckClass::Identity, [&] { return tangent_factorization_check(params); });
    col.run("strangeness", CheckClass::Identity, [&] { return strangeness_certificate(params, 64); });
    if (m >= 1 && m < d) {
        const MultiplicityReport mr = multiplicity_at_str(params);
        col.add("multiplicity_ordinary", CheckClass::Genericity, mr.ordinary && mr.m_realized == m,
                "multiplicity " + std::to_string(mr.m_realized));
    }
    if (boundary.is_special()) {
        col.run("sigma0_derivative", CheckClass::Identity, [&] { return sigma0_check(f, rng); });
    }
    if (m == d) {
        col.add("cusp_suite", CheckClass::Identity, true, "skipped: line cover");
    } else if (d >= p && m == d - p) {
        dp_suite(col, boundary, d, trial, rng);
    }
    return col.out;
}

CensusRow census_unit(const RunConfig& cfg, Field f, unsigned d, unsigned trial) {
    const unsigned p = static_cast<unsigned>(f.characteristic());
    const unsigned k = f.degree();
    const unsigned m = d - p;
    const std::uint64_t seed = derive_seed(cfg.seed, "census", p, k, d, m, trial);
    Rng rng(seed);
    CensusRow row;
    row.p = p;
    row.k = k;
    row.d = d;
    row.m = m;
    row.seed = seed;
    row.expected = expected_cusp_count(p, d);
    row.sigma = sigma_name(cfg.sigma);
    try {
        const BoundarySpec boundary = trial_boundary(f, cfg.sigma, rng);
        const FamilySpec spec = FamilySpec::sample(boundary, d, rng);
        const FiberParams fiber = sample_general_fiber(spec, rng);
        const CuspData cd = cusp_polynomial(fiber);
        row.pi_nonzero = !fiber.pi().is_zero();
        row.cusp_count = cd.count;
        row.tangent_cone_ordinary = tangent_cone_at_str(fiber).ordinary;
        const Certificate img = cusp_image_certificates(fiber);
        const Certificate smooth = total_space_smoothness_at_cusps(fiber);
        row.total_space_smooth_at_cusps = m == 0 ? cd.count == 0 : smooth.passed;
        row.identity_ok = img.passed;
        row.detail = img.detail;
    } catch (const Error& e) {
        row.identity_ok = e.code() == ErrorCode::GenericityExhausted;
        row.detail = e.what();
    }
    return row;
}

Json result_json(const CheckResult& r) {
    return Json{{"check", r.check}, {"class", to_string(r.cls)}, {"p", r.p},         {"k", r.k},
                {"d", r.d},         {"m", r.m},                  {"trial", r.trial}, {"pass", r.pass},
                {"detail", r.detail}};
}

Json census_json(const CensusRow& r) {
    Json j{{"p", r.p},
           {"k", r.k},
           {"d", r.d},
           {"m", r.m},
           {"seed", r.seed},
           {"pi_nonzero", r.pi_nonzero},
           {"cusp_count", nullptr},
           {"expected", r.expected},
           {"tangent_cone_ordinary", r.tangent_cone_ordinary},
           {"total_space_smooth_at_cusps", r.total_space_smooth_at_cusps}};
    if (r.cusp_count) j["cusp_count"] = *r.cusp_count;
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

Json config_json(const RunConfig& cfg, const std::string& command) {
    Json fields = Json::array();
    for (unsigned p : cfg.p_list) fields.push_back(Field::create(p, extension_for(cfg, p), kFieldSeed).header());
    Json j{{"command", command}, {"p", cfg.p_list}, {"k", cfg.k},         {"fields", fields},
           {"d_min", cfg.d_min}, {"d_max", cfg.d_max}, {"m", nullptr},     {"trials", cfg.trials},
           {"seed", cfg.seed},   {"sigma", sigma_name(cfg.sigma)}};
    if (cfg.m) j["m"] = *cfg.m;
    return j;
}

}  // namespace

std::string to_string(CheckClass cls) { return cls == CheckClass::Identity ? "identity" : "genericity"; }

unsigned resolve_threads(unsigned requested) {
    if (const char* env = std::getenv("A1LAB_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(std::min<unsigned long>(v, 256));
    }
    if (requested > 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(mu);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

unsigned extension_for(const RunConfig& cfg, unsigned p) {
    if (cfg.k > 0) return cfg.k;
    unsigned k = 1;
    for (std::uint64_t q = p; q < (1u << 12); q *= p) ++k;
    return k;
}

std::size_t Report::identity_failures() const {
    const auto bad_results = std::count_if(results.begin(), results.end(), [](const CheckResult& r) {
        return r.cls == CheckClass::Identity && !r.pass;
    });
    const auto bad_rows = std::count_if(census.begin(), census.end(), [](const CensusRow& r) { return !r.identity_ok; });
    return static_cast<std::size_t>(bad_results + bad_rows);
}

Json Report::summary() const {
    std::size_t id_pass = 0, id_fail = 0, gen_pass = 0, gen_fail = 0;
    std::map<std::tuple<std::string, unsigned, unsigned, unsigned>, std::pair<unsigned, unsigned>> rates;
    for (const auto& r : results) {
        if (r.cls == CheckClass::Identity) {
            (r.pass ? id_pass : id_fail)++;
        } else {
            (r.pass ? gen_pass : gen_fail)++;
            auto& [n, ok] = rates[{r.check, r.p, r.d, r.m}];
            ++n;
            ok += r.pass ? 1 : 0;
        }
    }
    Json agreement = Json::array();
    for (const auto& [key, v] : rates) {
        const auto& [check, p, d, m] = key;
        agreement.push_back(Json{{"check", check}, {"p", p}, {"d", d}, {"m", m}, {"trials", v.first},
                                 {"agree", v.second}, {"rate", static_cast<double>(v.second) / v.first}});
    }
    Json census_rates = Json::array();
    std::map<std::tuple<unsigned, unsigned, unsigned>, std::array<unsigned, 3>> groups;
    for (const auto& r : census) {
        auto& g = groups[{r.p, r.d, r.m}];
        ++g[0];
        if (r.cusp_count && *r.cusp_count == r.expected) ++g[1];
        if (!r.cusp_count) ++g[2];
    }
    for (const auto& [key, g] : groups) {
        const auto& [p, d, m] = key;
        census_rates.push_back(Json{{"p", p}, {"d", d}, {"m", m}, {"rows", g[0]}, {"agree", g[1]},
                                    {"exhausted", g[2]}, {"rate", static_cast<double>(g[1]) / g[0]}});
    }
    Json boundary = Json::array();
    for (const auto& b : boundary_census) {
        boundary.push_back(Json{{"p", b.p}, {"k", b.k}, {"expected", b.p - 2}, {"samples", b.samples},
                                {"agree", b.separable}, {"rate", static_cast<double>(b.separable) / b.samples}});
    }
    return Json{{"identity_pass", id_pass},     {"identity_fail", id_fail},    {"genericity_pass", gen_pass},
                {"genericity_fail", gen_fail}, {"agreement", agreement},      {"census_agreement", census_rates},
                {"boundary_census", boundary}};
}

Json Report::to_json() const {
    Json res = Json::array(), cen = Json::array();
    for (const auto& r : results) res.push_back(result_json(r));
    for (const auto& r : census) cen.push_back(census_json(r));
    return Json{{"config", config}, {"results", res}, {"census", cen}, {"summary", summary()}};
}

std::string Report::to_csv() const {
    std::ostringstream os;
    if (!census.empty()) {
        os << "p,k,d,m,seed,pi_nonzero,cusp_count,expected,tangent_cone_ordinary,total_space_smooth_at_cusps\n";
        for (const auto& r : census) {
            os << r.p << ',' << r.k << ',' << r.d << ',' << r.m << ',' << r.seed << ',' << (r.pi_nonzero ? 1 : 0)
               << ',' << (r.cusp_count ? std::to_string(*r.cusp_count) : "NA") << ',' << r.expected << ','
               << (r.tangent_cone_ordinary ? 1 : 0) << ',' << (r.total_space_smooth_at_cusps ? 1 : 0) << '\n';
        }
        return os.str();
    }
    os << "check,class,p,k,d,m,trial,pass,detail\n";
    for (const auto& r : results) {
        os << r.check << ',' << to_string(r.cls) << ',' << r.p << ',' << r.k << ',' << r.d << ',' << r.m << ','
           << r.trial << ',' << (r.pass ? 1 : 0) << ',' << csv_escape(r.detail) << '\n';
    }
    return os.str();
}

Report run_verify(const RunConfig& cfg) {
    struct Unit {
        Field f;
        unsigned d, m, trial;
    };
    std::vector<Unit> units;
    for (unsigned p : cfg.p_list) {
        const Field f = Field::create(p, extension_for(cfg, p), kFieldSeed);
        for (unsigned d = std::max(1u, cfg.d_min); d <= cfg.d_max; ++d) {
            for (unsigned m : admissible_multiplicities(d, p)) {
                if (cfg.m && *cfg.m != m) continue;
                for (unsigned t = 0; t < cfg.trials; ++t) units.push_back({f, d, m, t});
            }
        }
    }
    std::vector<std::vector<CheckResult>> parts(units.size());
    parallel_for(units.size(), resolve_threads(cfg.threads), [&](std::size_t i) {
        parts[i] = verify_unit(cfg, units[i].f, units[i].d, units[i].m, units[i].trial);
    });
    Report report;
    report.config = config_json(cfg, "verify");
    for (auto& part : parts)
        for (auto& r : part) report.results.push_back(std::move(r));
    std::stable_sort(report.results.begin(), report.results.end(), [](const CheckResult& a, const CheckResult& b) {
        return std::tie(a.check, a.p, a.d, a.m, a.trial) < std::tie(b.check, b.p, b.d, b.m, b.trial);
    });
    return report;
}

Report run_census(const RunConfig& cfg, unsigned boundary_samples) {
    struct Unit {
        Field f;
        unsigned d, trial;
    };
    std::vector<Unit> units;
    std::vector<Field> fields;
    for (unsigned p : cfg.p_list) {
        const Field f = Field::create(p, extension_for(cfg, p), kFieldSeed);
        fields.push_back(f);
        for (unsigned d = std::max(cfg.d_min, p); d <= cfg.d_max; ++d)
            for (unsigned t = 0; t < cfg.trials; ++t) units.push_back({f, d, t});
    }
    Report report;
    report.config = config_json(cfg, "cusp-census");
    report.census.resize(units.size());
    parallel_for(units.size(), resolve_threads(cfg.threads),
                 [&](std::size_t i) { report.census[i] = census_unit(cfg, units[i].f, units[i].d, units[i].trial); });

    for (const Field& f : fields) {
        const unsigned p = static_cast<unsigned>(f.characteristic());
        if (p < 3) continue;
        BoundaryCensusRow row{p, f.degree(), boundary_samples, 0};
        for (unsigned s = 0; s < boundary_samples; ++s) {
            const BoundarySpec b = BoundarySpec::make(
                f, BoundaryChoice::random(derive_seed(cfg.seed, "boundary_census", p, f.degree(), 0, 0, s)));
            if (boundary_cusp_census(b).count == p - 2) ++row.separable;
        }
        report.boundary_census.push_back(row);
    }
    return report;
}

Report run_selftest(const SelftestOptions& options) {
    Report report;
    report.config = Json{{"command", "selftest"}, {"p", options.primes}};
    for (unsigned p : options.primes) {
        const Field f = Field::create(p, 4, kFieldSeed);
        std::optional<BoundarySpec> boundary;
        if (options.sigma) {
            std::vector<FieldElement> sigma;
            for (auto e : *options.sigma) sigma.push_back(f.from_encoding(e));
            boundary.emplace(BoundarySpec::make(f, BoundaryChoice::explicit_list(std::move(sigma))));
        } else {
            boundary.emplace(BoundarySpec::make(f, BoundaryChoice::random(derive_seed(0, "selftest", p, 4, 0, 0, 0))));
        }
        for (unsigned d = p; d <= p + 3; ++d) {
            Rng rng(derive_seed(0, "selftest", p, 4, d, 0, 0));
            Collector col(p, 4, d, d - p, 0);
            if (d == p) {
                col.run("frobenius_factorization", CheckClass::Identity,
                        [&] { return frobenius_factorization_check(*boundary); });
                col.run("sigma0_derivative", CheckClass::Identity, [&] { return sigma0_check(f, rng); });
            }
            for (unsigned m : admissible_multiplicities(d, p)) {
                const CurveParams params = CurveParams::sample(*boundary, d, m, rng);
                col.run("tangent_factorization", CheckClass::Identity, [&] { return tangent_factorization_check(params); });
            }
            col.run("gradient", CheckClass::Identity, [&] { return gradient_check(FamilySpec::sample(*boundary, d, rng)); });
            col.run("psi_pullback_zero", CheckClass::Identity, [&] {
                const FamilySpec spec = FamilySpec::sample(*boundary, d, rng);
                return psi_pullback_zero(FiberParams(spec, f.sample(rng), f.sample(rng), f.sample(rng), f.sample(rng)));
            });
            col.run("delta_identity", CheckClass::Identity, [&] {
                if (!delta_identity(p, d)) throw Error(ErrorCode::IdentityFailure, "delta identity fails");
                return Certificate{"delta_identity", true, ""};
            });
            for (auto& r : col.out) report.results.push_back(std::move(r));
        }
    }
    return report;
}

}  // namespace a1lab
