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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "a1lab/a1_curves.hpp"
#include "a1lab/error.hpp"
#include "a1lab/experiments.hpp"

using namespace a1lab;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(out, std::ios::binary);
    if (!os) throw UsageError("cannot write " + out);
    os << text;
}

std::string render(const Report& report, std::string format, const std::string& out) {
    if (format.empty()) format = ends_with(out, ".csv") ? "csv" : "json";
    if (format == "csv") return report.to_csv();
    return report.to_json().dump(2) + "\n";
}

SigmaMode parse_sigma(const std::string& s) {
    if (s == "random") return SigmaMode::Random;
    if (s == "special") return SigmaMode::Special;
    throw UsageError("--sigma must be random or special");
}

void check_primes(const std::vector<unsigned>& ps) {
    if (ps.empty()) throw UsageError("--p needs at least one prime");
    for (unsigned p : ps)
        if (!is_prime(p) || p > 101) throw UsageError("--p " + std::to_string(p) + " is not a supported prime");
}

int report_exit(const Report& report) { return report.identity_failures() == 0 ? kPass : kFail; }

struct GridOptions {
    std::vector<unsigned> p{3};
    unsigned ext = 0;
    unsigned d = 0, d_min = 0, d_max = 0;
    int m = -1;
    unsigned trials = 10;
    std::uint64_t seed = 0;
    std::string sigma = "random";
    std::string out;
    std::string format;
    unsigned threads = 0;
};

void add_common(CLI::App* cmd, GridOptions& o) {
    cmd->add_option("--p", o.p, "Comma-separated primes")->delimiter(',');
    cmd->add_option("--ext", o.ext, "Extension degree k (0 = smallest k with p^k >= 4096)");
    cmd->add_option("--trials", o.trials, "Trials per setting")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "Base seed");
    cmd->add_option("--sigma", o.sigma, "Boundary choice: random or special");
    cmd->add_option("--out", o.out, "Output path (default stdout)");
    cmd->add_option("--format", o.format, "json or csv (default from --out extension)")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--threads", o.threads, "Worker threads (A1LAB_THREADS overrides)");
    cmd->add_option("--d-min", o.d_min, "Smallest d");
    cmd->add_option("--d-max", o.d_max, "Largest d");
}

RunConfig make_config(const GridOptions& o) {
    check_primes(o.p);
    RunConfig cfg;
    cfg.p_list = o.p;
    cfg.k = o.ext;
    cfg.trials = o.trials;
    cfg.seed = o.seed;
    cfg.sigma = parse_sigma(o.sigma);
    cfg.threads = o.threads;
    cfg.d_min = o.d_min;
    cfg.d_max = o.d_max;
    if (o.d > 0) cfg.d_min = cfg.d_max = o.d;
    if (o.m >= 0) cfg.m = static_cast<unsigned>(o.m);
    for (unsigned p : cfg.p_list) Field::create(p, extension_for(cfg, p), 0);
    return cfg;
}

int cmd_verify(const GridOptions& o) {
    RunConfig cfg = make_config(o);
    if (cfg.d_max == 0) throw UsageError("verify needs --d or --d-max");
    if (cfg.d_min > cfg.d_max) throw UsageError("--d-min exceeds --d-max");
    if (cfg.m) {
        for (unsigned p : cfg.p_list) {
            bool any = false;
            for (unsigned d = std::max(1u, cfg.d_min); d <= cfg.d_max; ++d)
                any = any || (*cfg.m <= d && (d - *cfg.m) % p == 0);
            if (!any) throw UsageError("m=" + std::to_string(*cfg.m) + " is not admissible for any d in range (p=" +
                                       std::to_string(p) + ")");
        }
    }
    const Report report = run_verify(cfg);
    emit(render(report, o.format, o.out), o.out);
    const auto failures = report.identity_failures();
    if (failures) std::cerr << "verify: " << failures << " identity-class check(s) failed\n";
    return report_exit(report);
}

int cmd_census(const GridOptions& o) {
    RunConfig cfg = make_config(o);
    if (cfg.m) throw UsageError("cusp-census fixes m = d - p; --m is not accepted");
    if (cfg.d_max == 0) throw UsageError("cusp-census needs --d-max");
    const Report report = run_census(cfg);
    emit(render(report, o.format, o.out), o.out);
    return report_exit(report);
}

int cmd_selftest(const std::vector<unsigned>& primes, const std::vector<std::uint64_t>& sigma) {
    check_primes(primes);
    SelftestOptions opt;
    opt.primes = primes;
    if (!sigma.empty()) opt.sigma = sigma;
    Report report;
    try {
        report = run_selftest(opt);
    } catch (const Error& e) {
        std::cerr << "selftest: " << e.what() << "\n";
        return kFail;
    }
    std::size_t failed = 0;
    for (const auto& r : report.results) {
        std::ostream& os = r.pass ? std::cout : std::cerr;
        os << (r.pass ? "PASS " : "FAIL ") << r.check << " p=" << r.p << " d=" << r.d << " m=" << r.m;
        if (!r.pass) os << " : " << r.detail;
        os << "\n";
        failed += r.pass ? 0 : 1;
    }
    std::cout << "selftest: " << report.results.size() - failed << "/" << report.results.size() << " passed\n";
    return failed == 0 ? kPass : kFail;
}

struct InterpolateOptions {
    std::string points;
    unsigned p = 3;
    unsigned ext = 3;
    std::uint64_t seed = 0;
    std::string sigma = "special";
    std::uint64_t sigma_seed = 0;
    std::string boundary;
    std::string out;
};

int cmd_interpolate(const InterpolateOptions& o) {
    check_primes({o.p});
    if (o.ext == 0) throw UsageError("--ext must be positive");
    std::ifstream in(o.points, std::ios::binary);
    if (!in) throw UsageError("cannot read " + o.points);
    std::stringstream buf;
    buf << in.rdbuf();

    const Field f = Field::create(o.p, o.ext, 0);
    std::optional<BoundarySpec> boundary;
    try {
        if (!o.boundary.empty()) {
            boundary.emplace(BoundarySpec::parse(f, o.boundary));
        } else {
            boundary.emplace(BoundarySpec::make(f, parse_sigma(o.sigma) == SigmaMode::Special
                                                       ? BoundaryChoice::special()
                                                       : BoundaryChoice::random(o.sigma_seed)));
        }
    } catch (const Error& e) {
        throw UsageError(e.what());
    }

    std::vector<std::size_t> lines;
    std::vector<Point3> points;
    try {
        points = parse_points_csv(f, buf.str(), &lines);
    } catch (const Error& e) {
        throw UsageError(o.points + ": " + e.what());
    }
    if (points.empty()) throw UsageError(o.points + ": no points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& pt = points[i];
        if (pt[0].is_zero() && pt[1].is_zero() && pt[2].is_zero()) {
            throw UsageError(o.points + ": line " + std::to_string(lines[i]) + ": zero vector is not a point");
        }
        if (boundary->delta().eval(pt).is_zero()) {
            std::cerr << "interpolate: PointOnBoundary: line " << lines[i] << " lies on the boundary\n";
            return kFail;
        }
    }

    const Interpolation result = interpolate(*boundary, points, o.seed);
    const BuiltCurve curve = build(result.params);
    bool ok = true;
    Json pts = Json::array();
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool on = false;
        for (const auto& t : result.nodes) on = on || projectively_equal(eval_point(curve.x, t), points[i]);
        ok = ok && on;
        pts.push_back(Json{{"line", lines[i]},
                           {"point", {points[i][0].encoding(), points[i][1].encoding(), points[i][2].encoding()}},
                           {"on_curve", on}});
    }
    bool contact = true;
    std::string contact_detail;
    try {
        contact_detail = contact_certificate(*boundary, curve.x).detail;
    } catch (const Error& e) {
        contact = false;
        contact_detail = e.what();
    }
    auto encodings = [](const std::vector<FieldElement>& v) {
        Json a = Json::array();
        for (const auto& x : v) a.push_back(x.encoding());
        return a;
    };
    const Json report{
        {"config", {{"command", "interpolate"}, {"p", o.p}, {"k", o.ext}, {"seed", o.seed}, {"field", f.header()},
                    {"boundary", boundary->serialize()}}},
        {"curve",
         {{"d", result.params.d}, {"m", result.params.m}, {"a", encodings(result.params.a)},
          {"vroot", encodings(result.params.vroot)}, {"wroot", encodings(result.params.wroot)},
          {"nodes", encodings(result.nodes)}, {"x0", curve.x.x0.to_string()}, {"x1", curve.x.x1.to_string()},
          {"x2", curve.x.x2.to_string()}}},
        {"points", pts},
        {"summary", {{"points", points.size()}, {"distinct_points", result.points.size()}, {"all_on_curve", ok},
                     {"contact", contact}, {"contact_detail", contact_detail}}}};
    emit(report.dump(2) + "\n", o.out);
    return ok && contact ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"a1lab: A^1-curves on the complement of the strange curve"};
    app.require_subcommand(1);

    std::vector<unsigned> self_p{2, 3};
    std::vector<std::uint64_t> self_sigma;
    auto* selftest = app.add_subcommand("selftest", "Run identity suites at minimal sizes");
    selftest->add_option("--p", self_p, "Primes to test")->delimiter(',');
    selftest->add_option("--sigma", self_sigma, "Explicit sigma_1..sigma_{p-1} encodings")->delimiter(',');

    GridOptions vopt;
    auto* verify = app.add_subcommand("verify", "Run the certificate suite over a (p, d, m) grid");
    add_common(verify, vopt);
    verify->add_option("--d", vopt.d, "Single d");
    verify->add_option("--m", vopt.m, "Multiplicity (default: all admissible)");

    GridOptions copt;
    copt.p = {2, 3, 5};
    copt.trials = 40;
    auto* census = app.add_subcommand("cusp-census", "Cusp census for m = d - p");
    add_common(census, copt);

    InterpolateOptions iopt;
    auto* interp = app.add_subcommand("interpolate", "Find an A^1-curve through interior points");
    interp->add_option("--points", iopt.points, "CSV file of points x0,x1,x2")->required();
    interp->add_option("--p", iopt.p, "Characteristic");
    interp->add_option("--ext", iopt.ext, "Extension degree");
    interp->add_option("--seed", iopt.seed, "Seed for node selection");
    interp->add_option("--sigma", iopt.sigma, "Boundary choice: special or random");
    interp->add_option("--sigma-seed", iopt.sigma_seed, "Seed for a random boundary");
    interp->add_option("--boundary", iopt.boundary, "Serialized boundary p;k;sigma=...");
    interp->add_option("--out", iopt.out, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }

    try {
        if (*selftest) return cmd_selftest(self_p, self_sigma);
        if (*verify) return cmd_verify(vopt);
        if (*census) return cmd_census(copt);
        if (*interp) return cmd_interpolate(iopt);
    } catch (const UsageError& e) {
        std::cerr << "a1lab: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "a1lab: " << e.what() << "\n";
        const bool input = e.code() == ErrorCode::NotPrime || e.code() == ErrorCode::Overflow ||
                           e.code() == ErrorCode::BadEncoding || e.code() == ErrorCode::BadCongruence ||
                           e.code() == ErrorCode::InvalidArgument;
        return input ? kUsage : kFail;
    }
    return kUsage;
}
