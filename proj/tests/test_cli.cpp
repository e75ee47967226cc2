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

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(A1LAB_BIN) + " " + args + " 2>&1";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = ::pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("a1lab_cli_" + name);
    std::ofstream(path) << content;
    return path.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(Cli, SelftestPasses) { EXPECT_EQ(run("selftest").code, 0); }

TEST(Cli, SelftestSubset) {
    const auto r = run("selftest --p 2");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.find("p=3"), std::string::npos);
}

TEST(Cli, SelftestBadSigma) {
    const auto r = run("selftest --p 3 --sigma 2,1");
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("BadNormalization"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("verify --p 4").code, 2);
    EXPECT_EQ(run("verify --p 3 --d 4 --m 2").code, 2);
    EXPECT_EQ(run("cusp-census --m 1").code, 2);
    EXPECT_EQ(run("verify --bogus").code, 2);
}

TEST(Cli, VerifyExample) {
    EXPECT_EQ(run("verify --p 3 --ext 4 --d 4 --m 1 --trials 25 --seed 7").code, 0);
}

TEST(Cli, InterpolateEmptyFile) {
    EXPECT_EQ(run("interpolate --points " + temp_file("empty.csv", "")).code, 2);
    EXPECT_EQ(run("interpolate --points /nonexistent/pts.csv").code, 2);
    EXPECT_EQ(run("interpolate --points " + temp_file("bad.csv", "1,2\n")).code, 2);
}

TEST(Cli, InterpolateBoundaryPoint) {
    const auto r = run("interpolate --p 3 --ext 3 --points " + temp_file("boundary.csv", "0,0,1\n1,0,0\n"));
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("line 2"), std::string::npos);
}

TEST(Cli, InterpolateSucceeds) {
    const auto out = std::filesystem::temp_directory_path() / "a1lab_cli_interp.json";
    const auto r = run("interpolate --p 3 --ext 3 --points " + temp_file("good.csv", "0,0,1\n5,7,2\n11,3,4\n") +
                       " --out " + out.string());
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(slurp(out.string()).find("\"d\""), std::string::npos);
}

TEST(Cli, ByteDeterminismAcrossThreads) {
    const auto dir = std::filesystem::temp_directory_path();
    const auto a = (dir / "a1lab_cli_t1.csv").string(), b = (dir / "a1lab_cli_t4.csv").string();
    const std::string args = "cusp-census --p 2,3 --d-max 6 --trials 4 --seed 3 --out ";
    ASSERT_EQ(run("").code, 2);
    ASSERT_EQ(::system(("A1LAB_THREADS=1 " + std::string(A1LAB_BIN) + " " + args + a).c_str()), 0);
    ASSERT_EQ(::system(("A1LAB_THREADS=4 " + std::string(A1LAB_BIN) + " " + args + b).c_str()), 0);
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_FALSE(slurp(a).empty());
    const auto j1 = (dir / "a1lab_cli_v1.json").string(), j2 = (dir / "a1lab_cli_v2.json").string();
    ASSERT_EQ(run("verify --p 3 --d-max 5 --trials 3 --out " + j1).code, 0);
    ASSERT_EQ(run("verify --p 3 --d-max 5 --trials 3 --threads 3 --out " + j2).code, 0);
    EXPECT_EQ(slurp(j1), slurp(j2));
}
