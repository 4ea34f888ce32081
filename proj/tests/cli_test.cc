// Copyright 2026 The tempoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "tempoly/cli.h"
#include "tempoly/inequalities.h"
#include "tempoly/io.h"

namespace tempoly {
namespace {

using nlohmann::json;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("tempoly_cli_test_" + name);
}

TEST(Cli, DimsText) {
    const auto r = run({"dims", "--n", "2", "--m", "2", "--delta", "2"});
    EXPECT_EQ(r.code, kExitVerified);
    EXPECT_NE(r.out.find("P=16"), std::string::npos);
    EXPECT_NE(r.out.find("NS=8"), std::string::npos);
    EXPECT_NE(r.out.find("AoT=12"), std::string::npos);
    EXPECT_NE(r.out.find("MR=8"), std::string::npos);
}

TEST(Cli, DimsJsonAndSingleTimeNote) {
    const auto r = run({"dims", "--n", "1", "--m", "1", "--delta", "2", "--json"});
    EXPECT_EQ(r.code, kExitVerified);
    const json j = json::parse(r.out);
    EXPECT_TRUE(j.at("all_match").get<bool>());
    EXPECT_TRUE(j.contains("note"));
}

TEST(Cli, SizeGuard) {
    const auto r = run({"dims", "--n", "9", "--m", "3", "--delta", "3"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"nonsense"}).code, kExitUsage);
    EXPECT_EQ(run({"dims", "--n", "0", "--m", "1", "--delta", "2"}).code, kExitUsage);
    EXPECT_EQ(run({"dims", "--n", "2", "--m", "1", "--delta", "1"}).code, kExitUsage);
}

TEST(Cli, Conditions) {
    const auto r = run({"conditions", "--n", "3", "--m", "2", "--delta", "2", "--json"});
    EXPECT_EQ(r.code, kExitVerified);
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("aot").at("rows"), 56);
    EXPECT_EQ(j.at("aot").at("rank"), 56);
    EXPECT_LT(j.at("nsit").at("rank").get<int>(), j.at("nsit").at("rows").get<int>());
    const auto small = run({"conditions", "--n", "2", "--m", "1", "--delta", "2"});
    EXPECT_EQ(small.code, kExitVerified);
    EXPECT_NE(small.out.find("AoT rows 2 (closed form 2), rank 2"), std::string::npos);
}

TEST(Cli, EquivNs) {
    for (const auto &[n, m] : std::vector<std::pair<std::string, std::string>>{{"2", "1"}, {"2", "2"}, {"3", "2"}}) {
        const auto r = run({"equiv-ns", "--n", n, "--m", m, "--delta", "2", "--json"});
        EXPECT_EQ(r.code, kExitVerified);
        EXPECT_TRUE(json::parse(r.out).at("equal").get<bool>());
    }
}

TEST(Cli, KrausVerify) {
    const auto r = run({"kraus-verify", "--n", "2", "--m", "1", "--delta", "2", "--trials", "100", "--json"});
    EXPECT_EQ(r.code, kExitVerified);
    EXPECT_TRUE(json::parse(r.out).at("pass").get<bool>());
    EXPECT_EQ(run({"kraus-verify", "--n", "2", "--m", "1", "--delta", "2", "--tol", "0"}).code, kExitUsage);
}

TEST(Cli, KrausVerifyIsDeterministic) {
    const std::vector<std::string> args{"kraus-verify", "--n", "2", "--m", "2", "--delta", "2",
                                        "--trials", "5", "--seed", "9", "--json"};
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, ScanSinglePoint) {
    const auto r = run({"scan", "--start", "0", "--stop", "0", "--steps", "1", "--state", "eigenstate"});
    EXPECT_EQ(r.code, kExitVerified);
    std::istringstream in(r.out);
    std::string header, row, extra;
    std::getline(in, header);
    std::getline(in, row);
    EXPECT_EQ(header, "omega_tau,state,K12_23_13,lgi_ok,max_nsit_residual");
    EXPECT_EQ(row.rfind("0,eigenstate,1,", 0), 0u) << row;
    EXPECT_FALSE(std::getline(in, extra) && !extra.empty());
}

TEST(Cli, ScanToFile) {
    const auto path = temp_file("scan.csv");
    const auto r = run({"scan", "--out", path.string()});
    EXPECT_EQ(r.code, kExitVerified);
    std::ifstream in(path);
    int lines = 0;
    for (std::string line; std::getline(in, line);) {
        lines++;
    }
    EXPECT_EQ(lines, 363);
    std::filesystem::remove(path);
}

TEST(Cli, VerticesAndConstraints) {
    const auto v = run({"vertices", "--n", "2", "--m", "1", "--delta", "2", "--model", "mr"});
    EXPECT_EQ(v.code, kExitVerified);
    EXPECT_EQ(v.out.rfind("p0,p1,", 0), 0u);
    const auto c = run({"constraints", "--n", "2", "--m", "2", "--delta", "2", "--kind", "aot"});
    EXPECT_EQ(c.code, kExitVerified);
    EXPECT_EQ(json::parse(c.out).at("rows").size(), 8u);
    EXPECT_EQ(run({"constraints", "--n", "2", "--m", "2", "--delta", "2", "--kind", "bogus"}).code, kExitUsage);
}

TEST(Cli, WitnessFile) {
    const auto path = temp_file("lgi.json");
    {
        std::ofstream f(path);
        f << to_json(lgi3_witness(Scenario(3, 1, 2))).dump();
    }
    const auto r = run({"witness", "--file", path.string()});
    EXPECT_EQ(r.code, kExitVerified);
    const json j = json::parse(r.out);
    EXPECT_FALSE(j.at("violated_by_vertex").get<bool>());
    EXPECT_TRUE(j.at("tight_only_on_positivity_boundary").get<bool>());
    {
        std::ofstream f(path);
        f << "{ not json";
    }
    EXPECT_EQ(run({"witness", "--file", path.string()}).code, kExitUsage);
    std::filesystem::remove(path);
    EXPECT_EQ(run({"witness", "--file", path.string()}).code, kExitUsage);
}

TEST(Cli, Counterexample) {
    const auto r = run({"counterexample", "--budget", "3000", "--json"});
    EXPECT_EQ(r.code, kExitVerified);
    const json j = json::parse(r.out);
    EXPECT_TRUE(j.at("target_satisfies_aot").get<bool>());
    EXPECT_TRUE(j.at("pass").get<bool>());
}

}  // namespace
}  // namespace tempoly
