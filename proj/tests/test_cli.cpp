// Copyright 2026 The symcirc Authors
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
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "json.hpp"

using namespace symcirc;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

nlohmann::json parse(const Run &r) {
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(cli, partition_counts) {
    auto r = run({"partitions", "--count", "--n", "4", "--d", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(parse(r)["count"], 4);
    r = run({"partitions", "--count", "--n", "0", "--d", "5"});
    EXPECT_EQ(parse(r)["count"], 1);
    // count(3, 10) = 3 above the figure denominator.
    r = run({"partitions", "--count", "--n", "10000", "--d", "10", "--expect", "778400276435728381405745"});
    EXPECT_EQ(r.code, 0) << r.err;
}

TEST(cli, fig3_plateau_csv) {
    auto r = run({"partitions", "--fig3", "--d-list", "2,3,4", "--k-max", "60"});
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "# schema: symcirc.partitions.fig3.v1");
    std::getline(in, line);
    EXPECT_EQ(line, "k,d,count");
    std::vector<long> twos;
    while (std::getline(in, line)) {
        int k, d;
        long c;
        ASSERT_EQ(std::sscanf(line.c_str(), "%d,%d,%ld", &k, &d, &c), 3);
        if (d == 2) {
            twos.push_back(c);
        }
    }
    ASSERT_EQ(twos.size(), 61u);
    for (int k = 3; k <= 60; k++) {
        EXPECT_EQ(twos[k] == twos[k - 1], k % 2 == 1) << k;
    }
}

TEST(cli, k_range) {
    auto r = run({"partitions", "--fig3", "--d-list", "3", "--k-range", "4:10:3", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = parse(r);
    ASSERT_EQ(j["rows"].size(), 3u);
    EXPECT_EQ(j["rows"][2][0], 10);
    EXPECT_EQ(j["rows"][2][2], 14);
    EXPECT_EQ(run({"partitions", "--fig2", "--k-range", "2:10"}).code, 2);
    EXPECT_EQ(run({"partitions", "--fig2", "--k-range", "5"}).code, 2);
}

TEST(cli, fig2_denominators) {
    auto r = run({"partitions", "--fig2", "--k-max", "5", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = parse(r);
    EXPECT_EQ(j["denominators"][1]["denominator"], 8338331);
    EXPECT_EQ(j["denominators"][4]["denominator"], "778400276435728381405742");
    EXPECT_EQ(j["rows"][0][2], 0.0);
}

TEST(cli, semiuni_verdicts_are_data) {
    auto r = run({"check", "--mode", "semiuni", "--n", "4", "--d", "4", "--k", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(parse(r)["semi_universal"], true);
    r = run({"check", "--mode", "semiuni", "--n", "4", "--d", "4", "--k", "2"});
    EXPECT_EQ(r.code, 0);
    auto j = parse(r);
    EXPECT_EQ(j["semi_universal"], false);
    EXPECT_EQ(j["pairs"][0]["verdict"], "correlated");
    r = run({"check", "--mode", "semiuni", "--n", "4", "--d", "4", "--k", "2", "--expect", "semi-universal"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("expectation failed"), std::string::npos);
    r = run({"check", "--mode", "semiuni", "--n", "4", "--d", "4", "--k", "2", "--expect", "not-semi-universal"});
    EXPECT_EQ(r.code, 0);
}

TEST(cli, gate_checks) {
    EXPECT_EQ(run({"check", "--mode", "vdet", "--d", "3", "--expect", "not-in-v2"}).code, 0);
    EXPECT_EQ(run({"check", "--mode", "vdet", "--d", "3", "--gate", "swap12", "--expect", "in-v2"}).code, 0);
    EXPECT_EQ(run({"check", "--mode", "trhc", "--d", "4", "--gate", "swap12", "--expect", "in-v2"}).code, 0);
    // P(123) + P(132) is Hermitian but not a 2-local Hamiltonian: Tr(HC) = 1440 at d = 4.
    EXPECT_EQ(run({"check", "--mode", "trhc", "--d", "4", "--gate", "cycle", "--expect", "not-in-v2"}).code, 0);
    EXPECT_EQ(run({"check", "--mode", "trhc", "--d", "4", "--expect", "not-in-v2"}).code, 0);
    EXPECT_EQ(run({"check", "--mode", "gate4", "--d", "3", "--expect", "breaks"}).code, 0);
    EXPECT_EQ(run({"check", "--mode", "gate4", "--d", "3", "--gate", "swap12", "--expect", "preserves"}).code, 0);
    EXPECT_EQ(run({"check", "--mode", "gate4", "--d", "3", "--gate", "nope"}).code, 2);
}

TEST(cli, ancilla_and_design) {
    auto r = run({"ancilla", "--wedge", "--d", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(parse(r)["passes"], true);
    EXPECT_EQ(run({"ancilla", "--pair", "2"}).code, 0);
    EXPECT_EQ(run({"ancilla", "--centerless", "--n", "2", "--d", "3"}).code, 0);
    EXPECT_EQ(run({"design", "--n", "12", "--d", "3", "--expect", "53"}).code, 0);
    EXPECT_EQ(run({"design", "--n", "10", "--mu"}).code, 0);
}

TEST(cli, closure_and_rep) {
    auto r = run({"closure", "--n", "4", "--d", "4", "--k", "2", "--center", "--derived"});
    ASSERT_EQ(r.code, 0);
    auto j = parse(r);
    EXPECT_EQ(j["dim"], 13);
    EXPECT_EQ(j["center_dim"], 2);
    EXPECT_EQ(j["derived_dim"], 11);
    EXPECT_EQ(run({"closure", "--audit", "--n-list", "3,4", "--d", "3", "--k", "3"}).code, 0);
    r = run({"rep", "--shape", "2,1", "--perm", "1,3,2"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NEAR(parse(r)["matrix"][0][1].get<double>(), std::sqrt(3.0) / 2, 1e-15);
    EXPECT_EQ(run({"rep", "--shape", "3,1", "--twin", "2,1,1", "--expect", "exists"}).code, 0);
    EXPECT_EQ(run({"rep", "--shape", "3,1", "--perm", "1,2"}).code, 2);
}

TEST(cli, usage_and_guards) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"partitions"}).code, 2);
    EXPECT_EQ(run({"partitions", "--count", "--n", "4"}).code, 2);
    EXPECT_EQ(run({"partitions", "--bogus"}).code, 2);
    EXPECT_EQ(run({"closure", "--n", "4", "--d", "4", "--k", "2", "--tol", "0.1"}).code, 2);
    EXPECT_EQ(run({"closure", "--n", "4", "--d", "4", "--k", "2", "--tol", "0"}).code, 2);
    EXPECT_EQ(run({"closure", "--n", "9", "--d", "3", "--k", "3"}).code, 2);
    EXPECT_EQ(run({"closure", "--n", "7", "--d", "7", "--k", "3"}).code, 2);
    EXPECT_EQ(run({"ancilla", "--centerless", "--n", "5", "--d", "2"}).code, 2);
    EXPECT_EQ(run({"partitions", "--ratio", "--n", "3", "--k", "3", "--d", "3"}).code, 2);
    EXPECT_EQ(run({"partitions", "--gap", "--n", "5", "--k", "2", "--d", "3"}).code, 2);
    EXPECT_EQ(run({"check", "--mode", "other"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(cli, deterministic_output_and_formats) {
    std::vector<std::string> args = {"check", "--mode", "semiuni", "--n", "5", "--d", "4", "--k", "2", "--seed", "5"};
    EXPECT_EQ(run(args).out, run(args).out);
    auto csv = args;
    csv.insert(csv.end(), {"--format", "csv"});
    auto r = run(csv);
    EXPECT_EQ(r.out.rfind("# schema: symcirc.check.semiuni.sectors.v1\n", 0), 0u);
    auto table = args;
    table.insert(table.end(), {"--format", "table"});
    EXPECT_NE(run(table).out.find("[3,1,1]"), std::string::npos);
    EXPECT_EQ(run({"partitions", "--count", "--n", "4", "--d", "3", "--format", "xml"}).code, 2);
}

TEST(cli, writes_out_file) {
    std::string path = ::testing::TempDir() + "symcirc_cli_out.json";
    auto r = run({"partitions", "--list", "--n", "4", "--d", "2", "--out", path});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    auto j = nlohmann::json::parse(in);
    EXPECT_EQ(j["diagrams"].size(), 3u);
    std::remove(path.c_str());
}

TEST(cli, operator_input_file) {
    std::string path = ::testing::TempDir() + "symcirc_cli_op.json";
    {
        std::ofstream f(path);
        f << R"({"n": 3, "d": 3, "blocks": [
            {"shape": [3], "re": [1], "im": [0]},
            {"shape": [2,1], "re": [1, 0, 0, 1], "im": [0, 0, 0, 0]},
            {"shape": [1,1,1], "re": [-1], "im": [0]}]})";
    }
    auto r = run({"check", "--mode", "vdet", "--d", "3", "--input", path, "--expect", "not-in-v2"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(run({"check", "--mode", "vdet", "--d", "4", "--input", path}).code, 2);
    std::remove(path.c_str());
}
