// Copyright 2026 The mnrisk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using mnrisk::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(cells);
    }
    return rows;
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("mnrisk_cli_" + name)).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

TEST(Cli, RegionExact) {
    auto r = call({"region", "--k", "3", "--R", "0.5", "--exact"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[1][2], "0.604600");
    r = call({"region", "--k", "2", "--R", "0.5", "--exact"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(std::stod(csv_rows(r.out)[1][2]), 0.0);
}

TEST(Cli, RegionTableOneLayout) {
    const auto r = call({"region", "--prior", "inv-k", "--k", "5,10,20", "--n", "2k,k2", "--mc", "2e4"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 7u);
    EXPECT_EQ(rows[1][0], "5");
    EXPECT_EQ(rows[1][2], "10");
    EXPECT_NEAR(std::stod(rows[1][6]), 2.68e-3, 0.005e-3);
    EXPECT_EQ(rows[6][2], "400");
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(call({"region", "--k", "3", "--R", "0.5", "--exact", "--mc", "10"}).code, 2);
    EXPECT_EQ(call({"region", "--k", "3", "--exact"}).code, 2);
    EXPECT_EQ(call({"region", "--k", "3", "--R", "0.5", "--n", "k"}).code, 2);
    EXPECT_EQ(call({"region", "--k", "3", "--prior", "beta"}).code, 2);
    EXPECT_EQ(call({"region", "--k", "3", "--mc", "1.5"}).code, 2);
    EXPECT_EQ(call({"region", "--k", "3", "--format", "xml"}).code, 2);
    EXPECT_EQ(call({"nonsense"}).code, 2);
    EXPECT_EQ(call({}).code, 2);
    EXPECT_EQ(call({"l1", "--theta", "0.5,0.5", "--k", "2"}).code, 2);
    EXPECT_EQ(call({"l1", "--theta", "0.7,0.5"}).code, 2);
    EXPECT_EQ(call({"stock", "--from-truth", "--reps", "3"}).code, 2);
    EXPECT_EQ(call({"avgrisk", "--C", "1,2", "--mc", "10"}).code, 2);
    EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, ComputeErrorNamesCell) {
    auto r = call({"l1", "--k", "1", "--n", "20", "--samples", "10"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("k=1 n=20"), std::string::npos) << r.err;
    r = call({"region", "--k", "4", "--R", "0.6", "--exact"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("k=4"), std::string::npos) << r.err;
    r = call({"region", "--k", "1000", "--n", "k9", "--mc", "0"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("k=1000 n=k9"), std::string::npos) << r.err;
}

TEST(Cli, AvgRisk) {
    const auto r = call({"avgrisk", "--k", "50,10", "--n", "k,k2", "--mc", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 5u);
    EXPECT_EQ(rows[2][1], "2500");
    EXPECT_NEAR(std::stod(rows[2][2]), 3.84e-4, 0.005e-4);
    EXPECT_NEAR(std::stod(rows[2][3]), 0.0196, 0.00005);
    EXPECT_NEAR(std::stod(rows[3][3]), 0.5, 1e-12);
    EXPECT_NEAR(std::stod(rows[3][6]), 0.1653, 0.00005);
    const auto c = call({"avgrisk", "--k", "2", "--n", "2", "--C", "1"});
    ASSERT_EQ(c.code, 0);
    EXPECT_NEAR(std::stod(csv_rows(c.out)[1][5]), 0.5, 1e-12);
}

TEST(Cli, L1) {
    auto r = call({"l1", "--theta", "0.5,0.5", "--n", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(std::stod(csv_rows(r.out)[1][2]), 1.0);
    r = call({"l1", "--k", "10", "--samples", "300", "--n", "20,100"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_NEAR(std::stod(rows[2][2]), 0.2095, 0.02);
    r = call({"l1", "--k", "50", "--samples", "200"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(csv_rows(r.out).size(), 15u);
    EXPECT_NEAR(std::stod(csv_rows(r.out)[1][2]), 1.063, 0.08);
}

TEST(Cli, StockFromTruth) {
    const auto r = call({"stock", "--stock-total", "1000", "--from-truth"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 61u);
    std::ifstream in(std::filesystem::path(MNRISK_TEST_DATA_DIR) / "reference_stock.csv");
    std::string line;
    std::getline(in, line);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        std::getline(in, line);
        const auto expected = csv_rows(line)[0];
        EXPECT_EQ(rows[i][0], expected[0]);
        EXPECT_EQ(rows[i][3], expected[1]) << expected[0];
    }
}

TEST(Cli, StockEmitAndReport) {
    auto r = call({"stock", "--reps", "1", "--seed", "5", "--emit-stock"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 61u);
    EXPECT_EQ(rows[0].size(), 6u);
    const auto per_rep = temp_path("per_rep.csv");
    r = call({"stock", "--reps", "30", "--per-rep-csv", per_rep});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["reps"], 30);
    EXPECT_EQ(csv_rows(slurp(per_rep)).size(), 31u);
    std::filesystem::remove(per_rep);
    EXPECT_EQ(call({"stock", "--data", "/nonexistent.csv"}).code, 1);
}

TEST(Cli, ByteIdenticalOutputs) {
    const std::vector<std::vector<std::string>> commands = {
        {"region", "--k", "4,6", "--n", "k,2k", "--mc", "40000"},
        {"avgrisk", "--mc", "30000", "--format", "json"},
        {"l1", "--k", "10", "--n", "20,40", "--samples", "500"},
        {"stock", "--reps", "40"},
    };
    for (const auto& base : commands) {
        std::string first;
        for (const auto* workers : {"1", "3"}) {
            auto args = base;
            const auto path = temp_path("ident");
            args.insert(args.end(), {"--seed", "77", "--workers", workers, "--out", path});
            ASSERT_EQ(call(args).code, 0) << base[0];
            const auto text = slurp(path);
            std::filesystem::remove(path);
            if (first.empty()) {
                first = text;
                EXPECT_FALSE(first.empty());
            } else {
                EXPECT_EQ(text, first) << base[0];
            }
        }
    }
}

TEST(Cli, SeedFromEnvironment) {
    const std::vector<std::string> args{"region", "--k", "5", "--n", "k", "--mc", "1000"};
    const auto base = call(args).out;
    ::setenv("MNRISK_SEED", "12345", 1);
    const auto env = call(args).out;
    auto explicit_args = args;
    explicit_args.insert(explicit_args.end(), {"--seed", "12345"});
    const auto flag = call(explicit_args).out;
    ::setenv("MNRISK_SEED", "twelve", 1);
    const int bad = call(args).code;
    ::unsetenv("MNRISK_SEED");
    EXPECT_NE(base, env);
    EXPECT_EQ(env, flag);
    EXPECT_EQ(bad, 2);
    EXPECT_EQ(mnrisk::cli::default_seed(), mnrisk::cli::kDefaultSeed);
}

TEST(Cli, JsonNumbersRoundTrip) {
    const auto r = call({"point", "--theta", "0.2,0.3,0.5", "--n", "10", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j[0]["mle_risk"].get<double>(), (1.0 - 0.38) / 10.0);
    EXPECT_EQ(j[0]["better"], "bayes");
}
