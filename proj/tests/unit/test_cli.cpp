// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"
#include "output.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using rankgauge::cli::run;

namespace {

struct Outcome {
    int         code;
    std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int          code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path &p) {
    std::ifstream     in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("rankgauge_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
        unsetenv("RANKGAUGE_SEED");
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path write(const std::string &name, const std::string &text) {
        const auto p = dir_ / name;
        std::ofstream(p) << text;
        return p;
    }

    fs::path dir_;
};

} // namespace

TEST(CsvOutput, SeventeenDigitsAndNewlines) {
    EXPECT_EQ(rankgauge::cli::num(0.1), "0.10000000000000001");
    EXPECT_EQ(rankgauge::cli::num(0.25), "0.25");
    rankgauge::cli::CsvTable t({"a", "b"});
    t.add({"1", "2"});
    EXPECT_EQ(t.str(), "a,b\n1,2\n");
    EXPECT_EQ(rankgauge::cli::hex64(rankgauge::cli::fnv1a64("")), "cbf29ce484222325");
    EXPECT_EQ(rankgauge::cli::hex64(rankgauge::cli::fnv1a64("a")), "af63dc4c8601ec8c");
}

TEST_F(CliTest, ComputeStrip) {
    const auto r = invoke({"compute", "--example", "strip:d=3,theta=pi/2", "--r", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto first_row = r.out.substr(r.out.find('\n') + 1);
    const double value   = std::stod(first_row.substr(first_row.find(',') + 1));
    EXPECT_NEAR(value, 0.25, 1e-9);
    EXPECT_NE(r.out.find("trial,seed,value,iterations,converged,termination"), std::string::npos);
    EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST_F(CliTest, ComputeStripRankThreeVanishes) {
    const auto r = invoke({"compute", "--example", "strip:d=3,theta=pi/2", "--r", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto first_row = r.out.substr(r.out.find('\n') + 1);
    EXPECT_LT(std::stod(first_row.substr(first_row.find(',') + 1)), 1e-6);
}

TEST_F(CliTest, ComputeTiles) {
    const auto r = invoke({"compute", "--example", "tiles", "--r", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto first_row = r.out.substr(r.out.find('\n') + 1);
    EXPECT_NEAR(std::stod(first_row.substr(first_row.find(',') + 1)), 0.0284, 1e-3);
}

TEST_F(CliTest, ComputeFromFileAndEmitClosest) {
    const auto in = write("bell.json", R"({"dims":[2,2],"vectors":[[[1,0],[0,0],[0,0],[1,0]]]})");
    const auto r  = invoke({"compute", in.string(), "--emit-closest", "--out", (dir_ / "o").string()});
    ASSERT_EQ(r.code, 0) << r.err;
    ASSERT_TRUE(fs::exists(dir_ / "o" / "closest.json"));
    ASSERT_TRUE(fs::exists(dir_ / "o" / "closest.manifest.json"));
    const auto closest = nlohmann::json::parse(slurp(dir_ / "o" / "closest.json"));
    EXPECT_EQ(closest["dims"], nlohmann::json::array({2, 2}));
    const auto summary = slurp(dir_ / "o" / "compute.csv");
    ASSERT_EQ(summary.rfind("r,value,best_trial,termination\n2,", 0), 0u) << summary;
    const auto row = summary.substr(summary.find('\n') + 1);
    EXPECT_NEAR(std::stod(row.substr(row.find(',') + 1)), 0.5, 1e-10);
}

TEST_F(CliTest, ExitCodes) {
    EXPECT_EQ(invoke({"compute"}).code, 4);
    EXPECT_EQ(invoke({}).code, 4);
    EXPECT_EQ(invoke({"compute", "--example", "tiles", "--bogus"}).code, 4);
    EXPECT_EQ(invoke({"compute", "--example", "tiles", "--r", "1"}).code, 4);
    EXPECT_EQ(invoke({"compute", "--example", "tiles", "--trials", "0"}).code, 4);
    EXPECT_EQ(invoke({"reproduce", "fig9"}).code, 4);
    EXPECT_EQ(invoke({"compute", (dir_ / "missing.json").string()}).code, 2);
    EXPECT_EQ(invoke({"compute", "--example", "nosuch"}).code, 2);
    EXPECT_EQ(invoke({"--help"}).code, 0);

    const auto bad = write("bad.json", "{\"dims\": [2,2],\n \"vectors\": [[[1,0] [0,0]]]}");
    const auto r   = invoke({"compute", bad.string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;

    const auto mismatch = write("mismatch.json", R"({"dims":[2,2],"vectors":[[[1,0],[0,0]]]})");
    EXPECT_EQ(invoke({"compute", mismatch.string()}).code, 4);

    const auto both = invoke({"compute", mismatch.string(), "--example", "tiles"});
    EXPECT_EQ(both.code, 4);
}

TEST_F(CliTest, BorderRankDicke) {
    const auto r = invoke({"border-rank", "--example", "dicke:n=3,k=1", "--r-max", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("r,value,termination\n", 0), 0u);
    EXPECT_NE(r.out.find("\nborder_rank,2\n"), std::string::npos) << r.out;
}

TEST_F(CliTest, BorderRankWithoutTransition) {
    const auto r = invoke({"border-rank", "--example", "dicke:n=4,k=2", "--r-max", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("border_rank,>=3\n"), std::string::npos) << r.out;
}

TEST_F(CliTest, GesSummaries) {
    const auto ges = invoke({"ges", "--example", "ges:d=3,theta=pi/2"});
    ASSERT_EQ(ges.code, 0) << ges.err;
    EXPECT_NE(ges.out.find("genuinely_entangled,true\n"), std::string::npos);
    EXPECT_EQ(ges.out.rfind("bipartition,value\n", 0), 0u);

    const auto zb = invoke({"ges", "--example", "zero-bell"});
    ASSERT_EQ(zb.code, 0) << zb.err;
    EXPECT_NE(zb.out.find("genuinely_entangled,false\n"), std::string::npos);

    const auto ghz = invoke({"ges", "--example", "ghz"});
    EXPECT_NE(ghz.out.find("genuinely_entangled,true\n"), std::string::npos);
}

TEST_F(CliTest, ManifestAndBitForBitReplay) {
    const auto o1 = dir_ / "first";
    const auto r  = invoke({"border-rank", "--example", "wtype:a=1,b=1,c=1", "--r-max", "3", "--seed", "5", "--out", o1.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto manifest = nlohmann::json::parse(slurp(o1 / "border_rank.manifest.json"));
    EXPECT_EQ(manifest["command"], "border-rank");
    EXPECT_EQ(manifest["seed"], 5);
    EXPECT_EQ(manifest["config"]["r_max"], 3);
    EXPECT_EQ(manifest["config"]["trials"], 3);
    EXPECT_TRUE(manifest.contains("input_hash"));
    EXPECT_TRUE(manifest.contains("version"));
    EXPECT_TRUE(manifest.contains("wall_time"));

    const auto o2 = dir_ / "second";
    const auto rr = invoke({"replay", (o1 / "border_rank.manifest.json").string(), "--out", o2.string()});
    ASSERT_EQ(rr.code, 0) << rr.err;
    EXPECT_EQ(slurp(o1 / "border_rank.csv"), slurp(o2 / "border_rank.csv"));
}

TEST_F(CliTest, SeedFallsBackToEnvironment) {
    setenv("RANKGAUGE_SEED", "1234", 1);
    const auto r = invoke({"compute", "--example", "strip", "--out", dir_.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(slurp(dir_ / "compute.manifest.json"))["seed"], 1234);
    EXPECT_EQ(invoke({"compute", "--example", "strip", "--seed", "9", "--out", dir_.string()}).code, 0);
    EXPECT_EQ(nlohmann::json::parse(slurp(dir_ / "compute.manifest.json"))["seed"], 9);
    setenv("RANKGAUGE_SEED", "abc", 1);
    EXPECT_EQ(invoke({"compute", "--example", "strip"}).code, 4);
    unsetenv("RANKGAUGE_SEED");
}

TEST_F(CliTest, ReproduceTable2WithCap) {
    const auto r = invoke({"reproduce", "table2", "--max-dim", "24", "--out", dir_.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto csv = slurp(dir_ / "table2.csv");
    EXPECT_NE(csv.find("\n2x3x4,17,0.01413"), std::string::npos) << csv;
    EXPECT_EQ(csv.find("2x3x6"), std::string::npos);
    EXPECT_TRUE(fs::exists(dir_ / "table2.manifest.json"));
}

TEST_F(CliTest, ReproduceFig3Small) {
    const auto r = invoke({"reproduce", "fig3", "--points", "20", "--out", dir_.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(slurp(dir_ / "fig3.csv"));
    std::string        line;
    std::getline(in, line);
    EXPECT_EQ(line, "a,b,c,analytic,computed,abs_error");
    int rows = 0;
    while(std::getline(in, line)) {
        ++rows;
        EXPECT_LT(std::stod(line.substr(line.rfind(',') + 1)), 1e-8) << line;
    }
    EXPECT_EQ(rows, 20);
}

TEST_F(CliTest, ReplayRejectsBadManifest) {
    const auto m = write("m.json", R"({"command":"x"})");
    EXPECT_EQ(invoke({"replay", m.string()}).code, 2);
    EXPECT_EQ(invoke({"replay", (dir_ / "none.json").string()}).code, 2);
}
