// Copyright 2026 The mrpred Authors.
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

#include "mrpred/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "json.hpp"
#include "support.hpp"

namespace mrpred::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome Exec(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  std::vector<std::string> argv = {"mrpred"};
  argv.insert(argv.end(), args.begin(), args.end());
  Outcome o;
  o.code = Run(argv, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

int CountLines(const std::string& text) {
  return static_cast<int>(std::count(text.begin(), text.end(), '\n'));
}

nlohmann::json Json(const std::string& path) {
  return nlohmann::json::parse(testing::ReadText(path));
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    unsetenv("MRPRED_SEED");
    saved_ = fs::current_path();
    // Bundled label ids are relative to the source root.
    fs::current_path(testing::SourceDir());
  }
  void TearDown() override {
    fs::current_path(saved_);
    unsetenv("MRPRED_SEED");
  }

  // Mines and labels the bundled synthetic corpus into the temp dir.
  std::string Dataset() {
    const std::string metrics = tmp_.File("metrics.csv");
    const std::string ds = tmp_.File("dataset.csv");
    EXPECT_EQ(Exec({"mine", "data/synthetic/java", "--out", metrics}).code, 0);
    EXPECT_EQ(Exec({"label", "--metrics", metrics, "--labels",
                    "data/synthetic/labels.csv", "--out", ds})
                  .code,
              0);
    return ds;
  }

  testing::TempDir tmp_;
  fs::path saved_;
};

TEST_F(CliTest, HelpVersionAndUsage) {
  EXPECT_EQ(Exec({"--help"}).code, 0);
  Outcome v = Exec({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE((v.out + v.err).find("0.1.0"), std::string::npos);
  Outcome none = Exec({});
  EXPECT_EQ(none.code, 1);
  Outcome bad = Exec(
      {"rank", "--dataset", "x.csv", "--out", tmp_.File("r.json"), "--bogus"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("--bogus"), std::string::npos);
  EXPECT_NE(bad.err.find("mrpred mine"), std::string::npos);
}

TEST_F(CliTest, MineFixturesOneRowPerMethod) {
  const std::string out = tmp_.File("m.csv");
  Outcome o = Exec({"mine", "tests/fixtures/three_files", "--out", out});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(CountLines(testing::ReadText(out)), 1 + 7);
  nlohmann::json side = Json(out + ".provenance.json");
  EXPECT_EQ(side["tool"], "mrpred");
  EXPECT_EQ(side["version"], "0.1.0");
  EXPECT_EQ(side["seed"], 42);
  EXPECT_EQ(side["methods"], 7);
  EXPECT_EQ(side["command_line"],
            "mrpred mine tests/fixtures/three_files --out " + out);
}

TEST_F(CliTest, MineRecursiveGolden) {
  const std::string out = tmp_.File("m.csv");
  ASSERT_EQ(
      Exec({"mine", "tests/fixtures/golden", "--recursive", "--out", out}).code,
      0);
  EXPECT_EQ(CountLines(testing::ReadText(out)),
            1 + static_cast<int>(testing::GoldenRows().size()));
}

TEST_F(CliTest, MineNothingIsRuntimeError) {
  fs::create_directory(tmp_.File("empty"));
  EXPECT_EQ(
      Exec({"mine", tmp_.File("empty"), "--out", tmp_.File("m.csv")}).code, 2);
  EXPECT_FALSE(fs::exists(tmp_.File("m.csv")));
}

TEST_F(CliTest, BogusMrListsValidNames) {
  const std::string ds = Dataset();
  Outcome o =
      Exec({"evaluate", "--dataset", ds, "--mr", "BOGUS", "--classifier", "rf",
            "--features", "all", "--out", tmp_.File("e.json")});
  EXPECT_EQ(o.code, 1);
  for (const char* mr : {"ADD", "EXC", "INC", "MUL", "PER", "INV"}) {
    EXPECT_NE(o.err.find(mr), std::string::npos) << mr;
  }
  EXPECT_FALSE(fs::exists(tmp_.File("e.json")));
}

TEST_F(CliTest, GridTwiceIsByteIdentical) {
  const std::string ds = Dataset();
  const std::string out = tmp_.File("grid.json");
  ASSERT_EQ(Exec({"grid", "--dataset", ds, "--seed", "7", "--out", out}).code,
            0);
  const std::string first = testing::ReadText(out);
  ASSERT_EQ(Exec({"grid", "--dataset", ds, "--seed", "7", "--out", out}).code,
            0);
  EXPECT_EQ(testing::ReadText(out), first);
  nlohmann::json g = nlohmann::json::parse(first);
  EXPECT_EQ(g["seed"], 7);
  EXPECT_EQ(g["version"], "0.1.0");
  EXPECT_EQ(g["cells"].size(), 90u);
}

TEST_F(CliTest, SeedPrecedence) {
  const std::string ds = Dataset();
  const std::string out = tmp_.File("rank.json");
  ASSERT_EQ(Exec({"rank", "--dataset", ds, "--runs", "2", "--out", out}).code,
            0);
  EXPECT_EQ(Json(out)["seed"], 42);
  setenv("MRPRED_SEED", "99", 1);
  ASSERT_EQ(Exec({"rank", "--dataset", ds, "--runs", "2", "--out", out}).code,
            0);
  EXPECT_EQ(Json(out)["seed"], 99);
  ASSERT_EQ(Exec({"rank", "--dataset", ds, "--runs", "2", "--seed", "5",
                  "--out", out})
                .code,
            0);
  EXPECT_EQ(Json(out)["seed"], 5);
  setenv("MRPRED_SEED", "notanumber", 1);
  EXPECT_EQ(Exec({"rank", "--dataset", ds, "--runs", "2", "--out", out}).code,
            1);
}

TEST_F(CliTest, OutputMustDifferFromInput) {
  const std::string ds = Dataset();
  const std::string before = testing::ReadText(ds);
  EXPECT_EQ(Exec({"rank", "--dataset", ds, "--out", ds}).code, 1);
  EXPECT_EQ(testing::ReadText(ds), before);
}

TEST_F(CliTest, UnwritableOutputFailsBeforeWork) {
  const std::string ds = Dataset();
  EXPECT_EQ(
      Exec({"rank", "--dataset", ds, "--out", tmp_.File("no/such/dir/r.json")})
          .code,
      1);
}

TEST_F(CliTest, InputsAreNotMutated) {
  const std::string ds = Dataset();
  const std::string before = testing::ReadText(ds);
  const std::string labels = testing::ReadText("data/synthetic/labels.csv");
  ASSERT_EQ(Exec({"sweep", "--dataset", ds, "--out", tmp_.File("s.json")}).code,
            0);
  EXPECT_EQ(testing::ReadText(ds), before);
  EXPECT_EQ(testing::ReadText("data/synthetic/labels.csv"), labels);
}

TEST_F(CliTest, EvaluateModes) {
  const std::string ds = Dataset();
  const std::string out = tmp_.File("e.json");
  ASSERT_EQ(Exec({"evaluate", "--dataset", ds, "--mr", "ADD", "--classifier",
                  "rf", "--features", "top:12", "--folds", "10", "--seed", "17",
                  "--out", out})
                .code,
            0);
  nlohmann::json e = Json(out);
  EXPECT_EQ(e["mr"], "ADD");
  EXPECT_EQ(e["seed"], 17);
  EXPECT_EQ(e["feature_subset"].size(), 12u);
  EXPECT_EQ(e["per_fold"].size(), 10u);

  ASSERT_EQ(Exec({"evaluate", "--dataset", ds, "--mr", "INV", "--classifier",
                  "svm", "--features", "list:CCN,tloc", "--repeated-holdout",
                  "70:30", "--repeats", "10", "--out", out})
                .code,
            0);
  e = Json(out);
  EXPECT_EQ(e["mode"], "holdout");
  EXPECT_EQ(e["per_fold"].size(), 10u);
  EXPECT_EQ(e["feature_subset"], (nlohmann::json{"CCN", "tloc"}));

  EXPECT_EQ(Exec({"evaluate", "--dataset", ds, "--mr", "ADD", "--classifier",
                  "knn", "--features", "all", "--out", out})
                .code,
            1);
  EXPECT_EQ(Exec({"evaluate", "--dataset", ds, "--mr", "ADD", "--classifier",
                  "rf", "--features", "list:nope", "--out", out})
                .code,
            1);
}

TEST_F(CliTest, RankSweepReport) {
  const std::string ds = Dataset();
  const std::string rank = tmp_.File("rank.json");
  const std::string grid = tmp_.File("grid.json");
  const std::string report = tmp_.File("report.md");
  ASSERT_EQ(Exec({"rank", "--dataset", ds, "--out", rank}).code, 0);
  EXPECT_EQ(Json(rank)["runs"], 10);
  ASSERT_EQ(
      Exec({"grid", "--dataset", ds, "--sizes", "3,12", "--out", grid}).code,
      0);
  Outcome o =
      Exec({"report", "--grid", grid, "--importance", rank, "--out", report});
  ASSERT_EQ(o.code, 0) << o.err;
  const std::string md = testing::ReadText(report);
  EXPECT_NE(md.find("seed"), std::string::npos);
  EXPECT_TRUE(fs::exists(tmp_.File("report.comparison.csv")));
  EXPECT_TRUE(fs::exists(tmp_.File("report.comparison.csv.provenance.json")));
  EXPECT_EQ(
      Exec({"grid", "--dataset", ds, "--sizes", "3,40", "--out", grid}).code,
      1);
}

}  // namespace
}  // namespace mrpred::cli
