// Copyright 2026 The mdist Authors
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


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "mdist/json_io.hpp"
#include "oracles.hpp"

namespace mdist {
namespace {

namespace fs = std::filesystem;
using testing::kPi2;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
  Json error() const { return Json::parse(err); }
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "mdist");
  std::ostringstream out, err;
  Outcome o;
  o.code = cli::run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mdist_cli_" + std::string(::testing::UnitTest::GetInstance()
                                           ->current_test_info()
                                           ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

constexpr const char* kInterval =
    R"({"vertices": ["a", "b"], "edges": [{"id": "e0", "u": "a", "v": "b", "length": 1.0}]})";
constexpr const char* kLoop =
    R"({"vertices": ["a"], "edges": [{"id": "e0", "u": "a", "v": "a", "length": 1.0}]})";

TEST_F(CliTest, GenerateWritesCanonicalGraphJson) {
  const Outcome o = run({"generate", "--family", "flower", "--m", "4",
                         "--total-length", "1", "--seed", "7"});
  ASSERT_EQ(o.code, cli::kOk) << o.err;
  const MetricGraph g = read_graph_json(o.out);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_EQ(betti_number(g), 4);
  EXPECT_EQ(o.out, write_graph_json(g) + "\n");

  const std::string path = (dir_ / "g.json").string();
  ASSERT_EQ(run({"generate", "--family", "star", "--m", "3", "-o", path}).code,
            cli::kOk);
  EXPECT_EQ(read_graph_file(path).edge_count(), 3u);
}

TEST_F(CliTest, AnalyzeInterval) {
  const Outcome o = run({"analyze", "-i", write("i.json", kInterval), "--tol", "1e-6"});
  ASSERT_EQ(o.code, cli::kOk) << o.err;
  const Json j = o.json();
  EXPECT_NEAR(j["rho"].get<double>(), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(j["mu2_rho_sq"].get<double>(), kPi2 / 9.0, 1e-5);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_FALSE(j.contains("timings"));
  const double mu2 = j["mu2"]["value"].get<double>();
  const double rho = j["rho"].get<double>();
  EXPECT_NEAR(j["mu2_rho"].get<double>(), mu2 * rho, 1e-12);
  EXPECT_NEAR(j["mu2_rho_sq"].get<double>(), mu2 * rho * rho, 1e-12);
  EXPECT_TRUE(j["rho_monte_carlo"]["within_4_se"].get<bool>());
}

TEST_F(CliTest, AnalyzeFlower) {
  const std::string path = (dir_ / "f.json").string();
  ASSERT_EQ(run({"generate", "--family", "flower", "--m", "2", "-o", path}).code,
            cli::kOk);
  const Outcome o = run({"analyze", "-i", path});
  ASSERT_EQ(o.code, cli::kOk) << o.err;
  const Json j = o.json();
  EXPECT_EQ(j["rho"].get<double>(), 0.1875);
  EXPECT_TRUE(j["doubly_connected"].get<bool>());
}

TEST_F(CliTest, AnalyzeIsBitIdenticalAcrossRuns) {
  const std::string path = write("i.json", kInterval);
  const Outcome a = run({"analyze", "-i", path, "--dirichlet-samples", "2"});
  const Outcome b = run({"analyze", "-i", path, "--dirichlet-samples", "2"});
  EXPECT_EQ(a.out, b.out);
  const Outcome t = run({"analyze", "-i", path, "--timings"});
  EXPECT_TRUE(t.json().contains("timings"));
}

TEST_F(CliTest, DistanceOnLoop) {
  const std::string path = write("c.json", kLoop);
  const Outcome o = run({"distance", "-i", path, "--from", "e0:0.25", "--to", "e0:0.75"});
  ASSERT_EQ(o.code, cli::kOk) << o.err;
  EXPECT_DOUBLE_EQ(o.json()["distance"].get<double>(), 0.5);
}

TEST_F(CliTest, DistanceWithColonsInEdgeIds) {
  const std::string path = write(
      "g.json",
      R"({"vertices": ["a", "b"], "edges": [{"id": "x:y", "u": "a", "v": "b", "length": 2.0}]})");
  const Outcome o = run({"distance", "-i", path, "--from", "x:y:0.5", "--to", "x:y:1.75"});
  ASSERT_EQ(o.code, cli::kOk) << o.err;
  EXPECT_DOUBLE_EQ(o.json()["distance"].get<double>(), 1.25);
}

TEST_F(CliTest, InputErrorsAreStructured) {
  const std::string path = write("i.json", kInterval);
  struct Case {
    std::vector<std::string> args;
    std::string kind;
  };
  const std::vector<Case> cases = {
      {{"analyze", "-i", (dir_ / "missing.json").string()}, "file"},
      {{"distance", "-i", path, "--from", "e0", "--to", "e0:0.1"}, "point"},
      {{"distance", "-i", path, "--from", "e9:0.1", "--to", "e0:0.1"}, "point"},
      {{"distance", "-i", path, "--from", "e0:abc", "--to", "e0:0.1"}, "point"},
      {{"distance", "-i", path, "--from", "e0:1.5", "--to", "e0:0.1"}, "point"},
      {{"analyze", "-i", write("bad.json", R"({"vertices": ["a"], "edges": []})")},
       "graph"},
      {{"analyze", "-i", write("zero.json",
                               R"({"vertices": ["a", "b"], "edges": [{"id": "e", "u": "a", "v": "b", "length": 0}]})")},
       "graph"},
      {{"generate", "--family", "lattice"}, "usage"},
      {{"frobnicate"}, "usage"},
  };
  for (const Case& c : cases) {
    const Outcome o = run(c.args);
    EXPECT_EQ(o.code, cli::kBadInput) << c.args[0];
    EXPECT_TRUE(o.out.empty());
    EXPECT_EQ(o.error()["error"], c.kind) << o.err;
    EXPECT_TRUE(o.error()["message"].is_string());
  }
}

TEST_F(CliTest, SpectralFailureExitCode) {
  const Outcome o = run({"verify", "--family", "path", "--tol", "1e-300"});
  EXPECT_EQ(o.code, cli::kSpectralFailure);
  EXPECT_EQ(o.json()["status"], "indeterminate");
  const Outcome a = run({"analyze", "-i", write("i.json", kInterval), "--tol", "1e-300"});
  EXPECT_EQ(a.code, cli::kSpectralFailure);
  EXPECT_TRUE(a.json()["mu2"].is_null());
}

TEST_F(CliTest, VerifyFromFlagsAndFile) {
  const Outcome f = run({"verify", "--family", "star", "--m", "4"});
  ASSERT_EQ(f.code, cli::kOk) << f.err;
  EXPECT_EQ(f.json()["descriptor"], "star m=4 L=1.0");
  EXPECT_EQ(f.json()["status"], "pass");
  const Outcome g = run({"verify", "-i", write("c.json", kLoop)});
  ASSERT_EQ(g.code, cli::kOk) << g.err;
  EXPECT_EQ(g.json()["dirichlet_samples"].size(), 3u);
}

TEST_F(CliTest, SurgeryAppliesOperationsInOrder) {
  const std::string graph = write("i.json", kInterval);
  const std::string ops = write("ops.json", R"({"ops": [
      {"op": "glue", "v1": "a", "v2": "b"},
      {"op": "attach", "vertex": "a", "length": 0.5},
      {"op": "set_length", "edge": "a.pendant", "length": 0.25},
      {"op": "subdivide", "edge": "e0", "offset": 0.5}
  ]})");
  const std::string out = (dir_ / "out.json").string();
  const Outcome o = run({"surgery", "-i", graph, "--ops", ops, "-o", out});
  ASSERT_EQ(o.code, cli::kOk) << o.err;
  const Json j = o.json();
  EXPECT_NEAR(j["rho_before"].get<double>(), 1.0 / 3.0, 1e-15);
  ASSERT_EQ(j["steps"].size(), 4u);
  EXPECT_NEAR(j["steps"][0]["rho"].get<double>(), 0.25, 1e-15);
  EXPECT_DOUBLE_EQ(j["steps"][2]["L"].get<double>(), 1.25);
  const MetricGraph g = read_graph_file(out);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(betti_number(g), 1);
  EXPECT_EQ(j["rho_after"].get<double>(), j["steps"][3]["rho"].get<double>());
}

TEST_F(CliTest, SurgeryCutAndUnfold) {
  const std::string flower = (dir_ / "f.json").string();
  run({"generate", "--family", "flower", "--m", "2", "-o", flower});
  const Outcome cut = run({"surgery", "-i", flower, "--ops",
                           write("cut.json", R"([{"op": "cut", "vertex": "v0", "second": [{"edge": "e0", "end": "v"}, {"edge": "e1", "end": "v"}]}])")});
  ASSERT_EQ(cut.code, cli::kOk) << cut.err;
  EXPECT_NEAR(cut.json()["rho_after"].get<double>(), 0.25, 1e-15);

  const Outcome bad = run({"surgery", "-i", flower, "--ops",
                           write("bad.json", R"([{"op": "cut", "vertex": "v0", "second": [{"edge": "e1", "end": "u"}, {"edge": "e1", "end": "v"}]}])")});
  EXPECT_EQ(bad.code, cli::kBadInput);
  EXPECT_EQ(bad.error()["error"], "surgery");

  const std::string star = (dir_ / "s.json").string();
  run({"generate", "--family", "star", "--m", "3", "-o", star});
  const Outcome unfold = run({"surgery", "-i", star, "--ops",
                              write("u.json", R"([{"op": "unfold", "e1": "e0", "e2": "e1", "vertex": "v0"}])")});
  ASSERT_EQ(unfold.code, cli::kOk) << unfold.err;
  EXPECT_GT(unfold.json()["rho_after"].get<double>(),
            unfold.json()["rho_before"].get<double>());

  const Outcome unknown = run({"surgery", "-i", star, "--ops",
                               write("x.json", R"([{"op": "twist"}])")});
  EXPECT_EQ(unknown.code, cli::kBadInput);
}

TEST_F(CliTest, SweepWritesSummaryAndCsv) {
  const std::string ensemble = write("e.json", R"({"items": [
      {"family": "path", "m": 1},
      {"family": "flower", "m": [2, 5]},
      {"family": "random_tree", "edges": 4, "seed": 10, "count": 3}
  ]})");
  const std::string csv = (dir_ / "out.csv").string();
  const Outcome o = run({"sweep", "-e", ensemble, "--csv", csv});
  ASSERT_EQ(o.code, cli::kOk) << o.err;
  const Json j = o.json();
  EXPECT_EQ(j["summary"]["count"], 8);
  EXPECT_EQ(j["records"].size(), 8u);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "descriptor,family,seed,E,V,beta,L,rho,diameter,mu2,mu2_rho,mu2_rho_sq,status");
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, 8u);
  EXPECT_EQ(run({"sweep", "-e", ensemble}).out, o.out);
}

TEST_F(CliTest, SweepRejectsMalformedEnsembles) {
  EXPECT_EQ(run({"sweep", "-e", write("a.json", R"({"items": [{"m": 3}]})")}).code,
            cli::kBadInput);
  EXPECT_EQ(run({"sweep", "-e", write("b.json", "{oops")}).code, cli::kBadInput);
}

}  // namespace
}  // namespace mdist
