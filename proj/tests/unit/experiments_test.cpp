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

#include <cmath>
#include <sstream>

#include "mdist/experiments.hpp"
#include "mdist/generators.hpp"
#include "mdist/graph.hpp"
#include "oracles.hpp"

namespace mdist {
namespace {

using testing::kPi2;

FamilySpec spec_of(Family family, std::size_t m = 1) {
  FamilySpec s;
  s.family = family;
  s.m = m;
  return s;
}

VerificationRecord verify(const FamilySpec& s, std::size_t dirichlet = 0) {
  VerifyOptions opts;
  opts.random_dirichlet_vertices = dirichlet;
  opts.seed = s.seed;
  return verify_graph(generate(s), describe(s), opts);
}

TEST(Verify, FlowerMeetsTheLowerBoundWithEquality) {
  const VerificationRecord r = verify(spec_of(Family::kFlower, 3));
  const BoundCheck* c = r.find("rho_lower");
  ASSERT_NE(c, nullptr);
  EXPECT_NEAR(c->rhs, 5.0 / 36.0, 1e-15);
  EXPECT_NEAR(c->slack, 0.0, 1e-9);
  EXPECT_EQ(c->verdict, Verdict::kPass);
  EXPECT_EQ(r.status, Verdict::kPass);
}

TEST(Verify, IntervalMeetsTheUpperBoundWithEquality) {
  const VerificationRecord r = verify(spec_of(Family::kPath, 1));
  EXPECT_NEAR(r.find("rho_upper")->slack, 0.0, 1e-9);
  EXPECT_EQ(r.find("rho_doubly_connected")->verdict, Verdict::kNotApplicable);
  EXPECT_NEAR(r.mu2_rho_sq, kPi2 / 9.0, 1e-5);
  // mu2 equals pi^2/L^2 on paths: spectral tolerance applies.
  const BoundCheck* nicaise = r.find("mu2_nicaise_lower");
  EXPECT_LE(std::abs(nicaise->slack), nicaise->tolerance);
}

TEST(Verify, LoopMeetsTheDoublyConnectedBoundWithEquality) {
  const VerificationRecord r = verify(spec_of(Family::kCycle, 1));
  EXPECT_TRUE(r.doubly_connected);
  EXPECT_NEAR(r.find("rho_doubly_connected")->slack, 0.0, 1e-9);
  EXPECT_EQ(r.status, Verdict::kPass);
}

TEST(Verify, EveryRecordIsDerivedFromStoredValues) {
  const VerificationRecord r = verify(spec_of(Family::kStar, 4), 3);
  for (const BoundCheck& c : r.checks) {
    if (c.verdict == Verdict::kIndeterminate) continue;
    EXPECT_DOUBLE_EQ(c.slack, c.rhs - c.lhs) << c.name;
  }
  EXPECT_EQ(r.dirichlet_samples.size(), 3u);
  EXPECT_EQ(r.status, overall(r.checks));
  EXPECT_NEAR(r.mu2_rho_sq, r.mu2->value * r.rho * r.rho, 1e-12);
}

TEST(Verify, MeanVertexProductIsAtLeastOne) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const FamilySpec s = testing::random_spec(seed, 8);
    const VerificationRecord r = verify(s);
    ASSERT_TRUE(r.lambda1_mean.has_value()) << r.descriptor;
    EXPECT_NEAR(r.rho_at_mean_vertex, r.rho, 1e-10 * r.total_length);
    EXPECT_GE(r.lambda1_rho_length, 1.0 - 1e-5) << r.descriptor;
    EXPECT_LE(r.lambda1_mean->value,
              r.mu2->value * (1.0 + 2e-5)) << r.descriptor;
  }
}

TEST(Verify, AllInequalitiesHoldOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const FamilySpec s = testing::random_spec(seed, 10);
    const VerificationRecord r = verify(s, 2);
    EXPECT_EQ(r.status, Verdict::kPass) << r.descriptor;
    for (const BoundCheck& c : r.checks) {
      EXPECT_NE(c.verdict, Verdict::kFail) << r.descriptor << " " << c.name;
      EXPECT_NE(c.verdict, Verdict::kIndeterminate) << r.descriptor << " " << c.name;
    }
  }
}

TEST(Verify, SpectralFailureMarksDependentChecksIndeterminate) {
  VerifyOptions opts;
  opts.spectral.tol = 1e-15;
  opts.spectral.max_rounds = 1;
  const VerificationRecord r =
      verify_graph(generate(spec_of(Family::kStar, 3)), "star", opts);
  EXPECT_FALSE(r.mu2.has_value());
  EXPECT_FALSE(r.spectral_error.empty());
  EXPECT_EQ(r.find("rho_lower")->verdict, Verdict::kPass);
  EXPECT_EQ(r.find("mu2_rho_lower")->verdict, Verdict::kIndeterminate);
  EXPECT_EQ(r.status, Verdict::kIndeterminate);
  EXPECT_FALSE(r.failed());
}

TEST(Verify, ViolationsAreReportedAsFailures) {
  const BoundCheck c = check_le("x", 1.0, 0.5, 1e-9);
  EXPECT_EQ(c.verdict, Verdict::kFail);
  EXPECT_EQ(overall({c, check_le("y", 0.0, 1.0, 0.0)}), Verdict::kFail);
  EXPECT_EQ(check_le("s", 1.0, 1.0, 1e-9, true).verdict, Verdict::kFail);
  EXPECT_EQ(check_le("s", 1.0, 1.0 + 1e-15, 1e-9, true).verdict, Verdict::kPass);
  EXPECT_EQ(check_le("t", 1.0, 1.0, 1e-9).verdict, Verdict::kPass);
}

TEST(Describe, Descriptors) {
  EXPECT_EQ(describe(spec_of(Family::kStar, 3)), "star m=3 L=1.0");
  FamilySpec rg;
  rg.family = Family::kRandomGraph;
  rg.edges = 6;
  rg.betti = 2;
  rg.seed = 9;
  EXPECT_EQ(describe(rg), "random_graph E=6 beta=2 L=1.0 seed=9");
}

TEST(Sweep, IntervalOnly) {
  const SweepResult r = sweep({spec_of(Family::kPath, 1)});
  EXPECT_EQ(r.summary.count, 1u);
  EXPECT_NEAR(r.summary.min_mu2_rho_sq, kPi2 / 9.0, 1e-5);
  EXPECT_EQ(r.summary.min_mu2_rho_sq, r.summary.max_mu2_rho_sq);
  EXPECT_TRUE(r.summary.all_in_range);
  EXPECT_NEAR(r.summary.range_lo, kPi2 / 9.0, 1e-15);
  EXPECT_NEAR(r.summary.range_hi, kPi2 / 4.0, 1e-15);
}

TEST(Sweep, FlowersIncreaseTowardsTheLimit) {
  // One petal is a loop, where mu2 rho^2 = pi^2/4 exactly; from two petals
  // on the products follow pi^2 (2m-1)^2 / (16 m^2).
  std::vector<FamilySpec> ensemble;
  for (std::size_t m = 1; m <= 20; ++m) ensemble.push_back(spec_of(Family::kFlower, m));
  const SweepResult r = sweep(ensemble);
  EXPECT_EQ(r.summary.failed, 0u);
  std::vector<double> by_m(21, 0.0);
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    by_m[r.specs[i].m] = r.records[i].mu2_rho_sq;
  }
  EXPECT_NEAR(by_m[1], kPi2 / 4.0, 1e-5);
  for (std::size_t m = 3; m <= 20; ++m) EXPECT_GT(by_m[m], by_m[m - 1]);
  EXPECT_LT(by_m[20], kPi2 / 4.0);
  EXPECT_GT(by_m[20], 0.95 * kPi2 / 4.0);
  EXPECT_TRUE(r.summary.all_in_range);
}

TEST(Sweep, RandomTreesRespectTheProvenLowerBound) {
  std::vector<FamilySpec> ensemble;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    FamilySpec t;
    t.family = Family::kRandomTree;
    t.edges = 1 + seed % 8;
    t.seed = seed;
    ensemble.push_back(t);
  }
  const SweepResult r = sweep(ensemble);
  EXPECT_EQ(r.summary.failed, 0u);
  EXPECT_EQ(r.summary.errors, 0u);
  for (const VerificationRecord& rec : r.records) {
    const double e = static_cast<double>(rec.edge_count);
    EXPECT_GE(rec.mu2_rho_sq, (2 * e - 1) / (4 * e * e) * (1 - 1e-5));
  }
  // The range flag reflects the observed extremes.
  const double tol = kSpectralSlackFactor * 1e-6;
  EXPECT_EQ(r.summary.all_in_range,
            r.summary.min_mu2_rho_sq >= r.summary.range_lo * (1 - tol) &&
                r.summary.max_mu2_rho_sq <= r.summary.range_hi * (1 + tol));
}

TEST(Sweep, ShortPendantAtTheMidpointGoesBelowTheIntervalValue) {
  // cos(pi x) on the unit interval, extended by zero on a pendant edge at
  // x = 1/2, is still admissible, so mu2 <= pi^2 while L = 1 + l; and rho
  // drops to about 1/3 - l/6. Hence mu2 rho^2 < pi^2/9.
  for (double l : {0.05, 0.1, 0.2}) {
    FamilySpec s = spec_of(Family::kStar, 3);
    s.lengths = {0.5, 0.5, l};
    const VerificationRecord r = verify(s);
    ASSERT_TRUE(r.mu2.has_value());
    EXPECT_LE(r.mu2->value, kPi2 * (1 + 1e-5));
    EXPECT_NEAR(r.rho, star_rho({0.5, 0.5, l}), 1e-15);
    EXPECT_LT(r.mu2_rho_sq, kPi2 / 9.0);
    EXPECT_EQ(r.status, Verdict::kPass);
    const SweepResult sw = sweep({s});
    EXPECT_FALSE(sw.summary.all_in_range);
  }
}

TEST(Sweep, RecordsAreSortedAndDeterministic) {
  std::vector<FamilySpec> ensemble;
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    ensemble.push_back(testing::random_spec(seed, 6));
  }
  const SweepResult a = sweep(ensemble);
  const SweepResult b = sweep(ensemble);
  ASSERT_EQ(a.records.size(), ensemble.size());
  for (std::size_t i = 0; i + 1 < a.records.size(); ++i) {
    EXPECT_LE(a.records[i].descriptor, a.records[i + 1].descriptor);
  }
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].rho, b.records[i].rho);
    EXPECT_EQ(a.records[i].mu2_rho_sq, b.records[i].mu2_rho_sq);
  }
  std::ostringstream csv;
  write_sweep_csv(csv, a);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, kSweepCsvHeader);
  std::size_t rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  EXPECT_EQ(rows, ensemble.size());
}

TEST(SurgerySuite, CutsAndUnfoldingsAllIncreaseRho) {
  const SurgerySuiteReport r = surgery_monotonicity_suite(100, 60);
  EXPECT_EQ(r.cuts, 60u);
  EXPECT_EQ(r.unfoldings, 60u);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.min_cut_gain, 0.0);
  EXPECT_GT(r.min_unfold_gain, 0.0);
  EXPECT_TRUE(r.failing_seeds.empty());
}

}  // namespace
}  // namespace mdist
