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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mdist/generators.hpp"
#include "mdist/graph.hpp"
#include "mdist/mean_distance.hpp"
#include "mdist/shortest_path.hpp"
#include "oracles.hpp"

namespace mdist {
namespace {

FamilySpec spec_of(Family family, std::size_t m = 1) {
  FamilySpec s;
  s.family = family;
  s.m = m;
  return s;
}

TEST(Families, NamesRoundTrip) {
  for (Family f : {Family::kPath, Family::kStar, Family::kFlower, Family::kCycle,
                   Family::kFirework, Family::kRandomTree, Family::kRandomGraph}) {
    EXPECT_EQ(parse_family(to_string(f)), f);
  }
  EXPECT_EQ(to_string(Family::kRandomTree), "random_tree");
  EXPECT_FALSE(parse_family("lattice").has_value());
}

TEST(Families, Shapes) {
  const MetricGraph path = generate(spec_of(Family::kPath, 4));
  EXPECT_EQ(path.edge_count(), 4u);
  EXPECT_EQ(path.vertex_count(), 5u);
  EXPECT_TRUE(is_tree(path));

  const MetricGraph star = generate(spec_of(Family::kStar, 5));
  EXPECT_EQ(star.degree(0), 5u);
  EXPECT_EQ(star.vertex_count(), 6u);

  const MetricGraph flower = generate(spec_of(Family::kFlower, 4));
  EXPECT_EQ(flower.vertex_count(), 1u);
  EXPECT_EQ(betti_number(flower), 4);

  const MetricGraph cycle = generate(spec_of(Family::kCycle, 6));
  EXPECT_EQ(betti_number(cycle), 1);
  for (std::size_t v = 0; v < cycle.vertex_count(); ++v) {
    EXPECT_EQ(cycle.degree(v), 2u);
  }
  EXPECT_TRUE(generate(spec_of(Family::kCycle, 1)).is_self_loop(0));

  FamilySpec fw = spec_of(Family::kFirework, 3);
  fw.n = 4;
  fw.big_j = 0.7;
  fw.small_j = 0.05;
  const MetricGraph f = generate(fw);
  EXPECT_EQ(f.edge_count(), 3u + 12u);
  EXPECT_EQ(f.degree(0), 3u);
  EXPECT_NEAR(total_length(f), 3 * 0.7 + 12 * 0.05, 1e-14);
  EXPECT_TRUE(is_tree(f));
}

TEST(Families, EquilateralLengthsSumToTotal) {
  for (Family f : {Family::kPath, Family::kStar, Family::kFlower, Family::kCycle}) {
    FamilySpec s = spec_of(f, 7);
    s.total_length = 3.5;
    const MetricGraph g = generate(s);
    EXPECT_NEAR(total_length(g), 3.5, 1e-14);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      EXPECT_EQ(g.length(e), 0.5);
    }
  }
}

TEST(Families, ExplicitLengths) {
  FamilySpec s = spec_of(Family::kFlower, 2);
  s.lengths = {0.3, 0.7};
  const MetricGraph g = generate(s);
  EXPECT_EQ(g.length(0), 0.3);
  EXPECT_EQ(g.length(1), 0.7);
  s.lengths = {0.3};
  EXPECT_THROW(generate(s), GraphError);
}

TEST(Families, InvalidParametersAreRejected) {
  EXPECT_THROW(generate(spec_of(Family::kStar, 0)), GraphError);
  FamilySpec fw = spec_of(Family::kFirework, 2);
  fw.small_j = 0.0;
  EXPECT_THROW(generate(fw), GraphError);
  FamilySpec rg;
  rg.family = Family::kRandomGraph;
  rg.edges = 3;
  rg.betti = 4;
  EXPECT_THROW(generate(rg), GraphError);
  FamilySpec neg = spec_of(Family::kPath, 2);
  neg.total_length = -1.0;
  EXPECT_THROW(generate(neg), GraphError);
}

TEST(RandomFamilies, ValidWithRequestedCounts) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    FamilySpec tree;
    tree.family = Family::kRandomTree;
    tree.edges = 1 + seed % 20;
    tree.seed = seed;
    const MetricGraph t = generate(tree);
    EXPECT_TRUE(validate(t).ok());
    EXPECT_EQ(t.edge_count(), tree.edges);
    EXPECT_TRUE(is_tree(t));

    FamilySpec rg;
    rg.family = Family::kRandomGraph;
    rg.edges = 1 + seed % 20;
    rg.betti = seed % (rg.edges + 1);
    rg.seed = seed;
    rg.total_length = 2.0;
    const MetricGraph g = generate(rg);
    EXPECT_TRUE(validate(g).ok());
    EXPECT_EQ(g.edge_count(), rg.edges);
    EXPECT_EQ(betti_number(g), static_cast<long>(rg.betti));
    EXPECT_NEAR(total_length(g), 2.0, 1e-14);
    EXPECT_EQ(edge_count_of(rg), rg.edges);
  }
}

TEST(RandomFamilies, SeedsAreReproducible) {
  FamilySpec rg;
  rg.family = Family::kRandomGraph;
  rg.edges = 12;
  rg.betti = 3;
  rg.seed = 42;
  const MetricGraph a = generate(rg);
  const MetricGraph b = generate(rg);
  ASSERT_EQ(a.edge_count(), b.edge_count());
  for (std::size_t e = 0; e < a.edge_count(); ++e) {
    EXPECT_EQ(a.edge(e).u, b.edge(e).u);
    EXPECT_EQ(a.edge(e).v, b.edge(e).v);
    EXPECT_EQ(a.length(e), b.length(e));
  }
  rg.seed = 43;
  const MetricGraph c = generate(rg);
  bool differs = false;
  for (std::size_t e = 0; e < a.edge_count(); ++e) {
    differs |= a.length(e) != c.length(e);
  }
  EXPECT_TRUE(differs);
}

TEST(DirichletLengths, UniformOnTheSimplex) {
  // For two coordinates the first is uniform on (0, 1): mean 1/2, variance
  // 1/12. With k coordinates each has mean 1/k.
  constexpr int kDraws = 20000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < kDraws; ++i) {
    const std::vector<double> x = dirichlet_lengths(2, 1.0, i);
    EXPECT_NEAR(x[0] + x[1], 1.0, 1e-15);
    EXPECT_GT(x[0], 0.0);
    sum += x[0];
    sum_sq += x[0] * x[0];
  }
  const double mean = sum / kDraws;
  const double var = sum_sq / kDraws - mean * mean;
  EXPECT_NEAR(mean, 0.5, 4.0 * std::sqrt(1.0 / 12.0 / kDraws));
  EXPECT_NEAR(var, 1.0 / 12.0, 0.005);

  double first = 0.0;
  for (int i = 0; i < kDraws; ++i) first += dirichlet_lengths(5, 1.0, i)[0];
  EXPECT_NEAR(first / kDraws, 0.2, 0.005);
}

TEST(ClosedForms, MatchExactRho) {
  for (Family f : {Family::kPath, Family::kStar, Family::kFlower, Family::kCycle}) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      FamilySpec s = spec_of(f, 1 + seed);
      s.random_lengths = seed % 2 == 1;
      s.seed = seed;
      const auto cf = closed_form_rho(s);
      ASSERT_TRUE(cf.has_value());
      EXPECT_NEAR(*cf, rho_graph(generate(s)).rho, 1e-14) << to_string(f);
    }
  }
  EXPECT_FALSE(closed_form_rho(spec_of(Family::kFirework, 2)).has_value());
}

TEST(ClosedForms, DownstreamExamples) {
  EXPECT_NEAR(*closed_form_rho(spec_of(Family::kStar, 3)), 7.0 / 27.0, 1e-15);
  EXPECT_NEAR(*closed_form_rho(spec_of(Family::kFlower, 4)), 7.0 / 64.0, 1e-15);
  EXPECT_NEAR(flower_rho({0.3, 0.7}), 0.1975, 1e-15);
  EXPECT_NEAR(star_rho({1.0}), 1.0 / 3.0, 1e-15);
}

TEST(ClosedForms, StarAndFlowerFormulasMatchGridOracle) {
  const std::vector<double> lengths = {0.2, 0.5, 0.3, 0.45};
  FamilySpec s = spec_of(Family::kStar, 4);
  s.lengths = lengths;
  EXPECT_NEAR(star_rho(lengths), testing::grid_rho_estimate(generate(s), 16),
              1e-4);
  FamilySpec f = spec_of(Family::kFlower, 4);
  f.lengths = lengths;
  EXPECT_NEAR(flower_rho(lengths), testing::grid_rho_estimate(generate(f), 16),
              1e-4);
}

TEST(FlowerOptimality, EquilateralPetalsMinimiseRho) {
  for (std::size_t m = 2; m <= 6; ++m) {
    const double md = static_cast<double>(m);
    const double equilateral = (2 * md - 1) / (4 * md * md);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const std::vector<double> lengths = dirichlet_lengths(m, 1.0, seed);
      const double r = flower_rho(lengths);
      const auto [lo, hi] = std::minmax_element(lengths.begin(), lengths.end());
      EXPECT_GE(r, equilateral - 1e-15);
      if (*hi / *lo >= 1.1) EXPECT_GT(r - equilateral, 0.0);
    }
  }
}

TEST(Monotonicity, StarsAndFlowersInTheNumberOfEdges) {
  const double l = 1.0;
  double star_prev = std::numeric_limits<double>::infinity();
  double flower_prev = std::numeric_limits<double>::infinity();
  for (std::size_t m = 1; m <= 15; ++m) {
    FamilySpec star = spec_of(Family::kStar, m);
    star.total_length = l;
    FamilySpec flower = spec_of(Family::kFlower, m);
    flower.total_length = l;
    const double s = rho_graph(generate(star)).rho;
    const double f = rho_graph(generate(flower)).rho;
    EXPECT_LE(s, star_prev + 1e-15);
    EXPECT_LT(f, flower_prev);
    star_prev = s;
    flower_prev = f;
  }
  EXPECT_NEAR(rho_graph(generate(spec_of(Family::kStar, 1))).rho, l / 3, 1e-15);
  EXPECT_NEAR(rho_graph(generate(spec_of(Family::kStar, 2))).rho, l / 3, 1e-15);
}

TEST(Monotonicity, FixedEdgeLengthLimits) {
  // With every edge of length 1, rho(S_m) -> 1 and rho(F_m) -> 1/2.
  double star_gap = 1.0, flower_gap = 1.0;
  for (std::size_t m : {4u, 16u, 64u}) {
    FamilySpec star = spec_of(Family::kStar, m);
    star.total_length = static_cast<double>(m);
    FamilySpec flower = spec_of(Family::kFlower, m);
    flower.total_length = static_cast<double>(m);
    const double s = rho_graph(generate(star), {.keep_pairs = false}).rho;
    const double f = rho_graph(generate(flower), {.keep_pairs = false}).rho;
    EXPECT_LT(std::abs(1.0 - s), star_gap);
    EXPECT_LT(std::abs(0.5 - f), flower_gap);
    star_gap = std::abs(1.0 - s);
    flower_gap = std::abs(0.5 - f);
  }
  EXPECT_LT(star_gap, 0.02);
  EXPECT_LT(flower_gap, 0.01);
}

TEST(Firework, LowerBoundHoldsAndHasTheStatedLimits) {
  for (std::size_t m : {2u, 3u, 6u}) {
    for (std::size_t n : {1u, 4u, 10u}) {
      for (double j : {0.02, 0.1, 0.5}) {
        FamilySpec fw = spec_of(Family::kFirework, m);
        fw.n = n;
        fw.big_j = 1.0;
        fw.small_j = j;
        EXPECT_GE(rho_graph(generate(fw)).rho,
                  firework_rho_lower_bound(m, n, 1.0, j) - 1e-12);
      }
    }
  }
  // n*j -> infinity with m = 2, J = 1: bound -> 2J (m-1)/m = 1.
  EXPECT_NEAR(firework_rho_lower_bound(2, 1000000, 1.0, 1.0), 1.0, 1e-5);
  // j -> 0 with n fixed: bound -> 0.
  EXPECT_LT(firework_rho_lower_bound(3, 5, 1.0, 1e-9), 1e-15);
  EXPECT_THROW(firework_rho_lower_bound(1, 5, 1.0, 0.1), GraphError);
}

TEST(Firework, DiameterIsTwiceSpokePlusSpark) {
  FamilySpec fw = spec_of(Family::kFirework, 4);
  fw.n = 7;
  fw.big_j = 0.5;
  fw.small_j = 0.1;
  EXPECT_NEAR(diameter(generate(fw)), 1.2, 1e-14);
}

TEST(Firework, RhoOverDiameterApproachesOne) {
  // With many long sparks almost all mass sits at the spark tips, so rho
  // approaches the diameter.
  double previous = 0.0;
  for (auto [n, j] : {std::pair<std::size_t, double>{20, 0.25}, {60, 0.13},
                      {150, 0.08}}) {
    FamilySpec fw = spec_of(Family::kFirework, 20);
    fw.n = n;
    fw.big_j = 1.0;
    fw.small_j = j;
    const MetricGraph g = generate(fw);
    const double ratio = rho_graph(g, {.keep_pairs = false}).rho / diameter(g);
    EXPECT_GT(ratio, previous);
    EXPECT_LT(ratio, 1.0);
    previous = ratio;
  }
  EXPECT_GT(previous, 0.85);
}

}  // namespace
}  // namespace mdist
