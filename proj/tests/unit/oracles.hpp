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

// Independent reference computations for the tests. Nothing here calls the
// library's distance or integration code.

#ifndef MDIST_TESTS_ORACLES_HPP_
#define MDIST_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "mdist/generators.hpp"
#include "mdist/graph.hpp"

namespace mdist::testing {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kPi2 = kPi * kPi;

// Every edge cut into k equal segments; all-pairs distances between the
// resulting nodes by Floyd-Warshall. Grid nodes are exact graph points, so
// these distances are exact up to rounding.
class GridOracle {
 public:
  GridOracle(const MetricGraph& g, std::size_t k) : g_(g), k_(k) {
    const std::size_t nv = g.vertex_count();
    n_ = nv + g.edge_count() * (k - 1);
    d_.assign(n_ * n_, std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < n_; ++i) d_[i * n_ + i] = 0.0;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const double h = g.length(e) / static_cast<double>(k);
      for (std::size_t j = 0; j < k; ++j) {
        const std::size_t a = node(e, j), b = node(e, j + 1);
        if (a == b) continue;
        d_[a * n_ + b] = std::min(d_[a * n_ + b], h);
        d_[b * n_ + a] = std::min(d_[b * n_ + a], h);
      }
    }
    for (std::size_t m = 0; m < n_; ++m) {
      for (std::size_t i = 0; i < n_; ++i) {
        const double dim = d_[i * n_ + m];
        if (!std::isfinite(dim)) continue;
        for (std::size_t j = 0; j < n_; ++j) {
          const double cand = dim + d_[m * n_ + j];
          if (cand < d_[i * n_ + j]) d_[i * n_ + j] = cand;
        }
      }
    }
  }

  std::size_t k() const { return k_; }
  std::size_t size() const { return n_; }

  // Node j (0..k) along edge e, from tail to head.
  std::size_t node(std::size_t e, std::size_t j) const {
    if (j == 0) return g_.tail(e);
    if (j == k_) return g_.head(e);
    return g_.vertex_count() + e * (k_ - 1) + (j - 1);
  }
  double offset(std::size_t e, std::size_t j) const {
    return g_.length(e) * static_cast<double>(j) / static_cast<double>(k_);
  }
  double dist(std::size_t a, std::size_t b) const { return d_[a * n_ + b]; }

  // Largest distance between grid nodes (within one segment of the true
  // diameter).
  double max_distance() const {
    return *std::max_element(d_.begin(), d_.end());
  }

  // Composite trapezoid approximation of int int dist over all edge pairs.
  double trapezoid_double_integral() const {
    double total = 0.0;
    for (std::size_t e = 0; e < g_.edge_count(); ++e) {
      const double he = g_.length(e) / static_cast<double>(k_);
      for (std::size_t i = 0; i <= k_; ++i) {
        const double wi = (i == 0 || i == k_) ? 0.5 : 1.0;
        for (std::size_t f = 0; f < g_.edge_count(); ++f) {
          const double hf = g_.length(f) / static_cast<double>(k_);
          for (std::size_t j = 0; j <= k_; ++j) {
            const double wj = (j == 0 || j == k_) ? 0.5 : 1.0;
            total += wi * wj * he * hf * dist(node(e, i), node(f, j));
          }
        }
      }
    }
    return total;
  }

 private:
  const MetricGraph& g_;
  std::size_t k_;
  std::size_t n_ = 0;
  std::vector<double> d_;
};

// rho by trapezoid rules on grids k and 2k with Richardson extrapolation.
inline double grid_rho_estimate(const MetricGraph& g, std::size_t k) {
  const double l = total_length(g);
  const double coarse = GridOracle(g, k).trapezoid_double_integral();
  const double fine = GridOracle(g, 2 * k).trapezoid_double_integral();
  return (4.0 * fine - coarse) / 3.0 / (l * l);
}

// A mix of random trees and random graphs with at most max_edges edges.
inline FamilySpec random_spec(std::uint64_t seed, std::size_t max_edges) {
  std::mt19937_64 rng(seed);
  FamilySpec spec;
  spec.seed = rng();
  const std::size_t edges =
      1 + static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(max_edges));
  spec.edges = edges;
  spec.total_length = 0.5 + static_cast<double>(rng() % 1000) / 500.0;
  switch (rng() % 6) {
    case 0:
      spec.family = Family::kRandomTree;
      break;
    case 1:
      spec.family = Family::kStar;
      spec.m = edges;
      spec.random_lengths = true;
      break;
    case 2:
      spec.family = Family::kFlower;
      spec.m = edges;
      spec.random_lengths = true;
      break;
    case 3:
      spec.family = Family::kCycle;
      spec.m = edges;
      spec.random_lengths = true;
      break;
    default:
      spec.family = Family::kRandomGraph;
      spec.betti = static_cast<std::size_t>(rng() % (edges + 1));
      break;
  }
  return spec;
}

inline MetricGraph random_graph_for_test(std::uint64_t seed,
                                         std::size_t max_edges) {
  return generate(random_spec(seed, max_edges));
}

}  // namespace mdist::testing

#endif  // MDIST_TESTS_ORACLES_HPP_
