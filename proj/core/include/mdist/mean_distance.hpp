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

// Mean distance of a metric graph.
//
//   rho_G(x) = (1/L) * int_G dist(x, y) dy
//   rho(G)   = (1/L^2) * int_G int_G dist(x, y) dy dx
//
// Both are computed exactly. For an edge pair (e, f) the inner integral
// I(s) = int_f dist(x_s, y) dy is piecewise quadratic in s with finitely many
// computable breakpoints, so two-point Gauss-Legendre per piece is exact.
// A Monte Carlo estimator is provided as an independent oracle.

#ifndef MDIST_MEAN_DISTANCE_HPP_
#define MDIST_MEAN_DISTANCE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mdist/graph.hpp"
#include "mdist/shortest_path.hpp"

namespace mdist {

enum class MeanMethod { kExact, kMonteCarlo };

struct MeanDistanceReport {
  double rho = 0.0;
  double total_length = 0.0;
  MeanMethod method = MeanMethod::kExact;
  // Zero for exact results, one standard error for Monte Carlo.
  double error_bound = 0.0;
  std::size_t edge_count = 0;
  // E x E row-major double integrals over e x f. Empty unless requested and
  // E <= MeanDistanceOptions::max_edges_for_pairs.
  std::vector<double> per_edge_pair;
  // Row sums of per_edge_pair; filled together with it.
  std::vector<double> per_edge;
  // Monte Carlo bookkeeping.
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  double pair(std::size_t e, std::size_t f) const {
    return per_edge_pair[e * edge_count + f];
  }
};

struct MeanDistanceOptions {
  bool keep_pairs = true;
  std::size_t max_edges_for_pairs = 256;
};

double rho_at_point(const MetricGraph& g, const VertexDistanceMatrix& d,
                    const PointOnEdge& x);

MeanDistanceReport rho_graph(const MetricGraph& g,
                             const VertexDistanceMatrix& d,
                             const MeanDistanceOptions& options = {});
MeanDistanceReport rho_graph(const MetricGraph& g,
                             const MeanDistanceOptions& options = {});

// Pairs drawn uniformly by length measure, averaged with point_distance.
MeanDistanceReport rho_monte_carlo(const MetricGraph& g,
                                   const VertexDistanceMatrix& d,
                                   std::size_t samples, std::uint64_t seed);
MeanDistanceReport rho_monte_carlo(const MetricGraph& g, std::size_t samples,
                                   std::uint64_t seed);

// int_e int_f dist. The first dispatches to a closed form for e != f (the
// inner integral is a function of the distances to f's two ends); the generic
// route integrates the sheet envelope for any pair.
double edge_pair_integral(const MetricGraph& g, const VertexDistanceMatrix& d,
                          std::size_t e, std::size_t f);
double edge_pair_integral_generic(const SheetSet& sheets);

// xi_x(t) = #{y : dist(x, y) = t}, piecewise constant.
struct LevelSetProfile {
  PointOnEdge base;
  // 0 = t_0 < t_1 < ... < t_k = M(x)
  std::vector<double> breakpoints;
  // counts[i] is the value of xi on (t_i, t_{i+1}).
  std::vector<long> counts;

  double max_distance() const {
    return breakpoints.empty() ? 0.0 : breakpoints.back();
  }
  // int_0^M xi(t) dt; equals the total length.
  double mass() const;
};

LevelSetProfile level_set_profile(const MetricGraph& g,
                                  const VertexDistanceMatrix& d,
                                  const PointOnEdge& x);

// (1/L) * int_0^M xi(t) t dt.
double rho_via_coarea(const LevelSetProfile& profile, double total_length);

// Offsets on edge e (including 0 and the length) between which rho_G is a
// single quadratic polynomial of the offset.
std::vector<double> rho_function_breakpoints(const MetricGraph& g,
                                             const VertexDistanceMatrix& d,
                                             std::size_t e);

// int_e rho_G(x) dx, integrated piecewise.
double rho_function_edge_integral(const MetricGraph& g,
                                  const VertexDistanceMatrix& d,
                                  std::size_t e);

// A point with rho_G(x) = target, found by exact per-piece quadratic roots.
// Vertices are preferred when they already match within 1e-12 * L; otherwise
// the root farthest from its edge's ends is returned.
std::optional<PointOnEdge> find_point_with_rho(const MetricGraph& g,
                                               const VertexDistanceMatrix& d,
                                               double target);

// Whether rho_G is constant within `tolerance` (checked on every piece).
// Loops are the known example; no theorem is asserted for other graphs.
bool is_rho_function_constant(const MetricGraph& g,
                              const VertexDistanceMatrix& d,
                              double tolerance);

}  // namespace mdist

#endif  // MDIST_MEAN_DISTANCE_HPP_
