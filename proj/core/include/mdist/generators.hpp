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

// Named graph families and seeded random ensembles.
//
// Ids are canonical: vertices "v0", "v1", ... and edges "e0", "e1", ... in
// construction order.

#ifndef MDIST_GENERATORS_HPP_
#define MDIST_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mdist/graph.hpp"

namespace mdist {

enum class Family {
  kPath,         // m edges in a row
  kStar,         // m edges at a common centre
  kFlower,       // m self-loops at one vertex
  kCycle,        // m edges in a ring (m = 1 is a loop)
  kFirework,     // m-star of length J, an n-star of length j at each leaf
  kRandomTree,   // uniform random recursive tree on `edges` edges
  kRandomGraph,  // random tree plus `betti` extra edges, `edges` in total
};

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

struct FamilySpec {
  Family family = Family::kPath;
  std::size_t m = 1;
  std::size_t n = 1;
  double big_j = 1.0;    // firework spoke length J
  double small_j = 0.1;  // firework spark length j
  std::size_t edges = 1;
  std::size_t betti = 0;
  // Explicit lengths in edge order; otherwise equilateral (deterministic
  // families) or Dirichlet-uniform (random families, or random_lengths).
  std::vector<double> lengths;
  bool random_lengths = false;
  double total_length = 1.0;
  std::uint64_t seed = 0;
};

// Throws GraphError for invalid parameters.
MetricGraph generate(const FamilySpec& spec);

// Number of edges generate(spec) produces.
std::size_t edge_count_of(const FamilySpec& spec);

// Uniform point on the simplex scaled to `total`, via normalised Exp(1)
// draws from the seeded counter generator.
std::vector<double> dirichlet_lengths(std::size_t count, double total,
                                      std::uint64_t seed);

// 2J (m-1)/m * (n j)^2 / (J + n j)^2; requires m >= 2 and positive J, j, n.
double firework_rho_lower_bound(std::size_t m, std::size_t n, double big_j,
                                double small_j);

// Exact rho for path, star, flower and cycle with any edge lengths.
std::optional<double> closed_form_rho(const FamilySpec& spec);
// The same closed forms evaluated on explicit length vectors.
double star_rho(const std::vector<double>& lengths);
double flower_rho(const std::vector<double>& lengths);

}  // namespace mdist

#endif  // MDIST_GENERATORS_HPP_
