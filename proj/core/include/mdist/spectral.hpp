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

// Laplacian eigenvalues of a metric graph with standard vertex conditions.
//
// Conforming piecewise-linear finite elements: vertex values are shared by
// all incident edges (continuity), the flux conditions are natural. The
// discrete eigenvalue converges as O(h^2) from above, so two nested meshes
// give a Richardson estimate (4 mu_{h/2} - mu_h) / 3.

#ifndef MDIST_SPECTRAL_HPP_
#define MDIST_SPECTRAL_HPP_

#include <Eigen/SparseCore>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdist/graph.hpp"
#include "mdist/verdict.hpp"

namespace mdist {

using SparseMatrix = Eigen::SparseMatrix<double>;

// Degrees of freedom: vertices first (in graph order), then the interior
// nodes of each edge in edge order, from tail to head.
struct FemSystem {
  SparseMatrix stiffness;
  SparseMatrix mass;
  std::vector<std::size_t> divisions;  // elements per edge
  std::size_t dof_count = 0;
  double mesh_h = 0.0;  // largest element
  // Vertex whose row and column were removed, if any.
  std::optional<std::size_t> dirichlet_vertex;
};

// n_e = max(4, ceil(l_e / h_target)) elements per edge.
FemSystem assemble(const MetricGraph& g, double h_target);
FemSystem assemble(const MetricGraph& g,
                   const std::vector<std::size_t>& divisions,
                   std::optional<std::size_t> dirichlet_vertex = std::nullopt);

enum class SpectralKind { kSpectralGap, kDirichletAtVertex };

struct SpectralResult {
  double value = 0.0;
  double mesh_h = 0.0;
  bool extrapolated = false;
  double error_estimate = 0.0;
  std::size_t dof_count = 0;
  SpectralKind kind = SpectralKind::kSpectralGap;
  std::string vertex;  // set for kDirichletAtVertex
  int rounds = 0;      // refinements performed
};

struct SpectralOptions {
  double tol = 1e-6;
  int max_rounds = 10;
  // Systems up to this size use a dense generalized eigensolver.
  std::size_t dense_threshold = 200;
  // Refinement stops with a failure beyond this many unknowns.
  std::size_t max_dofs = 4'000'000;
};

// Thrown when the extrapolation does not reach the requested tolerance.
class SpectralConvergenceError : public std::runtime_error {
 public:
  SpectralConvergenceError(const std::string& what, SpectralResult last)
      : std::runtime_error(what), last_(std::move(last)) {}
  const SpectralResult& last() const { return last_; }

 private:
  SpectralResult last_;
};

// Smallest nonzero eigenvalue of the discrete Neumann problem (constants
// deflated), or the smallest Dirichlet eigenvalue when the system has a
// removed vertex.
double discrete_eigenvalue(const FemSystem& system,
                           const SpectralOptions& options = {});

SpectralResult spectral_gap(const MetricGraph& g,
                            const SpectralOptions& options = {});
SpectralResult dirichlet_eigenvalue(const MetricGraph& g, std::size_t vertex,
                                    const SpectralOptions& options = {});

struct ComparisonRecord {
  std::optional<SpectralResult> mu2;  // absent when the solve failed
  std::string spectral_error;
  double rho = 0.0;
  double total_length = 0.0;
  std::size_t edge_count = 0;
  long betti = 0;
  double mu2_rho = 0.0;
  double mu2_rho_sq = 0.0;
  std::vector<BoundCheck> checks;
};

// Relative tolerance applied to products of a spectral value with tolerance
// `tol`: the check tolerance is kSpectralSlackFactor * tol * |value|.
inline constexpr double kSpectralSlackFactor = 10.0;

// mu2 * rho and mu2 * rho^2 against their two-sided bounds. `rho` must be the
// exact mean distance of g.
ComparisonRecord comparison_products(const MetricGraph& g, double rho,
                                     const SpectralOptions& options = {});
ComparisonRecord comparison_products(const MetricGraph& g,
                                     const SpectralOptions& options = {});

}  // namespace mdist

#endif  // MDIST_SPECTRAL_HPP_
