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

// Batch verification of the mean-distance and spectral inequalities, the
// mu2 * rho^2 sweep over ensembles, and randomized surgery checks.

#ifndef MDIST_EXPERIMENTS_HPP_
#define MDIST_EXPERIMENTS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mdist/generators.hpp"
#include "mdist/graph.hpp"
#include "mdist/spectral.hpp"
#include "mdist/verdict.hpp"

namespace mdist {

// Relative slack allowed on exact (non-spectral) inequalities.
inline constexpr double kExactSlack = 1e-9;

struct VerifyOptions {
  SpectralOptions spectral;
  bool spectral_checks = true;
  // Extra Dirichlet checks lambda1(G, v) <= mu2 at random vertices.
  std::size_t random_dirichlet_vertices = 0;
  std::uint64_t seed = 0;
};

struct DirichletSample {
  std::string vertex;
  std::optional<SpectralResult> lambda1;
};

struct VerificationRecord {
  std::string descriptor;
  double total_length = 0.0;
  std::size_t edge_count = 0;
  std::size_t vertex_count = 0;
  long betti = 0;
  bool doubly_connected = false;
  double rho = 0.0;
  double diameter = 0.0;

  std::optional<SpectralResult> mu2;
  std::string spectral_error;
  double mu2_rho = 0.0;
  double mu2_rho_sq = 0.0;

  // A point v* with rho_G(v*) = rho(G) and the Dirichlet eigenvalue there.
  std::string mean_vertex_edge;
  double mean_vertex_offset = 0.0;
  double rho_at_mean_vertex = 0.0;
  std::optional<SpectralResult> lambda1_mean;
  double lambda1_rho_length = 0.0;

  std::vector<DirichletSample> dirichlet_samples;
  std::vector<BoundCheck> checks;
  Verdict status = Verdict::kIndeterminate;

  bool failed() const { return status == Verdict::kFail; }
  const BoundCheck* find(const std::string& name) const;
};

VerificationRecord verify_graph(const MetricGraph& g,
                                const std::string& descriptor,
                                const VerifyOptions& options = {});

// Stable text label for a family spec, e.g. "star m=3 L=1".
std::string describe(const FamilySpec& spec);

struct SweepSummary {
  std::size_t count = 0;
  std::size_t failed = 0;
  std::size_t errors = 0;  // spectral failures (indeterminate records)
  double min_mu2_rho_sq = 0.0;
  double max_mu2_rho_sq = 0.0;
  std::string argmin;
  std::string argmax;
  double range_lo = 0.0;  // pi^2 / 9
  double range_hi = 0.0;  // pi^2 / 4
  bool all_in_range = false;
};

struct SweepResult {
  std::vector<VerificationRecord> records;  // sorted by descriptor
  std::vector<FamilySpec> specs;            // aligned with records
  SweepSummary summary;
};

SweepResult sweep(const std::vector<FamilySpec>& ensemble,
                  const VerifyOptions& options = {});

// One CSV row per record; the header is kSweepCsvHeader.
extern const char* const kSweepCsvHeader;
void write_sweep_csv(std::ostream& out, const SweepResult& result);

struct SurgerySuiteReport {
  std::size_t cuts = 0;
  std::size_t cuts_rejected = 0;  // trivial or disconnecting requests
  std::size_t cut_failures = 0;
  double min_cut_gain = 0.0;
  std::size_t unfoldings = 0;
  std::size_t unfold_failures = 0;
  double min_unfold_gain = 0.0;
  std::vector<std::uint64_t> failing_seeds;

  bool ok() const { return cut_failures == 0 && unfold_failures == 0; }
};

// `count` random nontrivial connected cuts on random graphs and `count`
// single unfolding steps on random trees, each required to increase rho
// strictly. Item i uses seed base_seed + i.
SurgerySuiteReport surgery_monotonicity_suite(std::uint64_t base_seed,
                                              std::size_t count);

}  // namespace mdist

#endif  // MDIST_EXPERIMENTS_HPP_
