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

#include "mdist/reports.hpp"

#include <chrono>
#include <cmath>
#include <string>

namespace mdist {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Json optional_spectral(const std::optional<SpectralResult>& r) {
  return r ? to_json(*r) : Json(nullptr);
}

}  // namespace

AnalyzeReport analyze(const MetricGraph& g, const std::string& descriptor,
                      const AnalyzeOptions& options) {
  const auto t0 = Clock::now();
  AnalyzeReport rep;
  const VertexDistanceMatrix d = vertex_distances(g);
  const double t_dist = seconds_since(t0);
  rep.record = verify_graph(g, descriptor, options.verify);
  rep.monte_carlo = rho_monte_carlo(g, d, options.monte_carlo_samples,
                                    options.monte_carlo_seed);
  if (options.timings) {
    rep.seconds_distances = t_dist;
    rep.seconds_total = seconds_since(t0);
  }
  return rep;
}

Json to_json(const BoundCheck& c) {
  Json j;
  j["name"] = c.name;
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["slack"] = c.slack;
  j["tolerance"] = c.tolerance;
  j["strict"] = c.strict;
  j["verdict"] = std::string(to_string(c.verdict));
  return j;
}

Json to_json(const SpectralResult& r) {
  Json j;
  j["kind"] = r.kind == SpectralKind::kSpectralGap ? "spectral_gap"
                                                   : "dirichlet_at_vertex";
  if (r.kind == SpectralKind::kDirichletAtVertex) j["vertex"] = r.vertex;
  j["value"] = r.value;
  j["error_estimate"] = r.error_estimate;
  j["extrapolated"] = r.extrapolated;
  j["mesh_h"] = r.mesh_h;
  j["dof_count"] = r.dof_count;
  j["rounds"] = r.rounds;
  return j;
}

Json to_json(const VerificationRecord& r) {
  Json j;
  j["descriptor"] = r.descriptor;
  j["L"] = r.total_length;
  j["E"] = r.edge_count;
  j["V"] = r.vertex_count;
  j["beta"] = r.betti;
  j["doubly_connected"] = r.doubly_connected;
  j["rho"] = r.rho;
  j["diameter"] = r.diameter;
  j["mu2"] = optional_spectral(r.mu2);
  j["mu2_rho"] = r.mu2 ? Json(r.mu2_rho) : Json(nullptr);
  j["mu2_rho_sq"] = r.mu2 ? Json(r.mu2_rho_sq) : Json(nullptr);
  Json mean;
  mean["edge"] = r.mean_vertex_edge;
  mean["offset"] = r.mean_vertex_offset;
  mean["rho_at_point"] = r.rho_at_mean_vertex;
  mean["lambda1"] = optional_spectral(r.lambda1_mean);
  mean["lambda1_rho_L"] = r.lambda1_mean ? Json(r.lambda1_rho_length)
                                         : Json(nullptr);
  j["mean_point"] = mean;
  Json samples = Json::array();
  for (const DirichletSample& s : r.dirichlet_samples) {
    Json item;
    item["vertex"] = s.vertex;
    item["lambda1"] = optional_spectral(s.lambda1);
    samples.push_back(item);
  }
  j["dirichlet_samples"] = samples;
  Json checks = Json::array();
  for (const BoundCheck& c : r.checks) checks.push_back(to_json(c));
  j["checks"] = checks;
  j["spectral_error"] = r.spectral_error.empty() ? Json(nullptr)
                                                 : Json(r.spectral_error);
  j["status"] = std::string(to_string(r.status));
  return j;
}

Json to_json(const SweepSummary& s) {
  Json j;
  j["count"] = s.count;
  j["failed"] = s.failed;
  j["errors"] = s.errors;
  const bool any = s.count > s.errors;
  j["min_mu2_rho_sq"] = any ? Json(s.min_mu2_rho_sq) : Json(nullptr);
  j["argmin"] = s.argmin;
  j["max_mu2_rho_sq"] = any ? Json(s.max_mu2_rho_sq) : Json(nullptr);
  j["argmax"] = s.argmax;
  j["range"] = Json::array({s.range_lo, s.range_hi});
  j["all_in_range"] = s.all_in_range;
  return j;
}

Json to_json(const SurgerySuiteReport& r) {
  Json j;
  j["cuts"] = r.cuts;
  j["cuts_rejected"] = r.cuts_rejected;
  j["cut_failures"] = r.cut_failures;
  j["min_cut_gain"] = r.min_cut_gain;
  j["unfoldings"] = r.unfoldings;
  j["unfold_failures"] = r.unfold_failures;
  j["min_unfold_gain"] = r.min_unfold_gain;
  j["failing_seeds"] = r.failing_seeds;
  j["ok"] = r.ok();
  return j;
}

Json to_json(const MetricGraph& g, const MeanDistanceReport& r) {
  Json j;
  j["rho"] = r.rho;
  j["method"] = r.method == MeanMethod::kExact ? "exact" : "monte_carlo";
  j["error_bound"] = r.error_bound;
  j["L"] = r.total_length;
  if (r.method == MeanMethod::kMonteCarlo) {
    j["samples"] = r.samples;
    j["seed"] = r.seed;
  }
  if (!r.per_edge_pair.empty()) {
    Json pairs = Json::array();
    for (std::size_t e = 0; e < r.edge_count; ++e) {
      for (std::size_t f = e; f < r.edge_count; ++f) {
        Json item;
        item["e"] = g.edge(e).id;
        item["f"] = g.edge(f).id;
        item["integral"] = r.pair(e, f);
        pairs.push_back(item);
      }
    }
    j["per_edge_pair"] = pairs;
  }
  return j;
}

Json to_json(const AnalyzeReport& r) {
  const VerificationRecord& v = r.record;
  Json j;
  j["descriptor"] = v.descriptor;
  j["L"] = v.total_length;
  j["E"] = v.edge_count;
  j["V"] = v.vertex_count;
  j["beta"] = v.betti;
  j["doubly_connected"] = v.doubly_connected;
  j["diameter"] = v.diameter;
  j["rho"] = v.rho;
  Json mc;
  mc["rho"] = r.monte_carlo.rho;
  mc["standard_error"] = r.monte_carlo.error_bound;
  mc["samples"] = r.monte_carlo.samples;
  mc["seed"] = r.monte_carlo.seed;
  mc["within_4_se"] = std::abs(r.monte_carlo.rho - v.rho) <=
                      4.0 * r.monte_carlo.error_bound;
  j["rho_monte_carlo"] = mc;
  j["mu2"] = optional_spectral(v.mu2);
  j["mu2_rho"] = v.mu2 ? Json(v.mu2_rho) : Json(nullptr);
  j["mu2_rho_sq"] = v.mu2 ? Json(v.mu2_rho_sq) : Json(nullptr);
  Json full = to_json(v);
  j["mean_point"] = full["mean_point"];
  j["checks"] = full["checks"];
  j["spectral_error"] = full["spectral_error"];
  j["status"] = full["status"];
  if (r.seconds_total) {
    Json t;
    t["distances"] = *r.seconds_distances;
    t["total"] = *r.seconds_total;
    j["timings"] = t;
  }
  return j;
}

std::string render_report(const Json& j) {
  return dump_json(j, NumberStyle::kSignificant17) + "\n";
}

}  // namespace mdist
