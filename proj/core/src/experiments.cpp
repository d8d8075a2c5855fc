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

#include "mdist/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "mdist/json_io.hpp"
#include "mdist/mean_distance.hpp"
#include "mdist/parallel.hpp"
#include "mdist/random.hpp"
#include "mdist/shortest_path.hpp"
#include "mdist/surgery.hpp"

namespace mdist {

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

std::string num(double v) { return format_number(v, NumberStyle::kShortest); }

std::optional<SpectralResult> try_dirichlet(const MetricGraph& g,
                                            std::size_t v,
                                            const SpectralOptions& options,
                                            std::string* error) {
  try {
    return dirichlet_eigenvalue(g, v, options);
  } catch (const SpectralConvergenceError& e) {
    if (error) *error = e.what();
    return std::nullopt;
  }
}

}  // namespace

const BoundCheck* VerificationRecord::find(const std::string& name) const {
  for (const BoundCheck& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerificationRecord verify_graph(const MetricGraph& g,
                                const std::string& descriptor,
                                const VerifyOptions& options) {
  require_valid(g);
  VerificationRecord rec;
  rec.descriptor = descriptor;
  rec.total_length = total_length(g);
  rec.edge_count = g.edge_count();
  rec.vertex_count = g.vertex_count();
  rec.betti = betti_number(g);
  rec.doubly_connected = is_doubly_connected(g);

  const VertexDistanceMatrix d = vertex_distances(g);
  rec.rho = rho_graph(g, d, {.keep_pairs = false}).rho;
  rec.diameter = diameter(g, d);

  const double l = rec.total_length;
  const double e = static_cast<double>(rec.edge_count);
  const double exact_tol = kExactSlack * l;
  rec.checks.push_back(check_le("rho_lower", (2.0 * e - 1.0) * l / (4.0 * e * e),
                                rec.rho, exact_tol));
  rec.checks.push_back(check_le("rho_upper", rec.rho, l / 3.0, exact_tol));
  rec.checks.push_back(
      check_le("rho_below_diameter", rec.rho, rec.diameter, exact_tol, true));
  if (rec.doubly_connected) {
    rec.checks.push_back(
        check_le("rho_doubly_connected", rec.rho, l / 4.0, exact_tol));
  } else {
    rec.checks.push_back(
        not_applicable("rho_doubly_connected", rec.rho, l / 4.0));
  }

  if (options.spectral_checks) {
    const double rel = kSpectralSlackFactor * options.spectral.tol;
    ComparisonRecord cmp = comparison_products(g, rec.rho, options.spectral);
    rec.mu2 = cmp.mu2;
    rec.spectral_error = cmp.spectral_error;
    rec.mu2_rho = cmp.mu2_rho;
    rec.mu2_rho_sq = cmp.mu2_rho_sq;
    rec.checks.insert(rec.checks.end(), cmp.checks.begin(), cmp.checks.end());

    // Dirichlet eigenvalue at a point where rho_G equals rho(G).
    if (const auto point = find_point_with_rho(g, d, rec.rho)) {
      rec.mean_vertex_edge = g.edge(point->edge).id;
      rec.mean_vertex_offset = point->offset;
      rec.rho_at_mean_vertex = rho_at_point(g, d, *point);
      MetricGraph host = g;
      std::size_t vertex = kNoIndex;
      if (const auto at = g.vertex_at(*point)) {
        vertex = *at;
      } else {
        auto [split, id] = subdivide(g, rec.mean_vertex_edge, point->offset);
        host = std::move(split);
        vertex = host.vertex_index(id);
      }
      std::string err;
      rec.lambda1_mean = try_dirichlet(host, vertex, options.spectral, &err);
      if (rec.lambda1_mean && rec.mu2) {
        const double lam = rec.lambda1_mean->value;
        rec.lambda1_rho_length = lam * rec.rho * l;
        rec.checks.push_back(check_le("lambda1_mean_le_mu2", lam,
                                      rec.mu2->value,
                                      rel * (lam + rec.mu2->value)));
        rec.checks.push_back(check_le("lambda1_rho_length", 1.0,
                                      rec.lambda1_rho_length,
                                      rel * rec.lambda1_rho_length));
      } else {
        if (rec.spectral_error.empty()) rec.spectral_error = err;
        rec.checks.push_back(indeterminate("lambda1_mean_le_mu2"));
        rec.checks.push_back(indeterminate("lambda1_rho_length"));
      }
    } else {
      rec.checks.push_back(indeterminate("lambda1_mean_le_mu2"));
      rec.checks.push_back(indeterminate("lambda1_rho_length"));
    }

    CounterRng rng(options.seed ^ 0x44495249ull);
    for (std::size_t k = 0; k < options.random_dirichlet_vertices; ++k) {
      const auto v = static_cast<std::size_t>(rng.below(g.vertex_count()));
      DirichletSample sample;
      sample.vertex = g.vertices()[v];
      sample.lambda1 = try_dirichlet(g, v, options.spectral, nullptr);
      const std::string name = "lambda1_le_mu2[" + sample.vertex + "]";
      if (sample.lambda1 && rec.mu2) {
        const double lam = sample.lambda1->value;
        rec.checks.push_back(check_le(name, lam, rec.mu2->value,
                                      rel * (lam + rec.mu2->value)));
      } else {
        rec.checks.push_back(indeterminate(name));
      }
      rec.dirichlet_samples.push_back(std::move(sample));
    }
  }
  rec.status = overall(rec.checks);
  return rec;
}

std::string describe(const FamilySpec& spec) {
  std::string out(to_string(spec.family));
  switch (spec.family) {
    case Family::kFirework:
      out += " m=" + std::to_string(spec.m) + " n=" + std::to_string(spec.n) +
             " J=" + num(spec.big_j) + " j=" + num(spec.small_j);
      return out;
    case Family::kRandomTree:
      out += " E=" + std::to_string(spec.edges);
      break;
    case Family::kRandomGraph:
      out += " E=" + std::to_string(spec.edges) +
             " beta=" + std::to_string(spec.betti);
      break;
    default:
      out += " m=" + std::to_string(spec.m);
  }
  if (!spec.lengths.empty()) {
    out += " lengths=";
    for (std::size_t i = 0; i < spec.lengths.size(); ++i) {
      out += (i ? "," : "") + num(spec.lengths[i]);
    }
  } else {
    out += " L=" + num(spec.total_length);
  }
  const bool random = spec.random_lengths || spec.family == Family::kRandomTree ||
                      spec.family == Family::kRandomGraph;
  if (random) out += " seed=" + std::to_string(spec.seed);
  return out;
}

SweepResult sweep(const std::vector<FamilySpec>& ensemble,
                  const VerifyOptions& options) {
  std::vector<VerificationRecord> records(ensemble.size());
  parallel_for(ensemble.size(), [&](std::size_t i) {
    const std::string label = describe(ensemble[i]);
    try {
      VerifyOptions item = options;
      item.seed = options.seed + i;
      records[i] = verify_graph(generate(ensemble[i]), label, item);
    } catch (const std::exception& ex) {
      records[i].descriptor = label;
      records[i].spectral_error = ex.what();
      records[i].status = Verdict::kIndeterminate;
    }
  });

  std::vector<std::size_t> order(ensemble.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return records[a].descriptor < records[b].descriptor;
  });
  SweepResult out;
  for (std::size_t i : order) {
    out.records.push_back(std::move(records[i]));
    out.specs.push_back(ensemble[i]);
  }

  SweepSummary& s = out.summary;
  s.count = out.records.size();
  s.range_lo = kPi2 / 9.0;
  s.range_hi = kPi2 / 4.0;
  s.min_mu2_rho_sq = std::numeric_limits<double>::infinity();
  s.max_mu2_rho_sq = -std::numeric_limits<double>::infinity();
  s.all_in_range = true;
  for (const VerificationRecord& r : out.records) {
    if (r.status == Verdict::kFail) ++s.failed;
    if (!r.mu2) {
      ++s.errors;
      continue;
    }
    const double v = r.mu2_rho_sq;
    const double tol = kSpectralSlackFactor * options.spectral.tol * v;
    if (v < s.min_mu2_rho_sq) {
      s.min_mu2_rho_sq = v;
      s.argmin = r.descriptor;
    }
    if (v > s.max_mu2_rho_sq) {
      s.max_mu2_rho_sq = v;
      s.argmax = r.descriptor;
    }
    if (v < s.range_lo - tol || v > s.range_hi + tol) s.all_in_range = false;
  }
  if (s.count == s.errors) s.all_in_range = false;
  return out;
}

const char* const kSweepCsvHeader =
    "descriptor,family,seed,E,V,beta,L,rho,diameter,mu2,mu2_rho,mu2_rho_sq,"
    "status";

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  auto f = [](double v) { return format_number(v, NumberStyle::kSignificant17); };
  out << kSweepCsvHeader << '\n';
  for (std::size_t i = 0; i < result.records.size(); ++i) {
    const VerificationRecord& r = result.records[i];
    const FamilySpec& spec = result.specs[i];
    out << '"' << r.descriptor << "\"," << to_string(spec.family) << ','
        << spec.seed << ',' << r.edge_count << ',' << r.vertex_count << ','
        << r.betti << ',' << f(r.total_length) << ',' << f(r.rho) << ','
        << f(r.diameter) << ',' << (r.mu2 ? f(r.mu2->value) : "") << ','
        << (r.mu2 ? f(r.mu2_rho) : "") << ','
        << (r.mu2 ? f(r.mu2_rho_sq) : "") << ',' << to_string(r.status)
        << '\n';
  }
}

SurgerySuiteReport surgery_monotonicity_suite(std::uint64_t base_seed,
                                              std::size_t count) {
  SurgerySuiteReport rep;
  rep.min_cut_gain = std::numeric_limits<double>::infinity();
  rep.min_unfold_gain = std::numeric_limits<double>::infinity();

  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t seed = base_seed + i;
    CounterRng rng(seed ^ 0x435554ull);
    // Random cut: retry until the request is nontrivial and keeps the
    // graph connected; rejected requests are not counted as cuts.
    for (int attempt = 0; attempt < 1000; ++attempt) {
      FamilySpec spec;
      spec.family = Family::kRandomGraph;
      spec.edges = 3 + static_cast<std::size_t>(rng.below(6));
      spec.betti = 1 + static_cast<std::size_t>(rng.below(std::min<std::uint64_t>(3, spec.edges)));
      spec.seed = rng.next_u64();
      const MetricGraph g = generate(spec);
      const std::size_t v = static_cast<std::size_t>(rng.below(g.vertex_count()));
      const auto& inc = g.incidences(v);
      CutSpec cut;
      cut.vertex = g.vertices()[v];
      for (const Incidence& x : inc) {
        (rng.uniform() < 0.5 ? cut.first : cut.second).push_back(x);
      }
      MetricGraph after;
      try {
        after = cut_vertex(g, cut);
      } catch (const GraphError&) {
        ++rep.cuts_rejected;
        continue;
      }
      const double gain = rho_graph(after).rho - rho_graph(g).rho;
      ++rep.cuts;
      rep.min_cut_gain = std::min(rep.min_cut_gain, gain);
      if (!(gain > 0.0)) {
        ++rep.cut_failures;
        rep.failing_seeds.push_back(seed);
      }
      break;
    }

    // Random unfolding step on a random tree that is not a path.
    FamilySpec tree;
    tree.family = Family::kRandomTree;
    tree.edges = 3 + static_cast<std::size_t>(rng.below(8));
    for (int attempt = 0; attempt < 1000; ++attempt) {
      tree.seed = rng.next_u64();
      const MetricGraph g = generate(tree);
      if (is_path_graph(g)) continue;
      const std::vector<MetricGraph> steps = unfold_to_path(g);
      const double gain = rho_graph(steps[1]).rho - rho_graph(g).rho;
      ++rep.unfoldings;
      rep.min_unfold_gain = std::min(rep.min_unfold_gain, gain);
      if (!(gain > 0.0)) {
        ++rep.unfold_failures;
        rep.failing_seeds.push_back(seed);
      }
      break;
    }
  }
  return rep;
}

}  // namespace mdist
