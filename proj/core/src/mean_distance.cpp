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

#include "mdist/mean_distance.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <utility>

#include "mdist/affine.hpp"
#include "mdist/parallel.hpp"
#include "mdist/random.hpp"

namespace mdist {

namespace {

double along(double s, double len, double to_tail, double to_head) {
  return std::min(s + to_tail, (len - s) + to_head);
}

double kink(double len, double p, double q) {
  return std::clamp(0.5 * (len + q - p), 0.0, len);
}

// int_f dist(x, y) dy for x on e at offset s, using the same-edge sheets.
double same_edge_inner(const SheetSet& ss, double s) {
  double total = 0.0;
  for (Region r : ss.regions()) {
    const Slice sl = slice_at(ss, r, s);
    total += integrate_lower_envelope(sl.lines, sl.lo, sl.hi);
  }
  return total;
}

double region_integral(const SheetSet& ss, Region r) {
  std::vector<double> cuts = slice_breakpoints(ss, r);
  cuts.insert(cuts.begin(), 0.0);
  cuts.push_back(ss.len_e);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    total += gauss2(
        [&](double s) {
          const Slice sl = slice_at(ss, r, s);
          return integrate_lower_envelope(sl.lines, sl.lo, sl.hi);
        },
        cuts[i], cuts[i + 1]);
  }
  return total;
}

std::vector<double> cumulative_lengths(const MetricGraph& g) {
  std::vector<double> cum(g.edge_count());
  double acc = 0.0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    acc += g.length(e);
    cum[e] = acc;
  }
  return cum;
}

PointOnEdge sample_point(const MetricGraph& g, const std::vector<double>& cum,
                         CounterRng& rng) {
  const double u = rng.uniform() * cum.back();
  std::size_t e = static_cast<std::size_t>(
      std::upper_bound(cum.begin(), cum.end(), u) - cum.begin());
  if (e >= cum.size()) e = cum.size() - 1;
  return {e, rng.uniform() * g.length(e)};
}

// Roots of a quadratic through (p, h0), (m, hm), (q, h1) lying in [p, q].
void quadratic_roots(double p, double q, double h0, double hm, double h1,
                     std::vector<double>& out) {
  const double r = 0.5 * (q - p);
  const double m = 0.5 * (p + q);
  const double a = (h1 + h0 - 2.0 * hm) / (2.0 * r * r);
  const double b = (h1 - h0) / (2.0 * r);
  const double c = hm;
  const double scale = std::max({std::abs(h0), std::abs(hm), std::abs(h1)});
  auto keep = [&](double x) {
    if (x >= -r && x <= r) out.push_back(m + x);
  };
  if (std::abs(a) * r * r <= 1e-14 * scale) {
    if (b != 0.0) keep(-c / b);
    return;
  }
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) {
    // Touching the axis within rounding still counts as a root.
    const double x = -b / (2.0 * a);
    if (std::abs(a * x * x + b * x + c) <= 1e-12 * std::max(scale, 1e-300)) {
      keep(x);
    }
    return;
  }
  const double sq = std::sqrt(disc);
  const double qq = -0.5 * (b + std::copysign(sq, b));
  if (qq != 0.0) {
    keep(qq / a);
    keep(c / qq);
  } else {
    keep(0.0);
  }
}

}  // namespace

double edge_pair_integral_generic(const SheetSet& ss) {
  double total = 0.0;
  for (Region r : ss.regions()) total += region_integral(ss, r);
  return total;
}

double edge_pair_integral(const MetricGraph& g, const VertexDistanceMatrix& d,
                          std::size_t e, std::size_t f) {
  if (e == f) return edge_pair_integral_generic(sheet_set(g, d, e, f));
  const double le = g.length(e), lf = g.length(f);
  const std::size_t a = g.tail(e), b = g.head(e);
  const std::size_t c = g.tail(f), dd = g.head(f);
  const double ac = d(a, c), bc = d(b, c), ad = d(a, dd), bd = d(b, dd);
  std::array<double, 4> cuts{0.0, kink(le, ac, bc), kink(le, ad, bd), le};
  std::sort(cuts.begin(), cuts.end());
  auto inner = [&](double s) {
    return tent_integral(along(s, le, ac, bc), along(s, le, ad, bd), lf);
  };
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] > cuts[i]) total += gauss2(inner, cuts[i], cuts[i + 1]);
  }
  return total;
}

double rho_at_point(const MetricGraph& g, const VertexDistanceMatrix& d,
                    const PointOnEdge& x) {
  const std::size_t m = g.edge_count();
  std::vector<double> parts(m);
  for (std::size_t f = 0; f < m; ++f) {
    if (f == x.edge) {
      parts[f] = same_edge_inner(sheet_set(g, d, f, f), x.offset);
    } else {
      parts[f] = tent_integral(distance_to_vertex(g, d, x, g.tail(f)),
                               distance_to_vertex(g, d, x, g.head(f)),
                               g.length(f));
    }
  }
  return pairwise_sum(parts) / total_length(g);
}

MeanDistanceReport rho_graph(const MetricGraph& g,
                             const VertexDistanceMatrix& d,
                             const MeanDistanceOptions& options) {
  const std::size_t m = g.edge_count();
  MeanDistanceReport report;
  report.edge_count = m;
  report.total_length = total_length(g);
  const bool keep = options.keep_pairs && m <= options.max_edges_for_pairs;
  if (keep) report.per_edge_pair.assign(m * m, 0.0);

  // Row e holds the pairs f >= e; off-diagonal pairs count twice.
  std::vector<double> rows(m, 0.0);
  parallel_for(m, [&](std::size_t e) {
    std::vector<double> terms(m - e);
    for (std::size_t f = e; f < m; ++f) {
      const double v = edge_pair_integral(g, d, e, f);
      terms[f - e] = (f == e) ? v : 2.0 * v;
      if (keep) {
        report.per_edge_pair[e * m + f] = v;
        report.per_edge_pair[f * m + e] = v;
      }
    }
    rows[e] = pairwise_sum(terms);
  });
  const double l = report.total_length;
  report.rho = pairwise_sum(rows) / (l * l);
  if (keep) {
    report.per_edge.resize(m);
    for (std::size_t e = 0; e < m; ++e) {
      report.per_edge[e] = pairwise_sum(
          std::span<const double>(report.per_edge_pair.data() + e * m, m));
    }
  }
  return report;
}

MeanDistanceReport rho_graph(const MetricGraph& g,
                             const MeanDistanceOptions& options) {
  return rho_graph(g, vertex_distances(g), options);
}

MeanDistanceReport rho_monte_carlo(const MetricGraph& g,
                                   const VertexDistanceMatrix& d,
                                   std::size_t samples, std::uint64_t seed) {
  MeanDistanceReport report;
  report.method = MeanMethod::kMonteCarlo;
  report.edge_count = g.edge_count();
  report.total_length = total_length(g);
  report.samples = samples;
  report.seed = seed;
  if (samples == 0) {
    report.rho = std::numeric_limits<double>::quiet_NaN();
    report.error_bound = std::numeric_limits<double>::infinity();
    return report;
  }
  const std::vector<double> cum = cumulative_lengths(g);
  CounterRng rng(seed);
  double mean = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const PointOnEdge x = sample_point(g, cum, rng);
    const PointOnEdge y = sample_point(g, cum, rng);
    const double v = point_distance(g, d, x, y);
    const double delta = v - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (v - mean);
  }
  report.rho = mean;
  const double n = static_cast<double>(samples);
  report.error_bound = samples > 1 ? std::sqrt(m2 / (n - 1.0) / n) : 0.0;
  return report;
}

MeanDistanceReport rho_monte_carlo(const MetricGraph& g, std::size_t samples,
                                   std::uint64_t seed) {
  return rho_monte_carlo(g, vertex_distances(g), samples, seed);
}

double LevelSetProfile::mass() const {
  double total = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    total += static_cast<double>(counts[i]) *
             (breakpoints[i + 1] - breakpoints[i]);
  }
  return total;
}

LevelSetProfile level_set_profile(const MetricGraph& g,
                                  const VertexDistanceMatrix& d,
                                  const PointOnEdge& x) {
  // Each edge is covered by monotone pieces of slope +-1 in t = dist(x, y);
  // a piece over values [lo, hi] adds one point to every level set in between.
  std::vector<std::pair<double, double>> pieces;
  for (std::size_t f = 0; f < g.edge_count(); ++f) {
    const double lf = g.length(f);
    if (f == x.edge) {
      const SheetSet ss = sheet_set(g, d, f, f);
      for (Region r : ss.regions()) {
        const Slice sl = slice_at(ss, r, x.offset);
        for (const EnvelopePiece& p :
             lower_envelope_pieces(sl.lines, sl.lo, sl.hi)) {
          if (p.t1 > p.t0) {
            pieces.emplace_back(std::min(p.v0, p.v1), std::max(p.v0, p.v1));
          }
        }
      }
      continue;
    }
    const double u = distance_to_vertex(g, d, x, g.tail(f));
    const double w = distance_to_vertex(g, d, x, g.head(f));
    const double crest = tent_crest(u, w, lf);
    if (crest > 0.0) pieces.emplace_back(u, u + crest);
    if (lf - crest > 0.0) pieces.emplace_back(w, w + (lf - crest));
  }

  const double tol = 1e-13 * total_length(g);
  std::vector<double> levels;
  levels.reserve(2 * pieces.size() + 1);
  levels.push_back(0.0);
  for (const auto& [lo, hi] : pieces) {
    levels.push_back(lo);
    levels.push_back(hi);
  }
  sort_and_merge(levels, tol);

  auto index_of = [&](double v) {
    auto it = std::lower_bound(levels.begin(), levels.end(), v);
    std::size_t i = static_cast<std::size_t>(it - levels.begin());
    if (i == levels.size()) return i - 1;
    if (i > 0 && v - levels[i - 1] < levels[i] - v) return i - 1;
    return i;
  };
  std::vector<long> delta(levels.size() + 1, 0);
  for (const auto& [lo, hi] : pieces) {
    const std::size_t i = index_of(lo), j = index_of(hi);
    if (j <= i) continue;
    delta[i] += 1;
    delta[j] -= 1;
  }

  // Adjacent intervals with equal counts are coalesced.
  LevelSetProfile out;
  out.base = x;
  out.breakpoints.push_back(levels.front());
  long running = 0;
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
    running += delta[i];
    if (!out.counts.empty() && out.counts.back() == running) {
      out.breakpoints.back() = levels[i + 1];
    } else {
      out.counts.push_back(running);
      out.breakpoints.push_back(levels[i + 1]);
    }
  }
  return out;
}

double rho_via_coarea(const LevelSetProfile& profile, double total_length) {
  std::vector<double> terms;
  terms.reserve(profile.counts.size());
  for (std::size_t i = 0; i < profile.counts.size(); ++i) {
    const double t0 = profile.breakpoints[i], t1 = profile.breakpoints[i + 1];
    terms.push_back(static_cast<double>(profile.counts[i]) *
                    (0.5 * (t1 - t0) * (t1 + t0)));
  }
  return pairwise_sum(terms) / total_length;
}

std::vector<double> rho_function_breakpoints(const MetricGraph& g,
                                             const VertexDistanceMatrix& d,
                                             std::size_t e) {
  const double le = g.length(e);
  const std::size_t a = g.tail(e), b = g.head(e);
  std::vector<double> cuts{0.0, le};
  for (std::size_t w = 0; w < g.vertex_count(); ++w) {
    const double k = kink(le, d(a, w), d(b, w));
    if (k > 0.0 && k < le) cuts.push_back(k);
  }
  const SheetSet ss = sheet_set(g, d, e, e);
  for (Region r : ss.regions()) {
    for (double s : slice_breakpoints(ss, r)) cuts.push_back(s);
  }
  sort_and_merge(cuts, 1e-13 * le);
  // Keep the exact end offset after merging.
  cuts.back() = le;
  return cuts;
}

double rho_function_edge_integral(const MetricGraph& g,
                                  const VertexDistanceMatrix& d,
                                  std::size_t e) {
  const std::vector<double> cuts = rho_function_breakpoints(g, d, e);
  std::vector<double> parts;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    parts.push_back(gauss2(
        [&](double s) { return rho_at_point(g, d, {e, s}); }, cuts[i],
        cuts[i + 1]));
  }
  return pairwise_sum(parts);
}

std::optional<PointOnEdge> find_point_with_rho(const MetricGraph& g,
                                               const VertexDistanceMatrix& d,
                                               double target) {
  const double l = total_length(g);
  const double snap = 1e-12 * l;
  // Vertices first.
  std::optional<PointOnEdge> best_vertex;
  double best_vertex_gap = std::numeric_limits<double>::infinity();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const PointOnEdge p = g.point_at_vertex(v);
    const double gap = std::abs(rho_at_point(g, d, p) - target);
    if (gap <= snap && gap < best_vertex_gap) {
      best_vertex = p;
      best_vertex_gap = gap;
    }
  }
  if (best_vertex) return best_vertex;

  std::optional<PointOnEdge> best;
  double best_depth = -1.0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const double le = g.length(e);
    const std::vector<double> cuts = rho_function_breakpoints(g, d, e);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const double p = cuts[i], q = cuts[i + 1];
      if (q <= p) continue;
      const double h0 = rho_at_point(g, d, {e, p}) - target;
      const double hm = rho_at_point(g, d, {e, 0.5 * (p + q)}) - target;
      const double h1 = rho_at_point(g, d, {e, q}) - target;
      std::vector<double> roots;
      quadratic_roots(p, q, h0, hm, h1, roots);
      for (double s : roots) {
        s = std::clamp(s, 0.0, le);
        const double depth = std::min(s, le - s);
        if (depth > best_depth) {
          best_depth = depth;
          best = PointOnEdge{e, s};
        }
      }
    }
  }
  return best;
}

bool is_rho_function_constant(const MetricGraph& g,
                              const VertexDistanceMatrix& d,
                              double tolerance) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const std::vector<double> cuts = rho_function_breakpoints(g, d, e);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      for (double s : {cuts[i], 0.5 * (cuts[i] + cuts[i + 1]), cuts[i + 1]}) {
        const double v = rho_at_point(g, d, {e, s});
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
  }
  return hi - lo <= tolerance;
}

}  // namespace mdist
