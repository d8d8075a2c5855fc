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

#include "mdist/shortest_path.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <utility>

#include "mdist/parallel.hpp"

namespace mdist {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Compressed adjacency without self-loops.
struct Adjacency {
  std::vector<std::size_t> start;
  std::vector<std::size_t> target;
  std::vector<double> length;

  explicit Adjacency(const MetricGraph& g) {
    const std::size_t n = g.vertex_count();
    start.assign(n + 1, 0);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (g.is_self_loop(e)) continue;
      ++start[g.tail(e) + 1];
      ++start[g.head(e) + 1];
    }
    for (std::size_t v = 0; v < n; ++v) start[v + 1] += start[v];
    target.resize(start[n]);
    length.resize(start[n]);
    std::vector<std::size_t> fill(start.begin(), start.end() - 1);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (g.is_self_loop(e)) continue;
      const std::size_t a = g.tail(e), b = g.head(e);
      target[fill[a]] = b;
      length[fill[a]++] = g.length(e);
      target[fill[b]] = a;
      length[fill[b]++] = g.length(e);
    }
  }
};

void dijkstra(const Adjacency& adj, std::size_t source, double* dist,
              std::size_t n) {
  std::fill(dist, dist + n, kInf);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    const auto [du, u] = heap.top();
    heap.pop();
    if (du > dist[u]) continue;
    for (std::size_t k = adj.start[u]; k < adj.start[u + 1]; ++k) {
      const double cand = du + adj.length[k];
      const std::size_t w = adj.target[k];
      if (cand < dist[w]) {
        dist[w] = cand;
        heap.emplace(cand, w);
      }
    }
  }
}

// Endpoint distances along e for the fixed-point case.
struct EndDistances {
  double a_to;  // D(tail(e), w)
  double b_to;  // D(head(e), w)
};

double along(double s, double len, EndDistances d) {
  return std::min(s + d.a_to, (len - s) + d.b_to);
}

// s in (0, len) where min(s + p, len - s + q) switches branch; clamped.
double kink(double len, double p, double q) {
  return std::clamp(0.5 * (len + q - p), 0.0, len);
}

struct Point2 {
  double s;
  double t;
};

bool in_region(Region region, double len_e, double len_f, Point2 p) {
  const double tol = 1e-12 * std::max(len_e, len_f);
  if (p.s < -tol || p.s > len_e + tol || p.t < -tol || p.t > len_f + tol) {
    return false;
  }
  if (region == Region::kUpper) return p.t >= p.s - tol;
  if (region == Region::kLower) return p.t <= p.s + tol;
  return true;
}

std::vector<Point2> region_corners(Region region, double len_e,
                                   double len_f) {
  switch (region) {
    case Region::kUpper:
      return {{0.0, 0.0}, {len_e, len_f}, {0.0, len_f}};
    case Region::kLower:
      return {{0.0, 0.0}, {len_e, 0.0}, {len_e, len_f}};
    default:
      return {{0.0, 0.0}, {len_e, 0.0}, {len_e, len_f}, {0.0, len_f}};
  }
}

// a * s + b * t + c = 0
struct TieLine {
  double a;
  double b;
  double c;
};

double min_of(const std::vector<Sheet>& sheets, double s, double t) {
  double v = kInf;
  for (const Sheet& sh : sheets) v = std::min(v, sh.at(s, t));
  return v;
}

std::vector<Sheet> dedupe(std::vector<Sheet> sheets) {
  std::vector<Sheet> out;
  for (const Sheet& s : sheets) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

}  // namespace

std::vector<double> distances_from(const MetricGraph& g, std::size_t source) {
  Adjacency adj(g);
  std::vector<double> dist(g.vertex_count());
  dijkstra(adj, source, dist.data(), dist.size());
  return dist;
}

VertexDistanceMatrix vertex_distances(const MetricGraph& g) {
  const std::size_t n = g.vertex_count();
  Adjacency adj(g);
  VertexDistanceMatrix d(n);
  parallel_for(n, [&](std::size_t u) {
    dijkstra(adj, u, &d.at(u, 0), n);
  });
  // Dijkstra from u and from v can round differently; enforce symmetry.
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const double m = std::min(d(u, v), d(v, u));
      d.at(u, v) = m;
      d.at(v, u) = m;
    }
  }
  return d;
}

std::vector<Sheet> SheetSet::region_sheets(Region region) const {
  std::vector<Sheet> out = sheets;
  if (region == Region::kUpper) out.push_back({0.0, -1, 1});
  if (region == Region::kLower) out.push_back({0.0, 1, -1});
  return dedupe(std::move(out));
}

std::vector<Region> SheetSet::regions() const {
  if (same_edge) return {Region::kUpper, Region::kLower};
  return {Region::kRectangle};
}

double SheetSet::value(double s, double t) const {
  double v = min_of(sheets, s, t);
  if (same_edge) v = std::min(v, std::abs(t - s));
  return v;
}

SheetSet sheet_set(const MetricGraph& g, const VertexDistanceMatrix& d,
                   std::size_t e, std::size_t f) {
  SheetSet out;
  out.e = e;
  out.f = f;
  out.len_e = g.length(e);
  out.len_f = g.length(f);
  out.same_edge = (e == f);
  const std::size_t a = g.tail(e), b = g.head(e);
  const std::size_t c = g.tail(f), dd = g.head(f);
  const double le = out.len_e, lf = out.len_f;
  out.sheets = {
      {d(a, c), 1, 1},
      {d(a, dd) + lf, 1, -1},
      {le + d(b, c), -1, 1},
      {le + lf + d(b, dd), -1, -1},
  };
  return out;
}

Slice slice_at(const SheetSet& sheets, Region region, double s) {
  Slice out;
  for (const Sheet& sh : sheets.region_sheets(region)) {
    out.lines.push_back({sh.c + sh.ds * s, static_cast<double>(sh.dt)});
  }
  switch (region) {
    case Region::kUpper:
      out.lo = s;
      out.hi = sheets.len_f;
      break;
    case Region::kLower:
      out.lo = 0.0;
      out.hi = s;
      break;
    default:
      out.lo = 0.0;
      out.hi = sheets.len_f;
  }
  return out;
}

std::vector<double> slice_breakpoints(const SheetSet& sheets, Region region) {
  const std::vector<Sheet> rs = sheets.region_sheets(region);
  // t-breakpoints as affine functions A + B s.
  std::vector<std::pair<double, double>> cand;
  switch (region) {
    case Region::kUpper:
      cand = {{0.0, 1.0}, {sheets.len_f, 0.0}};
      break;
    case Region::kLower:
      cand = {{0.0, 0.0}, {0.0, 1.0}};
      break;
    default:
      cand = {{0.0, 0.0}, {sheets.len_f, 0.0}};
  }
  std::vector<double> events;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (std::size_t j = i + 1; j < rs.size(); ++j) {
      const int ddt = rs[i].dt - rs[j].dt;
      const int dds = rs[j].ds - rs[i].ds;
      if (ddt != 0) {
        cand.emplace_back((rs[j].c - rs[i].c) / ddt,
                          static_cast<double>(dds) / ddt);
      } else if (dds != 0) {
        // Parallel in t: the order swaps where the offsets agree.
        events.push_back((rs[i].c - rs[j].c) / dds);
      }
    }
  }
  for (std::size_t i = 0; i < cand.size(); ++i) {
    for (std::size_t j = i + 1; j < cand.size(); ++j) {
      const double db = cand[i].second - cand[j].second;
      if (db == 0.0) continue;
      events.push_back((cand[j].first - cand[i].first) / db);
    }
  }
  std::vector<double> inside;
  for (double s : events) {
    if (s > 0.0 && s < sheets.len_e) inside.push_back(s);
  }
  sort_and_merge(inside, 1e-13 * sheets.len_e);
  return inside;
}

double distance_to_vertex(const MetricGraph& g, const VertexDistanceMatrix& d,
                          const PointOnEdge& x, std::size_t w) {
  const std::size_t e = x.edge;
  return along(x.offset, g.length(e),
               {d(g.tail(e), w), d(g.head(e), w)});
}

double point_distance(const MetricGraph& g, const VertexDistanceMatrix& d,
                      const PointOnEdge& x_in, const PointOnEdge& y_in) {
  // Canonical argument order makes the result exactly symmetric.
  const bool swap = y_in.edge < x_in.edge ||
                    (y_in.edge == x_in.edge && y_in.offset < x_in.offset);
  const PointOnEdge& x = swap ? y_in : x_in;
  const PointOnEdge& y = swap ? x_in : y_in;
  const std::size_t f = y.edge;
  const double lf = g.length(f);
  const double via_tail = distance_to_vertex(g, d, x, g.tail(f)) + y.offset;
  const double via_head =
      distance_to_vertex(g, d, x, g.head(f)) + (lf - y.offset);
  double best = std::min(via_tail, via_head);
  if (x.edge == y.edge) best = std::min(best, std::abs(y.offset - x.offset));
  return best;
}

double eccentricity(const MetricGraph& g, const VertexDistanceMatrix& d,
                    const PointOnEdge& x) {
  double best = 0.0;
  for (std::size_t f = 0; f < g.edge_count(); ++f) {
    if (f == x.edge) {
      const SheetSet ss = sheet_set(g, d, f, f);
      for (Region r : ss.regions()) {
        const Slice sl = slice_at(ss, r, x.offset);
        if (sl.hi < sl.lo) continue;
        best = std::max(best, max_lower_envelope(sl.lines, sl.lo, sl.hi));
      }
      continue;
    }
    best = std::max(best, tent_max(distance_to_vertex(g, d, x, g.tail(f)),
                                   distance_to_vertex(g, d, x, g.head(f)),
                                   g.length(f)));
  }
  return best;
}

double edge_pair_max_distance_generic(const SheetSet& ss) {
  double best = 0.0;
  for (Region region : ss.regions()) {
    const std::vector<Sheet> sh = ss.region_sheets(region);
    const std::vector<Point2> corners =
        region_corners(region, ss.len_e, ss.len_f);
    std::vector<Point2> cand = corners;

    std::vector<TieLine> ties;
    for (std::size_t i = 0; i < sh.size(); ++i) {
      for (std::size_t j = i + 1; j < sh.size(); ++j) {
        const double a = sh[i].ds - sh[j].ds;
        const double b = sh[i].dt - sh[j].dt;
        if (a == 0.0 && b == 0.0) continue;
        ties.push_back({a, b, sh[i].c - sh[j].c});
      }
    }
    // Tie-lines against the region boundary.
    for (const TieLine& tl : ties) {
      for (std::size_t k = 0; k < corners.size(); ++k) {
        const Point2 p = corners[k];
        const Point2 q = corners[(k + 1) % corners.size()];
        const double fp = tl.a * p.s + tl.b * p.t + tl.c;
        const double fq = tl.a * q.s + tl.b * q.t + tl.c;
        if (fp == fq) continue;
        const double lambda = fp / (fp - fq);
        if (lambda < 0.0 || lambda > 1.0) continue;
        cand.push_back({p.s + lambda * (q.s - p.s), p.t + lambda * (q.t - p.t)});
      }
    }
    // Tie-lines against each other.
    for (std::size_t i = 0; i < ties.size(); ++i) {
      for (std::size_t j = i + 1; j < ties.size(); ++j) {
        const double det = ties[i].a * ties[j].b - ties[j].a * ties[i].b;
        if (det == 0.0) continue;
        const Point2 p{(ties[i].b * ties[j].c - ties[j].b * ties[i].c) / det,
                       (ties[j].a * ties[i].c - ties[i].a * ties[j].c) / det};
        if (in_region(region, ss.len_e, ss.len_f, p)) cand.push_back(p);
      }
    }
    for (Point2 p : cand) {
      p.s = std::clamp(p.s, 0.0, ss.len_e);
      p.t = std::clamp(p.t, 0.0, ss.len_f);
      best = std::max(best, min_of(sh, p.s, p.t));
    }
  }
  return best;
}

double edge_pair_max_distance(const MetricGraph& g,
                              const VertexDistanceMatrix& d, std::size_t e,
                              std::size_t f) {
  if (e == f) return edge_pair_max_distance_generic(sheet_set(g, d, e, f));
  // max_t dist = (alpha(s) + beta(s) + l_f) / 2 is concave piecewise affine
  // in s, with kinks where alpha or beta switch branch.
  const double le = g.length(e), lf = g.length(f);
  const std::size_t a = g.tail(e), b = g.head(e);
  const std::size_t c = g.tail(f), dd = g.head(f);
  const EndDistances to_c{d(a, c), d(b, c)};
  const EndDistances to_d{d(a, dd), d(b, dd)};
  const std::array<double, 4> ss{0.0, le, kink(le, to_c.a_to, to_c.b_to),
                                 kink(le, to_d.a_to, to_d.b_to)};
  double best = 0.0;
  for (double s : ss) {
    best = std::max(best, tent_max(along(s, le, to_c), along(s, le, to_d), lf));
  }
  return best;
}

double diameter(const MetricGraph& g, const VertexDistanceMatrix& d) {
  const std::size_t m = g.edge_count();
  std::vector<double> row_max(m, 0.0);
  parallel_for(m, [&](std::size_t e) {
    double best = 0.0;
    for (std::size_t f = e; f < m; ++f) {
      best = std::max(best, edge_pair_max_distance(g, d, e, f));
    }
    row_max[e] = best;
  });
  return m == 0 ? 0.0 : *std::max_element(row_max.begin(), row_max.end());
}

double diameter(const MetricGraph& g) {
  return diameter(g, vertex_distances(g));
}

}  // namespace mdist
