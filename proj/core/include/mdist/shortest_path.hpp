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

// Distances on a metric graph.
//
// Vertex-to-vertex distances come from Dijkstra. Distances between interior
// points reduce to them: a shortest path between points on edges e and f
// either stays inside a shared edge or leaves through an endpoint of e and
// enters through an endpoint of f. On the rectangle [0, l_e] x [0, l_f] this
// makes dist(s, t) the minimum of at most four affine "sheets" with slopes in
// {-1, 0, 1}, plus |t - s| when e == f. All maxima and integrals below are
// evaluated on the induced piecewise-affine structure, in closed form.

#ifndef MDIST_SHORTEST_PATH_HPP_
#define MDIST_SHORTEST_PATH_HPP_

#include <cstddef>
#include <vector>

#include "mdist/affine.hpp"
#include "mdist/graph.hpp"

namespace mdist {

// Dense symmetric all-pairs vertex distance matrix.
class VertexDistanceMatrix {
 public:
  VertexDistanceMatrix() = default;
  explicit VertexDistanceMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double operator()(std::size_t u, std::size_t v) const {
    return data_[u * n_ + v];
  }
  double& at(std::size_t u, std::size_t v) { return data_[u * n_ + v]; }
  const double* row(std::size_t u) const { return data_.data() + u * n_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

// Single-source Dijkstra over the multigraph; parallel edges are relaxed
// individually and self-loops ignored. Ties pop in (distance, index) order.
std::vector<double> distances_from(const MetricGraph& g, std::size_t source);

// All-pairs distances (one Dijkstra per vertex, parallelised over sources).
VertexDistanceMatrix vertex_distances(const MetricGraph& g);

// c + ds * s + dt * t, with s the offset on e and t the offset on f.
struct Sheet {
  double c = 0.0;
  int ds = 0;
  int dt = 0;

  double at(double s, double t) const { return c + ds * s + dt * t; }
  friend bool operator==(const Sheet&, const Sheet&) = default;
};

// Regions of the parameter domain on which dist is a minimum of sheets.
// A distinct edge pair uses the whole rectangle. For e == f the direct path
// |t - s| is convex, so the square is split along the diagonal into the
// triangles t >= s and t <= s, on each of which it is a single sheet.
enum class Region { kRectangle, kUpper, kLower };

struct SheetSet {
  std::size_t e = 0;
  std::size_t f = 0;
  double len_e = 0.0;
  double len_f = 0.0;
  bool same_edge = false;
  // Paths through the endpoints of e and f (always four).
  std::vector<Sheet> sheets;

  // Sheets whose minimum equals dist on the region.
  std::vector<Sheet> region_sheets(Region region) const;
  std::vector<Region> regions() const;
  double value(double s, double t) const;
};

SheetSet sheet_set(const MetricGraph& g, const VertexDistanceMatrix& d,
                   std::size_t e, std::size_t f);

// dist(x, w) for a vertex w.
double distance_to_vertex(const MetricGraph& g, const VertexDistanceMatrix& d,
                          const PointOnEdge& x, std::size_t w);

double point_distance(const MetricGraph& g, const VertexDistanceMatrix& d,
                      const PointOnEdge& x, const PointOnEdge& y);

// M(x) = max_y dist(x, y).
double eccentricity(const MetricGraph& g, const VertexDistanceMatrix& d,
                    const PointOnEdge& x);

// max over (x, y) in e x f of dist(x, y). The first overload dispatches to a
// closed-form route for e != f; the generic route enumerates the vertices of
// the sheet arrangement on every region.
double edge_pair_max_distance(const MetricGraph& g,
                              const VertexDistanceMatrix& d, std::size_t e,
                              std::size_t f);
double edge_pair_max_distance_generic(const SheetSet& sheets);

double diameter(const MetricGraph& g, const VertexDistanceMatrix& d);
double diameter(const MetricGraph& g);

// The region restricted to a fixed s: lines in t and the t-range.
struct Slice {
  std::vector<Line> lines;
  double lo = 0.0;
  double hi = 0.0;
};
Slice slice_at(const SheetSet& sheets, Region region, double s);

// Values of s in (0, len_e) at which the combinatorial structure of the
// slice envelope can change: two t-breakpoints (pairwise crossings or
// region bounds) coincide, or two parallel lines swap order. Between
// consecutive values every slice integral is one quadratic in s.
std::vector<double> slice_breakpoints(const SheetSet& sheets, Region region);

// For a point at distances u, w from the two ends of an edge of length len:
// integral and maximum over the edge of min(u + t, w + len - t).
inline double tent_crest(double u, double w, double len) {
  const double t = 0.5 * (w + len - u);
  return t < 0.0 ? 0.0 : (t > len ? len : t);
}
inline double tent_integral(double u, double w, double len) {
  const double t = tent_crest(u, w, len);
  const double r = len - t;
  return u * t + 0.5 * t * t + w * r + 0.5 * r * r;
}
inline double tent_max(double u, double w, double len) {
  const double t = tent_crest(u, w, len);
  const double a = u + t;
  const double b = w + len - t;
  return a < b ? a : b;
}

}  // namespace mdist

#endif  // MDIST_SHORTEST_PATH_HPP_
