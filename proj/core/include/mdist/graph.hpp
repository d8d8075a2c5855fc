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

// Compact metric multigraphs: a finite set of vertices joined by edges that
// are real intervals of positive length. Self-loops and parallel edges are
// first-class citizens, so adjacency is always expressed per edge, never as a
// vertex-pair map.

#ifndef MDIST_GRAPH_HPP_
#define MDIST_GRAPH_HPP_

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mdist {

inline constexpr std::size_t kNoIndex = std::numeric_limits<std::size_t>::max();

// Raised for malformed graphs, unknown ids and out-of-range arguments.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  std::string id;
  std::string u;
  std::string v;
  double length = 0.0;
};

// One end of an edge. A self-loop owns two distinct incidences at its vertex.
enum class EdgeEnd { kU = 0, kV = 1 };

struct Incidence {
  std::size_t edge = kNoIndex;
  EdgeEnd end = EdgeEnd::kU;

  friend bool operator==(const Incidence&, const Incidence&) = default;
};

// A point x of the graph: an edge plus an offset measured from the edge's u
// end. Offsets 0 and length are identified with the endpoint vertices.
struct PointOnEdge {
  std::size_t edge = 0;
  double offset = 0.0;
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Immutable after construction. The constructor never throws on invariant
// breaches so that validate() can report them; algorithms assume a graph for
// which validate(g).ok() holds (see require_valid).
class MetricGraph {
 public:
  MetricGraph() = default;
  MetricGraph(std::vector<std::string> vertices, std::vector<Edge> edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const Edge& edge(std::size_t e) const { return edges_[e]; }
  double length(std::size_t e) const { return edges_[e].length; }
  // Endpoint vertex indices; kNoIndex when the endpoint id is unknown.
  std::size_t tail(std::size_t e) const { return ends_[e].first; }
  std::size_t head(std::size_t e) const { return ends_[e].second; }
  std::size_t endpoint(std::size_t e, EdgeEnd end) const {
    return end == EdgeEnd::kU ? ends_[e].first : ends_[e].second;
  }
  bool is_self_loop(std::size_t e) const {
    return ends_[e].first == ends_[e].second;
  }

  const std::vector<Incidence>& incidences(std::size_t vertex) const {
    return incidences_[vertex];
  }
  // Number of edge ends at the vertex (a self-loop counts twice).
  std::size_t degree(std::size_t vertex) const {
    return incidences_[vertex].size();
  }

  std::optional<std::size_t> find_vertex(const std::string& id) const;
  std::optional<std::size_t> find_edge(const std::string& id) const;
  std::size_t vertex_index(const std::string& id) const;  // throws GraphError
  std::size_t edge_index(const std::string& id) const;    // throws GraphError

  // The vertex identified with the point, if it sits at an edge end.
  std::optional<std::size_t> vertex_at(const PointOnEdge& x) const;
  // A point representing the given vertex (first incidence).
  PointOnEdge point_at_vertex(std::size_t vertex) const;

  // Returns an id not used by any vertex or edge, derived from `stem`.
  std::string fresh_id(const std::string& stem) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::pair<std::size_t, std::size_t>> ends_;
  std::vector<std::vector<Incidence>> incidences_;
};

ValidationReport validate(const MetricGraph& g);
// Throws GraphError listing every violation.
void require_valid(const MetricGraph& g);

double total_length(const MetricGraph& g);
bool is_connected(const MetricGraph& g);
// E - V + 1; meaningful for connected graphs.
long betti_number(const MetricGraph& g);
// Indices of bridge edges. Self-loops and edges with a parallel twin are
// never bridges.
std::vector<std::size_t> bridges(const MetricGraph& g);
bool is_doubly_connected(const MetricGraph& g);
bool is_tree(const MetricGraph& g);

// Splits edge `edge_id` at `offset` (strictly inside the edge) with a fresh
// degree-two vertex. The first piece keeps the original edge's position in
// the edge list, the second is inserted right after it.
std::pair<MetricGraph, std::string> subdivide(const MetricGraph& g,
                                              const std::string& edge_id,
                                              double offset);

// Reverses the parametrisation of one edge.
MetricGraph flip_edge(const MetricGraph& g, const std::string& edge_id);
MetricGraph scale_lengths(const MetricGraph& g, double factor);
// The subgraph spanned by the listed edges and their endpoints.
MetricGraph edge_subgraph(const MetricGraph& g,
                          const std::vector<std::size_t>& edge_indices);

// Same point seen with the edge's parametrisation reversed.
inline PointOnEdge flipped(const MetricGraph& g, const PointOnEdge& x) {
  return {x.edge, g.length(x.edge) - x.offset};
}

}  // namespace mdist

#endif  // MDIST_GRAPH_HPP_
