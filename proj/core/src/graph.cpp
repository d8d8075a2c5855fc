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

#include "mdist/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace mdist {

MetricGraph::MetricGraph(std::vector<std::string> vertices,
                         std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    index.emplace(vertices_[i], i);  // first occurrence wins
  }
  auto lookup = [&](const std::string& id) {
    auto it = index.find(id);
    return it == index.end() ? kNoIndex : it->second;
  };
  ends_.reserve(edges_.size());
  incidences_.assign(vertices_.size(), {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const std::size_t a = lookup(edges_[e].u);
    const std::size_t b = lookup(edges_[e].v);
    ends_.emplace_back(a, b);
    if (a != kNoIndex) incidences_[a].push_back({e, EdgeEnd::kU});
    if (b != kNoIndex) incidences_[b].push_back({e, EdgeEnd::kV});
  }
}

std::optional<std::size_t> MetricGraph::find_vertex(
    const std::string& id) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> MetricGraph::find_edge(const std::string& id) const {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].id == id) return e;
  }
  return std::nullopt;
}

std::size_t MetricGraph::vertex_index(const std::string& id) const {
  if (auto v = find_vertex(id)) return *v;
  throw GraphError("unknown vertex '" + id + "'");
}

std::size_t MetricGraph::edge_index(const std::string& id) const {
  if (auto e = find_edge(id)) return *e;
  throw GraphError("unknown edge '" + id + "'");
}

std::optional<std::size_t> MetricGraph::vertex_at(const PointOnEdge& x) const {
  if (x.offset <= 0.0) return tail(x.edge);
  if (x.offset >= length(x.edge)) return head(x.edge);
  return std::nullopt;
}

PointOnEdge MetricGraph::point_at_vertex(std::size_t vertex) const {
  if (incidences_[vertex].empty()) {
    throw GraphError("vertex '" + vertices_[vertex] + "' has no edges");
  }
  const Incidence& inc = incidences_[vertex].front();
  return {inc.edge, inc.end == EdgeEnd::kU ? 0.0 : length(inc.edge)};
}

std::string MetricGraph::fresh_id(const std::string& stem) const {
  std::unordered_set<std::string> used(vertices_.begin(), vertices_.end());
  for (const Edge& e : edges_) used.insert(e.id);
  if (!used.count(stem)) return stem;
  for (std::size_t k = 1;; ++k) {
    std::string candidate = stem + "#" + std::to_string(k);
    if (!used.count(candidate)) return candidate;
  }
}

ValidationReport validate(const MetricGraph& g) {
  ValidationReport report;
  auto& out = report.violations;
  if (g.edge_count() == 0) out.push_back("graph has no edges");

  std::set<std::string> seen;
  for (const auto& v : g.vertices()) {
    if (!seen.insert(v).second) out.push_back("duplicate vertex id '" + v + "'");
  }
  std::set<std::string> seen_edges;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (!seen_edges.insert(edge.id).second) {
      out.push_back("duplicate edge id '" + edge.id + "'");
    }
    if (g.tail(e) == kNoIndex) {
      out.push_back("edge '" + edge.id + "' has unknown endpoint '" + edge.u +
                    "'");
    }
    if (g.head(e) == kNoIndex) {
      out.push_back("edge '" + edge.id + "' has unknown endpoint '" + edge.v +
                    "'");
    }
    if (!std::isfinite(edge.length)) {
      out.push_back("edge '" + edge.id + "' has non-finite length");
    } else if (edge.length <= 0.0) {
      out.push_back("edge '" + edge.id + "' has nonpositive length");
    }
  }
  if (out.empty() && !is_connected(g)) out.push_back("graph is disconnected");
  return report;
}

void require_valid(const MetricGraph& g) {
  ValidationReport r = validate(g);
  if (r.ok()) return;
  std::string msg = "invalid graph:";
  for (const auto& v : r.violations) msg += " " + v + ";";
  msg.pop_back();
  throw GraphError(msg);
}

double total_length(const MetricGraph& g) {
  double sum = 0.0;
  for (const Edge& e : g.edges()) sum += e.length;
  return sum;
}

bool is_connected(const MetricGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.incidences(v)) {
      const std::size_t w = g.endpoint(
          inc.edge, inc.end == EdgeEnd::kU ? EdgeEnd::kV : EdgeEnd::kU);
      if (w != kNoIndex && !seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

long betti_number(const MetricGraph& g) {
  return static_cast<long>(g.edge_count()) -
         static_cast<long>(g.vertex_count()) + 1;
}

std::vector<std::size_t> bridges(const MetricGraph& g) {
  // Iterative Tarjan low-link. The parent *edge* (not vertex) is skipped, so a
  // parallel twin still counts as a back edge.
  const std::size_t n = g.vertex_count();
  std::vector<long> disc(n, -1), low(n, 0);
  std::vector<std::size_t> result;
  long timer = 0;
  struct Frame {
    std::size_t vertex;
    std::size_t parent_edge;
    std::size_t next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, kNoIndex, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& incs = g.incidences(f.vertex);
      if (f.next < incs.size()) {
        const Incidence inc = incs[f.next++];
        if (inc.edge == f.parent_edge || g.is_self_loop(inc.edge)) continue;
        const std::size_t w = g.endpoint(
            inc.edge, inc.end == EdgeEnd::kU ? EdgeEnd::kV : EdgeEnd::kU);
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, inc.edge, 0});
        } else {
          low[f.vertex] = std::min(low[f.vertex], disc[w]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          const std::size_t p = stack.back().vertex;
          low[p] = std::min(low[p], low[done.vertex]);
          if (low[done.vertex] > disc[p]) result.push_back(done.parent_edge);
        }
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

bool is_doubly_connected(const MetricGraph& g) { return bridges(g).empty(); }

bool is_tree(const MetricGraph& g) {
  return is_connected(g) && betti_number(g) == 0;
}

std::pair<MetricGraph, std::string> subdivide(const MetricGraph& g,
                                              const std::string& edge_id,
                                              double offset) {
  const std::size_t e = g.edge_index(edge_id);
  const Edge& old = g.edge(e);
  if (!(offset > 0.0 && offset < old.length)) {
    throw GraphError("subdivision offset must lie strictly inside edge '" +
                     edge_id + "'");
  }
  const std::string mid = g.fresh_id(edge_id + "/m");
  std::vector<std::string> vertices = g.vertices();
  vertices.push_back(mid);

  // Pick ids for both pieces that collide neither with g nor with each other.
  MetricGraph probe(vertices, g.edges());
  const std::string first = probe.fresh_id(edge_id + "/0");
  const std::string second = probe.fresh_id(edge_id + "/1");

  std::vector<Edge> edges;
  edges.reserve(g.edge_count() + 1);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (i != e) {
      edges.push_back(g.edge(i));
      continue;
    }
    edges.push_back({first, old.u, mid, offset});
    edges.push_back({second, mid, old.v, old.length - offset});
  }
  return {MetricGraph(std::move(vertices), std::move(edges)), mid};
}

MetricGraph flip_edge(const MetricGraph& g, const std::string& edge_id) {
  const std::size_t e = g.edge_index(edge_id);
  std::vector<Edge> edges = g.edges();
  std::swap(edges[e].u, edges[e].v);
  return MetricGraph(g.vertices(), std::move(edges));
}

MetricGraph scale_lengths(const MetricGraph& g, double factor) {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw GraphError("scale factor must be positive and finite");
  }
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) e.length *= factor;
  return MetricGraph(g.vertices(), std::move(edges));
}

MetricGraph edge_subgraph(const MetricGraph& g,
                          const std::vector<std::size_t>& edge_indices) {
  std::vector<char> keep_vertex(g.vertex_count(), 0);
  std::vector<Edge> edges;
  for (std::size_t e : edge_indices) {
    edges.push_back(g.edge(e));
    keep_vertex[g.tail(e)] = 1;
    keep_vertex[g.head(e)] = 1;
  }
  std::vector<std::string> vertices;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (keep_vertex[v]) vertices.push_back(g.vertices()[v]);
  }
  return MetricGraph(std::move(vertices), std::move(edges));
}

}  // namespace mdist
