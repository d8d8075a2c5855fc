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

#include "mdist/surgery.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "mdist/mean_distance.hpp"
#include "mdist/shortest_path.hpp"

namespace mdist {

namespace {

std::string& end_of(Edge& e, EdgeEnd end) {
  return end == EdgeEnd::kU ? e.u : e.v;
}

MetricGraph checked(std::vector<std::string> vertices, std::vector<Edge> edges) {
  MetricGraph out(std::move(vertices), std::move(edges));
  require_valid(out);
  return out;
}

// Walks from `vertex` along `edge` through degree-two vertices. Returns the
// degree-one vertex reached, or kNoIndex if the walk hits a branching vertex
// or returns to its start.
std::size_t pendant_leaf(const MetricGraph& g, std::size_t vertex,
                         std::size_t edge) {
  std::size_t at = vertex;
  std::size_t via = edge;
  for (std::size_t steps = 0; steps <= g.edge_count(); ++steps) {
    if (g.is_self_loop(via)) return kNoIndex;
    const std::size_t next = g.tail(via) == at ? g.head(via) : g.tail(via);
    if (next == vertex) return kNoIndex;
    if (g.degree(next) == 1) return next;
    if (g.degree(next) != 2) return kNoIndex;
    const auto& inc = g.incidences(next);
    via = inc[0].edge == via ? inc[1].edge : inc[0].edge;
    at = next;
  }
  return kNoIndex;
}

}  // namespace

std::string cut_vertex_new_id(const MetricGraph& g, const std::string& vertex) {
  return g.fresh_id(vertex + "'");
}

MetricGraph cut_vertex(const MetricGraph& g, const CutSpec& spec) {
  const std::size_t v = g.vertex_index(spec.vertex);
  if (spec.first.empty() || spec.second.empty()) {
    throw GraphError("cut_vertex: trivial cut (a group is empty)");
  }
  std::vector<Incidence> all = spec.first;
  all.insert(all.end(), spec.second.begin(), spec.second.end());
  std::vector<Incidence> expected = g.incidences(v);
  auto key = [](const Incidence& i) {
    return std::make_pair(i.edge, static_cast<int>(i.end));
  };
  auto by_key = [&](const Incidence& a, const Incidence& b) {
    return key(a) < key(b);
  };
  std::sort(all.begin(), all.end(), by_key);
  std::sort(expected.begin(), expected.end(), by_key);
  if (all != expected) {
    throw GraphError(
        "cut_vertex: groups must partition the incidences at the vertex");
  }

  const std::string fresh = cut_vertex_new_id(g, spec.vertex);
  std::vector<std::string> vertices = g.vertices();
  vertices.insert(vertices.begin() + static_cast<std::ptrdiff_t>(v) + 1, fresh);
  std::vector<Edge> edges = g.edges();
  for (const Incidence& inc : spec.second) {
    end_of(edges[inc.edge], inc.end) = fresh;
  }
  MetricGraph out(std::move(vertices), std::move(edges));
  if (!is_connected(out)) {
    throw GraphError("cut_vertex: the cut disconnects the graph");
  }
  require_valid(out);
  return out;
}

MetricGraph glue_vertices(const MetricGraph& g, const std::string& v1,
                          const std::string& v2) {
  g.vertex_index(v1);
  const std::size_t i2 = g.vertex_index(v2);
  if (v1 == v2) throw GraphError("glue_vertices: vertices must differ");
  std::vector<std::string> vertices = g.vertices();
  vertices.erase(vertices.begin() + static_cast<std::ptrdiff_t>(i2));
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) {
    if (e.u == v2) e.u = v1;
    if (e.v == v2) e.v = v1;
  }
  return checked(std::move(vertices), std::move(edges));
}

MetricGraph unfold_pendant_paths(const MetricGraph& g,
                                 const std::string& first,
                                 const std::string& second,
                                 const std::string& v) {
  const std::size_t vi = g.vertex_index(v);
  const std::size_t e1 = g.edge_index(first);
  const std::size_t e2 = g.edge_index(second);
  if (e1 == e2) throw GraphError("unfold: the two branches must differ");
  for (std::size_t e : {e1, e2}) {
    if (g.tail(e) != vi && g.head(e) != vi) {
      throw GraphError("unfold: edge " + g.edge(e).id + " is not at " + v);
    }
  }
  const std::size_t leaf1 = pendant_leaf(g, vi, e1);
  const std::size_t leaf2 = pendant_leaf(g, vi, e2);
  if (leaf1 == kNoIndex || leaf2 == kNoIndex) {
    throw GraphError("unfold: both branches must be pendant paths at " + v);
  }
  std::vector<Edge> edges = g.edges();
  Edge& moved = edges[e2];
  if (moved.u == v) {
    moved.u = g.vertices()[leaf1];
  } else {
    moved.v = g.vertices()[leaf1];
  }
  return checked(g.vertices(), std::move(edges));
}

MetricGraph unfold_pendant_pair(const MetricGraph& g, const std::string& e1,
                                const std::string& e2, const std::string& v) {
  const std::size_t vi = g.vertex_index(v);
  for (const std::string* id : {&e1, &e2}) {
    const std::size_t e = g.edge_index(*id);
    if (g.is_self_loop(e) || (g.tail(e) != vi && g.head(e) != vi)) {
      throw GraphError("unfold_pendant_pair: " + *id + " is not a pendant edge at " + v);
    }
    const std::size_t far = g.tail(e) == vi ? g.head(e) : g.tail(e);
    if (g.degree(far) != 1) {
      throw GraphError("unfold_pendant_pair: " + *id + " is not a pendant edge at " + v);
    }
  }
  return unfold_pendant_paths(g, e1, e2, v);
}

bool is_path_graph(const MetricGraph& g) {
  if (!is_tree(g)) return false;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 2) return false;
  }
  return true;
}

std::vector<MetricGraph> unfold_to_path(const MetricGraph& g) {
  if (!is_tree(g)) throw GraphError("unfold_to_path: the graph must be a tree");
  std::vector<MetricGraph> steps{g};
  while (!is_path_graph(steps.back())) {
    const MetricGraph& cur = steps.back();
    bool moved = false;
    for (std::size_t v = 0; v < cur.vertex_count() && !moved; ++v) {
      if (cur.degree(v) < 3) continue;
      std::vector<std::size_t> branches;
      for (const Incidence& inc : cur.incidences(v)) {
        if (pendant_leaf(cur, v, inc.edge) != kNoIndex) {
          branches.push_back(inc.edge);
        }
      }
      if (branches.size() < 2) continue;
      steps.push_back(unfold_pendant_paths(cur, cur.edge(branches[0]).id,
                                           cur.edge(branches[1]).id,
                                           cur.vertices()[v]));
      moved = true;
    }
    if (!moved) throw GraphError("unfold_to_path: no pendant pair found");
  }
  return steps;
}

MetricGraph attach_pendant_edge(const MetricGraph& g,
                                const std::string& vertex, double length) {
  g.vertex_index(vertex);
  if (!(length > 0.0)) {
    throw GraphError("attach_pendant_edge: length must be positive");
  }
  const std::string leaf = g.fresh_id(vertex + ".leaf");
  std::vector<std::string> vertices = g.vertices();
  vertices.push_back(leaf);
  std::vector<Edge> edges = g.edges();
  // Reserve the leaf id before deriving the edge id.
  MetricGraph probe(vertices, edges);
  edges.push_back({probe.fresh_id(vertex + ".pendant"), vertex, leaf, length});
  return checked(std::move(vertices), std::move(edges));
}

MetricGraph set_edge_length(const MetricGraph& g, const std::string& edge,
                            double length) {
  const std::size_t e = g.edge_index(edge);
  std::vector<Edge> edges = g.edges();
  edges[e].length = length;
  return checked(g.vertices(), std::move(edges));
}

double pendant_derivative(const MetricGraph& g, const std::string& vertex) {
  const std::size_t v = g.vertex_index(vertex);
  const VertexDistanceMatrix d = vertex_distances(g);
  const double rho = rho_graph(g, d, {.keep_pairs = false}).rho;
  const double at_v = rho_at_point(g, d, g.point_at_vertex(v));
  return 2.0 / total_length(g) * (at_v - rho);
}

std::vector<std::vector<std::size_t>> pendant_components(
    const MetricGraph& g, const std::string& vertex) {
  const std::size_t v = g.vertex_index(vertex);
  // Union-find over edges: two edges are joined when they share a vertex
  // other than v.
  std::vector<std::size_t> parent(g.edge_count());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t w = 0; w < g.vertex_count(); ++w) {
    if (w == v) continue;
    const auto& inc = g.incidences(w);
    for (std::size_t k = 1; k < inc.size(); ++k) {
      parent[find(inc[k].edge)] = find(inc[0].edge);
    }
  }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> slot(g.edge_count(), kNoIndex);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const std::size_t r = find(e);
    if (slot[r] == kNoIndex) {
      slot[r] = groups.size();
      groups.emplace_back();
    }
    groups[slot[r]].push_back(e);
  }
  // Keep only the groups touching v (all of them in a connected graph).
  std::erase_if(groups, [&](const std::vector<std::size_t>& grp) {
    return std::none_of(grp.begin(), grp.end(), [&](std::size_t e) {
      return g.tail(e) == v || g.head(e) == v;
    });
  });
  return groups;
}

MetricGraph replace_pendant(const MetricGraph& g, const std::string& vertex,
                            const std::vector<std::size_t>& pendant_edges,
                            const MetricGraph& replacement,
                            const std::string& boundary,
                            const std::string& prefix) {
  const std::size_t v = g.vertex_index(vertex);
  replacement.vertex_index(boundary);
  const std::set<std::size_t> removed(pendant_edges.begin(),
                                      pendant_edges.end());
  for (std::size_t e : removed) {
    if (e >= g.edge_count()) throw GraphError("replace_pendant: bad edge index");
  }
  // Vertices used by the pendant part and by the rest.
  std::set<std::size_t> inside, outside;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto& side = removed.count(e) ? inside : outside;
    side.insert(g.tail(e));
    side.insert(g.head(e));
  }
  for (std::size_t w : inside) {
    if (w != v && outside.count(w)) {
      throw GraphError("replace_pendant: subgraph is not pendant at " + vertex);
    }
  }

  std::vector<std::string> vertices;
  for (std::size_t w = 0; w < g.vertex_count(); ++w) {
    if (w == v || !inside.count(w) || outside.count(w)) {
      vertices.push_back(g.vertices()[w]);
    }
  }
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!removed.count(e)) edges.push_back(g.edge(e));
  }
  auto rename = [&](const std::string& id) {
    return id == boundary ? vertex : prefix + id;
  };
  for (const std::string& w : replacement.vertices()) {
    if (w != boundary) vertices.push_back(prefix + w);
  }
  for (const Edge& e : replacement.edges()) {
    edges.push_back({prefix + e.id, rename(e.u), rename(e.v), e.length});
  }
  return checked(std::move(vertices), std::move(edges));
}

}  // namespace mdist
