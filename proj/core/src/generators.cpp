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

#include "mdist/generators.hpp"

#include <cmath>
#include <numeric>
#include <utility>

#include "mdist/random.hpp"

namespace mdist {

namespace {

std::string vid(std::size_t i) { return "v" + std::to_string(i); }
std::string eid(std::size_t i) { return "e" + std::to_string(i); }

struct Builder {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;

  std::size_t add_vertex() {
    vertices.push_back(vid(vertices.size()));
    return vertices.size() - 1;
  }
  void add_edge(std::size_t u, std::size_t v) {
    edges.push_back({eid(edges.size()), vid(u), vid(v), 0.0});
  }
};

void require(bool ok, const char* message) {
  if (!ok) throw GraphError(message);
}

bool is_random_family(Family f) {
  return f == Family::kRandomTree || f == Family::kRandomGraph;
}

// Random recursive tree: vertex k attaches to a uniform earlier vertex.
void random_tree_edges(Builder& b, std::size_t count, CounterRng& rng) {
  b.add_vertex();
  for (std::size_t k = 1; k <= count; ++k) {
    const std::size_t parent = static_cast<std::size_t>(rng.below(k));
    const std::size_t child = b.add_vertex();
    b.add_edge(parent, child);
  }
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::kPath:
      return "path";
    case Family::kStar:
      return "star";
    case Family::kFlower:
      return "flower";
    case Family::kCycle:
      return "cycle";
    case Family::kFirework:
      return "firework";
    case Family::kRandomTree:
      return "random_tree";
    case Family::kRandomGraph:
      return "random_graph";
  }
  return "path";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::kPath, Family::kStar, Family::kFlower,
                   Family::kCycle, Family::kFirework, Family::kRandomTree,
                   Family::kRandomGraph}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::size_t edge_count_of(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kFirework:
      return spec.m * (1 + spec.n);
    case Family::kRandomTree:
    case Family::kRandomGraph:
      return spec.edges;
    default:
      return spec.m;
  }
}

std::vector<double> dirichlet_lengths(std::size_t count, double total,
                                      std::uint64_t seed) {
  CounterRng rng(seed ^ 0x4c454e47ull);
  std::vector<double> out(count);
  for (double& x : out) x = rng.exponential();
  const double sum = std::accumulate(out.begin(), out.end(), 0.0);
  for (double& x : out) x = total * (x / sum);
  return out;
}

MetricGraph generate(const FamilySpec& spec) {
  require(spec.total_length > 0.0 && std::isfinite(spec.total_length),
          "total length must be positive");
  Builder b;
  CounterRng rng(spec.seed);
  switch (spec.family) {
    case Family::kPath: {
      require(spec.m >= 1, "path needs m >= 1");
      b.add_vertex();
      for (std::size_t i = 0; i < spec.m; ++i) {
        b.add_vertex();
        b.add_edge(i, i + 1);
      }
      break;
    }
    case Family::kStar: {
      require(spec.m >= 1, "star needs m >= 1");
      b.add_vertex();
      for (std::size_t i = 0; i < spec.m; ++i) b.add_edge(0, b.add_vertex());
      break;
    }
    case Family::kFlower: {
      require(spec.m >= 1, "flower needs m >= 1");
      b.add_vertex();
      for (std::size_t i = 0; i < spec.m; ++i) b.add_edge(0, 0);
      break;
    }
    case Family::kCycle: {
      require(spec.m >= 1, "cycle needs m >= 1");
      for (std::size_t i = 0; i < spec.m; ++i) b.add_vertex();
      for (std::size_t i = 0; i < spec.m; ++i) b.add_edge(i, (i + 1) % spec.m);
      break;
    }
    case Family::kFirework: {
      require(spec.m >= 1 && spec.n >= 1, "firework needs m, n >= 1");
      require(spec.big_j > 0.0 && spec.small_j > 0.0,
              "firework needs J, j > 0");
      b.add_vertex();
      std::vector<std::size_t> hubs;
      for (std::size_t i = 0; i < spec.m; ++i) {
        hubs.push_back(b.add_vertex());
        b.add_edge(0, hubs.back());
      }
      for (std::size_t hub : hubs) {
        for (std::size_t k = 0; k < spec.n; ++k) b.add_edge(hub, b.add_vertex());
      }
      break;
    }
    case Family::kRandomTree: {
      require(spec.edges >= 1, "random_tree needs at least one edge");
      random_tree_edges(b, spec.edges, rng);
      break;
    }
    case Family::kRandomGraph: {
      require(spec.edges >= 1, "random_graph needs at least one edge");
      require(spec.betti <= spec.edges, "random_graph needs betti <= edges");
      random_tree_edges(b, spec.edges - spec.betti, rng);
      const std::uint64_t nv = b.vertices.size();
      for (std::size_t k = 0; k < spec.betti; ++k) {
        const auto u = static_cast<std::size_t>(rng.below(nv));
        const auto v = static_cast<std::size_t>(rng.below(nv));
        b.add_edge(u, v);
      }
      break;
    }
  }

  std::vector<double> lengths;
  const std::size_t count = b.edges.size();
  if (!spec.lengths.empty()) {
    require(spec.lengths.size() == count,
            "explicit lengths must match the edge count");
    lengths = spec.lengths;
  } else if (spec.family == Family::kFirework) {
    for (std::size_t i = 0; i < count; ++i) {
      lengths.push_back(i < spec.m ? spec.big_j : spec.small_j);
    }
  } else if (spec.random_lengths || is_random_family(spec.family)) {
    lengths = dirichlet_lengths(count, spec.total_length, spec.seed);
  } else {
    lengths.assign(count, spec.total_length / static_cast<double>(count));
  }
  for (std::size_t i = 0; i < count; ++i) b.edges[i].length = lengths[i];

  MetricGraph g(std::move(b.vertices), std::move(b.edges));
  require_valid(g);
  return g;
}

double firework_rho_lower_bound(std::size_t m, std::size_t n, double big_j,
                                double small_j) {
  require(m >= 2 && n >= 1 && big_j > 0.0 && small_j > 0.0,
          "firework bound needs m >= 2 and positive n, J, j");
  const double md = static_cast<double>(m);
  const double nj = static_cast<double>(n) * small_j;
  return 2.0 * big_j * ((md - 1.0) / md) * (nj * nj) /
         ((big_j + nj) * (big_j + nj));
}

double star_rho(const std::vector<double>& lengths) {
  const double l = std::accumulate(lengths.begin(), lengths.end(), 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    const double a = lengths[i];
    total += a * a * a / 3.0;
    for (std::size_t k = 0; k < lengths.size(); ++k) {
      if (k == i) continue;
      const double b = lengths[k];
      total += 0.5 * a * b * (a + b);
    }
  }
  return total / (l * l);
}

double flower_rho(const std::vector<double>& lengths) {
  const double l = std::accumulate(lengths.begin(), lengths.end(), 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    const double a = lengths[i];
    total += a * a * a;
    for (std::size_t k = 0; k < lengths.size(); ++k) {
      if (k == i) continue;
      const double b = lengths[k];
      total += a * b * (a + b);
    }
  }
  return total / (4.0 * l * l);
}

std::optional<double> closed_form_rho(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kPath:
    case Family::kCycle:
    case Family::kStar:
    case Family::kFlower:
      break;
    default:
      return std::nullopt;
  }
  const MetricGraph g = generate(spec);
  std::vector<double> lengths;
  for (const Edge& e : g.edges()) lengths.push_back(e.length);
  const double l = total_length(g);
  switch (spec.family) {
    case Family::kPath:
      return l / 3.0;
    case Family::kCycle:
      return l / 4.0;
    case Family::kStar:
      return star_rho(lengths);
    default:
      return flower_rho(lengths);
  }
}

}  // namespace mdist
