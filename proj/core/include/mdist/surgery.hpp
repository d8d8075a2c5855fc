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

// Graph surgery: local transformations with a known effect on the mean
// distance. All operations are pure and validate their result.

#ifndef MDIST_SURGERY_HPP_
#define MDIST_SURGERY_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "mdist/graph.hpp"

namespace mdist {

// Splits `vertex` in two. Incidences in `first` stay at the original vertex,
// those in `second` move to a new vertex. Together the groups must cover the
// incidences at the vertex exactly once, and both must be nonempty.
struct CutSpec {
  std::string vertex;
  std::vector<Incidence> first;
  std::vector<Incidence> second;
};

// Id of the vertex created by cut_vertex(g, spec).
std::string cut_vertex_new_id(const MetricGraph& g, const std::string& vertex);

// Throws GraphError for malformed, trivial or disconnecting cuts.
MetricGraph cut_vertex(const MetricGraph& g, const CutSpec& spec);

// Identifies v2 with v1 (v1's id survives).
MetricGraph glue_vertices(const MetricGraph& g, const std::string& v1,
                          const std::string& v2);

// Edges e1 and e2 join v to distinct degree-one vertices. The far end of e2
// is detached from v and reattached at the leaf of e1, so the pair becomes a
// single pendant path of length l1 + l2.
MetricGraph unfold_pendant_pair(const MetricGraph& g, const std::string& e1,
                                const std::string& e2, const std::string& v);

// The same move for pendant paths (chains through degree-two vertices ending
// at a leaf): the branch leaving v through `second` is reattached at the leaf
// of the branch leaving v through `first`.
MetricGraph unfold_pendant_paths(const MetricGraph& g,
                                 const std::string& first,
                                 const std::string& second,
                                 const std::string& v);

// Applies unfold_pendant_paths until the tree is a path. Returns every
// intermediate graph, starting with g itself.
std::vector<MetricGraph> unfold_to_path(const MetricGraph& g);

bool is_path_graph(const MetricGraph& g);

// New leaf joined to `vertex` by an edge of length `length`. The leaf and the
// edge get ids derived from "<vertex>.leaf" and "<vertex>.pendant".
MetricGraph attach_pendant_edge(const MetricGraph& g,
                                const std::string& vertex, double length);

MetricGraph set_edge_length(const MetricGraph& g, const std::string& edge,
                            double length);

// (2 / L) * (rho_G(v) - rho(G)): the derivative of rho when a pendant edge of
// vanishing length is attached at v, or when the pendant edge ending at the
// leaf v is lengthened.
double pendant_derivative(const MetricGraph& g, const std::string& vertex);

// Edge sets of the pendant subgraphs hanging at `vertex`: the closures of the
// components of G minus the vertex. A single entry means `vertex` does not
// separate the graph.
std::vector<std::vector<std::size_t>> pendant_components(
    const MetricGraph& g, const std::string& vertex);

// Replaces the pendant subgraph spanned by `pendant_edges` (which must meet
// the rest only at `vertex`) by `replacement`, gluing the replacement's
// `boundary` vertex to `vertex`. Replacement ids are prefixed with `prefix`.
MetricGraph replace_pendant(const MetricGraph& g, const std::string& vertex,
                            const std::vector<std::size_t>& pendant_edges,
                            const MetricGraph& replacement,
                            const std::string& boundary,
                            const std::string& prefix = "h.");

}  // namespace mdist

#endif  // MDIST_SURGERY_HPP_
