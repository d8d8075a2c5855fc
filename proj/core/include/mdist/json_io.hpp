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

// Canonical graph JSON and the number formatting used by every report.
//
//   {"vertices": ["v0", ...],
//    "edges": [{"id": "e0", "u": "v0", "v": "v1", "length": 0.5}, ...]}
//
// Graph lengths are written as the shortest decimal that round-trips the
// binary64 value; report numbers use 17 significant digits.

#ifndef MDIST_JSON_IO_HPP_
#define MDIST_JSON_IO_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "mdist/graph.hpp"

namespace mdist {

using Json = nlohmann::ordered_json;

enum class NumberStyle { kShortest, kSignificant17 };

std::string format_number(double value, NumberStyle style);

// Serialises with a fixed layout: no whitespace except ", " / ": " and the
// requested number style. Non-finite numbers become null.
std::string dump_json(const Json& value, NumberStyle style);

Json graph_to_json(const MetricGraph& g);
// Throws GraphError on schema problems or invalid graphs (non-finite or
// nonpositive lengths, unknown endpoints, disconnected, ...).
MetricGraph graph_from_json(const Json& j);

std::string write_graph_json(const MetricGraph& g);
MetricGraph read_graph_json(const std::string& text);
MetricGraph read_graph_file(const std::string& path);

}  // namespace mdist

#endif  // MDIST_JSON_IO_HPP_
