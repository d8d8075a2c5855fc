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

#include "mdist/json_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

namespace mdist {

std::string format_number(double value, NumberStyle style) {
  if (!std::isfinite(value)) return "null";
  char buf[64];
  std::to_chars_result res;
  if (style == NumberStyle::kShortest) {
    res = std::to_chars(buf, buf + sizeof(buf), value);
  } else {
    res = std::to_chars(buf, buf + sizeof(buf), value,
                        std::chars_format::general, 17);
  }
  std::string out(buf, res.ptr);
  // Keep integral values recognisable as floating point JSON numbers.
  if (out.find_first_of(".eEn") == std::string::npos) out += ".0";
  return out;
}

namespace {

void dump_into(const Json& value, NumberStyle style, std::string& out) {
  switch (value.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = value.begin(); it != value.end(); ++it) {
        if (!first) out += ", ";
        first = false;
        out += Json(it.key()).dump();
        out += ": ";
        dump_into(it.value(), style, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& item : value) {
        if (!first) out += ", ";
        first = false;
        dump_into(item, style, out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      out += format_number(value.get<double>(), style);
      break;
    default:
      out += value.dump();
  }
}

[[noreturn]] void schema_error(const std::string& what) {
  throw GraphError("graph JSON: " + what);
}

}  // namespace

std::string dump_json(const Json& value, NumberStyle style) {
  std::string out;
  dump_into(value, style, out);
  return out;
}

Json graph_to_json(const MetricGraph& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices()) vertices.push_back(v);
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back(
        Json{{"id", e.id}, {"u", e.u}, {"v", e.v}, {"length", e.length}});
  }
  return Json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

MetricGraph graph_from_json(const Json& j) {
  if (!j.is_object()) schema_error("top level must be an object");
  if (!j.contains("vertices") || !j["vertices"].is_array()) {
    schema_error("missing array 'vertices'");
  }
  if (!j.contains("edges") || !j["edges"].is_array()) {
    schema_error("missing array 'edges'");
  }
  std::vector<std::string> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) schema_error("vertex ids must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_object()) schema_error("edges must be objects");
    for (const char* key : {"id", "u", "v"}) {
      if (!e.contains(key) || !e[key].is_string()) {
        schema_error(std::string("edge field '") + key + "' must be a string");
      }
    }
    if (!e.contains("length") || !e["length"].is_number()) {
      schema_error("edge '" + e["id"].get<std::string>() +
                   "' needs a numeric 'length'");
    }
    edges.push_back({e["id"].get<std::string>(), e["u"].get<std::string>(),
                     e["v"].get<std::string>(), e["length"].get<double>()});
  }
  MetricGraph g(std::move(vertices), std::move(edges));
  require_valid(g);
  return g;
}

std::string write_graph_json(const MetricGraph& g) {
  return dump_json(graph_to_json(g), NumberStyle::kShortest);
}

MetricGraph read_graph_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    schema_error(std::string("parse error: ") + e.what());
  }
  return graph_from_json(j);
}

MetricGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open graph file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return read_graph_json(ss.str());
}

}  // namespace mdist
