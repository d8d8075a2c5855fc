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

#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "mdist/experiments.hpp"
#include "mdist/generators.hpp"
#include "mdist/json_io.hpp"
#include "mdist/mean_distance.hpp"
#include "mdist/reports.hpp"
#include "mdist/shortest_path.hpp"
#include "mdist/spectral.hpp"
#include "mdist/surgery.hpp"

namespace mdist::cli {

namespace {

// An input problem reported with exit code kBadInput.
class InputError : public std::runtime_error {
 public:
  InputError(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

void diagnose(std::ostream& err, const std::string& kind,
              const std::string& message) {
  Json j;
  j["error"] = kind;
  j["message"] = message;
  err << dump_json(j, NumberStyle::kSignificant17) << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("file", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("file", "cannot write '" + path + "'");
  out << text;
}

MetricGraph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return read_graph_json(text);
  } catch (const GraphError& e) {
    throw InputError("graph", e.what());
  }
}

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("json", what + ": " + e.what());
  }
}

double parse_double(const std::string& text, const std::string& what) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last || text.empty()) {
    throw InputError("point", "invalid number in " + what + ": '" + text + "'");
  }
  return value;
}

// "edgeId:offset", split at the last colon.
PointOnEdge parse_point(const MetricGraph& g, const std::string& text) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos || colon == 0) {
    throw InputError("point", "expected edgeId:offset, got '" + text + "'");
  }
  const std::string id = text.substr(0, colon);
  const auto e = g.find_edge(id);
  if (!e) throw InputError("point", "unknown edge '" + id + "'");
  const double offset = parse_double(text.substr(colon + 1), "point");
  if (!(offset >= 0.0 && offset <= g.length(*e))) {
    throw InputError("point", "offset outside [0, length] for edge '" + id + "'");
  }
  return {*e, offset};
}

struct FamilyFlags {
  std::string family = "path";
  std::size_t m = 1;
  std::size_t n = 1;
  double big_j = 1.0;
  double small_j = 0.1;
  std::size_t edges = 1;
  std::size_t betti = 0;
  std::vector<double> lengths;
  bool random_lengths = false;
  double total_length = 1.0;
  std::uint64_t seed = 0;

  void add(CLI::App* app) {
    app->add_option("--family", family,
                    "path|star|flower|cycle|firework|random_tree|random_graph");
    app->add_option("--m", m, "edges (path/star/flower/cycle), spokes (firework)");
    app->add_option("--n", n, "sparks per spoke (firework)");
    app->add_option("--J", big_j, "spoke length (firework)");
    app->add_option("--j", small_j, "spark length (firework)");
    app->add_option("--edges", edges, "edge count (random families)");
    app->add_option("--betti", betti, "extra edges (random_graph)");
    app->add_option("--lengths", lengths, "explicit edge lengths")->delimiter(',');
    app->add_flag("--random-lengths", random_lengths,
                  "Dirichlet-uniform lengths for deterministic families");
    app->add_option("--total-length", total_length, "total length L");
    app->add_option("--seed", seed, "seed for random families and lengths");
  }

  FamilySpec spec() const {
    const auto f = parse_family(family);
    if (!f) throw InputError("usage", "unknown family '" + family + "'");
    FamilySpec s;
    s.family = *f;
    s.m = m;
    s.n = n;
    s.big_j = big_j;
    s.small_j = small_j;
    s.edges = edges;
    s.betti = betti;
    s.lengths = lengths;
    s.random_lengths = random_lengths;
    s.total_length = total_length;
    s.seed = seed;
    return s;
  }
};

MetricGraph generate_checked(const FamilySpec& spec) {
  try {
    return generate(spec);
  } catch (const GraphError& e) {
    throw InputError("usage", e.what());
  }
}

// Ensemble file: {"items": [spec, ...]} or a bare array. Integer fields m,
// n, edges and betti may be [lo, hi] ranges (inclusive); "count" repeats an
// item with seeds seed, seed+1, ...
std::vector<FamilySpec> parse_ensemble(const Json& doc) {
  const Json& items = doc.is_object() ? doc.value("items", Json::array()) : doc;
  if (!items.is_array()) throw InputError("ensemble", "expected an item array");
  std::vector<FamilySpec> out;
  for (const Json& item : items) {
    if (!item.is_object()) throw InputError("ensemble", "items must be objects");
    FamilySpec base;
    const auto fam = parse_family(item.value("family", std::string()));
    if (!fam) throw InputError("ensemble", "unknown or missing family");
    base.family = *fam;
    try {
      base.big_j = item.value("J", base.big_j);
      base.small_j = item.value("j", base.small_j);
      base.total_length = item.value("total_length", base.total_length);
      base.random_lengths = item.value("random_lengths", false);
      base.seed = item.value("seed", std::uint64_t{0});
      if (item.contains("lengths")) {
        base.lengths = item["lengths"].get<std::vector<double>>();
      }
    } catch (const Json::exception& e) {
      throw InputError("ensemble", e.what());
    }
    auto range = [&](const char* key, std::size_t fallback) {
      if (!item.contains(key)) return std::pair{fallback, fallback};
      const Json& v = item[key];
      try {
        if (v.is_array() && v.size() == 2) {
          return std::pair{v[0].get<std::size_t>(), v[1].get<std::size_t>()};
        }
        const auto x = v.get<std::size_t>();
        return std::pair{x, x};
      } catch (const Json::exception& e) {
        throw InputError("ensemble", std::string(key) + ": " + e.what());
      }
    };
    const auto [m0, m1] = range("m", 1);
    const auto [n0, n1] = range("n", 1);
    const auto [e0, e1] = range("edges", 1);
    const auto [b0, b1] = range("betti", 0);
    const std::size_t count = item.value("count", std::size_t{1});
    for (std::size_t m = m0; m <= m1; ++m) {
      for (std::size_t n = n0; n <= n1; ++n) {
        for (std::size_t e = e0; e <= e1; ++e) {
          for (std::size_t b = b0; b <= b1; ++b) {
            for (std::size_t k = 0; k < count; ++k) {
              FamilySpec s = base;
              s.m = m;
              s.n = n;
              s.edges = e;
              s.betti = b;
              s.seed = base.seed + k;
              out.push_back(s);
            }
          }
        }
      }
    }
  }
  return out;
}

EdgeEnd parse_end(const Json& j) {
  const std::string s = j.get<std::string>();
  if (s == "u") return EdgeEnd::kU;
  if (s == "v") return EdgeEnd::kV;
  throw InputError("surgery", "edge end must be \"u\" or \"v\"");
}

// Operation objects:
//   {"op": "cut", "vertex": id, "second": [{"edge": id, "end": "u"|"v"}, ...]}
//   {"op": "glue", "v1": id, "v2": id}
//   {"op": "unfold", "e1": id, "e2": id, "vertex": id}
//   {"op": "attach", "vertex": id, "length": x}
//   {"op": "subdivide", "edge": id, "offset": x}
//   {"op": "set_length", "edge": id, "length": x}
MetricGraph apply_op(const MetricGraph& g, const Json& op) {
  const std::string kind = op.value("op", std::string());
  if (kind == "cut") {
    CutSpec cut;
    cut.vertex = op.at("vertex").get<std::string>();
    const std::size_t v = g.vertex_index(cut.vertex);
    std::vector<Incidence> second;
    for (const Json& x : op.at("second")) {
      second.push_back({g.edge_index(x.at("edge").get<std::string>()),
                        parse_end(x.at("end"))});
    }
    for (const Incidence& inc : g.incidences(v)) {
      const bool moved =
          std::find(second.begin(), second.end(), inc) != second.end();
      (moved ? cut.second : cut.first).push_back(inc);
    }
    if (cut.second.size() != second.size()) {
      throw GraphError("cut: listed incidences are not at the vertex");
    }
    return cut_vertex(g, cut);
  }
  if (kind == "glue") {
    return glue_vertices(g, op.at("v1").get<std::string>(),
                         op.at("v2").get<std::string>());
  }
  if (kind == "unfold") {
    return unfold_pendant_paths(g, op.at("e1").get<std::string>(),
                                op.at("e2").get<std::string>(),
                                op.at("vertex").get<std::string>());
  }
  if (kind == "attach") {
    return attach_pendant_edge(g, op.at("vertex").get<std::string>(),
                               op.at("length").get<double>());
  }
  if (kind == "subdivide") {
    return subdivide(g, op.at("edge").get<std::string>(),
                     op.at("offset").get<double>())
        .first;
  }
  if (kind == "set_length") {
    return set_edge_length(g, op.at("edge").get<std::string>(),
                           op.at("length").get<double>());
  }
  throw InputError("surgery", "unknown operation '" + kind + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Mean distance and spectral gap of metric graphs", "mdist"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write a graph from a family");
  FamilyFlags gen_flags;
  gen_flags.add(gen);
  std::string gen_output;
  gen->add_option("--output,-o", gen_output, "output file (default stdout)");

  // analyze
  auto* ana = app.add_subcommand("analyze", "Full report for one graph");
  std::string ana_input;
  double ana_tol = 1e-6;
  std::size_t ana_samples = 100000;
  std::uint64_t ana_seed = 1;
  std::size_t ana_dirichlet = 0;
  bool ana_timings = false;
  ana->add_option("--input,-i", ana_input, "graph JSON")->required();
  ana->add_option("--tol", ana_tol, "relative spectral tolerance");
  ana->add_option("--mc-samples", ana_samples, "Monte Carlo pairs");
  ana->add_option("--seed", ana_seed, "Monte Carlo and sampling seed");
  ana->add_option("--dirichlet-samples", ana_dirichlet,
                  "random vertices for lambda1 <= mu2 checks");
  ana->add_flag("--timings", ana_timings, "include wall-clock timings");

  // distance
  auto* dis = app.add_subcommand("distance", "Distance between two points");
  std::string dis_input, dis_from, dis_to;
  dis->add_option("--input,-i", dis_input, "graph JSON")->required();
  dis->add_option("--from", dis_from, "edgeId:offset")->required();
  dis->add_option("--to", dis_to, "edgeId:offset")->required();

  // surgery
  auto* sur = app.add_subcommand("surgery", "Apply graph operations");
  std::string sur_input, sur_ops, sur_output;
  sur->add_option("--input,-i", sur_input, "graph JSON")->required();
  sur->add_option("--ops", sur_ops, "JSON file with a list of operations")
      ->required();
  sur->add_option("--output,-o", sur_output, "write the resulting graph");

  // verify
  auto* ver = app.add_subcommand("verify", "Check every inequality");
  std::string ver_input;
  double ver_tol = 1e-6;
  std::size_t ver_dirichlet = 3;
  FamilyFlags ver_flags;
  ver->add_option("--input,-i", ver_input, "graph JSON (else family flags)");
  ver->add_option("--tol", ver_tol, "relative spectral tolerance");
  ver->add_option("--dirichlet-samples", ver_dirichlet,
                  "random vertices for lambda1 <= mu2 checks");
  ver_flags.add(ver);

  // sweep
  auto* swp = app.add_subcommand("sweep", "Verify an ensemble of families");
  std::string swp_ensemble, swp_csv;
  double swp_tol = 1e-6;
  std::size_t swp_dirichlet = 0;
  std::uint64_t swp_seed = 0;
  swp->add_option("--ensemble,-e", swp_ensemble, "ensemble JSON")->required();
  swp->add_option("--csv", swp_csv, "write one CSV row per graph");
  swp->add_option("--tol", swp_tol, "relative spectral tolerance");
  swp->add_option("--dirichlet-samples", swp_dirichlet,
                  "random vertices for lambda1 <= mu2 checks");
  swp->add_option("--seed", swp_seed, "base seed for vertex sampling");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("mdist");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    diagnose(err, "usage", e.what());
    return kBadInput;
  }

  try {
    if (gen->parsed()) {
      const std::string text = write_graph_json(generate_checked(gen_flags.spec())) + "\n";
      if (gen_output.empty()) {
        out << text;
      } else {
        write_file(gen_output, text);
      }
      return kOk;
    }
    if (ana->parsed()) {
      const MetricGraph g = load_graph(ana_input);
      AnalyzeOptions opts;
      opts.verify.spectral.tol = ana_tol;
      opts.verify.random_dirichlet_vertices = ana_dirichlet;
      opts.verify.seed = ana_seed;
      opts.monte_carlo_samples = ana_samples;
      opts.monte_carlo_seed = ana_seed;
      opts.timings = ana_timings;
      const AnalyzeReport rep = analyze(g, ana_input, opts);
      out << render_report(to_json(rep));
      return rep.record.mu2 ? kOk : kSpectralFailure;
    }
    if (dis->parsed()) {
      const MetricGraph g = load_graph(dis_input);
      const PointOnEdge x = parse_point(g, dis_from);
      const PointOnEdge y = parse_point(g, dis_to);
      Json j;
      j["from"] = dis_from;
      j["to"] = dis_to;
      j["distance"] = point_distance(g, vertex_distances(g), x, y);
      out << render_report(j);
      return kOk;
    }
    if (sur->parsed()) {
      MetricGraph g = load_graph(sur_input);
      const Json ops = parse_json_text(read_file(sur_ops), "operations");
      const Json& list = ops.is_object() ? ops.value("ops", Json::array()) : ops;
      if (!list.is_array()) throw InputError("surgery", "expected a list of operations");
      Json steps = Json::array();
      const double before = rho_graph(g, {.keep_pairs = false}).rho;
      for (const Json& op : list) {
        try {
          g = apply_op(g, op);
        } catch (const GraphError& e) {
          throw InputError("surgery", e.what());
        } catch (const Json::exception& e) {
          throw InputError("surgery", e.what());
        }
        Json step;
        step["op"] = op;
        step["rho"] = rho_graph(g, {.keep_pairs = false}).rho;
        step["L"] = total_length(g);
        steps.push_back(step);
      }
      Json j;
      j["rho_before"] = before;
      j["rho_after"] = rho_graph(g, {.keep_pairs = false}).rho;
      j["steps"] = steps;
      j["graph"] = graph_to_json(g);
      if (!sur_output.empty()) write_file(sur_output, write_graph_json(g) + "\n");
      out << render_report(j);
      return kOk;
    }
    if (ver->parsed()) {
      MetricGraph g;
      std::string descriptor;
      if (!ver_input.empty()) {
        g = load_graph(ver_input);
        descriptor = ver_input;
      } else {
        const FamilySpec spec = ver_flags.spec();
        g = generate_checked(spec);
        descriptor = describe(spec);
      }
      VerifyOptions opts;
      opts.spectral.tol = ver_tol;
      opts.random_dirichlet_vertices = ver_dirichlet;
      opts.seed = ver_flags.seed;
      const VerificationRecord rec = verify_graph(g, descriptor, opts);
      out << render_report(to_json(rec));
      if (rec.failed()) return kFailedRecords;
      return rec.status == Verdict::kIndeterminate ? kSpectralFailure : kOk;
    }
    if (swp->parsed()) {
      const std::vector<FamilySpec> ensemble =
          parse_ensemble(parse_json_text(read_file(swp_ensemble), "ensemble"));
      VerifyOptions opts;
      opts.spectral.tol = swp_tol;
      opts.random_dirichlet_vertices = swp_dirichlet;
      opts.seed = swp_seed;
      const SweepResult result = sweep(ensemble, opts);
      if (!swp_csv.empty()) {
        std::ostringstream csv;
        write_sweep_csv(csv, result);
        write_file(swp_csv, csv.str());
      }
      Json j;
      j["summary"] = to_json(result.summary);
      Json records = Json::array();
      for (const VerificationRecord& r : result.records) records.push_back(to_json(r));
      j["records"] = records;
      out << render_report(j);
      if (result.summary.failed > 0) return kFailedRecords;
      return result.summary.errors == 0 ? kOk : kSpectralFailure;
    }
  } catch (const InputError& e) {
    diagnose(err, e.kind(), e.what());
    return kBadInput;
  } catch (const SpectralConvergenceError& e) {
    diagnose(err, "spectral", e.what());
    return kSpectralFailure;
  } catch (const GraphError& e) {
    diagnose(err, "graph", e.what());
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace mdist::cli
