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

// Machine-readable reports. Field names match the schemas in schemas/.

#ifndef MDIST_REPORTS_HPP_
#define MDIST_REPORTS_HPP_

#include <cstdint>
#include <optional>

#include "mdist/experiments.hpp"
#include "mdist/json_io.hpp"
#include "mdist/mean_distance.hpp"
#include "mdist/spectral.hpp"

namespace mdist {

struct AnalyzeOptions {
  VerifyOptions verify;
  std::size_t monte_carlo_samples = 100000;
  std::uint64_t monte_carlo_seed = 1;
  bool timings = false;
};

struct AnalyzeReport {
  VerificationRecord record;
  MeanDistanceReport monte_carlo;
  // Wall-clock seconds; only reported when requested.
  std::optional<double> seconds_distances;
  std::optional<double> seconds_total;
};

AnalyzeReport analyze(const MetricGraph& g, const std::string& descriptor,
                      const AnalyzeOptions& options = {});

Json to_json(const BoundCheck& c);
Json to_json(const SpectralResult& r);
Json to_json(const VerificationRecord& r);
Json to_json(const SweepSummary& s);
Json to_json(const SurgerySuiteReport& r);
Json to_json(const AnalyzeReport& r);
// Per-pair contributions are listed by edge id when present.
Json to_json(const MetricGraph& g, const MeanDistanceReport& r);

// Report text: 17 significant digits, trailing newline.
std::string render_report(const Json& j);

}  // namespace mdist

#endif  // MDIST_REPORTS_HPP_
