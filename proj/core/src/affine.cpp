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

#include "mdist/affine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mdist {

namespace {

// lo, hi and every pairwise crossing strictly between them, sorted.
std::vector<double> partition(std::span<const Line> lines, double lo,
                              double hi) {
  std::vector<double> cuts{lo, hi};
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const double ds = lines[i].slope - lines[j].slope;
      if (ds == 0.0) continue;
      const double t = (lines[j].offset - lines[i].offset) / ds;
      if (t > lo && t < hi) cuts.push_back(t);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

std::size_t argmin_at(std::span<const Line> lines, double t) {
  std::size_t best = 0;
  double value = lines[0].at(t);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const double v = lines[k].at(t);
    if (v < value) {
      value = v;
      best = k;
    }
  }
  return best;
}

}  // namespace

double lower_envelope_at(std::span<const Line> lines, double t) {
  double value = std::numeric_limits<double>::infinity();
  for (const Line& l : lines) value = std::min(value, l.at(t));
  return value;
}

std::vector<EnvelopePiece> lower_envelope_pieces(std::span<const Line> lines,
                                                 double lo, double hi) {
  std::vector<EnvelopePiece> pieces;
  if (!(hi > lo) || lines.empty()) return pieces;
  const std::vector<double> cuts = partition(lines, lo, hi);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = cuts[i + 1];
    const Line& l = lines[argmin_at(lines, 0.5 * (a + b))];
    if (!pieces.empty() && pieces.back().t1 == a) {
      // Extend when the same line continues (identical slope and value).
      EnvelopePiece& last = pieces.back();
      const double slope_last = (last.v1 - last.v0) / (last.t1 - last.t0);
      if (slope_last == l.slope && last.v1 == l.at(a)) {
        last.t1 = b;
        last.v1 = l.at(b);
        continue;
      }
    }
    pieces.push_back({a, b, l.at(a), l.at(b)});
  }
  return pieces;
}

double integrate_lower_envelope(std::span<const Line> lines, double lo,
                                double hi) {
  if (!(hi > lo) || lines.empty()) return 0.0;
  const std::vector<double> cuts = partition(lines, lo, hi);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    sum += (cuts[i + 1] - cuts[i]) * lines[argmin_at(lines, mid)].at(mid);
  }
  return sum;
}

double max_lower_envelope(std::span<const Line> lines, double lo, double hi) {
  double best = lower_envelope_at(lines, lo);
  if (!(hi > lo)) return best;
  for (double t : partition(lines, lo, hi)) {
    best = std::max(best, lower_envelope_at(lines, t));
  }
  return best;
}

void sort_and_merge(std::vector<double>& values, double tolerance) {
  std::sort(values.begin(), values.end());
  std::size_t out = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (out > 0 && values[i] - values[out - 1] <= tolerance) continue;
    values[out++] = values[i];
  }
  values.resize(out);
}

}  // namespace mdist
