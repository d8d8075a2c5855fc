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

// Exact operations on the lower envelope of finitely many affine functions of
// one variable. Everything is closed form: the envelope is linear between
// consecutive pairwise intersections, so integrals and maxima are evaluated
// on that finite partition.

#ifndef MDIST_AFFINE_HPP_
#define MDIST_AFFINE_HPP_

#include <span>
#include <vector>

namespace mdist {

// t -> offset + slope * t
struct Line {
  double offset = 0.0;
  double slope = 0.0;

  double at(double t) const { return offset + slope * t; }
};

// A maximal interval on which one line is the minimum.
struct EnvelopePiece {
  double t0 = 0.0;
  double t1 = 0.0;
  double v0 = 0.0;  // envelope value at t0
  double v1 = 0.0;  // envelope value at t1
};

double lower_envelope_at(std::span<const Line> lines, double t);

// Pieces of min(lines) over [lo, hi], left to right; empty when hi <= lo.
std::vector<EnvelopePiece> lower_envelope_pieces(std::span<const Line> lines,
                                                 double lo, double hi);

// Integral of min(lines) over [lo, hi]; zero when hi <= lo.
double integrate_lower_envelope(std::span<const Line> lines, double lo,
                                double hi);

// max over t in [lo, hi] of min(lines). Requires lo <= hi.
double max_lower_envelope(std::span<const Line> lines, double lo, double hi);

// Sorts and collapses values closer than `tolerance` (keeps the first).
void sort_and_merge(std::vector<double>& values, double tolerance);

// Two-point Gauss-Legendre rule on [a, b]; exact for cubics.
template <typename F>
double gauss2(F&& f, double a, double b) {
  constexpr double kNode = 0.57735026918962576451;  // 1/sqrt(3)
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  return half * (f(mid - half * kNode) + f(mid + half * kNode));
}

}  // namespace mdist

#endif  // MDIST_AFFINE_HPP_
