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

#include "mdist/verdict.hpp"

#include <utility>

namespace mdist {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kIndeterminate:
      return "indeterminate";
    case Verdict::kNotApplicable:
      return "not_applicable";
  }
  return "indeterminate";
}

BoundCheck check_le(std::string name, double lhs, double rhs,
                    double tolerance, bool strict) {
  BoundCheck c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.slack = rhs - lhs;
  c.tolerance = tolerance;
  c.strict = strict;
  // Strict claims need positive measured slack.
  const bool ok = strict ? c.slack > 0.0 : c.slack >= -tolerance;
  c.verdict = ok ? Verdict::kPass : Verdict::kFail;
  if (c.slack != c.slack) c.verdict = Verdict::kIndeterminate;
  return c;
}

BoundCheck indeterminate(std::string name) {
  BoundCheck c;
  c.name = std::move(name);
  c.verdict = Verdict::kIndeterminate;
  return c;
}

BoundCheck not_applicable(std::string name, double lhs, double rhs) {
  BoundCheck c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.slack = rhs - lhs;
  c.verdict = Verdict::kNotApplicable;
  return c;
}

Verdict overall(const std::vector<BoundCheck>& checks) {
  bool unknown = false;
  for (const BoundCheck& c : checks) {
    if (c.verdict == Verdict::kFail) return Verdict::kFail;
    if (c.verdict == Verdict::kIndeterminate) unknown = true;
  }
  return unknown ? Verdict::kIndeterminate : Verdict::kPass;
}

}  // namespace mdist
