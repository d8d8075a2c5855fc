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

#ifndef MDIST_VERDICT_HPP_
#define MDIST_VERDICT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace mdist {

enum class Verdict { kPass, kFail, kIndeterminate, kNotApplicable };

std::string_view to_string(Verdict v);

// An inequality lhs <= rhs (or lhs < rhs when `strict`). The slack is
// rhs - lhs; the check passes when slack >= -tolerance.
struct BoundCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double tolerance = 0.0;
  bool strict = false;
  Verdict verdict = Verdict::kIndeterminate;
};

BoundCheck check_le(std::string name, double lhs, double rhs,
                    double tolerance, bool strict = false);
BoundCheck indeterminate(std::string name);
BoundCheck not_applicable(std::string name, double lhs, double rhs);

// kFail if any check failed, else kIndeterminate if any is indeterminate,
// else kPass.
Verdict overall(const std::vector<BoundCheck>& checks);

}  // namespace mdist

#endif  // MDIST_VERDICT_HPP_
