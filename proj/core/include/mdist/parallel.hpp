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

#ifndef MDIST_PARALLEL_HPP_
#define MDIST_PARALLEL_HPP_

#include <cstddef>
#include <functional>
#include <span>

namespace mdist {

// Worker count: MDIST_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
std::size_t thread_count();

// Calls body(i) for i in [0, n). Indices are split into contiguous blocks,
// one per worker; results must not depend on the split. Calls made from
// inside a worker run serially.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

// Pairwise (tree) summation; the rounding depends only on the input order.
double pairwise_sum(std::span<const double> values);

}  // namespace mdist

#endif  // MDIST_PARALLEL_HPP_
