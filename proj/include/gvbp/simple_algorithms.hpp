// Copyright 2026 The gvbp Authors
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

#ifndef GVBP_SIMPLE_ALGORITHMS_HPP_
#define GVBP_SIMPLE_ALGORITHMS_HPP_

#include <functional>
#include <vector>

#include "gvbp/core.hpp"
#include "gvbp/packing.hpp"

namespace gvbp {

// Next-Fit over item spans, then each span group (area and every weight sum
// <= 1) is split over at most three unit bins. Bin count <= 3 * ceil(2 *
// Span(I)) whenever the instance has a positive-span item.
BinPacking simple_pack(const Instance& inst);

// Groups item indices instead of emitting placements; used where the caller
// owns the geometric step.
std::vector<std::vector<int>> span_next_fit_groups(const Instance& inst);

// A (d+1)-dimensional vector bin packing heuristic: takes the vectors
// (area, weights...) and returns bin index lists.
using VbpHeuristic =
    std::function<std::vector<std::vector<int>>(const std::vector<std::vector<Rat>>&)>;

// First-fit decreasing by max coordinate; the default heuristic.
std::vector<std::vector<int>> ffd_max_coord(const std::vector<std::vector<Rat>>& vecs);

// Vectorizes geometry into an area coordinate, packs the vectors with the
// supplied heuristic, then splits each vector bin over at most three real
// bins. The overall ratio follows the heuristic's and is not asserted.
BinPacking better_simple_pack(const Instance& inst, VbpHeuristic heuristic = nullptr);

}  // namespace gvbp

#endif  // GVBP_SIMPLE_ALGORITHMS_HPP_
