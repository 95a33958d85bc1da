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

#ifndef GVBP_EXACT_HPP_
#define GVBP_EXACT_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gvbp/core.hpp"
#include "gvbp/geometry.hpp"
#include "gvbp/packing.hpp"

namespace gvbp {

// Exhaustive unit-bin packing over normal positions: if any packing exists,
// one exists with every x a subset sum of widths and every y a subset sum of
// heights (push items left/down until fixpoint), so searching those grids is
// complete. Intended for small sets only.
std::optional<std::vector<PlacedRect>> exact_pack_unit_bin(
    const std::vector<Rect>& rects);

// Memoizes geometric feasibility by the mask of positive-area items.
class BinFeasibility {
 public:
  explicit BinFeasibility(const Instance& inst);

  // Weights in every dimension <= 1 and the rectangles fit one unit bin.
  bool feasible(uint64_t mask);

  // As above, with a witness (zero-area items pinned at the origin).
  std::optional<std::vector<Placement>> witness(uint64_t mask);

  const Instance& instance() const { return inst_; }

 private:
  bool geometry_feasible(uint64_t pos_mask);

  const Instance& inst_;
  uint64_t positive_mask_ = 0;
  std::map<uint64_t, bool> geo_cache_;
};

struct OracleResult {
  long opt_bins = 0;
  BinPacking witness;
};

class InstanceTooLarge : public std::runtime_error {
 public:
  explicit InstanceTooLarge(const std::string& what) : std::runtime_error(what) {}
};

class NonGridInstance : public std::runtime_error {
 public:
  explicit NonGridInstance(const std::string& what) : std::runtime_error(what) {}
};

// Exact minimum bin count by exhaustive partition search. Requires
// n <= max_items and every side/weight a multiple of 1/grid (zero-area items
// exempt from the side check).
OracleResult brute_force_opt(const Instance& inst, long grid, int max_items = 5);

}  // namespace gvbp

#endif  // GVBP_EXACT_HPP_
