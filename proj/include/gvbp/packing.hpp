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

#ifndef GVBP_PACKING_HPP_
#define GVBP_PACKING_HPP_

#include <string>
#include <vector>

#include "gvbp/core.hpp"
#include "gvbp/rational.hpp"

namespace gvbp {

struct Placement {
  std::string item_id;
  int bin_index = 0;
  Rat x;
  Rat y;
};

struct BinPacking {
  std::vector<Placement> placements;
  int bin_count = 0;

  void append_bin_of(const BinPacking& other, int other_bin);
  // Renumbers bins to 0..bin_count-1 dropping empty ones.
  void compact();
};

// Merge: bins of b are appended after bins of a.
BinPacking concat(const BinPacking& a, const BinPacking& b);

struct Violation {
  std::string kind;  // out_of_bin | overlap | weight | unpacked | duplicate |
                     // unknown_item | bad_bin_index
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the four feasibility conditions: axis-parallel containment, pairwise
// open-interior disjointness per bin, per-bin weight sums <= 1, and (when
// require_all_packed) coverage of every instance item. tol is an absolute
// slack applied to containment and weight sums; interiors must overlap by
// more than tol in both axes to count as an overlap. Violations are data.
ValidationReport validate_packing(const Instance& inst, const BinPacking& packing,
                                  bool require_all_packed, const Rat& tol = Rat(0));

}  // namespace gvbp

#endif  // GVBP_PACKING_HPP_
