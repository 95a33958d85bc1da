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

#ifndef GVBP_ROUNDING_TOOLKIT_HPP_
#define GVBP_ROUNDING_TOOLKIT_HPP_

#include <map>
#include <string>
#include <vector>

#include "gvbp/core.hpp"
#include "gvbp/packing.hpp"
#include "gvbp/rna.hpp"

namespace gvbp {

// Parameter set tying the whole toolkit together. eps must satisfy
// 1/eps in 2Z and eps <= 1/8; eps1 and eps2 = window_fn(eps1) come out of
// medium removal, and 1/eps1, 1/eps2 stay integers.
struct EpsilonSchedule {
  int d = 1;
  Rat eps;
  Rat delta0;
  Rat eps1;
  Rat eps2;

  Rat dense_box_height() const { return 2 * d * eps1 * eps1 + eps2; }
  Rat linear_group_delta() const { return eps * eps1 / (d + 1); }
  Rat width_grid() const { return eps1 * eps1 / 4; }
};

// The window-shrinking function: each value is the reciprocal of an integer
// and f(x) < eps * x^2 / 2.
Rat window_fn(const Rat& x, int d, const Rat& eps);

// Number of distinct light-item weight signatures after rounding.
BigInt light_class_ceiling(int d, const Rat& eps);
BigInt heavy_class_ceiling(int d, const Rat& eps, const Rat& eps1);
BigInt big_class_ceiling(int d, const Rat& eps, const Rat& eps1);
BigInt wide_class_ceiling(int d, const Rat& eps, const Rat& eps1);
BigInt small_class_ceiling(int d, const Rat& eps, const Rat& eps1);

struct MediumRemoval {
  std::vector<std::string> medium_ids;
  Rat eps1;
  Rat eps2;
};

// Scans windows (delta_t, delta_{t-1}] of the lazily evaluated delta chain
// and removes the lightest one: span(medium) <= eps * span(I), and the rest
// is (eps2, eps1)-non-medium in width, height, and every weight.
MediumRemoval remove_medium(const Instance& inst, const Rat& eps);

EpsilonSchedule make_schedule(int d, const Rat& eps, const Rat& eps1);

// Weight-class key: shape and dense/heavy flags, the exact quantized weight
// signature, and the lengths along unsliceable dimensions (so every class is
// homogeneous: one density vector, equal unsliceable lengths).
struct WeightClassKey {
  Shape shape = Shape::kSmall;
  bool dense = false;
  bool heavy = false;
  std::vector<Rat> signature;
  std::vector<Rat> fixed_lengths;

  bool operator<(const WeightClassKey& o) const;
  std::string describe() const;
};

WeightClassKey weight_class_key(const Item& item, const EpsilonSchedule& sched);

// Unique linear-time partition into weight classes; dense classes split into
// a wide part and a tall-or-small part. Throws MediumItemError on medium
// geometry.
std::map<WeightClassKey, std::vector<int>> coarse_partition(
    const Instance& inst, const EpsilonSchedule& sched);

struct WeightRounding {
  Instance rounded;
  Instance undo_log;  // the original items, keyed by shared ids
};

// The four weight transformations in order: non-dense grid round-up, dense
// round-to-zero, heavy grid round-up, light ratio round-up. Idempotent; the
// undo log restores the zeroed values exactly.
WeightRounding weight_round(const Instance& inst, const EpsilonSchedule& sched);

// A bin is mu-slacked iff all weight sums are <= 1-mu, or it is a singleton,
// or it is a dense pair with both vmax <= 1/2.
bool check_slack(const std::vector<Item>& bin, const Rat& mu,
                 const EpsilonSchedule& sched);

// Partitions items into at most |dims|+1 groups, each a singleton or with
// v_j <= (1-delta) * caps[j] for every listed dimension. Requires delta <=
// 1/4 and v_j(items) <= caps[j].
std::vector<std::vector<int>> split_slack(const std::vector<Item>& items,
                                          const std::vector<int>& dims,
                                          const Rat& delta,
                                          const std::vector<Rat>& caps);

enum class BoxOrientation { kHorizontal, kVertical };

// NFDH packing of dense wide/small (horizontal) or tall/small (vertical)
// items into a 1 x dense_box_height() box; always fits when every weight
// dimension sums to at most 1. Placements are box-local.
std::vector<Placement> pack_dense_box(const std::vector<Item>& items,
                                      const EpsilonSchedule& sched,
                                      BoxOrientation orientation);

enum class GroupKind { kBigByHeight, kTallSliceable };

struct GroupedItem {
  Item item;             // with the rounded dimension applied
  std::string parent_id; // differs from item.id only for slices
  bool is_slice = false;
};

struct LinearGroup {
  Rat rounded_height;
  std::vector<GroupedItem> members;
};

struct LinearGroupingResult {
  std::vector<LinearGroup> groups;
  std::vector<std::string> unpacked_ids;  // first group minus its leader (big
                                          // kind) or the whole first group
};

// Big kind: groups of floor(delta*n)+1 by non-increasing height, heights
// rounded up to the group leader. Tall kind: width-measure grouping with
// slicing at the exact group boundaries (weights split proportionally).
LinearGroupingResult linear_group(const std::vector<Item>& cls, GroupKind kind,
                                  const Rat& delta_lg);

class SlacknessViolated : public std::runtime_error {
 public:
  explicit SlacknessViolated(const std::string& what) : std::runtime_error(what) {}
};

// Restores original weights/dimensions inside a packing of weight-rounded
// items. Every bin must be mu-slacked (mu >= eps/8) and keep dense items
// separated from non-dense ones; restored dense items are repacked into the
// reserved edge strip, non-dense positions are unchanged, and the result is
// (mu - eps/8)-slacked.
BinPacking unround_weights(const Instance& originals, const Instance& rounded,
                           const BinPacking& rounded_packing,
                           const EpsilonSchedule& sched, const Rat& mu);

struct ToolkitRounding {
  RoundOutput output;        // rounded instance + medium discard
  EpsilonSchedule schedule;
  std::map<WeightClassKey, std::vector<std::string>> classes;
  Instance undo_log;
};

// Medium removal + weight rounding + coarse partitioning, packaged as one
// rounding guess whose classes are exactly homogeneous.
ToolkitRounding toolkit_round(const Instance& inst, const Rat& eps);

// The toolkit as meta-algorithm subroutines: the rounding above, a
// complex-pack that keeps bins eps-slacked with dense items in their own
// bins, and the strip-repacking unround.
RnaSubroutines toolkit_subroutines(const Instance& inst, const Rat& eps);

}  // namespace gvbp

#endif  // GVBP_ROUNDING_TOOLKIT_HPP_
