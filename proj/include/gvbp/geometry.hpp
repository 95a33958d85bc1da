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

#ifndef GVBP_GEOMETRY_HPP_
#define GVBP_GEOMETRY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "gvbp/rational.hpp"

namespace gvbp {

class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

struct Rect {
  std::string id;
  Rat w;
  Rat h;
  Rat area() const { return w * h; }
};

struct PlacedRect {
  std::string id;
  Rat x;
  Rat y;
  Rat w;
  Rat h;
};

// 1-D Next-Fit. Groups keep input order; a group closes only when the next
// size does not fit. Group sums are <= 1 and the group count never exceeds
// ceil(2 * sum) (with a floor of one group for nonempty input).
// Throws PreconditionError when a size is outside [0, 1].
std::vector<std::vector<int>> next_fit(const std::vector<Rat>& sizes);

struct StripPacking {
  std::vector<PlacedRect> placements;
  Rat used_height;
  std::vector<std::string> skipped_degenerate;
};

// Next-Fit Decreasing Height shelf packing into a strip of the given width.
// For a unit-width strip, used_height <= 2 * total_area + max height.
// Ties in height keep input order. Degenerate rects are skipped and reported.
StripPacking nfdh_strip(std::vector<Rect> rects, const Rat& strip_width);

struct BinPackResult {
  std::vector<PlacedRect> placements;
  std::vector<std::string> skipped_degenerate;
};

// NFDH into one W x H bin; all widths must be <= delta_w and heights
// <= delta_h. Succeeds whenever total_area <= (W - delta_w) * (H - delta_h);
// returns nullopt when the shelf run overflows H.
std::optional<BinPackResult> nfdh_bin(const std::vector<Rect>& rects, const Rat& W,
                                      const Rat& H, const Rat& delta_w,
                                      const Rat& delta_h);

// Packs rects into one W x H bin. Guaranteed to succeed whenever
//   2 * total_area <= W*H - max(2*wmax - W, 0) * max(2*hmax - H, 0),
// and returns nullopt (condition not met) otherwise. Never returns an
// invalid packing. Throws PreconditionError if a rect exceeds the bin.
std::optional<BinPackResult> steinberg_pack(const std::vector<Rect>& rects,
                                            const Rat& W, const Rat& H);

struct ThreeBinPacking {
  // bins[k] holds placements inside unit bin k; at most 3 bins, empty ones
  // dropped from the back.
  std::vector<std::vector<PlacedRect>> bins;
  std::vector<std::string> skipped_degenerate;
};

// Packs any rect set with total area <= 1 and all sides <= 1 into at most
// three unit bins: a 2x1 packing is cut at x = 1 and the straddlers are
// stacked in the third bin. Throws PreconditionError on violated input.
ThreeBinPacking steinberg_three_bins(const std::vector<Rect>& rects);

enum class CutDirection { kHorizontal, kVertical };

// Decomposes the empty space of a unit bin holding the given non-overlapping
// rects into at most 3n+1 rectangles using only horizontal (or only
// vertical) cuts. The output is pairwise disjoint, disjoint from the input,
// and covers exactly the complement area. Throws PreconditionError when the
// input overlaps or exceeds the bin.
std::vector<PlacedRect> decompose_empty_space(const std::vector<PlacedRect>& placed,
                                              CutDirection direction);

}  // namespace gvbp

#endif  // GVBP_GEOMETRY_HPP_
