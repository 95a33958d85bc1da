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

#include "gvbp/simple_algorithms.hpp"

#include <algorithm>
#include <numeric>

#include "gvbp/geometry.hpp"

namespace gvbp {

namespace {

// Splits one feasible group (area and all weight sums <= 1) over up to three
// bins appended to `out`; zero-area members land at the origin of the first.
void pack_group(const Instance& inst, const std::vector<int>& group, BinPacking& out) {
  std::vector<Rect> rects;
  std::vector<int> degenerate;
  for (int i : group) {
    const Item& it = inst.items[i];
    if (it.area() == 0)
      degenerate.push_back(i);
    else
      rects.push_back({it.id, it.w, it.h});
  }
  ThreeBinPacking split = steinberg_three_bins(rects);
  auto& bins = split.bins;
  if (bins.empty() && !degenerate.empty()) bins.emplace_back();
  int first_bin = out.bin_count;
  for (size_t b = 0; b < bins.size(); ++b) {
    for (const PlacedRect& p : bins[b])
      out.placements.push_back({p.id, out.bin_count, p.x, p.y});
    ++out.bin_count;
  }
  for (int i : degenerate)
    out.placements.push_back({inst.items[i].id, first_bin, Rat(0), Rat(0)});
}

}  // namespace

std::vector<std::vector<int>> span_next_fit_groups(const Instance& inst) {
  std::vector<Rat> spans;
  spans.reserve(inst.items.size());
  for (const Item& it : inst.items) spans.push_back(span(it));
  return next_fit(spans);
}

BinPacking simple_pack(const Instance& inst) {
  BinPacking out;
  for (const std::vector<int>& group : span_next_fit_groups(inst))
    pack_group(inst, group, out);
  return out;
}

std::vector<std::vector<int>> ffd_max_coord(const std::vector<std::vector<Rat>>& vecs) {
  std::vector<int> order(vecs.size());
  std::iota(order.begin(), order.end(), 0);
  auto max_coord = [](const std::vector<Rat>& v) {
    Rat m = 0;
    for (const Rat& x : v) m = std::max(m, x);
    return m;
  };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return max_coord(vecs[a]) > max_coord(vecs[b]);
  });
  std::vector<std::vector<int>> bins;
  std::vector<std::vector<Rat>> loads;
  for (int i : order) {
    bool placed = false;
    for (size_t b = 0; b < bins.size() && !placed; ++b) {
      bool fits = true;
      for (size_t j = 0; j < vecs[i].size(); ++j)
        if (loads[b][j] + vecs[i][j] > 1) {
          fits = false;
          break;
        }
      if (fits) {
        bins[b].push_back(i);
        for (size_t j = 0; j < vecs[i].size(); ++j) loads[b][j] += vecs[i][j];
        placed = true;
      }
    }
    if (!placed) {
      bins.push_back({i});
      loads.push_back(vecs[i]);
    }
  }
  return bins;
}

BinPacking better_simple_pack(const Instance& inst, VbpHeuristic heuristic) {
  if (!heuristic) heuristic = ffd_max_coord;
  std::vector<std::vector<Rat>> vecs;
  for (const Item& it : inst.items) {
    std::vector<Rat> v;
    v.push_back(it.area());
    for (const Rat& x : it.v) v.push_back(x);
    vecs.push_back(std::move(v));
  }
  BinPacking out;
  for (const std::vector<int>& group : heuristic(vecs)) pack_group(inst, group, out);
  return out;
}

}  // namespace gvbp
