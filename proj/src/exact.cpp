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

#include "gvbp/exact.hpp"

#include <algorithm>

namespace gvbp {

namespace {

std::vector<Rat> subset_sums_capped(const std::vector<Rat>& vals, const Rat& cap) {
  std::vector<Rat> sums{Rat(0)};
  for (const Rat& s : vals) {
    size_t n = sums.size();
    for (size_t k = 0; k < n; ++k) {
      Rat t = sums[k] + s;
      if (t <= cap) sums.push_back(t);
    }
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  }
  return sums;
}

bool place_rec(const std::vector<Rect>& rects, size_t k, const std::vector<Rat>& xs,
               const std::vector<Rat>& ys, std::vector<PlacedRect>& acc) {
  if (k == rects.size()) return true;
  const Rect& r = rects[k];
  for (const Rat& x : xs) {
    if (x + r.w > 1) continue;
    for (const Rat& y : ys) {
      if (y + r.h > 1) continue;
      bool clash = false;
      for (const PlacedRect& p : acc) {
        if (p.x + p.w > x && x + r.w > p.x && p.y + p.h > y && y + r.h > p.y) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      acc.push_back({r.id, x, y, r.w, r.h});
      if (place_rec(rects, k + 1, xs, ys, acc)) return true;
      acc.pop_back();
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<PlacedRect>> exact_pack_unit_bin(
    const std::vector<Rect>& rects) {
  std::vector<Rect> live;
  Rat area = 0;
  std::vector<Rat> widths, heights;
  for (const Rect& r : rects) {
    if (r.w == 0 || r.h == 0) continue;
    if (r.w > 1 || r.h > 1) return std::nullopt;
    live.push_back(r);
    widths.push_back(r.w);
    heights.push_back(r.h);
    area += r.area();
  }
  if (area > 1) return std::nullopt;
  std::stable_sort(live.begin(), live.end(),
                   [](const Rect& a, const Rect& b) { return a.area() > b.area(); });
  std::vector<Rat> xs = subset_sums_capped(widths, Rat(1));
  std::vector<Rat> ys = subset_sums_capped(heights, Rat(1));
  std::vector<PlacedRect> acc;
  if (!place_rec(live, 0, xs, ys, acc)) return std::nullopt;
  return acc;
}

BinFeasibility::BinFeasibility(const Instance& inst) : inst_(inst) {
  for (size_t i = 0; i < inst.items.size(); ++i)
    if (inst.items[i].area() > 0) positive_mask_ |= (uint64_t{1} << i);
}

bool BinFeasibility::geometry_feasible(uint64_t pos_mask) {
  auto it = geo_cache_.find(pos_mask);
  if (it != geo_cache_.end()) return it->second;
  std::vector<Rect> rects;
  for (size_t i = 0; i < inst_.items.size(); ++i)
    if (pos_mask & (uint64_t{1} << i)) {
      const Item& item = inst_.items[i];
      rects.push_back({item.id, item.w, item.h});
    }
  bool ok = exact_pack_unit_bin(rects).has_value();
  geo_cache_[pos_mask] = ok;
  return ok;
}

bool BinFeasibility::feasible(uint64_t mask) {
  std::vector<Rat> load(inst_.d, Rat(0));
  for (size_t i = 0; i < inst_.items.size(); ++i)
    if (mask & (uint64_t{1} << i))
      for (int j = 0; j < inst_.d; ++j) {
        load[j] += inst_.items[i].v[j];
        if (load[j] > 1) return false;
      }
  return geometry_feasible(mask & positive_mask_);
}

std::optional<std::vector<Placement>> BinFeasibility::witness(uint64_t mask) {
  if (!feasible(mask)) return std::nullopt;
  std::vector<Rect> rects;
  for (size_t i = 0; i < inst_.items.size(); ++i)
    if (mask & positive_mask_ & (uint64_t{1} << i)) {
      const Item& item = inst_.items[i];
      rects.push_back({item.id, item.w, item.h});
    }
  auto placed = exact_pack_unit_bin(rects);
  if (!placed) return std::nullopt;
  std::vector<Placement> out;
  for (const PlacedRect& p : *placed) out.push_back({p.id, 0, p.x, p.y});
  for (size_t i = 0; i < inst_.items.size(); ++i)
    if ((mask & (uint64_t{1} << i)) && !(positive_mask_ & (uint64_t{1} << i)))
      out.push_back({inst_.items[i].id, 0, Rat(0), Rat(0)});
  return out;
}

namespace {

struct PartitionSearch {
  BinFeasibility* feas;
  int n = 0;
  int best = 0;
  std::vector<uint64_t> best_bins;
  std::vector<uint64_t> bins;

  void rec(int item) {
    if (static_cast<int>(bins.size()) >= best) return;
    if (item == n) {
      best = static_cast<int>(bins.size());
      best_bins = bins;
      return;
    }
    uint64_t bit = uint64_t{1} << item;
    for (size_t b = 0; b < bins.size(); ++b) {
      if (feas->feasible(bins[b] | bit)) {
        bins[b] |= bit;
        rec(item + 1);
        bins[b] &= ~bit;
      }
    }
    if (static_cast<int>(bins.size()) + 1 < best) {
      bins.push_back(bit);
      rec(item + 1);
      bins.pop_back();
    }
  }
};

}  // namespace

OracleResult brute_force_opt(const Instance& inst, long grid, int max_items) {
  const int n = static_cast<int>(inst.items.size());
  if (n > max_items)
    throw InstanceTooLarge("oracle limited to " + std::to_string(max_items) +
                           " items, got " + std::to_string(n));
  Rat step(1, grid);
  for (const Item& it : inst.items) {
    bool grid_ok = true;
    if (it.area() > 0)
      grid_ok = is_integer(it.w / step) && is_integer(it.h / step);
    for (const Rat& x : it.v) grid_ok = grid_ok && is_integer(x / step);
    if (!grid_ok)
      throw NonGridInstance("item '" + it.id + "' is not on the 1/" +
                            std::to_string(grid) + " grid");
  }

  OracleResult out;
  if (n == 0) return out;

  BinFeasibility feas(inst);
  for (int i = 0; i < n; ++i)
    if (!feas.feasible(uint64_t{1} << i))
      throw InvalidInstance("item '" + inst.items[i].id + "' fits no bin");

  PartitionSearch search;
  search.feas = &feas;
  search.n = n;
  search.best = n + 1;
  search.rec(0);

  out.opt_bins = search.best;
  out.witness.bin_count = search.best;
  for (size_t b = 0; b < search.best_bins.size(); ++b) {
    auto w = feas.witness(search.best_bins[b]);
    if (!w) throw std::logic_error("feasible bin lost its witness");
    for (Placement p : *w) {
      p.bin_index = static_cast<int>(b);
      out.witness.placements.push_back(p);
    }
  }
  return out;
}

}  // namespace gvbp
