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

#include "gvbp/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gvbp {

std::vector<std::vector<int>> next_fit(const std::vector<Rat>& sizes) {
  for (size_t i = 0; i < sizes.size(); ++i)
    if (sizes[i] < 0 || sizes[i] > 1)
      throw PreconditionError("size " + std::to_string(i) + " outside [0,1]");
  std::vector<std::vector<int>> groups;
  Rat load = 0;
  for (size_t i = 0; i < sizes.size(); ++i) {
    if (groups.empty() || load + sizes[i] > 1) {
      groups.emplace_back();
      load = 0;
    }
    groups.back().push_back(static_cast<int>(i));
    load += sizes[i];
  }
  return groups;
}

StripPacking nfdh_strip(std::vector<Rect> rects, const Rat& strip_width) {
  StripPacking out;
  out.used_height = 0;
  std::vector<Rect> live;
  for (const Rect& r : rects) {
    if (r.w == 0 || r.h == 0) {
      out.skipped_degenerate.push_back(r.id);
      continue;
    }
    if (r.w > strip_width)
      throw PreconditionError("rect '" + r.id + "' wider than the strip");
    live.push_back(r);
  }
  std::stable_sort(live.begin(), live.end(),
                   [](const Rect& a, const Rect& b) { return a.h > b.h; });
  Rat shelf_y = 0, shelf_h = 0, cursor = 0;
  for (const Rect& r : live) {
    if (cursor + r.w > strip_width) {
      shelf_y += shelf_h;
      shelf_h = 0;
      cursor = 0;
    }
    if (shelf_h == 0) shelf_h = r.h;  // first (tallest) item sets shelf height
    out.placements.push_back({r.id, cursor, shelf_y, r.w, r.h});
    cursor += r.w;
  }
  out.used_height = shelf_y + shelf_h;
  return out;
}

std::optional<BinPackResult> nfdh_bin(const std::vector<Rect>& rects, const Rat& W,
                                      const Rat& H, const Rat& delta_w,
                                      const Rat& delta_h) {
  for (const Rect& r : rects) {
    if (r.w > delta_w)
      throw PreconditionError("rect '" + r.id + "' wider than delta_w");
    if (r.h > delta_h)
      throw PreconditionError("rect '" + r.id + "' taller than delta_h");
  }
  StripPacking strip = nfdh_strip(rects, W);
  if (strip.used_height > H) return std::nullopt;
  BinPackResult out;
  out.placements = std::move(strip.placements);
  out.skipped_degenerate = std::move(strip.skipped_degenerate);
  return out;
}

ThreeBinPacking steinberg_three_bins(const std::vector<Rect>& rects) {
  Rat area = 0;
  for (const Rect& r : rects) {
    if (r.w > 1 || r.h > 1)
      throw PreconditionError("rect '" + r.id + "' does not fit a unit bin");
    area += r.area();
  }
  if (area > 1) throw PreconditionError("total area exceeds 1");

  auto packed = steinberg_pack(rects, Rat(2), Rat(1));
  if (!packed)
    throw std::logic_error("2x1 packing must exist when total area <= 1");

  ThreeBinPacking out;
  out.skipped_degenerate = packed->skipped_degenerate;
  out.bins.assign(3, {});
  std::vector<PlacedRect> straddlers;
  for (const PlacedRect& p : packed->placements) {
    if (p.x + p.w <= 1) {
      out.bins[0].push_back(p);
    } else if (p.x >= 1) {
      PlacedRect q = p;
      q.x -= 1;
      out.bins[1].push_back(q);
    } else {
      straddlers.push_back(p);
    }
  }
  // Items crossing x = 1 are pairwise disjoint vertically, so they stack.
  std::stable_sort(straddlers.begin(), straddlers.end(),
                   [](const PlacedRect& a, const PlacedRect& b) { return a.y < b.y; });
  Rat y = 0;
  for (PlacedRect p : straddlers) {
    p.x = 0;
    p.y = y;
    y += p.h;
    out.bins[2].push_back(p);
  }
  while (!out.bins.empty() && out.bins.back().empty()) out.bins.pop_back();
  return out;
}

std::vector<PlacedRect> decompose_empty_space(const std::vector<PlacedRect>& placed,
                                              CutDirection direction) {
  if (direction == CutDirection::kVertical) {
    // Transpose, reuse the horizontal sweep, transpose back.
    std::vector<PlacedRect> t;
    for (const PlacedRect& p : placed) t.push_back({p.id, p.y, p.x, p.h, p.w});
    auto sub = decompose_empty_space(t, CutDirection::kHorizontal);
    for (PlacedRect& p : sub) {
      std::swap(p.x, p.y);
      std::swap(p.w, p.h);
    }
    return sub;
  }

  std::vector<PlacedRect> live;
  for (const PlacedRect& p : placed) {
    if (p.x < 0 || p.y < 0 || p.x + p.w > 1 || p.y + p.h > 1)
      throw PreconditionError("rect '" + p.id + "' outside the unit bin");
    if (p.w == 0 || p.h == 0) continue;
    live.push_back(p);
  }
  for (size_t a = 0; a < live.size(); ++a)
    for (size_t b = a + 1; b < live.size(); ++b) {
      bool x_ov = live[a].x + live[a].w > live[b].x && live[b].x + live[b].w > live[a].x;
      bool y_ov = live[a].y + live[a].h > live[b].y && live[b].y + live[b].h > live[a].y;
      if (x_ov && y_ov)
        throw PreconditionError("input rects '" + live[a].id + "' and '" +
                                live[b].id + "' overlap");
    }

  // Horizontal slabs between consecutive y-events; free x-intervals are
  // constant within a slab, and identical intervals in adjacent slabs merge.
  std::set<Rat> ys{Rat(0), Rat(1)};
  for (const PlacedRect& p : live) {
    ys.insert(p.y);
    ys.insert(p.y + p.h);
  }
  std::vector<Rat> yv(ys.begin(), ys.end());

  using Interval = std::pair<Rat, Rat>;
  std::map<Interval, Rat> open;  // interval -> slab y where it started
  std::vector<PlacedRect> out;
  int counter = 0;
  auto close = [&](const Interval& iv, const Rat& y_start, const Rat& y_end) {
    out.push_back({"empty_" + std::to_string(counter++), iv.first, y_start,
                   iv.second - iv.first, y_end - y_start});
  };

  for (size_t k = 0; k + 1 < yv.size(); ++k) {
    const Rat& y1 = yv[k];
    const Rat& y2 = yv[k + 1];
    std::vector<Interval> blocked;
    for (const PlacedRect& p : live)
      if (p.y <= y1 && p.y + p.h >= y2) blocked.push_back({p.x, p.x + p.w});
    std::sort(blocked.begin(), blocked.end());
    std::vector<Interval> free;
    Rat cursor = 0;
    for (const auto& [bx1, bx2] : blocked) {
      if (bx1 > cursor) free.push_back({cursor, bx1});
      if (bx2 > cursor) cursor = bx2;
    }
    if (cursor < 1) free.push_back({cursor, Rat(1)});

    std::map<Interval, Rat> next_open;
    for (const Interval& iv : free) {
      auto it = open.find(iv);
      if (it != open.end()) {
        next_open.emplace(iv, it->second);  // continues through this slab
        open.erase(it);
      } else {
        next_open.emplace(iv, y1);
      }
    }
    for (const auto& [iv, y_start] : open) close(iv, y_start, y1);
    open = std::move(next_open);
  }
  for (const auto& [iv, y_start] : open) close(iv, y_start, Rat(1));
  return out;
}

}  // namespace gvbp
