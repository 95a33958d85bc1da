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
#include <vector>

// Packs rect sets satisfying
//   2*area <= u*v - max(2*wmax - u, 0) * max(2*hmax - v, 0)          (*)
// into a u x v region. Recursive subdivision; every branch re-establishes (*)
// for the regions it recurses into:
//
//  - With an item of width >= u/2: stack all such items bottom-left by
//    non-increasing width (height h0). Leftover items taller than v - h0 go
//    on a shelf hanging from the top-right corner; (*) forbids that shelf
//    from reaching back to the stack. The rest recurses above the stack.
//  - Mirrored for an item of height >= v/2.
//  - Otherwise every item is narrower than u/2 and shorter than v/2 and (*)
//    reads 2*area <= u*v. A vertical cut at u1 = 2*area(prefix)/v splits the
//    problem when the remainder is narrow enough; if not, the prefix is a
//    stackable column, or two quarter-wide items absorb enough area to peel
//    off, with horizontal mirrors of each move.

namespace gvbp {

namespace {

struct LocalPlacement {
  int item;
  Rat x, y;  // bin coordinates of the lower-left corner
};

class Solver {
 public:
  explicit Solver(const std::vector<Rect>& items) : items_(items) {}

  bool solve(std::vector<int> idx, const Rat& u, const Rat& v, const Rat& ox,
             const Rat& oy, bool flip, bool allow_shrink) {
    if (idx.empty()) return true;
    if (idx.size() == 1) {
      place(idx[0], ox, oy, flip);
      return true;
    }
    Rat wmax = 0, hmax = 0;
    for (int i : idx) {
      wmax = std::max(wmax, width(i, flip));
      hmax = std::max(hmax, height(i, flip));
    }
    if (2 * wmax >= u) return stack_and_shelf(std::move(idx), u, v, ox, oy, flip);
    if (2 * hmax >= v)
      return stack_and_shelf(std::move(idx), v, u, oy, ox, !flip);
    return all_small(std::move(idx), u, v, ox, oy, flip, allow_shrink);
  }

  std::vector<LocalPlacement> out;

 private:
  Rat width(int i, bool flip) const { return flip ? items_[i].h : items_[i].w; }
  Rat height(int i, bool flip) const { return flip ? items_[i].w : items_[i].h; }
  Rat area(int i) const { return items_[i].area(); }

  void place(int i, const Rat& x, const Rat& y, bool flip) {
    if (flip)
      out.push_back({i, y, x});
    else
      out.push_back({i, x, y});
  }

  void sort_desc_width(std::vector<int>& idx, bool flip) {
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
      return width(a, flip) > width(b, flip);
    });
  }

  // An item at least half the region wide exists.
  bool stack_and_shelf(std::vector<int> idx, const Rat& u, const Rat& v,
                       const Rat& ox, const Rat& oy, bool flip) {
    std::vector<int> stack, rest;
    for (int i : idx)
      (2 * width(i, flip) >= u ? stack : rest).push_back(i);
    sort_desc_width(stack, flip);
    Rat y = oy;
    for (int i : stack) {
      place(i, ox, y, flip);
      y += height(i, flip);
    }
    Rat h0 = y - oy;
    if (h0 > v) throw std::logic_error("stack exceeds the region");
    if (rest.empty()) return true;
    Rat rem_h = v - h0;
    if (rem_h == 0) throw std::logic_error("leftover items but no space above stack");

    std::vector<int> shelf, above;
    for (int i : rest)
      (height(i, flip) > rem_h ? shelf : above).push_back(i);
    Rat x = ox + u;
    Rat shelf_w = 0;
    for (int i : shelf) {
      x -= width(i, flip);
      shelf_w += width(i, flip);
      place(i, x, oy + v - height(i, flip), flip);
    }
    if (2 * shelf_w >= u) throw std::logic_error("shelf reaches past half width");
    return solve(std::move(above), u - shelf_w, rem_h, ox, oy + h0, flip,
                 /*allow_shrink=*/true);
  }

  // All widths < u/2 and heights < v/2, so 2*area <= u*v.
  bool all_small(std::vector<int> idx, const Rat& u, const Rat& v, const Rat& ox,
                 const Rat& oy, bool flip, bool allow_shrink) {
    size_t mark = out.size();
    auto rollback = [&] { out.resize(mark); };

    if (try_column(idx, u, v, ox, oy, flip)) return true;
    rollback();
    if (try_column(idx, v, u, oy, ox, !flip)) return true;
    rollback();
    if (try_cut(idx, u, v, ox, oy, flip, allow_shrink)) return true;
    rollback();
    if (try_cut(idx, v, u, oy, ox, !flip, allow_shrink)) return true;
    rollback();
    if (try_pair(idx, u, v, ox, oy, flip)) return true;
    rollback();
    if (try_pair(idx, v, u, oy, ox, !flip)) return true;
    rollback();
    if (try_exhaustive(idx, u, v, ox, oy, flip)) return true;
    rollback();
    return false;
  }

  // Single column along the left edge, widest first.
  bool try_column(std::vector<int> idx, const Rat& u, const Rat& v, const Rat& ox,
                  const Rat& oy, bool flip) {
    Rat total_h = 0;
    for (int i : idx) total_h += height(i, flip);
    if (total_h > v) return false;
    sort_desc_width(idx, flip);
    Rat y = oy;
    for (int i : idx) {
      place(i, ox, y, flip);
      y += height(i, flip);
    }
    return true;
  }

  // Vertical cut after the minimal prefix (widest first) whose doubled area
  // reaches w1*v, plus the column / corner moves that cover the cases where
  // the cut leaves the right part too narrow.
  bool try_cut(std::vector<int> idx, const Rat& u, const Rat& v, const Rat& ox,
               const Rat& oy, bool flip, bool allow_shrink) {
    sort_desc_width(idx, flip);
    const int n = static_cast<int>(idx.size());
    Rat w1 = width(idx[0], flip);
    Rat total2 = 0;
    for (int i : idx) total2 += 2 * area(i);

    if (total2 < w1 * v) {
      // Whole set fits the strip of width w1; inside it the widest item is
      // at least half the strip, so the next level stacks.
      return solve(std::move(idx), w1, v, ox, oy, flip, /*allow_shrink=*/true);
    }

    Rat acc2 = 0;
    int m = n;
    for (int k = 0; k < n; ++k) {
      acc2 += 2 * area(idx[k]);
      if (acc2 >= w1 * v) {
        m = k + 1;
        break;
      }
    }
    Rat u1 = acc2 / v;  // u1 >= w1 by choice of m

    if (m == n) {
      if (allow_shrink && u1 < u)
        return solve(std::move(idx), u1, v, ox, oy, flip, /*allow_shrink=*/false);
      return false;
    }

    std::vector<int> left(idx.begin(), idx.begin() + m);
    std::vector<int> right(idx.begin() + m, idx.end());
    Rat w_next = width(right.front(), flip);

    if (w_next <= u - u1) {
      return solve(std::move(left), u1, v, ox, oy, flip, true) &&
             solve(std::move(right), u - u1, v, ox + u1, oy, flip, true);
    }

    // Cut blocked: the m widest items carry more than (u - w_next)*v of
    // doubled area, so everything outside a column of width w1 is light.
    Rat col_h = 0;
    int fit = 0;
    while (fit < n && col_h + height(idx[fit], flip) <= v) {
      col_h += height(idx[fit], flip);
      ++fit;
    }
    if (fit >= m) {
      std::vector<int> col(idx.begin(), idx.begin() + fit);
      std::vector<int> rest(idx.begin() + fit, idx.end());
      Rat y = oy;
      for (int i : col) {
        place(i, ox, y, flip);
        y += height(i, flip);
      }
      return solve(std::move(rest), u - w1, v, ox + w1, oy, flip, true);
    }
    if (fit == m - 1) {
      // Column of the first m-1; item m goes to the top-right corner when
      // the leftover area bound allows the reduced region.
      int corner = idx[m - 1];
      Rat hm = height(corner, flip);
      if (w_next * v + w1 * v + u * hm <= u * v) {
        Rat y = oy;
        for (int k = 0; k < m - 1; ++k) {
          place(idx[k], ox, y, flip);
          y += height(idx[k], flip);
        }
        place(corner, ox + u - width(corner, flip), oy + v - hm, flip);
        std::vector<int> rest(idx.begin() + m, idx.end());
        return solve(std::move(rest), u - w1, v - hm, ox + w1, oy, flip, true);
      }
    }
    return false;
  }

  // Two items of width >= u/4 whose removal leaves the rest fitting right of
  // the wider one; the pair stacks at the left edge.
  bool try_pair(std::vector<int> idx, const Rat& u, const Rat& v, const Rat& ox,
                const Rat& oy, bool flip) {
    sort_desc_width(idx, flip);
    Rat total2 = 0;
    for (int i : idx) total2 += 2 * area(i);
    std::vector<int> wide;
    for (int i : idx)
      if (4 * width(i, flip) >= u) wide.push_back(i);
    for (size_t a = 0; a < wide.size(); ++a) {
      for (size_t b = a + 1; b < wide.size(); ++b) {
        int i = wide[a], j = wide[b];
        Rat wmax_ij = std::max(width(i, flip), width(j, flip));
        if (total2 - 2 * area(i) - 2 * area(j) > (u - wmax_ij) * v) continue;
        place(i, ox, oy, flip);
        place(j, ox, oy + height(i, flip), flip);
        std::vector<int> rest;
        for (int k : idx)
          if (k != i && k != j) rest.push_back(k);
        return solve(std::move(rest), u - wmax_ij, v, ox + wmax_ij, oy, flip, true);
      }
    }
    return false;
  }

  // Last resort for tiny sets: exhaustive search over corner-sum candidate
  // positions.
  bool try_exhaustive(const std::vector<int>& idx, const Rat& u, const Rat& v,
                      const Rat& ox, const Rat& oy, bool flip) {
    if (idx.size() > 7) return false;
    std::vector<Rat> xs{Rat(0)}, ys{Rat(0)};
    subset_sums(idx, flip, true, u, xs);
    subset_sums(idx, flip, false, v, ys);
    std::vector<LocalPlacement> acc;
    if (!exhaustive_rec(idx, 0, u, v, xs, ys, flip, acc)) return false;
    for (const LocalPlacement& p : acc) out.push_back({p.item, ox + p.x, oy + p.y});
    return true;
  }

  void subset_sums(const std::vector<int>& idx, bool flip, bool use_width,
                   const Rat& cap, std::vector<Rat>& sums) {
    std::vector<Rat> acc{Rat(0)};
    for (int i : idx) {
      Rat s = use_width ? width(i, flip) : height(i, flip);
      size_t sz = acc.size();
      for (size_t k = 0; k < sz; ++k) {
        Rat t = acc[k] + s;
        if (t <= cap) acc.push_back(t);
      }
      std::sort(acc.begin(), acc.end());
      acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
      if (acc.size() > 200) acc.resize(200);
    }
    sums = std::move(acc);
  }

  bool exhaustive_rec(const std::vector<int>& idx, size_t k, const Rat& u,
                      const Rat& v, const std::vector<Rat>& xs,
                      const std::vector<Rat>& ys, bool flip,
                      std::vector<LocalPlacement>& acc) {
    if (k == idx.size()) return true;
    int item = idx[k];
    Rat w = width(item, flip), h = height(item, flip);
    for (const Rat& x : xs) {
      if (x + w > u) continue;
      for (const Rat& y : ys) {
        if (y + h > v) continue;
        bool clash = false;
        for (const LocalPlacement& p : acc) {
          Rat pw = width(p.item, flip), ph = height(p.item, flip);
          if (p.x + pw > x && x + w > p.x && p.y + ph > y && y + h > p.y) {
            clash = true;
            break;
          }
        }
        if (clash) continue;
        acc.push_back({item, x, y});
        if (exhaustive_rec(idx, k + 1, u, v, xs, ys, flip, acc)) return true;
        acc.pop_back();
      }
    }
    return false;
  }

  const std::vector<Rect>& items_;
};

}  // namespace

std::optional<BinPackResult> steinberg_pack(const std::vector<Rect>& rects,
                                            const Rat& W, const Rat& H) {
  BinPackResult result;
  std::vector<Rect> live;
  std::vector<int> origin;
  for (size_t i = 0; i < rects.size(); ++i) {
    const Rect& r = rects[i];
    if (r.w == 0 || r.h == 0) {
      result.skipped_degenerate.push_back(r.id);
      continue;
    }
    if (r.w > W || r.h > H)
      throw PreconditionError("rect '" + r.id + "' exceeds the bin");
    live.push_back(r);
    origin.push_back(static_cast<int>(i));
  }
  if (live.empty()) return result;

  Rat wmax = 0, hmax = 0, area2 = 0;
  for (const Rect& r : live) {
    wmax = std::max(wmax, r.w);
    hmax = std::max(hmax, r.h);
    area2 += 2 * r.area();
  }
  Rat slack_w = std::max(2 * wmax - W, Rat(0));
  Rat slack_h = std::max(2 * hmax - H, Rat(0));
  if (area2 > W * H - slack_w * slack_h) return std::nullopt;

  Solver solver(live);
  std::vector<int> idx(live.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  if (!solver.solve(std::move(idx), W, H, Rat(0), Rat(0), false, true))
    throw std::logic_error("packing condition met but no packing constructed");

  for (const LocalPlacement& p : solver.out) {
    const Rect& r = live[p.item];
    if (p.x < 0 || p.y < 0 || p.x + r.w > W || p.y + r.h > H)
      throw std::logic_error("constructed placement leaves the bin");
    result.placements.push_back({r.id, p.x, p.y, r.w, r.h});
  }
  for (size_t a = 0; a < result.placements.size(); ++a)
    for (size_t b = a + 1; b < result.placements.size(); ++b) {
      const PlacedRect& pa = result.placements[a];
      const PlacedRect& pb = result.placements[b];
      if (pa.x + pa.w > pb.x && pb.x + pb.w > pa.x && pa.y + pa.h > pb.y &&
          pb.y + pb.h > pa.y)
        throw std::logic_error("constructed placements overlap");
    }
  return result;
}

}  // namespace gvbp
