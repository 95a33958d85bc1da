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

#ifndef GVBP_TESTS_TEST_UTIL_HPP_
#define GVBP_TESTS_TEST_UTIL_HPP_

#include <random>
#include <string>
#include <vector>

#include "gvbp/core.hpp"
#include "gvbp/exact.hpp"
#include "gvbp/packing.hpp"

namespace gvbp::test {

inline Item item(const std::string& id, const Rat& w, const Rat& h,
                 std::vector<Rat> v = {}, std::optional<Rat> profit = {}) {
  Item it;
  it.id = id;
  it.w = w;
  it.h = h;
  it.v = std::move(v);
  it.profit = profit;
  return it;
}

inline Instance instance(int d, std::vector<Item> items) {
  Instance inst;
  inst.d = d;
  inst.items = std::move(items);
  inst.check();
  return inst;
}

// The three rectangles that fit one geometric bin but, read as weights,
// overflow a unit vector bin.
inline Instance fig1_rects() {
  return instance(0, {item("a", Rat(8, 10), Rat(2, 10)),
                      item("b", Rat(4, 10), Rat(4, 10)),
                      item("c", Rat(4, 10), Rat(4, 10))});
}

inline Instance fig1_weights() {
  return instance(1, {item("a", 0, 0, {Rat(8, 10)}), item("b", 0, 0, {Rat(4, 10)}),
                      item("c", 0, 0, {Rat(4, 10)})});
}

// Four items with two weight dimensions; three feasible configurations are
// {1,3,4}, {1,2} and {2,4}.
inline Instance fig2_instance() {
  return instance(
      2, {item("1", Rat(4, 10), Rat(1), {Rat(2, 10), Rat(4, 10)}),
          item("2", Rat(4, 10), Rat(1), {Rat(6, 10), Rat(2, 10)}),
          item("3", Rat(5, 10), Rat(3, 10), {Rat(5, 10), Rat(2, 10)}),
          item("4", Rat(5, 10), Rat(4, 10), {Rat(3, 10), Rat(2, 10)})});
}

inline Rat rand_grid(std::mt19937_64& rng, long grid) {
  return Rat(1 + static_cast<long>(rng() % grid), grid);
}

// Random instance on a 1/grid lattice; weight of zero-area items drawn the
// same way.
inline Instance random_grid_instance(std::mt19937_64& rng, int n, int d, long grid,
                                     double zero_area_fraction = 0.2) {
  Instance inst;
  inst.d = d;
  for (int i = 0; i < n; ++i) {
    Item it;
    it.id = "i" + std::to_string(i);
    bool degenerate = (rng() % 100) < static_cast<uint64_t>(zero_area_fraction * 100);
    if (!degenerate) {
      it.w = rand_grid(rng, grid);
      it.h = rand_grid(rng, grid);
    } else {
      it.w = 0;
      it.h = 0;
    }
    for (int j = 0; j < d; ++j) it.v.push_back(rand_grid(rng, grid));
    inst.items.push_back(std::move(it));
  }
  inst.check();
  return inst;
}

// Deliberately different from validate_packing: per-bin double loop with
// rectangle intersection written out the long way.
inline bool independent_checker(const Instance& inst, const BinPacking& packing,
                                bool all_packed) {
  size_t placed = 0;
  for (const Item& want : inst.items) {
    int count = 0;
    for (const Placement& p : packing.placements)
      if (p.item_id == want.id) ++count;
    if (count > 1) return false;
    if (all_packed && count == 0) return false;
    placed += count;
  }
  if (placed != packing.placements.size()) return false;  // unknown ids
  for (int b = 0; b < packing.bin_count; ++b) {
    std::vector<std::pair<const Placement*, const Item*>> members;
    for (const Placement& p : packing.placements)
      if (p.bin_index == b)
        members.emplace_back(&p, &inst.items[inst.item_index(p.item_id)]);
    for (auto& [p, it] : members) {
      if (p->x < 0 || p->y < 0) return false;
      if (p->x + it->w > 1 || p->y + it->h > 1) return false;
    }
    for (int j = 0; j < inst.d; ++j) {
      Rat sum = 0;
      for (auto& [p, it] : members) sum += it->v[j];
      if (sum > 1) return false;
    }
    for (size_t a = 0; a < members.size(); ++a)
      for (size_t c = a + 1; c < members.size(); ++c) {
        const auto& [pa, ia] = members[a];
        const auto& [pc, ic] = members[c];
        if (ia->area() == 0 || ic->area() == 0) continue;
        Rat ax1 = pa->x, ax2 = pa->x + ia->w, ay1 = pa->y, ay2 = pa->y + ia->h;
        Rat cx1 = pc->x, cx2 = pc->x + ic->w, cy1 = pc->y, cy2 = pc->y + ic->h;
        Rat ox = std::min(ax2, cx2) - std::max(ax1, cx1);
        Rat oy = std::min(ay2, cy2) - std::max(ay1, cy1);
        if (ox > 0 && oy > 0) return false;
      }
  }
  for (const Placement& p : packing.placements)
    if (p.bin_index < 0 || p.bin_index >= packing.bin_count) return false;
  return true;
}

// Second optimum oracle: enumerates set partitions via restricted growth
// strings and checks each block with a height-ordered placement search, so
// both the search order and the feasibility path differ from brute_force_opt.
long second_oracle_opt(const Instance& inst);

inline bool instance_eq(const Instance& a, const Instance& b) {
  if (a.d != b.d || a.items.size() != b.items.size()) return false;
  for (size_t i = 0; i < a.items.size(); ++i) {
    const Item& x = a.items[i];
    const Item& y = b.items[i];
    if (x.id != y.id || x.w != y.w || x.h != y.h || x.v != y.v) return false;
    if (x.profit.has_value() != y.profit.has_value()) return false;
    if (x.profit && *x.profit != *y.profit) return false;
  }
  return true;
}

}  // namespace gvbp::test

#endif  // GVBP_TESTS_TEST_UTIL_HPP_
