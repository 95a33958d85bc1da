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

#include <doctest.h>

#include <random>
#include <set>

#include "gvbp/rounding_toolkit.hpp"
#include "test_util.hpp"

using namespace gvbp;
using namespace gvbp::test;

namespace {

const Rat kEps(1, 8);

// Grid-1/8 instances keep every nonzero dimension above delta0, so the first
// window is empty and the schedule lands at eps1 = delta0.
Instance toolkit_instance(std::mt19937_64& rng, int n, int d) {
  return random_grid_instance(rng, n, d, 8);
}

EpsilonSchedule schedule_for(const Instance& inst) {
  MediumRemoval med = remove_medium(inst, kEps);
  return make_schedule(inst.d, kEps, med.eps1);
}

}  // namespace

TEST_CASE("window parameters") {
  // delta0 = min(1/(4d+1), 2eps/3) and T = ceil((d+2)/eps) as formulas.
  CHECK(std::min(Rat(1, 4 * 1 + 1), 2 * Rat(1, 2) / 3) == Rat(1, 5));
  CHECK(ceil_int(Rat(1 + 2) / Rat(1, 2)) == 6);
  // At the supported parameters: d = 1, eps = 1/8.
  CHECK(std::min(Rat(1, 5), 2 * kEps / 3) == Rat(1, 12));
  CHECK(ceil_int(Rat(3) / kEps) == 24);
}

TEST_CASE("window function stays an integer reciprocal and shrinks fast") {
  for (int d : {1, 2, 3}) {
    Rat delta0 = std::min(Rat(1, 4 * d + 1), 2 * kEps / 3);
    Rat f = window_fn(delta0, d, kEps);
    CHECK(is_integer(1 / f));
    CHECK(f < kEps * delta0 * delta0 / 2);
  }
}

TEST_CASE("medium removal on {0,1} dimensions removes nothing") {
  Instance inst = instance(
      1, {item("a", 1, 1, {Rat(1)}), item("b", 0, 0, {Rat(0)}), item("c", 1, 1, {Rat(0)})});
  MediumRemoval med = remove_medium(inst, kEps);
  CHECK(med.medium_ids.empty());
  CHECK(med.eps1 == Rat(1, 12));
}

TEST_CASE("medium removal bound and window argmin") {
  std::mt19937_64 rng(113);
  for (int t = 0; t < 40; ++t) {
    int d = 1 + rng() % 2;
    Instance inst = random_grid_instance(rng, 1 + rng() % 10, d, 1 << 20, 0.1);
    MediumRemoval med = remove_medium(inst, kEps);
    Rat med_span = 0;
    std::set<std::string> med_set(med.medium_ids.begin(), med.medium_ids.end());
    for (const Item& it : inst.items)
      if (med_set.count(it.id)) med_span += span(it);
    CHECK(med_span <= kEps * inst.span_total());

    // Independent re-scan: the chosen window must be a span minimizer among
    // the windows up to the first empty one.
    Rat delta0 = std::min(Rat(1, 4 * d + 1), 2 * kEps / 3);
    Rat prev = delta0;
    Rat smallest = -1;
    while (true) {
      Rat cur = window_fn(prev, d, kEps);
      Rat win_span = 0;
      for (const Item& it : inst.items) {
        auto inside = [&](const Rat& x) { return x > cur && x <= prev; };
        bool medium = inside(it.w) || inside(it.h);
        for (const Rat& x : it.v) medium = medium || inside(x);
        if (medium) win_span += span(it);
      }
      if (smallest < 0 || win_span < smallest) smallest = win_span;
      if (win_span == 0) break;
      prev = cur;
    }
    CHECK(med_span == smallest);

    // Remaining items are non-medium in every dimension.
    for (const Item& it : inst.items) {
      if (med_set.count(it.id)) continue;
      auto inside = [&](const Rat& x) { return x > med.eps2 && x <= med.eps1; };
      CHECK_FALSE(inside(it.w));
      CHECK_FALSE(inside(it.h));
      for (const Rat& x : it.v) CHECK_FALSE(inside(x));
    }
  }
}

TEST_CASE("schedule invariants") {
  EpsilonSchedule s = make_schedule(1, kEps, Rat(1, 12));
  CHECK(s.eps2 == window_fn(Rat(1, 12), 1, kEps));
  CHECK(s.eps2 < kEps * s.eps1 * s.eps1 / 2);
  CHECK(is_integer(1 / s.eps1));
  CHECK(is_integer(1 / s.eps2));
  CHECK(s.dense_box_height() == 2 * s.eps1 * s.eps1 + s.eps2);
  CHECK(s.linear_group_delta() == kEps * s.eps1 / 2);
  CHECK(s.width_grid() == s.eps1 * s.eps1 / 4);
  CHECK_THROWS(make_schedule(1, Rat(1, 7), Rat(1, 12)));  // 1/eps odd
  CHECK_THROWS(make_schedule(1, Rat(1, 2), Rat(1, 12)));  // eps too large
}

TEST_CASE("weight rounding keeps grid values fixed and zeroes tiny dense weights") {
  EpsilonSchedule s = make_schedule(1, kEps, Rat(1, 12));
  // 1/2 is already a multiple of eps1^2 * eps / 8 = 1/9216.
  Instance big = instance(1, {item("a", Rat(1, 2), Rat(1, 2), {Rat(1, 2)})});
  WeightRounding wr = weight_round(big, s);
  CHECK(wr.rounded.items[0].v[0] == Rat(1, 2));

  // A dense item's weight at most (eps/8d) * vmax drops to zero; weights
  // below eps2 are the only non-medium values in that range.
  Instance dense = instance(2, {item("d", 0, 0, {Rat(1, 2), s.eps2})});
  CHECK(s.eps2 <= Rat(1, 2) * kEps / (8 * 2));
  WeightRounding dr = weight_round(dense, s);
  CHECK(dr.rounded.items[0].v[1] == 0);
  CHECK(dr.rounded.items[0].v[0] == Rat(1, 2));  // already on the heavy grid
  CHECK(dr.rounded.items[0].w == 0);

  // Medium weights are rejected.
  Instance medium = instance(1, {item("m", Rat(1, 2), Rat(1, 2), {Rat(1, 100)})});
  CHECK_THROWS_AS(weight_round(medium, s), MediumItemError);
}

TEST_CASE("light dense ratios round up to a power") {
  EpsilonSchedule s = make_schedule(1, kEps, Rat(1, 12));
  // All weights at most eps2: a light dense item.
  Instance light = instance(2, {item("l", 0, 0, {s.eps2, s.eps2 / 2})});
  WeightRounding wr = weight_round(light, s);
  const Item& r = wr.rounded.items[0];
  CHECK(r.v[0] == s.eps2);  // the max ratio stays 1
  Rat ratio = r.v[1] / r.v[0];
  // ratio is a power of 1/(1 + eps/8) and the smallest one >= 1/2.
  Rat p = 1;
  while (p / (1 + kEps / 8) >= Rat(1, 2)) p /= (1 + kEps / 8);
  CHECK(ratio == p);
  CHECK(ratio >= Rat(1, 2));
}

TEST_CASE("weight rounding is idempotent and stays in range") {
  std::mt19937_64 rng(127);
  for (int t = 0; t < 60; ++t) {
    Instance inst = toolkit_instance(rng, 1 + rng() % 10, 1 + rng() % 3);
    EpsilonSchedule s = schedule_for(inst);
    WeightRounding once = weight_round(inst, s);
    WeightRounding twice = weight_round(once.rounded, s);
    for (size_t i = 0; i < inst.items.size(); ++i) {
      CHECK(once.rounded.items[i].v == twice.rounded.items[i].v);
      CHECK(once.rounded.items[i].w == twice.rounded.items[i].w);
      for (const Rat& x : once.rounded.items[i].v) {
        CHECK(x >= 0);
        CHECK(x <= 1);
      }
      CHECK(once.undo_log.items[i].v == inst.items[i].v);  // exact undo data
    }
  }
}

TEST_CASE("slack degradation stays within the eps/8 budget") {
  std::mt19937_64 rng(131);
  int built = 0;
  for (int t = 0; t < 400 && built < 120; ++t) {
    int d = 1 + rng() % 2;
    // mu in [eps/8, eps].
    Rat mu = kEps / 8 + Rat(static_cast<long>(rng() % 8), 64);
    if (mu > kEps) mu = kEps;
    Instance bin;
    bin.d = d;
    std::vector<Rat> load(d, Rat(0));
    for (int i = 0; i < 6; ++i) {
      Item it = item("b" + std::to_string(i), rand_grid(rng, 8), rand_grid(rng, 8));
      if (rng() % 4 == 0) it.w = it.h = 0;
      bool fits = true;
      for (int j = 0; j < d; ++j) {
        it.v.push_back(rand_grid(rng, 16));
        if (load[j] + it.v[j] > 1 - mu) fits = false;
      }
      if (!fits) continue;
      for (int j = 0; j < d; ++j) load[j] += it.v[j];
      bin.items.push_back(std::move(it));
    }
    if (bin.items.size() < 2) continue;
    bin.check();
    MediumRemoval med = remove_medium(bin, kEps);
    if (!med.medium_ids.empty()) continue;
    EpsilonSchedule s = make_schedule(d, kEps, med.eps1);
    ++built;
    CHECK(check_slack(bin.items, mu, s));
    WeightRounding wr = weight_round(bin, s);
    CHECK(check_slack(wr.rounded.items, mu - kEps / 8, s));
  }
  CHECK(built >= 100);
}

TEST_CASE("slack predicate matches its definition") {
  EpsilonSchedule s = make_schedule(1, kEps, Rat(1, 12));
  std::vector<Item> singleton{item("a", 0, 0, {Rat(1)})};
  CHECK(check_slack(singleton, kEps, s));

  std::vector<Item> full{item("a", Rat(1, 2), Rat(1, 2), {Rat(1, 2)}),
                         item("b", Rat(1, 2), Rat(1, 2), {Rat(1, 2)})};
  CHECK_FALSE(check_slack(full, Rat(1, 64), s));

  std::vector<Item> dense_pair{item("a", 0, 0, {Rat(1, 2)}),
                               item("b", 0, 0, {Rat(1, 2)})};
  CHECK(check_slack(dense_pair, kEps, s));

  std::mt19937_64 rng(137);
  for (int t = 0; t < 100; ++t) {
    std::vector<Item> bin;
    int n = 1 + rng() % 4;
    for (int i = 0; i < n; ++i) {
      Item it = item("x" + std::to_string(i), 0, 0);
      if (rng() % 2) {
        it.w = rand_grid(rng, 8);
        it.h = rand_grid(rng, 8);
      }
      it.v = {rand_grid(rng, 16)};
      bin.push_back(it);
    }
    Rat mu = Rat(1 + static_cast<long>(rng() % 8), 64);
    // Direct re-evaluation of the three-way definition.
    bool cap = true;
    Rat sum = 0;
    for (const Item& it : bin) sum += it.v[0];
    cap = sum <= 1 - mu;
    bool pair_rule = bin.size() == 2;
    for (const Item& it : bin) {
      ItemClass cls = classify_item(it, s.eps1, s.eps2);
      pair_rule = pair_rule && cls.dense && it.vmax() <= Rat(1, 2);
    }
    CHECK(check_slack(bin, mu, s) == (cap || bin.size() == 1 || pair_rule));
  }
}

TEST_CASE("slack splitting") {
  std::vector<Item> none{item("a", 0, 0, {Rat(1, 2)}), item("b", 0, 0, {Rat(1, 2)})};
  auto single = split_slack(none, {}, Rat(1, 4), {Rat(1)});
  CHECK(single.size() == 1);
  CHECK(single[0].size() == 2);

  // One item above (1 - 2*delta) * cap is isolated.
  std::vector<Item> with_heavy{item("h", 0, 0, {Rat(9, 10)}),
                               item("x", 0, 0, {Rat(1, 20)})};
  auto split = split_slack(with_heavy, {0}, Rat(1, 4), {Rat(1)});
  bool isolated = false;
  for (const auto& group : split)
    if (group.size() == 1 && with_heavy[group[0]].id == "h") isolated = true;
  CHECK(isolated);

  std::mt19937_64 rng(139);
  for (int t = 0; t < 120; ++t) {
    int d = 1 + rng() % 3;
    int n = 1 + rng() % 8;
    std::vector<Item> items;
    std::vector<Rat> sums(d, Rat(0));
    for (int i = 0; i < n; ++i) {
      Item it = item("i" + std::to_string(i), 0, 0);
      for (int j = 0; j < d; ++j) {
        it.v.push_back(Rat(static_cast<long>(rng() % 17), 64));
        sums[j] += it.v[j];
      }
      items.push_back(it);
    }
    std::vector<int> dims;
    for (int j = 0; j < d; ++j) dims.push_back(j);
    std::vector<Rat> caps;
    for (int j = 0; j < d; ++j) caps.push_back(std::max(sums[j], Rat(1, 4)));
    Rat delta = Rat(1 + static_cast<long>(rng() % 16), 64);
    auto groups = split_slack(items, dims, delta, caps);
    CHECK(groups.size() <= dims.size() + 1);
    size_t covered = 0;
    for (const auto& group : groups) {
      covered += group.size();
      if (group.size() == 1) continue;
      for (int j : dims) {
        Rat sum = 0;
        for (int i : group) sum += items[i].v[j];
        CHECK(sum <= (1 - delta) * caps[j]);
      }
    }
    CHECK(covered == items.size());
  }
}

TEST_CASE("dense box packing") {
  EpsilonSchedule s = make_schedule(1, kEps, Rat(1, 12));
  CHECK(pack_dense_box({}, s, BoxOrientation::kHorizontal).empty());

  std::vector<Item> zero{item("z", 0, 0, {Rat(1, 2)})};
  auto at_origin = pack_dense_box(zero, s, BoxOrientation::kHorizontal);
  REQUIRE(at_origin.size() == 1);
  CHECK(at_origin[0].x == 0);
  CHECK(at_origin[0].y == 0);

  // Saturated wide-dense set: heights at eps2, weights summing to 1.
  std::vector<Item> wide;
  for (int i = 0; i < 8; ++i)
    wide.push_back(item("w" + std::to_string(i), Rat(1, 2), s.eps2, {Rat(1, 8)}));
  auto packed = pack_dense_box(wide, s, BoxOrientation::kHorizontal);
  CHECK(packed.size() == wide.size());
  for (const Placement& p : packed) {
    CHECK(p.x >= 0);
    CHECK(p.y >= 0);
    CHECK(p.y + s.eps2 <= s.dense_box_height());
  }

  std::vector<Item> not_dense{item("n", Rat(1, 2), Rat(1, 2), {Rat(1, 8)})};
  CHECK_THROWS_AS(pack_dense_box(not_dense, s, BoxOrientation::kHorizontal),
                  PreconditionError);
}

TEST_CASE("linear grouping rejects mixed classes") {
  std::vector<Item> mixed{item("a", Rat(1, 2), Rat(1, 2), {Rat(1, 4)}),
                          item("b", Rat(1, 2), Rat(1, 2), {Rat(1, 2)})};
  CHECK_THROWS_AS(linear_group(mixed, GroupKind::kBigByHeight, Rat(1, 5)),
                  PreconditionError);
  std::vector<Item> ratios{item("a", Rat(1, 4), Rat(1, 2), {Rat(1, 8)}),
                           item("b", Rat(1, 2), Rat(1, 2), {Rat(1, 8)})};
  CHECK_THROWS_AS(linear_group(ratios, GroupKind::kTallSliceable, Rat(1, 4)),
                  PreconditionError);
}

TEST_CASE("linear grouping of big items") {
  std::vector<Item> one{item("a", Rat(1, 2), Rat(1, 2), {Rat(1, 4)})};
  auto solo = linear_group(one, GroupKind::kBigByHeight, Rat(1, 5));
  CHECK(solo.groups.size() == 1);
  CHECK(solo.unpacked_ids.empty());

  std::vector<Item> ten;
  for (int i = 0; i < 10; ++i)
    ten.push_back(item("b" + std::to_string(i), Rat(1, 2),
                       Rat(10 - i, 20), {Rat(1, 4)}));
  auto grouped = linear_group(ten, GroupKind::kBigByHeight, Rat(1, 5));
  REQUIRE(grouped.groups.size() == 4);  // sizes 3,3,3,1
  CHECK(grouped.groups[0].members.size() == 3);
  CHECK(grouped.groups[3].members.size() == 1);
  CHECK(grouped.unpacked_ids.size() == 2);
  std::set<Rat> heights;
  for (const auto& g : grouped.groups)
    for (const auto& m : g.members) {
      heights.insert(m.item.h);
      CHECK(m.item.h >= ten[ten.size() - 1].h);  // rounded up
      CHECK(m.item.h == g.rounded_height);
    }
  CHECK(heights.size() <= static_cast<size_t>(to_long(ceil_int(Rat(5)))));
}

TEST_CASE("linear grouping of sliceable items conserves width and weight") {
  std::mt19937_64 rng(149);
  for (int t = 0; t < 40; ++t) {
    int n = 1 + rng() % 6;
    std::vector<Item> cls;
    Rat total_w = 0, total_v = 0;
    for (int i = 0; i < n; ++i) {
      Item it = item("t" + std::to_string(i), rand_grid(rng, 64),
                     Rat(32 + static_cast<long>(rng() % 32), 64));
      it.v = {it.w / 2};  // one shared density
      total_w += it.w;
      total_v += it.v[0];
      cls.push_back(it);
    }
    Rat delta(1, 4);
    auto grouped = linear_group(cls, GroupKind::kTallSliceable, delta);
    CHECK(grouped.groups.size() <= 4);
    Rat seen_w = 0, seen_v = 0;
    for (const auto& g : grouped.groups) {
      Rat gw = 0;
      for (const auto& m : g.members) {
        gw += m.item.w;
        seen_v += m.item.v[0];
        CHECK(m.item.h == g.rounded_height);
      }
      CHECK(gw == delta * total_w);  // exact group widths
      seen_w += gw;
    }
    CHECK(seen_w == total_w);
    CHECK(seen_v == total_v);  // proportional weight split conserves totals
    CHECK_FALSE(grouped.unpacked_ids.empty());
  }
}

TEST_CASE("coarse partition is exact and unique") {
  std::mt19937_64 rng(151);
  for (int t = 0; t < 30; ++t) {
    Instance inst = toolkit_instance(rng, 1 + rng() % 12, 1 + rng() % 2);
    EpsilonSchedule s = schedule_for(inst);
    auto classes = coarse_partition(inst, s);
    size_t covered = 0;
    for (const auto& [key, members] : classes) covered += members.size();
    CHECK(covered == inst.items.size());
    CHECK(coarse_partition(inst, s).size() == classes.size());  // deterministic
  }
}

TEST_CASE("toolkit rounding: discard bound, homogeneity, expansion, ceilings") {
  std::mt19937_64 rng(157);
  for (int t = 0; t < 25; ++t) {
    int d = 1 + rng() % 2;
    Instance inst = toolkit_instance(rng, 2 + rng() % 12, d);
    ToolkitRounding tr = toolkit_round(inst, kEps);  // homogeneity asserted inside

    Rat discarded = 0;
    for (const std::string& id : tr.output.discarded_ids)
      discarded += span(inst.items[inst.item_index(id)]);
    CHECK(discarded <= kEps * inst.span_total());

    // Per-item span expansion <= 1/eps1 + 1/4.
    Rat cap = 1 / tr.schedule.eps1 + Rat(1, 4);
    for (const Item& r : tr.output.rounded.items) {
      const Item& original = inst.items[inst.item_index(r.id)];
      if (span(original) == 0) continue;
      CHECK(span(r) <= cap * span(original));
    }

    // Weight-class counts (ignoring the unsliceable length refinement)
    // against their closed-form ceilings.
    std::map<std::string, std::set<std::vector<Rat>>> by_category;
    for (const auto& [key, ids] : tr.classes) {
      std::string cat;
      if (key.dense)
        cat = key.heavy ? "heavy" : "light";
      else
        cat = shape_name(key.shape);
      by_category[cat].insert(key.signature);
    }
    const EpsilonSchedule& s = tr.schedule;
    CHECK(BigInt(static_cast<long>(by_category["big"].size())) <=
          big_class_ceiling(d, s.eps, s.eps1));
    CHECK(BigInt(static_cast<long>(by_category["wide"].size())) <=
          wide_class_ceiling(d, s.eps, s.eps1));
    CHECK(BigInt(static_cast<long>(by_category["tall"].size())) <=
          wide_class_ceiling(d, s.eps, s.eps1));
    CHECK(BigInt(static_cast<long>(by_category["small"].size())) <=
          small_class_ceiling(d, s.eps, s.eps1));
    CHECK(BigInt(static_cast<long>(by_category["heavy"].size())) <=
          heavy_class_ceiling(d, s.eps, s.eps1));
    CHECK(BigInt(static_cast<long>(by_category["light"].size())) <=
          light_class_ceiling(d, s.eps));
  }
}

TEST_CASE("unround restores originals exactly") {
  std::mt19937_64 rng(163);
  for (int t = 0; t < 30; ++t) {
    Instance inst = toolkit_instance(rng, 1 + rng() % 8, 1 + rng() % 2);
    MediumRemoval med = remove_medium(inst, kEps);
    if (!med.medium_ids.empty()) continue;
    EpsilonSchedule s = make_schedule(inst.d, kEps, med.eps1);
    WeightRounding wr = weight_round(inst, s);
    CHECK(instance_eq(wr.undo_log, inst));

    // One item per bin is eps-slacked; positions of non-dense items must
    // survive the round trip.
    BinPacking packing;
    packing.bin_count = static_cast<int>(wr.rounded.items.size());
    for (size_t i = 0; i < wr.rounded.items.size(); ++i)
      packing.placements.push_back(
          {wr.rounded.items[i].id, static_cast<int>(i), Rat(0), Rat(0)});
    BinPacking restored = unround_weights(inst, wr.rounded, packing, s, kEps);
    CHECK(validate_packing(inst, restored, true).ok());
    for (const Placement& p : restored.placements) {
      const Item& original = inst.items[inst.item_index(p.item_id)];
      ItemClass cls = classify_item(original, s.eps1, s.eps2);
      if (!cls.dense) {
        CHECK(p.x == 0);
        CHECK(p.y == 0);
      }
    }
  }
}

TEST_CASE("unround rejects unslacked bins") {
  EpsilonSchedule s = make_schedule(1, kEps, Rat(1, 12));
  Instance inst = instance(1, {item("a", Rat(1, 2), Rat(1, 2), {Rat(1, 2)}),
                               item("b", Rat(1, 2), Rat(1, 2), {Rat(1, 2)})});
  WeightRounding wr = weight_round(inst, s);
  BinPacking packing;
  packing.bin_count = 1;
  packing.placements = {{"a", 0, Rat(0), Rat(0)}, {"b", 0, Rat(1, 2), Rat(0)}};
  CHECK_THROWS_AS(unround_weights(inst, wr.rounded, packing, s, kEps),
                  SlacknessViolated);
}
