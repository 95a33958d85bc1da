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

#include "gvbp/rounding_toolkit.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <set>
#include <sstream>

#include "gvbp/geometry.hpp"
#include "gvbp/simple_algorithms.hpp"

namespace gvbp {

namespace {

Rat rat_pow(const Rat& base, int e) {
  Rat r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

BigInt int_pow(const BigInt& base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

void check_eps(const Rat& eps) {
  if (!(eps > 0 && eps <= Rat(1, 8)))
    throw std::invalid_argument("eps must lie in (0, 1/8]");
  Rat inv = 1 / eps;
  if (!is_integer(inv) || num(inv) % 2 != 0)
    throw std::invalid_argument("1/eps must be an even integer");
}

// Rounds v up to a positive multiple of grid.
Rat round_up_positive(const Rat& v, const Rat& grid) {
  BigInt k = ceil_int(v / grid);
  if (k < 1) k = 1;
  return grid * Rat(k);
}

bool weights_non_medium(const Item& it, const Rat& eps1, const Rat& eps2) {
  for (const Rat& x : it.v)
    if (x > eps2 && x <= eps1) return false;
  return true;
}

}  // namespace

BigInt light_class_ceiling(int d, const Rat& eps) {
  if (d <= 1) return 1;
  double val = to_double((8 + eps) / eps) * std::log(8.0 * d / to_double(eps));
  BigInt base = static_cast<long long>(std::ceil(val));
  return int_pow(base, d - 1);
}

BigInt heavy_class_ceiling(int d, const Rat& eps, const Rat& eps1) {
  Rat per_dim = (8 / eps) * (1 / eps1 - 1);
  return int_pow(num(per_dim) / den(per_dim), d);
}

BigInt big_class_ceiling(int d, const Rat& eps, const Rat& eps1) {
  Rat per_dim = 8 / (eps1 * eps1 * eps);
  return int_pow(num(per_dim) / den(per_dim), d);
}

BigInt wide_class_ceiling(int d, const Rat& eps, const Rat& eps1) {
  Rat per_dim = 8 / (eps1 * eps1 * eps1 * eps);
  return int_pow(num(per_dim) / den(per_dim), d);
}

BigInt small_class_ceiling(int d, const Rat& eps, const Rat& eps1) {
  return big_class_ceiling(d, eps, eps1);
}

Rat window_fn(const Rat& x, int d, const Rat& eps) {
  if (!(x > 0 && x <= 1)) throw std::invalid_argument("window_fn needs x in (0,1]");
  Rat x5 = rat_pow(x, 5);
  Rat t1 = Rat(light_class_ceiling(d, eps)) / eps;
  Rat t2 = (16 + rat_pow(Rat(d), 3)) / (eps * x5);
  Rat inner = rat_pow(8 / (x * x * eps), d) + 2 * d;
  Rat t3 = (128 + rat_pow(x, 3) * inner) / (eps * x5);
  Rat m = std::max(t1, std::max(t2, t3));
  return 1 / Rat(ceil_int(m));
}

MediumRemoval remove_medium(const Instance& inst, const Rat& eps) {
  inst.check();
  check_eps(eps);
  const int d = inst.d;
  Rat delta0 = std::min(Rat(1, 4 * d + 1), 2 * eps / 3);
  BigInt trials = ceil_int(Rat(d + 2) / eps);

  MediumRemoval best;
  Rat best_span = -1;
  Rat prev = delta0;
  for (BigInt t = 1; t <= trials; ++t) {
    // The chain shrinks super-exponentially, so it is evaluated lazily and
    // the scan stops at the first empty window (span 0 is a global argmin).
    Rat cur = window_fn(prev, d, eps);
    std::vector<std::string> ids;
    Rat window_span = 0;
    for (const Item& it : inst.items) {
      auto inside = [&](const Rat& x) { return x > cur && x <= prev; };
      bool medium = inside(it.w) || inside(it.h);
      for (const Rat& x : it.v) medium = medium || inside(x);
      if (medium) {
        ids.push_back(it.id);
        window_span += span(it);
      }
    }
    if (best_span < 0 || window_span < best_span) {
      best_span = window_span;
      best.medium_ids = std::move(ids);
      best.eps1 = prev;
      best.eps2 = cur;
    }
    if (best_span == 0) break;
    prev = cur;
  }
  return best;
}

EpsilonSchedule make_schedule(int d, const Rat& eps, const Rat& eps1) {
  check_eps(eps);
  EpsilonSchedule s;
  s.d = d;
  s.eps = eps;
  s.delta0 = std::min(Rat(1, 4 * d + 1), 2 * eps / 3);
  s.eps1 = eps1;
  s.eps2 = window_fn(eps1, d, eps);
  if (!(s.eps1 <= s.delta0)) throw std::invalid_argument("eps1 exceeds delta0");
  if (!is_integer(1 / s.eps1) || !is_integer(1 / s.eps2))
    throw std::logic_error("schedule reciprocals must be integers");
  if (!(s.eps2 < eps * eps1 * eps1 / 2))
    throw std::logic_error("window function too large");
  return s;
}

bool WeightClassKey::operator<(const WeightClassKey& o) const {
  auto lhs = std::tie(shape, dense, heavy, signature, fixed_lengths);
  auto rhs = std::tie(o.shape, o.dense, o.heavy, o.signature, o.fixed_lengths);
  return lhs < rhs;
}

std::string WeightClassKey::describe() const {
  std::ostringstream os;
  os << shape_name(shape) << (dense ? (heavy ? "/heavy" : "/light") : "") << " [";
  for (size_t i = 0; i < signature.size(); ++i)
    os << (i ? "," : "") << to_fraction_string(signature[i]);
  os << "]";
  if (!fixed_lengths.empty()) {
    os << " fixed(";
    for (size_t i = 0; i < fixed_lengths.size(); ++i)
      os << (i ? "," : "") << to_fraction_string(fixed_lengths[i]);
    os << ")";
  }
  return os.str();
}

WeightClassKey weight_class_key(const Item& item, const EpsilonSchedule& sched) {
  ItemClass cls = classify_item(item, sched.eps1, sched.eps2);
  WeightClassKey key;
  key.dense = cls.dense;
  key.heavy = cls.heavy;
  if (cls.dense) {
    // Dense classes split only into a wide part and a tall-or-small part.
    key.shape = cls.shape == Shape::kWide ? Shape::kWide : Shape::kSmall;
    if (cls.heavy) {
      key.signature = item.v;
    } else {
      Rat vm = item.vmax();
      for (const Rat& x : item.v) key.signature.push_back(vm == 0 ? Rat(0) : x / vm);
    }
    return key;
  }
  key.shape = cls.shape;
  switch (cls.shape) {
    case Shape::kBig:
      key.signature = item.v;
      key.fixed_lengths = {item.w, item.h};
      break;
    case Shape::kWide:
      for (const Rat& x : item.v) key.signature.push_back(x / item.h);
      key.fixed_lengths = {item.w};
      break;
    case Shape::kTall:
      for (const Rat& x : item.v) key.signature.push_back(x / item.w);
      key.fixed_lengths = {item.h};
      break;
    case Shape::kSmall:
      for (const Rat& x : item.v) key.signature.push_back(x / item.area());
      break;
  }
  return key;
}

std::map<WeightClassKey, std::vector<int>> coarse_partition(
    const Instance& inst, const EpsilonSchedule& sched) {
  std::map<WeightClassKey, std::vector<int>> classes;
  for (size_t i = 0; i < inst.items.size(); ++i)
    classes[weight_class_key(inst.items[i], sched)].push_back(static_cast<int>(i));
  return classes;
}

WeightRounding weight_round(const Instance& inst, const EpsilonSchedule& sched) {
  const Rat& eps = sched.eps;
  const Rat& eps1 = sched.eps1;
  const Rat& eps2 = sched.eps2;
  WeightRounding out;
  out.rounded.d = inst.d;
  out.undo_log.d = inst.d;
  for (const Item& original : inst.items) {
    if (!weights_non_medium(original, eps1, eps2))
      throw MediumItemError("item '" + original.id + "' has a medium weight");
    ItemClass cls = classify_item(original, eps1, eps2);  // throws on medium sides
    Item it = original;
    if (!cls.dense) {
      Rat grid;
      switch (cls.shape) {
        case Shape::kBig: grid = eps1 * eps1 * eps / 8; break;
        case Shape::kWide: grid = it.h * eps1 * eps / 8; break;
        case Shape::kTall: grid = it.w * eps1 * eps / 8; break;
        case Shape::kSmall: grid = it.area() * eps / 8; break;
      }
      for (Rat& x : it.v) {
        x = round_up_positive(x, grid);
        if (x > 1) throw std::logic_error("weight rounding escaped [0,1]");
      }
    } else {
      // Round-to-zero: geometry vanishes and negligible weights drop.
      it.w = 0;
      it.h = 0;
      if (inst.d > 0) {
        Rat threshold = it.vmax() * eps / (8 * inst.d);
        for (Rat& x : it.v)
          if (x <= threshold) x = 0;
      }
      // Heavy dimensions onto the coarse grid.
      for (Rat& x : it.v)
        if (x > eps1) x = round_up_positive(x, eps1 * eps / 8);
      // Light items: weight ratios up to a power of 1/(1+eps/8).
      Rat vm = it.vmax();
      if (vm > 0 && vm <= eps2) {
        for (Rat& x : it.v) {
          if (x == 0) continue;
          Rat ratio = x / vm;
          Rat power = 1;
          while (power / (1 + eps / 8) >= ratio) power /= (1 + eps / 8);
          x = vm * power;
        }
      }
    }
    out.rounded.items.push_back(std::move(it));
    out.undo_log.items.push_back(original);
  }
  return out;
}

bool check_slack(const std::vector<Item>& bin, const Rat& mu,
                 const EpsilonSchedule& sched) {
  if (bin.size() <= 1) return true;
  bool under_cap = true;
  for (int j = 0; j < sched.d && under_cap; ++j) {
    Rat sum = 0;
    for (const Item& it : bin) sum += it.v[j];
    under_cap = sum <= 1 - mu;
  }
  if (under_cap) return true;
  if (bin.size() == 2) {
    bool dense_pair = true;
    for (const Item& it : bin) {
      ItemClass cls = classify_item(it, sched.eps1, sched.eps2);
      dense_pair = dense_pair && cls.dense && it.vmax() <= Rat(1, 2);
    }
    if (dense_pair) return true;
  }
  return false;
}

std::vector<std::vector<int>> split_slack(const std::vector<Item>& items,
                                          const std::vector<int>& dims,
                                          const Rat& delta,
                                          const std::vector<Rat>& caps) {
  if (delta > Rat(1, 4)) throw std::invalid_argument("delta must be <= 1/4");
  for (int j : dims) {
    Rat sum = 0;
    for (const Item& it : items) sum += it.v[j];
    if (sum > caps[j]) throw std::invalid_argument("cap below the actual sum");
  }

  std::vector<std::vector<int>> out;
  std::vector<int> rest, isolated;
  for (size_t i = 0; i < items.size(); ++i) {
    bool heavy_item = false;
    for (int j : dims)
      if (items[i].v[j] > (1 - 2 * delta) * caps[j]) heavy_item = true;
    if (heavy_item) {
      out.push_back({static_cast<int>(i)});  // isolated singleton
      isolated.push_back(static_cast<int>(i));
    } else {
      rest.push_back(static_cast<int>(i));
    }
  }

  // Dimensions dominated by the isolated items are already light in `rest`
  // (below 2*delta of the cap) and need no prefix; one isolated item covers
  // at least one such dimension, which keeps the total at |dims|+1.
  std::vector<size_t> prefix_sizes;
  for (int j : dims) {
    Rat isolated_weight = 0;
    for (int i : isolated) isolated_weight += items[i].v[j];
    if (isolated_weight > (1 - 2 * delta) * caps[j]) continue;
    Rat sum = 0;
    size_t k = 0;
    bool reached = false;
    for (; k < rest.size(); ++k) {
      sum += items[rest[k]].v[j];
      if (sum >= delta * caps[j]) {
        reached = true;
        ++k;
        break;
      }
    }
    if (reached) prefix_sizes.push_back(k);
  }
  std::sort(prefix_sizes.begin(), prefix_sizes.end());
  prefix_sizes.erase(std::unique(prefix_sizes.begin(), prefix_sizes.end()),
                     prefix_sizes.end());

  size_t start = 0;
  for (size_t cut : prefix_sizes) {
    if (cut > start) {
      out.emplace_back(rest.begin() + start, rest.begin() + cut);
      start = cut;
    }
  }
  if (start < rest.size()) out.emplace_back(rest.begin() + start, rest.end());
  return out;
}

std::vector<Placement> pack_dense_box(const std::vector<Item>& items,
                                      const EpsilonSchedule& sched,
                                      BoxOrientation orientation) {
  std::vector<Rat> load(sched.d, Rat(0));
  std::vector<Rect> rects;
  std::vector<std::string> degenerate;
  for (const Item& it : items) {
    ItemClass cls = classify_item(it, sched.eps1, sched.eps2);
    if (!cls.dense) throw PreconditionError("item '" + it.id + "' is not dense");
    bool shape_ok = orientation == BoxOrientation::kHorizontal
                        ? (cls.shape == Shape::kWide || cls.shape == Shape::kSmall)
                        : (cls.shape == Shape::kTall || cls.shape == Shape::kSmall);
    if (!shape_ok)
      throw PreconditionError("item '" + it.id + "' has the wrong shape for the box");
    for (int j = 0; j < sched.d; ++j) {
      load[j] += it.v[j];
      if (load[j] > 1)
        throw PreconditionError("dense box weight exceeds 1 in dimension " +
                                std::to_string(j));
    }
    if (it.area() == 0)
      degenerate.push_back(it.id);
    else if (orientation == BoxOrientation::kHorizontal)
      rects.push_back({it.id, it.w, it.h});
    else
      rects.push_back({it.id, it.h, it.w});  // transpose for the vertical run
  }

  StripPacking strip = nfdh_strip(rects, Rat(1));
  if (strip.used_height > sched.dense_box_height())
    throw std::logic_error("dense box overflow");
  std::vector<Placement> out;
  for (const PlacedRect& p : strip.placements) {
    if (orientation == BoxOrientation::kHorizontal)
      out.push_back({p.id, 0, p.x, p.y});
    else
      out.push_back({p.id, 0, p.y, p.x});
  }
  for (const std::string& id : degenerate) out.push_back({id, 0, Rat(0), Rat(0)});
  return out;
}

LinearGroupingResult linear_group(const std::vector<Item>& cls, GroupKind kind,
                                  const Rat& delta_lg) {
  if (!(delta_lg > 0 && delta_lg <= 1))
    throw std::invalid_argument("delta_lg must lie in (0,1]");
  LinearGroupingResult result;
  if (cls.empty()) return result;

  // One weight class only: big items share the exact weight vector and
  // width, sliceable items share the weight-to-width ratios.
  for (const Item& it : cls) {
    bool same = true;
    if (kind == GroupKind::kBigByHeight) {
      same = it.w == cls.front().w && it.v == cls.front().v;
    } else {
      if (it.w == 0) throw PreconditionError("sliceable item with zero width");
      for (size_t j = 0; j < it.v.size(); ++j)
        same = same && it.v[j] * cls.front().w == cls.front().v[j] * it.w;
    }
    if (!same)
      throw PreconditionError("linear grouping needs a single weight class");
  }

  std::vector<Item> sorted = cls;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Item& a, const Item& b) { return a.h > b.h; });

  if (kind == GroupKind::kBigByHeight) {
    const long n = static_cast<long>(sorted.size());
    long k = to_long(floor_int(delta_lg * n)) + 1;
    for (long start = 0; start < n; start += k) {
      LinearGroup group;
      group.rounded_height = sorted[start].h;
      for (long i = start; i < std::min(start + k, n); ++i) {
        GroupedItem g;
        g.item = sorted[i];
        g.item.h = group.rounded_height;
        g.parent_id = sorted[i].id;
        group.members.push_back(std::move(g));
      }
      result.groups.push_back(std::move(group));
    }
    for (size_t i = 1; i < result.groups.front().members.size(); ++i)
      result.unpacked_ids.push_back(result.groups.front().members[i].parent_id);
    return result;
  }

  // Sliceable kind: lay the items side by side by width (tallest first) and
  // cut at exact multiples of delta_lg * total_width.
  Rat total_w = 0;
  for (const Item& it : sorted) total_w += it.w;
  if (total_w == 0) throw std::invalid_argument("sliceable class with zero width");
  Rat group_w = delta_lg * total_w;
  long group_count = to_long(ceil_int(1 / delta_lg));

  size_t item_idx = 0;
  Rat item_used = 0;  // width of the current item already consumed
  int slice_counter = 0;
  for (long g = 0; g < group_count && item_idx < sorted.size(); ++g) {
    LinearGroup group;
    Rat remaining = group_w;
    bool first = true;
    while (remaining > 0 && item_idx < sorted.size()) {
      const Item& src = sorted[item_idx];
      Rat avail = src.w - item_used;
      Rat take = std::min(avail, remaining);
      GroupedItem piece;
      piece.parent_id = src.id;
      piece.item = src;
      if (take < src.w) {
        piece.item.id = src.id + "#s" + std::to_string(slice_counter++);
        piece.is_slice = true;
        piece.item.w = take;
        Rat fraction = take / src.w;
        for (Rat& x : piece.item.v) x *= fraction;  // proportional split
      }
      if (first) {
        group.rounded_height = piece.item.h;
        first = false;
      }
      piece.item.h = group.rounded_height;
      group.members.push_back(std::move(piece));
      item_used += take;
      remaining -= take;
      if (item_used == src.w) {
        ++item_idx;
        item_used = 0;
      }
    }
    result.groups.push_back(std::move(group));
  }
  for (const GroupedItem& g : result.groups.front().members)
    result.unpacked_ids.push_back(g.item.id);
  return result;
}

BinPacking unround_weights(const Instance& originals, const Instance& rounded,
                           const BinPacking& rounded_packing,
                           const EpsilonSchedule& sched, const Rat& mu) {
  if (mu < sched.eps / 8)
    throw std::invalid_argument("slack budget below eps/8");
  std::map<int, std::vector<const Placement*>> bins;
  for (const Placement& p : rounded_packing.placements)
    bins[p.bin_index].push_back(&p);

  BinPacking out;
  out.bin_count = rounded_packing.bin_count;
  Rat box = sched.dense_box_height();
  for (auto& [bin, members] : bins) {
    std::vector<Item> rounded_items;
    for (const Placement* p : members) {
      int idx = rounded.item_index(p->item_id);
      if (idx < 0) throw std::invalid_argument("placement of unknown rounded item");
      rounded_items.push_back(rounded.items[idx]);
    }
    if (!check_slack(rounded_items, mu, sched))
      throw SlacknessViolated("bin " + std::to_string(bin) + " is not slacked");

    // Dense originals with geometry go back into the reserved strip; their
    // orientation comes from the original shape.
    std::vector<Item> strip_items;
    bool any_wide = false, any_tallish = false;
    for (const Placement* p : members) {
      const Item& orig = originals.items[originals.item_index(p->item_id)];
      ItemClass cls = classify_item(orig, sched.eps1, sched.eps2);
      if (cls.dense && orig.area() > 0) {
        strip_items.push_back(orig);
        if (cls.shape == Shape::kWide)
          any_wide = true;
        else
          any_tallish = true;
      }
    }
    if (any_wide && any_tallish)
      throw PreconditionError("bin mixes wide and tall dense items");

    if (!strip_items.empty()) {
      BoxOrientation orient =
          any_wide ? BoxOrientation::kHorizontal : BoxOrientation::kVertical;
      // Non-dense members must stay clear of the strip footprint.
      for (const Placement* p : members) {
        const Item& orig = originals.items[originals.item_index(p->item_id)];
        ItemClass cls = classify_item(orig, sched.eps1, sched.eps2);
        if (cls.dense || orig.area() == 0) continue;
        bool intrudes = orient == BoxOrientation::kHorizontal
                            ? p->y + orig.h > 1 - box
                            : p->x + orig.w > 1 - box;
        if (intrudes)
          throw PreconditionError("non-dense item '" + p->item_id +
                                  "' intersects the reserved strip");
      }
      std::vector<Placement> packed = pack_dense_box(strip_items, sched, orient);
      for (Placement q : packed) {
        if (orient == BoxOrientation::kHorizontal)
          q.y += 1 - box;
        else
          q.x += 1 - box;
        q.bin_index = bin;
        out.placements.push_back(q);
      }
    }
    std::set<std::string> strip_ids;
    for (const Item& it : strip_items) strip_ids.insert(it.id);
    for (const Placement* p : members) {
      if (strip_ids.count(p->item_id)) continue;
      out.placements.push_back(*p);  // position unchanged, weights restored
    }

    // The restore costs at most eps/8 of slack.
    std::vector<Item> restored;
    for (const Placement* p : members)
      restored.push_back(originals.items[originals.item_index(p->item_id)]);
    if (!check_slack(restored, mu - sched.eps / 8, sched))
      throw std::logic_error("slack degraded beyond the budget");
  }
  return out;
}

ToolkitRounding toolkit_round(const Instance& inst, const Rat& eps) {
  inst.check();
  MediumRemoval med = remove_medium(inst, eps);
  ToolkitRounding result;
  result.schedule = make_schedule(inst.d, eps, med.eps1);
  result.output.discarded_ids = med.medium_ids;

  std::set<std::string> medium(med.medium_ids.begin(), med.medium_ids.end());
  Instance kept;
  kept.d = inst.d;
  for (const Item& it : inst.items)
    if (!medium.count(it.id)) kept.items.push_back(it);

  WeightRounding rounding = weight_round(kept, result.schedule);
  result.output.rounded = rounding.rounded;
  result.undo_log = rounding.undo_log;

  // Classes use rounded weights with the original geometry, so the dense
  // wide / tall-or-small split survives the round-to-zero step.
  Instance shape_ref = rounding.rounded;
  for (size_t i = 0; i < shape_ref.items.size(); ++i) {
    shape_ref.items[i].w = rounding.undo_log.items[i].w;
    shape_ref.items[i].h = rounding.undo_log.items[i].h;
  }
  auto classes = coarse_partition(shape_ref, result.schedule);
  for (auto& [key, indices] : classes) {
    std::vector<std::string> ids;
    for (int i : indices) ids.push_back(shape_ref.items[i].id);
    result.classes.emplace(key, std::move(ids));
  }

  // Homogeneity: one density vector per class, exactly.
  for (auto& [key, ids] : result.classes) {
    std::vector<Rat> reference;
    bool have_ref = false;
    for (const std::string& id : ids) {
      const Item& it = result.output.rounded.items[result.output.rounded.item_index(id)];
      Rat s = span(it);
      std::vector<Rat> density;
      density.push_back(s == 0 ? Rat(0) : it.area() / s);
      for (const Rat& x : it.v) density.push_back(s == 0 ? Rat(0) : x / s);
      if (!have_ref) {
        reference = density;
        have_ref = true;
      } else if (density != reference) {
        throw std::logic_error("class " + key.describe() + " is not homogeneous");
      }
    }
  }
  return result;
}

RnaSubroutines toolkit_subroutines(const Instance& inst, const Rat& eps) {
  auto ctx = std::make_shared<ToolkitRounding>(toolkit_round(inst, eps));
  auto shapes = std::make_shared<std::map<std::string, ItemClass>>();
  for (const Item& it : inst.items) {
    bool is_medium = std::find(ctx->output.discarded_ids.begin(),
                               ctx->output.discarded_ids.end(),
                               it.id) != ctx->output.discarded_ids.end();
    if (!is_medium)
      shapes->emplace(it.id, classify_item(it, ctx->schedule.eps1, ctx->schedule.eps2));
  }

  RnaSubroutines subs;
  subs.discard_slack = 0;
  subs.round = [ctx](const Instance&, const Rat&) {
    return std::vector<RoundOutput>{ctx->output};
  };

  EpsilonSchedule sched = ctx->schedule;
  subs.complex_pack = [sched, shapes](const Instance& rounded_subset) {
    BinPacking out;
    const Rat cap = 1 - sched.eps;  // eps-slack by construction
    std::vector<int> nondense, dense_wide, dense_other;
    for (size_t i = 0; i < rounded_subset.items.size(); ++i) {
      const ItemClass& cls = shapes->at(rounded_subset.items[i].id);
      if (!cls.dense)
        nondense.push_back(static_cast<int>(i));
      else if (cls.shape == Shape::kWide)
        dense_wide.push_back(static_cast<int>(i));
      else
        dense_other.push_back(static_cast<int>(i));
    }

    // Non-dense: span groups under the reduced capacity, three bins each;
    // oversized spans become singleton bins (slacked as singletons).
    {
      std::vector<int> regular;
      for (int i : nondense) {
        const Item& it = rounded_subset.items[i];
        if (span(it) > cap) {
          int bin = out.bin_count++;
          out.placements.push_back({it.id, bin, Rat(0), Rat(0)});
        } else {
          regular.push_back(i);
        }
      }
      std::vector<Rat> sizes;
      for (int i : regular) sizes.push_back(span(rounded_subset.items[i]) / cap);
      for (const std::vector<int>& group : next_fit(sizes)) {
        std::vector<Rect> rects;
        std::vector<std::string> degenerate;
        for (int g : group) {
          const Item& it = rounded_subset.items[regular[g]];
          if (it.area() == 0)
            degenerate.push_back(it.id);
          else
            rects.push_back({it.id, it.w, it.h});
        }
        ThreeBinPacking split = steinberg_three_bins(rects);
        if (split.bins.empty() && !degenerate.empty()) split.bins.emplace_back();
        int first = out.bin_count;
        for (const auto& placed : split.bins) {
          for (const PlacedRect& p : placed)
            out.placements.push_back({p.id, out.bin_count, p.x, p.y});
          ++out.bin_count;
        }
        for (const std::string& id : degenerate)
          out.placements.push_back({id, first, Rat(0), Rat(0)});
      }
    }

    // Dense items (degenerate after rounding): sequential weight-capped
    // bins, wide-origin and tall/small-origin kept apart.
    for (const std::vector<int>* pool : {&dense_wide, &dense_other}) {
      std::vector<Rat> load;
      int bin = -1;
      for (int i : *pool) {
        const Item& it = rounded_subset.items[i];
        bool fits = bin >= 0;
        for (int j = 0; j < rounded_subset.d && fits; ++j)
          fits = load[j] + it.v[j] <= cap;
        if (!fits) {
          bin = out.bin_count++;
          load.assign(rounded_subset.d, Rat(0));
          bool alone = false;
          for (int j = 0; j < rounded_subset.d; ++j) alone = alone || it.v[j] > cap;
          if (alone) {  // singleton bin; slack holds via the singleton rule
            out.placements.push_back({it.id, bin, Rat(0), Rat(0)});
            bin = -1;
            continue;
          }
        }
        for (int j = 0; j < rounded_subset.d; ++j) load[j] += it.v[j];
        out.placements.push_back({it.id, bin, Rat(0), Rat(0)});
      }
    }
    return out;
  };

  subs.unround = [sched](const Instance& originals, const Instance& rounded,
                         const BinPacking& rounded_packing) {
    return unround_weights(originals, rounded, rounded_packing, sched, sched.eps);
  };
  return subs;
}

}  // namespace gvbp
