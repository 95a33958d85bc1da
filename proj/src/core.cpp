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

#include "gvbp/core.hpp"

#include <set>

namespace gvbp {

Rat span(const Item& item) {
  Rat s = item.area();
  for (const Rat& x : item.v)
    if (x > s) s = x;
  return s;
}

void Instance::check() const {
  if (d < 0) throw InvalidInstance("d must be nonnegative");
  std::set<std::string> seen;
  for (const Item& it : items) {
    if (!seen.insert(it.id).second)
      throw InvalidInstance("duplicate item id '" + it.id + "'");
    if (it.w < 0 || it.w > 1 || it.h < 0 || it.h > 1)
      throw InvalidInstance("item '" + it.id + "': sides must lie in [0,1]");
    if (static_cast<int>(it.v.size()) != d)
      throw InvalidInstance("item '" + it.id + "': expected " +
                            std::to_string(d) + " weights");
    for (const Rat& x : it.v)
      if (x < 0 || x > 1)
        throw InvalidInstance("item '" + it.id + "': weights must lie in [0,1]");
    if (it.area() == 0 && (it.w != 0 || it.h != 0))
      throw InvalidInstance("item '" + it.id +
                            "': zero area requires both sides zero");
    if (it.profit && *it.profit < 0)
      throw InvalidInstance("item '" + it.id + "': negative profit");
  }
}

Rat Instance::span_total() const {
  Rat s = 0;
  for (const Item& it : items) s += span(it);
  return s;
}

Rat Instance::vol_total() const {
  Rat s = 0;
  for (const Item& it : items) s += it.area();
  return s;
}

std::vector<Rat> Instance::weight_totals() const {
  std::vector<Rat> t(d, Rat(0));
  for (const Item& it : items)
    for (int j = 0; j < d; ++j) t[j] += it.v[j];
  return t;
}

int Instance::item_index(const std::string& id) const {
  for (size_t i = 0; i < items.size(); ++i)
    if (items[i].id == id) return static_cast<int>(i);
  return -1;
}

SpanStats span_stats(const Instance& inst) {
  SpanStats s;
  s.span_total = inst.span_total();
  s.vol_total = inst.vol_total();
  s.per_dim_weight = inst.weight_totals();
  s.lower_bound_bins = span_lower_bound(inst);
  return s;
}

long span_lower_bound(const Instance& inst) {
  BigInt c = ceil_int(inst.span_total());
  BigInt lb = (c + inst.d) / (inst.d + 1);  // ceil(c / (d+1)), c >= 0
  return to_long(lb);
}

ItemClass classify_item(const Item& item, const Rat& eps1, const Rat& eps2) {
  if (!(0 < eps2 && eps2 < eps1 && eps1 <= 1))
    throw std::invalid_argument("need 0 < eps2 < eps1 <= 1");
  auto medium = [&](const Rat& x) { return x > eps2 && x <= eps1; };
  if (medium(item.w) || medium(item.h))
    throw MediumItemError("item '" + item.id + "' has a side in (eps2, eps1]");

  ItemClass c;
  bool wide_side = item.w > eps1;
  bool tall_side = item.h > eps1;
  if (wide_side && tall_side)
    c.shape = Shape::kBig;
  else if (wide_side)
    c.shape = Shape::kWide;
  else if (tall_side)
    c.shape = Shape::kTall;
  else
    c.shape = Shape::kSmall;

  Rat a = item.area();
  Rat vm = item.vmax();
  c.dense = (a == 0) || (vm * eps1 * eps1 > a);
  if (c.dense) {
    for (const Rat& x : item.v)
      if (x >= eps1) {
        c.heavy = true;
        break;
      }
  }
  return c;
}

const char* shape_name(Shape s) {
  switch (s) {
    case Shape::kBig: return "big";
    case Shape::kWide: return "wide";
    case Shape::kTall: return "tall";
    case Shape::kSmall: return "small";
  }
  return "?";
}

}  // namespace gvbp
