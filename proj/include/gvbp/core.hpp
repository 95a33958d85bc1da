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

#ifndef GVBP_CORE_HPP_
#define GVBP_CORE_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gvbp/rational.hpp"

namespace gvbp {

// A (2, d) item: a rectangle in the unit square plus d weight coordinates,
// all in [0, 1]. Zero volume forces width = height = 0.
struct Item {
  std::string id;
  Rat w;
  Rat h;
  std::vector<Rat> v;
  std::optional<Rat> profit;

  Rat area() const { return w * h; }
  Rat vmax() const {
    Rat m = 0;
    for (const Rat& x : v)
      if (x > m) m = x;
    return m;
  }
};

// span(i) = max(area, largest weight): the scale-free measure of how much of
// one bin the item consumes in its most loaded dimension.
Rat span(const Item& item);

class InvalidInstance : public std::runtime_error {
 public:
  explicit InvalidInstance(const std::string& what) : std::runtime_error(what) {}
};

struct Instance {
  int d = 0;
  std::vector<Item> items;

  // Throws InvalidInstance on any violated item invariant:
  // ranges, weight arity, duplicate ids, or nonzero side with zero area.
  void check() const;

  Rat span_total() const;
  Rat vol_total() const;
  std::vector<Rat> weight_totals() const;
  int item_index(const std::string& id) const;  // -1 if absent
};

struct SpanStats {
  Rat span_total;
  Rat vol_total;
  std::vector<Rat> per_dim_weight;
  long lower_bound_bins = 0;
};

SpanStats span_stats(const Instance& inst);

// ceil(ceil(Span(I)) / (d+1)); never exceeds the optimal bin count.
long span_lower_bound(const Instance& inst);

enum class Shape { kBig, kWide, kTall, kSmall };

struct ItemClass {
  Shape shape = Shape::kSmall;
  bool dense = false;
  bool heavy = false;
};

class MediumItemError : public std::runtime_error {
 public:
  explicit MediumItemError(const std::string& what) : std::runtime_error(what) {}
};

// Four-way shape split at (eps2, eps1], plus the dense/heavy weight flags.
// Requires width and height outside (eps2, eps1]; throws MediumItemError
// otherwise.
ItemClass classify_item(const Item& item, const Rat& eps1, const Rat& eps2);

const char* shape_name(Shape s);

}  // namespace gvbp

#endif  // GVBP_CORE_HPP_
