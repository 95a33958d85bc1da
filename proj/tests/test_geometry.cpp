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

#include "gvbp/geometry.hpp"
#include "test_util.hpp"

using namespace gvbp;

namespace {

bool placements_disjoint_and_inside(const std::vector<PlacedRect>& ps, const Rat& W,
                                    const Rat& H) {
  for (const PlacedRect& p : ps)
    if (p.x < 0 || p.y < 0 || p.x + p.w > W || p.y + p.h > H) return false;
  for (size_t a = 0; a < ps.size(); ++a)
    for (size_t b = a + 1; b < ps.size(); ++b)
      if (ps[a].x + ps[a].w > ps[b].x && ps[b].x + ps[b].w > ps[a].x &&
          ps[a].y + ps[a].h > ps[b].y && ps[b].y + ps[b].h > ps[a].y)
        return false;
  return true;
}

Rat total_area(const std::vector<Rect>& rects) {
  Rat a = 0;
  for (const Rect& r : rects) a += r.area();
  return a;
}

}  // namespace

TEST_CASE("next fit on the listed examples") {
  CHECK(next_fit({}).empty());

  auto singles = next_fit({Rat(6, 10), Rat(6, 10), Rat(6, 10)});
  REQUIRE(singles.size() == 3);
  for (size_t g = 0; g < 3; ++g) {
    CHECK(singles[g].size() == 1);
    CHECK(singles[g][0] == static_cast<int>(g));
  }

  auto mixed = next_fit({Rat(5, 10), Rat(4, 10), Rat(2, 10), Rat(9, 10)});
  REQUIRE(mixed.size() == 3);
  CHECK(mixed[0] == std::vector<int>{0, 1});
  CHECK(mixed[1] == std::vector<int>{2});
  CHECK(mixed[2] == std::vector<int>{3});

  CHECK_THROWS_AS(next_fit({Rat(3, 2)}), PreconditionError);
}

TEST_CASE("next fit group-count bound and closing rule") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 400; ++t) {
    int n = 1 + rng() % 30;
    std::vector<Rat> sizes;
    Rat sum = 0;
    for (int i = 0; i < n; ++i) {
      sizes.push_back(Rat(static_cast<long>(rng() % 101), 100));
      sum += sizes.back();
    }
    auto groups = next_fit(sizes);
    // Bound with the one-group floor for nonempty input.
    BigInt cap = ceil_int(2 * sum);
    if (cap < 1) cap = 1;
    CHECK(BigInt(static_cast<long>(groups.size())) <= cap);
    // Each group within capacity, consecutive order, closed only on overflow.
    int next_index = 0;
    for (size_t g = 0; g < groups.size(); ++g) {
      Rat load = 0;
      for (int i : groups[g]) {
        CHECK(i == next_index++);
        load += sizes[i];
      }
      CHECK(load <= 1);
      if (g + 1 < groups.size()) CHECK(load + sizes[groups[g + 1][0]] > 1);
    }
  }
}

TEST_CASE("nfdh strip on the listed examples") {
  auto one = nfdh_strip({{"a", Rat(1, 2), Rat(1, 2)}}, Rat(1));
  CHECK(one.used_height == Rat(1, 2));

  std::vector<Rect> four(4, Rect{"x", Rat(1, 2), Rat(1, 2)});
  for (int i = 0; i < 4; ++i) four[i].id = "x" + std::to_string(i);
  auto two_shelves = nfdh_strip(four, Rat(1));
  CHECK(two_shelves.used_height == Rat(1));

  CHECK(nfdh_strip({}, Rat(1)).used_height == 0);
  CHECK_THROWS_AS(nfdh_strip({{"w", Rat(2), Rat(1, 2)}}, Rat(1)), PreconditionError);
}

TEST_CASE("nfdh strip height bound and disjointness") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 300; ++t) {
    int n = 1 + rng() % 15;
    std::vector<Rect> rects;
    Rat hmax = 0;
    for (int i = 0; i < n; ++i) {
      Rect r{"r" + std::to_string(i), test::rand_grid(rng, 64),
             test::rand_grid(rng, 64)};
      hmax = std::max(hmax, r.h);
      rects.push_back(r);
    }
    auto strip = nfdh_strip(rects, Rat(1));
    CHECK(strip.used_height <= 2 * total_area(rects) + hmax);
    CHECK(placements_disjoint_and_inside(strip.placements, Rat(1),
                                         strip.used_height));
  }
}

TEST_CASE("nfdh bin on the listed examples") {
  std::vector<Rect> small;
  for (int i = 0; i < 25; ++i)
    small.push_back({"s" + std::to_string(i), Rat(1, 10), Rat(1, 10)});
  CHECK(nfdh_bin(small, Rat(1), Rat(1), Rat(1, 10), Rat(1, 10)).has_value());

  CHECK(nfdh_bin({}, Rat(1), Rat(1), Rat(1, 2), Rat(1, 2)).has_value());

  std::vector<Rect> exact81;
  for (int i = 0; i < 81; ++i)
    exact81.push_back({"e" + std::to_string(i), Rat(1, 10), Rat(1, 10)});
  auto packed = nfdh_bin(exact81, Rat(1), Rat(1), Rat(1, 10), Rat(1, 10));
  REQUIRE(packed.has_value());
  CHECK(placements_disjoint_and_inside(packed->placements, Rat(1), Rat(1)));
}

TEST_CASE("nfdh bin reports overflow as infeasible") {
  // Three half-width items of height 0.6 need shelf height 1.8.
  std::vector<Rect> tall;
  for (int i = 0; i < 3; ++i)
    tall.push_back({"t" + std::to_string(i), Rat(3, 5), Rat(3, 5)});
  CHECK_FALSE(nfdh_bin(tall, Rat(1), Rat(1), Rat(3, 5), Rat(3, 5)).has_value());
}

TEST_CASE("nfdh bin success under the area condition") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 300; ++t) {
    Rat dw = Rat(1 + static_cast<long>(rng() % 40), 100);
    Rat dh = Rat(1 + static_cast<long>(rng() % 40), 100);
    std::vector<Rect> rects;
    Rat area = 0;
    Rat budget = (1 - dw) * (1 - dh);
    for (int i = 0; i < 200; ++i) {
      Rect r{"r" + std::to_string(i),
             Rat(1 + static_cast<long>(rng() % 100), 100) * dw,
             Rat(1 + static_cast<long>(rng() % 100), 100) * dh};
      if (area + r.area() > budget) break;
      area += r.area();
      rects.push_back(r);
    }
    auto packed = nfdh_bin(rects, Rat(1), Rat(1), dw, dh);
    REQUIRE(packed.has_value());
    CHECK(placements_disjoint_and_inside(packed->placements, Rat(1), Rat(1)));
  }
}

TEST_CASE("three bin split on the listed examples") {
  auto unit = steinberg_three_bins({{"u", Rat(1), Rat(1)}});
  CHECK(unit.bins.size() == 1);

  std::vector<Rect> fig1 = {{"a", Rat(8, 10), Rat(2, 10)},
                            {"b", Rat(4, 10), Rat(4, 10)},
                            {"c", Rat(4, 10), Rat(4, 10)}};
  auto three = steinberg_three_bins(fig1);
  CHECK(three.bins.size() <= 3);
  for (const auto& bin : three.bins)
    CHECK(placements_disjoint_and_inside(bin, Rat(1), Rat(1)));

  std::vector<Rect> hundred;
  for (int i = 0; i < 100; ++i)
    hundred.push_back({"h" + std::to_string(i), Rat(1, 10), Rat(1, 10)});
  auto full = steinberg_three_bins(hundred);
  CHECK(full.bins.size() <= 3);
  size_t placed = 0;
  for (const auto& bin : full.bins) {
    placed += bin.size();
    CHECK(placements_disjoint_and_inside(bin, Rat(1), Rat(1)));
  }
  CHECK(placed == 100);

  CHECK_THROWS_AS(steinberg_three_bins({{"a", Rat(1), Rat(1)}, {"b", Rat(1), Rat(1)}}),
                  PreconditionError);
}

TEST_CASE("empty space decomposition on the listed examples") {
  auto whole = decompose_empty_space({}, CutDirection::kHorizontal);
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].w == 1);
  CHECK(whole[0].h == 1);

  auto two = decompose_empty_space({{"a", Rat(0), Rat(0), Rat(1, 2), Rat(1, 2)}},
                                   CutDirection::kHorizontal);
  REQUIRE(two.size() == 2);
  Rat area = 0;
  for (const PlacedRect& r : two) area += r.w * r.h;
  CHECK(area == Rat(3, 4));

  auto none = decompose_empty_space({{"a", Rat(0), Rat(0), Rat(1), Rat(1, 2)},
                                     {"b", Rat(0), Rat(1, 2), Rat(1), Rat(1, 2)}},
                                    CutDirection::kHorizontal);
  CHECK(none.empty());

  CHECK_THROWS_AS(
      decompose_empty_space({{"a", Rat(0), Rat(0), Rat(1, 2), Rat(1, 2)},
                             {"b", Rat(1, 4), Rat(1, 4), Rat(1, 2), Rat(1, 2)}},
                            CutDirection::kHorizontal),
      PreconditionError);
}

TEST_CASE("empty space decomposition conserves area within the 3n+1 bound") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 120; ++t) {
    // Build a random non-overlapping arrangement by shelf-packing.
    int n = 1 + rng() % 10;
    std::vector<Rect> rects;
    for (int i = 0; i < n; ++i)
      rects.push_back({"r" + std::to_string(i),
                       Rat(1 + static_cast<long>(rng() % 30), 100),
                       Rat(1 + static_cast<long>(rng() % 30), 100)});
    auto strip = nfdh_strip(rects, Rat(1));
    if (strip.used_height > 1) continue;
    for (CutDirection dir : {CutDirection::kHorizontal, CutDirection::kVertical}) {
      auto empties = decompose_empty_space(strip.placements, dir);
      CHECK(empties.size() <= 3 * strip.placements.size() + 1);
      Rat used = 0;
      for (const PlacedRect& p : strip.placements) used += p.w * p.h;
      Rat free = 0;
      for (const PlacedRect& p : empties) free += p.w * p.h;
      CHECK(used + free == Rat(1));  // exact conservation
      // Disjoint from the input and from each other.
      std::vector<PlacedRect> all = strip.placements;
      all.insert(all.end(), empties.begin(), empties.end());
      CHECK(placements_disjoint_and_inside(all, Rat(1), Rat(1)));
    }
  }
}
