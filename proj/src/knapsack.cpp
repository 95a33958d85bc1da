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

#include "gvbp/knapsack.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace gvbp {

namespace {

void check_problem(const VectorKnapsackProblem& p) {
  if (p.vectors.size() != p.profits.size())
    throw std::invalid_argument("vectors/profits size mismatch");
  for (const auto& v : p.vectors) {
    if (static_cast<int>(v.size()) != p.dims)
      throw std::invalid_argument("vector arity mismatch");
    for (const Rat& x : v)
      if (x < 0 || x > 1) throw std::invalid_argument("coordinate outside [0,1]");
  }
  for (const Rat& x : p.profits)
    if (x < 0) throw std::invalid_argument("negative profit");
}

Rat load_of(const std::vector<Rat>& v) {
  Rat m = 0;
  for (const Rat& x : v) m = std::max(m, x);
  return m;
}

struct BranchAndBound {
  const VectorKnapsackProblem& p;
  std::vector<int> order;     // DFS order: non-increasing profit/max-load
  std::vector<int> pos;       // pos[item] = index in `order`
  // Per dimension, items by non-increasing profit/use (zero use first): the
  // scan order that makes the greedy fractional fill a valid upper bound.
  std::vector<std::vector<int>> dim_order;

  Rat best_profit = 0;
  std::vector<int> best_set;
  std::vector<int> current;

  explicit BranchAndBound(const VectorKnapsackProblem& prob) : p(prob) {
    const int n = static_cast<int>(p.vectors.size());
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      Rat la = load_of(p.vectors[a]), lb = load_of(p.vectors[b]);
      if ((la == 0) != (lb == 0)) return la == 0;
      if (la == 0) return p.profits[a] > p.profits[b];
      return p.profits[a] * lb > p.profits[b] * la;
    });
    pos.resize(n);
    for (int k = 0; k < n; ++k) pos[order[k]] = k;

    dim_order.resize(p.dims);
    for (int j = 0; j < p.dims; ++j) {
      auto& ord = dim_order[j];
      ord.resize(n);
      std::iota(ord.begin(), ord.end(), 0);
      std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) {
        const Rat& ua = p.vectors[a][j];
        const Rat& ub = p.vectors[b][j];
        if ((ua == 0) != (ub == 0)) return ua == 0;
        if (ua == 0) return p.profits[a] > p.profits[b];
        return p.profits[a] * ub > p.profits[b] * ua;
      });
    }
  }

  // Upper bound for the subtree at DFS position k: base profit plus, per
  // dimension, the Dantzig fractional optimum over the undecided items; the
  // minimum over dimensions is valid.
  Rat fractional_bound(size_t k, const std::vector<Rat>& room, const Rat& base) {
    if (p.dims == 0) {
      Rat ub = base;
      for (size_t t = k; t < order.size(); ++t) ub += p.profits[order[t]];
      return ub;
    }
    Rat best = -1;
    for (int j = 0; j < p.dims; ++j) {
      Rat cap = room[j];
      Rat ub = base;
      for (int i : dim_order[j]) {
        if (pos[i] < static_cast<int>(k)) continue;  // already decided
        const Rat& use = p.vectors[i][j];
        if (use == 0) {
          ub += p.profits[i];
        } else if (use <= cap) {
          cap -= use;
          ub += p.profits[i];
        } else {
          if (cap > 0) ub += p.profits[i] * cap / use;
          break;  // zero-use items all precede positive-use ones
        }
      }
      if (best < 0 || ub < best) best = ub;
      if (best == base) break;
    }
    return best;
  }

  void rec(size_t k, std::vector<Rat>& room, const Rat& profit) {
    if (profit > best_profit) {
      best_profit = profit;
      best_set = current;
    }
    if (k == order.size()) return;
    if (fractional_bound(k, room, profit) <= best_profit) return;

    int i = order[k];
    bool fits = true;
    for (int j = 0; j < p.dims; ++j)
      if (p.vectors[i][j] > room[j]) {
        fits = false;
        break;
      }
    if (fits) {
      for (int j = 0; j < p.dims; ++j) room[j] -= p.vectors[i][j];
      current.push_back(i);
      rec(k + 1, room, profit + p.profits[i]);
      current.pop_back();
      for (int j = 0; j < p.dims; ++j) room[j] += p.vectors[i][j];
    }
    rec(k + 1, room, profit);
  }
};

std::vector<int> greedy_by_density(const VectorKnapsackProblem& p,
                                   const std::vector<int>& mandatory) {
  std::vector<int> order(p.vectors.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    Rat la = load_of(p.vectors[a]), lb = load_of(p.vectors[b]);
    if ((la == 0) != (lb == 0)) return la == 0;
    if (la == 0) return p.profits[a] > p.profits[b];
    return p.profits[a] * lb > p.profits[b] * la;
  });
  std::vector<char> taken(p.vectors.size(), 0);
  std::vector<Rat> room(p.dims, Rat(1));
  std::vector<int> out;
  auto try_take = [&](int i) {
    if (taken[i]) return;
    for (int j = 0; j < p.dims; ++j)
      if (p.vectors[i][j] > room[j]) return;
    for (int j = 0; j < p.dims; ++j) room[j] -= p.vectors[i][j];
    taken[i] = 1;
    out.push_back(i);
  };
  for (int i : mandatory) try_take(i);
  for (int i : order) try_take(i);
  return out;
}

Rat profit_of(const VectorKnapsackProblem& p, const std::vector<int>& set) {
  Rat s = 0;
  for (int i : set) s += p.profits[i];
  return s;
}

std::vector<int> solve_exact(const VectorKnapsackProblem& p, int cap) {
  if (static_cast<int>(p.vectors.size()) > cap)
    throw InstanceTooLarge("exact vector knapsack capped at " + std::to_string(cap) +
                           " items");
  BranchAndBound bb(p);
  std::vector<Rat> room(p.dims, Rat(1));
  bb.rec(0, room, Rat(0));
  std::sort(bb.best_set.begin(), bb.best_set.end());
  return bb.best_set;
}

std::vector<int> solve_approx(const VectorKnapsackProblem& p, const Rat& eps,
                              int exact_cap) {
  if (p.dims <= 3 && eps >= Rat(1, 4)) {
    const int n = static_cast<int>(p.vectors.size());
    long anchors = to_long(ceil_int(1 / eps));
    std::vector<int> best = greedy_by_density(p, {});
    Rat best_p = profit_of(p, best);
    std::vector<int> by_profit(n);
    std::iota(by_profit.begin(), by_profit.end(), 0);
    std::stable_sort(by_profit.begin(), by_profit.end(),
                     [&](int a, int b) { return p.profits[a] > p.profits[b]; });
    int pool = std::min<int>(n, 16);
    std::vector<int> chosen;
    std::function<void(int, long)> enumerate = [&](int start, long left) {
      std::vector<int> cand = greedy_by_density(p, chosen);
      Rat cp = profit_of(p, cand);
      if (cp > best_p) {
        best_p = cp;
        best = cand;
      }
      if (left == 0) return;
      for (int t = start; t < pool; ++t) {
        chosen.push_back(by_profit[t]);
        enumerate(t + 1, left - 1);
        chosen.pop_back();
      }
    };
    enumerate(0, anchors);
    std::sort(best.begin(), best.end());
    return best;
  }
  if (static_cast<int>(p.vectors.size()) <= exact_cap) return solve_exact(p, exact_cap);
  auto out = greedy_by_density(p, {});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<int> vector_knapsack(const VectorKnapsackProblem& problem, VkMode mode) {
  check_problem(problem);
  switch (mode.kind) {
    case VkMode::kExact:
      return solve_exact(problem, mode.exact_cap);
    case VkMode::kApprox:
      return solve_approx(problem, mode.eps, mode.exact_cap);
    case VkMode::kGreedy: {
      auto out = greedy_by_density(problem, {});
      std::sort(out.begin(), out.end());
      return out;
    }
  }
  return {};
}

KnapsackPacking gvbp_knapsack(const Instance& inst, VkMode mode) {
  VectorKnapsackProblem p;
  p.dims = inst.d + 1;
  for (const Item& it : inst.items) {
    std::vector<Rat> v;
    v.push_back(it.area());
    for (const Rat& x : it.v) v.push_back(x);
    p.vectors.push_back(std::move(v));
    p.profits.push_back(it.profit.value_or(Rat(0)));
  }
  std::vector<int> winners = vector_knapsack(p, mode);

  std::vector<Rect> rects;
  for (int i : winners) {
    const Item& it = inst.items[i];
    rects.push_back({it.id, it.w, it.h});
  }
  ThreeBinPacking split = steinberg_three_bins(rects);

  if (split.bins.empty()) split.bins.emplace_back();
  std::vector<std::vector<int>> bin_members(split.bins.size());
  for (size_t b = 0; b < split.bins.size(); ++b)
    for (const PlacedRect& pr : split.bins[b])
      bin_members[b].push_back(inst.item_index(pr.id));
  // Zero-area winners carry no geometry; route them to the first bin.
  for (const std::string& id : split.skipped_degenerate)
    bin_members[0].push_back(inst.item_index(id));

  Rat vks_total = 0;
  for (int i : winners) vks_total += inst.items[i].profit.value_or(Rat(0));

  int best_bin = 0;
  Rat best_profit = -1;
  for (size_t b = 0; b < bin_members.size(); ++b) {
    Rat bp = 0;
    for (int i : bin_members[b]) bp += inst.items[i].profit.value_or(Rat(0));
    if (bp > best_profit) {
      best_profit = bp;
      best_bin = static_cast<int>(b);
    }
  }

  KnapsackPacking out;
  out.vks_profit = vks_total;
  out.profit = best_profit < 0 ? Rat(0) : best_profit;
  out.chosen = bin_members[best_bin];
  std::sort(out.chosen.begin(), out.chosen.end());
  out.packing.bin_count = 1;
  for (const PlacedRect& pr : split.bins[best_bin])
    out.packing.placements.push_back({pr.id, 0, pr.x, pr.y});
  if (best_bin == 0)
    for (const std::string& id : split.skipped_degenerate)
      out.packing.placements.push_back({id, 0, Rat(0), Rat(0)});
  return out;
}

}  // namespace gvbp
