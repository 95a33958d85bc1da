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

#ifndef GVBP_KNAPSACK_HPP_
#define GVBP_KNAPSACK_HPP_

#include <vector>

#include "gvbp/core.hpp"
#include "gvbp/exact.hpp"
#include "gvbp/packing.hpp"

namespace gvbp {

struct VectorKnapsackProblem {
  int dims = 0;
  std::vector<std::vector<Rat>> vectors;  // one D-vector per item, coords in [0,1]
  std::vector<Rat> profits;               // nonnegative
};

struct VkMode {
  enum Kind { kExact, kApprox, kGreedy } kind = kExact;
  Rat eps = Rat(1, 4);      // approx mode only
  int exact_cap = 40;       // exact mode instance-size cap
  // Approximation ratio alpha: profit >= opt / alpha. Greedy carries no
  // bound; its reported ratio is a flag value.
  bool ratio_unbounded() const { return kind == kGreedy; }
};

// Max-profit subset with coordinate-wise sums <= 1.
// Exact mode: branch and bound with a fractional relaxation bound (throws
// InstanceTooLarge above the cap). Approx mode: anchor enumeration of up to
// ceil(1/eps) high-profit items completed greedily by density (dims <= 3,
// eps >= 1/4), falling back to exact within the cap. Greedy mode: pure
// density order, no guarantee.
std::vector<int> vector_knapsack(const VectorKnapsackProblem& problem, VkMode mode);

struct KnapsackPacking {
  std::vector<int> chosen;   // instance item indices in the returned bin
  BinPacking packing;        // single bin
  Rat profit;                // total profit of the returned bin
  Rat vks_profit;            // profit of the full vector-knapsack solution
};

// Relaxes geometry to a single area coordinate, solves the (d+1)-dimensional
// vector knapsack, splits the winning subset over three unit bins, and keeps
// the most profitable (lowest index on ties). With an exact vector solver the
// result is a 3-approximation of the single-bin optimum.
KnapsackPacking gvbp_knapsack(const Instance& inst, VkMode mode = {});

}  // namespace gvbp

#endif  // GVBP_KNAPSACK_HPP_
