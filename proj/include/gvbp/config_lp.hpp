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

#ifndef GVBP_CONFIG_LP_HPP_
#define GVBP_CONFIG_LP_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "gvbp/core.hpp"
#include "gvbp/knapsack.hpp"
#include "gvbp/packing.hpp"

namespace gvbp {

// A feasible single-bin item subset with a witness placement.
struct Configuration {
  std::vector<std::string> item_ids;
  BinPacking witness;  // single bin
};

struct LpColumn {
  Configuration config;
  Rat coefficient;  // > 0
};

// Solver certificate: price_bound B is a proven upper bound on the best
// column value under the final duals, so objective <= B * LP*.
struct LpCertificate {
  Rat price_bound = 1;
  Rat eta = 1;   // pricing oracle ratio (3 * vector-knapsack ratio)
  Rat eps = 0;   // stopping slack
  bool iteration_capped = false;
};

struct SparseLpSolution {
  std::vector<LpColumn> columns;
  Rat objective = 0;
  LpCertificate certificate;
};

// All maximal feasible configurations (every feasible subset is contained in
// a returned one). Throws InstanceTooLarge above the cap.
std::vector<Configuration> enumerate_configurations(const Instance& inst,
                                                    int max_items = 10);

// Exact covering-LP optimum over the full configuration set via simplex on
// the maximal configurations. Throws InstanceTooLarge above the cap.
SparseLpSolution solve_config_lp_exact(const Instance& inst, int max_items = 10);

struct CgOptions {
  enum Pricing {
    kExactConfigurations,  // scan enumerated maximal configurations (small n)
    kKnapsackSplit,        // vector knapsack + three-bin split columns
  } pricing = kKnapsackSplit;
  VkMode vk;               // vector-knapsack mode for kKnapsackSplit
  Rat eps = Rat(1, 10);    // stopping slack
  long iteration_cap_per_item = 50;
  int exact_pricing_cap = 10;
};

// Column generation on the restricted master (seeded with singletons and the
// span-pack bins). Feasible for the covering LP; objective <= (1+eps) * eta *
// LP*, certified by `certificate`. Hits of the iteration cap return the best
// feasible solution found with the flag set.
SparseLpSolution solve_config_lp_cg(const Instance& inst, const CgOptions& opt = {});

}  // namespace gvbp

#endif  // GVBP_CONFIG_LP_HPP_
