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

#ifndef GVBP_HARNESS_HPP_
#define GVBP_HARNESS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gvbp/core.hpp"
#include "gvbp/packing.hpp"

namespace gvbp {

struct GeneratorSpec {
  int n = 10;
  int d = 1;
  uint64_t seed = 0;
  // When grid > 0, every side and weight is a multiple of 1/grid (so the
  // brute-force oracle applies); otherwise dyadic uniform values are drawn.
  long grid = 0;
  // Fraction of items forced dense under the default schedule (zero area,
  // weights only).
  Rat dense_fraction = 0;
  bool with_profits = false;
  Rat max_side = 1;    // upper bound for generated sides
  Rat max_weight = 1;  // upper bound for generated weights
};

// Deterministic in the seed, byte-for-byte.
Instance generate_instance(const GeneratorSpec& spec);

struct BenchmarkRow {
  std::string instance_id;
  std::string algorithm;
  uint64_t seed = 0;
  int bin_count = 0;
  long span_lower_bound = 0;
  std::optional<long> oracle_opt;
  long runtime_ms = 0;
  bool valid = false;
};

struct BenchmarkConfig {
  struct Entry {
    std::string id;
    Instance instance;
  };
  std::vector<Entry> instances;
  std::vector<std::string> algorithms;  // simple | better | rna
  std::vector<uint64_t> seeds;
  bool with_oracle = false;
  long oracle_grid = 0;
  // Wall-clock timings break byte-identical reruns, so they are zeroed
  // unless explicitly requested.
  bool record_timings = false;
};

BenchmarkConfig benchmark_config_from_json(const std::string& text);

std::vector<BenchmarkRow> run_benchmark(const BenchmarkConfig& config);

// Fixed column set; rows sorted by (instance id, algorithm, seed).
std::string benchmark_to_csv(const std::vector<BenchmarkRow>& rows);

// Static one-file drawing of a packing for human inspection.
std::string packing_to_svg(const Instance& inst, const BinPacking& packing);

}  // namespace gvbp

#endif  // GVBP_HARNESS_HPP_
