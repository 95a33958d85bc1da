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

#include "gvbp/harness.hpp"
#include "gvbp/json_io.hpp"
#include "gvbp/rounding_toolkit.hpp"
#include "test_util.hpp"

using namespace gvbp;
using namespace gvbp::test;

TEST_CASE("generator determinism and shape") {
  GeneratorSpec spec;
  spec.n = 0;
  CHECK(generate_instance(spec).items.empty());

  spec.n = 3;
  spec.d = 2;
  spec.grid = 4;
  spec.seed = 7;
  std::string a = instance_to_json(generate_instance(spec));
  std::string b = instance_to_json(generate_instance(spec));
  CHECK(a == b);

  for (const Item& it : generate_instance(spec).items) {
    CHECK(is_integer(it.w * 4));
    CHECK(is_integer(it.h * 4));
  }
}

TEST_CASE("dense fraction one yields only dense items") {
  GeneratorSpec spec;
  spec.n = 12;
  spec.d = 1;
  spec.grid = 8;
  spec.dense_fraction = 1;
  Instance inst = generate_instance(spec);
  EpsilonSchedule sched = make_schedule(1, Rat(1, 8), Rat(1, 12));
  for (const Item& it : inst.items) {
    CHECK(it.area() == 0);
    CHECK(classify_item(it, sched.eps1, sched.eps2).dense);
  }
}

TEST_CASE("benchmark runner") {
  BenchmarkConfig config;
  CHECK(benchmark_to_csv(run_benchmark(config)) ==
        "instance,algorithm,seed,bin_count,span_lower_bound,oracle_opt,"
        "runtime_ms,valid\n");

  std::mt19937_64 rng(211);
  config.instances.push_back({"a", random_grid_instance(rng, 4, 1, 8)});
  config.instances.push_back({"b", random_grid_instance(rng, 5, 1, 8)});
  config.algorithms = {"simple", "better", "rna"};
  config.seeds = {1, 2};
  config.with_oracle = true;
  config.oracle_grid = 8;
  auto rows = run_benchmark(config);
  CHECK(rows.size() == 2 * 3 * 2);
  for (const BenchmarkRow& row : rows) {
    CHECK(row.valid);
    CHECK(row.runtime_ms == 0);  // timings off by default for byte-stable reruns
    if (row.oracle_opt) CHECK(row.bin_count >= *row.oracle_opt);
    CHECK(row.bin_count >= row.span_lower_bound);
  }
  CHECK(benchmark_to_csv(rows) == benchmark_to_csv(run_benchmark(config)));
}

TEST_CASE("benchmark config parsing") {
  BenchmarkConfig config = benchmark_config_from_json(R"({
    "instances": [{"id": "g1", "n": 4, "d": 1, "seed": 3, "grid": 8}],
    "algorithms": ["simple"],
    "seeds": [5],
    "oracle": true,
    "oracle_grid": 8
  })");
  CHECK(config.instances.size() == 1);
  CHECK(config.instances[0].instance.items.size() == 4);
  auto rows = run_benchmark(config);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].valid);
  CHECK(rows[0].oracle_opt.has_value());
}

TEST_CASE("svg rendering mentions every placed rectangle") {
  Instance inst = fig1_rects();
  BinPacking packing;
  packing.bin_count = 1;
  packing.placements = {{"a", 0, Rat(0), Rat(0)},
                        {"b", 0, Rat(0), Rat(2, 10)},
                        {"c", 0, Rat(4, 10), Rat(2, 10)}};
  std::string svg = packing_to_svg(inst, packing);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(std::count(svg.begin(), svg.end(), '\n') > 4);
}
