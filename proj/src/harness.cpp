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

#include "gvbp/harness.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include <json.hpp>

#include "gvbp/exact.hpp"
#include "gvbp/json_io.hpp"
#include "gvbp/rna.hpp"
#include "gvbp/simple_algorithms.hpp"

namespace gvbp {

namespace {

// Draw k uniformly from 0..m-1; plain modulo keeps runs reproducible and the
// slight bias is irrelevant for test data.
long draw_below(std::mt19937_64& rng, long m) {
  return static_cast<long>(rng() % static_cast<uint64_t>(m));
}

Rat draw_unit(std::mt19937_64& rng, const GeneratorSpec& spec, const Rat& cap) {
  if (spec.grid > 0) {
    long k = draw_below(rng, spec.grid) + 1;
    Rat v = Rat(k, spec.grid);
    return v > cap ? cap : v;
  }
  // Dyadic uniform on (0, 1]: 20 random bits.
  long k = draw_below(rng, 1 << 20) + 1;
  Rat v = Rat(k, 1 << 20);
  return v > cap ? cap : v;
}

}  // namespace

Instance generate_instance(const GeneratorSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  Instance inst;
  inst.d = spec.d;
  long dense_upto = to_long(floor_int(spec.dense_fraction * spec.n));
  for (int i = 0; i < spec.n; ++i) {
    Item it;
    it.id = "i" + std::to_string(i);
    bool dense = i < dense_upto;
    if (dense) {
      it.w = 0;
      it.h = 0;
    } else {
      it.w = draw_unit(rng, spec, spec.max_side);
      it.h = draw_unit(rng, spec, spec.max_side);
    }
    for (int j = 0; j < spec.d; ++j) it.v.push_back(draw_unit(rng, spec, spec.max_weight));
    if (spec.with_profits) it.profit = Rat(draw_below(rng, 100) + 1);
    inst.items.push_back(std::move(it));
  }
  inst.check();
  return inst;
}

BenchmarkConfig benchmark_config_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  BenchmarkConfig config;
  for (const auto& e : j.at("instances")) {
    BenchmarkConfig::Entry entry;
    if (e.is_string()) {
      entry.id = e.get<std::string>();
      entry.instance = load_instance(entry.id);
    } else {
      GeneratorSpec spec;
      spec.n = e.value("n", 10);
      spec.d = e.value("d", 1);
      spec.seed = e.value("seed", 0);
      spec.grid = e.value("grid", 0);
      entry.id = e.value("id", "gen_" + std::to_string(spec.seed));
      entry.instance = generate_instance(spec);
    }
    config.instances.push_back(std::move(entry));
  }
  for (const auto& a : j.at("algorithms")) config.algorithms.push_back(a);
  if (j.contains("seeds"))
    for (const auto& s : j.at("seeds")) config.seeds.push_back(s.get<uint64_t>());
  if (config.seeds.empty()) config.seeds.push_back(0);
  config.with_oracle = j.value("oracle", false);
  config.oracle_grid = j.value("oracle_grid", 0);
  config.record_timings = j.value("timings", false);
  return config;
}

std::vector<BenchmarkRow> run_benchmark(const BenchmarkConfig& config) {
  std::vector<BenchmarkRow> rows;
  for (const auto& entry : config.instances) {
    std::optional<long> oracle;
    if (config.with_oracle && config.oracle_grid > 0) {
      try {
        oracle = brute_force_opt(entry.instance, config.oracle_grid).opt_bins;
      } catch (const std::exception&) {
        oracle = std::nullopt;  // out of oracle range: leave the cell empty
      }
    }
    for (const std::string& algo : config.algorithms) {
      for (uint64_t seed : config.seeds) {
        BenchmarkRow row;
        row.instance_id = entry.id;
        row.algorithm = algo;
        row.seed = seed;
        row.span_lower_bound = span_lower_bound(entry.instance);
        row.oracle_opt = oracle;
        auto start = std::chrono::steady_clock::now();
        try {
          BinPacking packing;
          if (algo == "simple") {
            packing = simple_pack(entry.instance);
          } else if (algo == "better") {
            packing = better_simple_pack(entry.instance);
          } else if (algo == "rna") {
            RnaOptions opt;
            opt.seed = seed;
            packing = rna_pack(entry.instance, simple_subroutines(), opt).packing;
          } else {
            throw std::invalid_argument("unknown algorithm '" + algo + "'");
          }
          row.bin_count = packing.bin_count;
          row.valid = validate_packing(entry.instance, packing, true).ok();
        } catch (const std::exception&) {
          row.valid = false;
        }
        auto stop = std::chrono::steady_clock::now();
        if (config.record_timings)
          row.runtime_ms =
              std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
                  .count();
        rows.push_back(std::move(row));
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const BenchmarkRow& a, const BenchmarkRow& b) {
    return std::tie(a.instance_id, a.algorithm, a.seed) <
           std::tie(b.instance_id, b.algorithm, b.seed);
  });
  return rows;
}

std::string benchmark_to_csv(const std::vector<BenchmarkRow>& rows) {
  std::ostringstream os;
  os << "instance,algorithm,seed,bin_count,span_lower_bound,oracle_opt,"
        "runtime_ms,valid\n";
  for (const BenchmarkRow& r : rows) {
    os << r.instance_id << ',' << r.algorithm << ',' << r.seed << ','
       << r.bin_count << ',' << r.span_lower_bound << ',';
    if (r.oracle_opt) os << *r.oracle_opt;
    os << ',' << r.runtime_ms << ',' << (r.valid ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string packing_to_svg(const Instance& inst, const BinPacking& packing) {
  const double scale = 160, pad = 12;
  int bins = std::max(packing.bin_count, 1);
  std::ostringstream os;
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='"
     << bins * (scale + pad) + pad << "' height='" << scale + 2 * pad << "'>\n";
  const char* palette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                           "#59a14f", "#edc948", "#b07aa1", "#ff9da7"};
  for (int b = 0; b < bins; ++b) {
    double x0 = pad + b * (scale + pad);
    os << "  <rect x='" << x0 << "' y='" << pad << "' width='" << scale
       << "' height='" << scale << "' fill='none' stroke='black'/>\n";
  }
  int color = 0;
  for (const Placement& p : packing.placements) {
    int idx = inst.item_index(p.item_id);
    if (idx < 0) continue;
    const Item& it = inst.items[idx];
    double x0 = pad + p.bin_index * (scale + pad) + to_double(p.x) * scale;
    // SVG y grows downward; flip so the packing origin is bottom-left.
    double y0 = pad + scale - (to_double(p.y) + to_double(it.h)) * scale;
    double w = to_double(it.w) * scale, h = to_double(it.h) * scale;
    if (w <= 0 || h <= 0) {
      os << "  <circle cx='" << x0 << "' cy='" << y0 + h << "' r='2' fill='gray'/>\n";
      continue;
    }
    os << "  <rect x='" << x0 << "' y='" << y0 << "' width='" << w << "' height='"
       << h << "' fill='" << palette[color++ % 8]
       << "' fill-opacity='0.7' stroke='black' stroke-width='0.5'/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace gvbp
