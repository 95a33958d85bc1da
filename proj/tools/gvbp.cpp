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

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gvbp/config_lp.hpp"
#include "gvbp/exact.hpp"
#include "gvbp/harness.hpp"
#include "gvbp/json_io.hpp"
#include "gvbp/knapsack.hpp"
#include "gvbp/rna.hpp"
#include "gvbp/rounding_toolkit.hpp"
#include "gvbp/simple_algorithms.hpp"

namespace {

using nlohmann::json;
using namespace gvbp;

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-")
    std::cout << content << '\n';
  else
    write_file(path, content);
}

json lp_solution_to_json(const SparseLpSolution& sol) {
  json j;
  j["objective"] = to_fraction_string(sol.objective);
  j["objective_approx"] = to_double(sol.objective);
  j["certificate"] = {
      {"price_bound", to_fraction_string(sol.certificate.price_bound)},
      {"eta", to_fraction_string(sol.certificate.eta)},
      {"eps", to_fraction_string(sol.certificate.eps)},
      {"iteration_capped", sol.certificate.iteration_capped}};
  j["columns"] = json::array();
  for (const LpColumn& col : sol.columns) {
    json cj;
    cj["coefficient"] = to_fraction_string(col.coefficient);
    cj["items"] = col.config.item_ids;
    j["columns"].push_back(cj);
  }
  return j;
}

int cmd_gen(const GeneratorSpec& spec, const std::string& output) {
  emit(output, instance_to_json(generate_instance(spec)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gvbp: generalized (2-D geometric + d-D vector) bin packing"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  GeneratorSpec spec;
  std::string gen_out = "-";
  std::string dense_frac = "0";
  gen->add_option("--n", spec.n, "item count");
  gen->add_option("--d", spec.d, "weight dimensions");
  gen->add_option("--seed", spec.seed, "rng seed");
  gen->add_option("--grid", spec.grid, "grid granularity K (dims multiples of 1/K)");
  gen->add_option("--dense-frac", dense_frac, "fraction of zero-area items");
  gen->add_flag("--profits", spec.with_profits, "attach random profits");
  gen->add_option("--output,-o", gen_out, "output path");

  // pack
  auto* pack = app.add_subcommand("pack", "pack an instance");
  std::string pack_in, pack_out = "-", pack_algo = "simple", pack_svg;
  std::string pack_beta = "", pack_eps = "1/8", pack_subs = "simple";
  uint64_t pack_seed = 0;
  pack->add_option("--input,-i", pack_in, "instance JSON")->required();
  pack->add_option("--output,-o", pack_out, "packing JSON output");
  pack->add_option("--algo", pack_algo, "simple | better | rna");
  pack->add_option("--seed", pack_seed, "rng seed (rna)");
  pack->add_option("--beta", pack_beta, "beta parameter, a decimal or 'e' (rna)");
  pack->add_option("--eps", pack_eps, "eps parameter (rna)");
  pack->add_option("--subroutines", pack_subs, "simple | toolkit (rna)");
  pack->add_option("--svg", pack_svg, "also write an SVG rendering here");

  // lp
  auto* lp = app.add_subcommand("lp", "solve the configuration LP");
  std::string lp_in, lp_out = "-", lp_mode = "cg", lp_pricing = "knapsack";
  std::string lp_eps = "1/10";
  lp->add_option("--input,-i", lp_in, "instance JSON")->required();
  lp->add_option("--output,-o", lp_out, "solution JSON output");
  lp->add_option("--mode", lp_mode, "exact | cg");
  lp->add_option("--pricing", lp_pricing, "exact | knapsack (cg mode)");
  lp->add_option("--eps", lp_eps, "stopping slack (cg mode)");

  // knapsack
  auto* ks = app.add_subcommand("knapsack", "single-bin profit maximization");
  std::string ks_in, ks_out = "-", ks_mode = "exact", ks_eps = "1/4";
  ks->add_option("--input,-i", ks_in, "instance JSON with profits")->required();
  ks->add_option("--output,-o", ks_out, "output JSON");
  ks->add_option("--mode", ks_mode, "exact | approx | greedy");
  ks->add_option("--eps", ks_eps, "approx mode ratio parameter");

  // round
  auto* rnd = app.add_subcommand("round", "medium removal + weight rounding");
  std::string rnd_in, rnd_out = "-", rnd_eps = "1/8";
  rnd->add_option("--input,-i", rnd_in, "instance JSON")->required();
  rnd->add_option("--output,-o", rnd_out, "output JSON");
  rnd->add_option("--eps", rnd_eps, "eps parameter (1/eps even)");

  // validate
  auto* val = app.add_subcommand("validate", "validate a packing");
  std::string val_in, val_pack, val_tol = "0";
  bool val_partial = false;
  val->add_option("--input,-i", val_in, "instance JSON")->required();
  val->add_option("--packing,-p", val_pack, "packing JSON")->required();
  val->add_option("--tol", val_tol, "absolute tolerance");
  val->add_flag("--partial", val_partial, "skip the all-items-packed check");

  // oracle
  auto* orc = app.add_subcommand("oracle", "exact optimum via exhaustive search");
  std::string orc_in, orc_out = "-";
  long orc_grid = 16;
  int orc_cap = 5;
  orc->add_option("--input,-i", orc_in, "instance JSON")->required();
  orc->add_option("--output,-o", orc_out, "witness packing output");
  orc->add_option("--grid", orc_grid, "grid granularity K");
  orc->add_option("--max-items", orc_cap, "instance size cap");

  // bench
  auto* bench = app.add_subcommand("bench", "benchmark runner");
  std::string bench_config, bench_out = "-";
  bench->add_option("--config,-c", bench_config, "benchmark config JSON")->required();
  bench->add_option("--output,-o", bench_out, "CSV output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      spec.dense_fraction = parse_decimal(dense_frac);
      return cmd_gen(spec, gen_out);
    }

    if (pack->parsed()) {
      Instance inst = load_instance(pack_in);
      BinPacking packing;
      if (pack_algo == "simple") {
        packing = simple_pack(inst);
      } else if (pack_algo == "better") {
        packing = better_simple_pack(inst);
      } else if (pack_algo == "rna") {
        RnaOptions opt;
        opt.seed = pack_seed;
        opt.eps = parse_decimal(pack_eps);
        if (!pack_beta.empty()) {
          Beta b;
          if (pack_beta == "e")
            b = Beta::e();
          else
            b.value = parse_decimal(pack_beta);
          opt.beta = b;
        }
        RnaSubroutines subs = pack_subs == "toolkit"
                                  ? toolkit_subroutines(inst, opt.eps)
                                  : simple_subroutines();
        packing = rna_pack(inst, subs, opt).packing;
      } else {
        std::cerr << "unknown algorithm '" << pack_algo << "'\n";
        return 2;
      }
      emit(pack_out, packing_to_json(packing));
      if (!pack_svg.empty()) write_file(pack_svg, packing_to_svg(inst, packing));
      bool ok = validate_packing(inst, packing, true).ok();
      std::cerr << "bins=" << packing.bin_count << " valid=" << (ok ? "yes" : "no")
                << "\n";
      return ok ? 0 : 1;
    }

    if (lp->parsed()) {
      Instance inst = load_instance(lp_in);
      SparseLpSolution sol;
      if (lp_mode == "exact") {
        sol = solve_config_lp_exact(inst);
      } else {
        CgOptions opt;
        opt.eps = parse_decimal(lp_eps);
        opt.pricing = lp_pricing == "exact" ? CgOptions::kExactConfigurations
                                            : CgOptions::kKnapsackSplit;
        sol = solve_config_lp_cg(inst, opt);
      }
      emit(lp_out, lp_solution_to_json(sol).dump(2));
      return 0;
    }

    if (ks->parsed()) {
      Instance inst = load_instance(ks_in);
      VkMode mode;
      if (ks_mode == "exact")
        mode.kind = VkMode::kExact;
      else if (ks_mode == "approx")
        mode.kind = VkMode::kApprox;
      else
        mode.kind = VkMode::kGreedy;
      mode.eps = parse_decimal(ks_eps);
      KnapsackPacking result = gvbp_knapsack(inst, mode);
      json j;
      j["profit"] = to_fraction_string(result.profit);
      j["vector_knapsack_profit"] = to_fraction_string(result.vks_profit);
      j["items"] = json::array();
      for (int i : result.chosen) j["items"].push_back(inst.items[i].id);
      j["packing"] = json::parse(packing_to_json(result.packing));
      if (mode.ratio_unbounded()) j["ratio_unbounded"] = true;
      emit(ks_out, j.dump(2));
      return 0;
    }

    if (rnd->parsed()) {
      Instance inst = load_instance(rnd_in);
      ToolkitRounding result = toolkit_round(inst, parse_decimal(rnd_eps));
      json j;
      j["eps1"] = to_fraction_string(result.schedule.eps1);
      j["eps2"] = to_fraction_string(result.schedule.eps2);
      j["discarded"] = result.output.discarded_ids;
      j["rounded"] = json::parse(instance_to_json(result.output.rounded));
      j["undo_log"] = json::parse(instance_to_json(result.undo_log));
      j["classes"] = json::array();
      for (const auto& [key, ids] : result.classes)
        j["classes"].push_back({{"class", key.describe()}, {"items", ids}});
      emit(rnd_out, j.dump(2));
      return 0;
    }

    if (val->parsed()) {
      Instance inst = load_instance(val_in);
      BinPacking packing = load_packing(val_pack);
      ValidationReport report =
          validate_packing(inst, packing, !val_partial, parse_decimal(val_tol));
      for (const Violation& v : report.violations)
        std::cout << v.kind << ": " << v.detail << '\n';
      std::cout << (report.ok() ? "valid" : "invalid") << '\n';
      return report.ok() ? 0 : 1;
    }

    if (orc->parsed()) {
      Instance inst = load_instance(orc_in);
      OracleResult result = brute_force_opt(inst, orc_grid, orc_cap);
      std::cout << "opt_bins=" << result.opt_bins << '\n';
      emit(orc_out, packing_to_json(result.witness));
      return 0;
    }

    if (bench->parsed()) {
      BenchmarkConfig config = benchmark_config_from_json(read_file(bench_config));
      std::vector<BenchmarkRow> rows = run_benchmark(config);
      emit(bench_out, benchmark_to_csv(rows));
      for (const BenchmarkRow& r : rows)
        if (!r.valid) return 1;
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
