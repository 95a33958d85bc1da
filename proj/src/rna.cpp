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

#include "gvbp/rna.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "gvbp/geometry.hpp"
#include "gvbp/simple_algorithms.hpp"

namespace gvbp {

double Beta::ln() const {
  if (is_e) return 1.0;
  return std::log(to_double(value));
}

namespace {

long trial_count(const SparseLpSolution& lp, const Beta& beta) {
  if (beta.is_e) return to_long(ceil_int(lp.objective));
  if (!beta.is_e && beta.value <= 1) return 0;
  long double product =
      static_cast<long double>(beta.ln()) * to_double(lp.objective);
  return static_cast<long>(std::ceil(product - 1e-12L));
}

Instance select_items(const Instance& inst, const std::vector<std::string>& ids) {
  Instance out;
  out.d = inst.d;
  std::set<std::string> wanted(ids.begin(), ids.end());
  for (const Item& it : inst.items)
    if (wanted.count(it.id)) out.items.push_back(it);
  return out;
}

}  // namespace

RoundingTrace randomized_round(const Instance& inst, const SparseLpSolution& lp,
                               const Beta& beta, uint64_t seed) {
  if (!beta.is_e && beta.value < 1)
    throw std::invalid_argument("beta must be at least 1");
  RoundingTrace trace;
  trace.seed = seed;
  trace.beta = beta;
  trace.trials = trial_count(lp, beta);

  std::mt19937_64 rng(seed);
  std::set<std::string> covered;
  for (long t = 0; t < trace.trials; ++t) {
    // Exact inverse-CDF draw: pick the first column whose cumulative
    // coefficient exceeds objective * r / 2^64.
    uint64_t r = rng();
    Rat target = lp.objective * Rat(BigInt(r)) / Rat(BigInt(1) << 64);
    Rat cumulative = 0;
    int chosen = static_cast<int>(lp.columns.size()) - 1;
    for (size_t c = 0; c < lp.columns.size(); ++c) {
      cumulative += lp.columns[c].coefficient;
      if (cumulative > target) {
        chosen = static_cast<int>(c);
        break;
      }
    }
    trace.chosen_columns.push_back(chosen);

    const Configuration& config = lp.columns[chosen].config;
    int bin = trace.packed_bins.bin_count++;
    for (const Placement& p : config.witness.placements) {
      if (covered.count(p.item_id)) continue;  // earliest bin keeps the item
      Placement q = p;
      q.bin_index = bin;
      trace.packed_bins.placements.push_back(q);
    }
    for (const std::string& id : config.item_ids) covered.insert(id);
  }
  for (const Item& it : inst.items)
    if (!covered.count(it.id)) trace.residual_ids.push_back(it.id);
  // Configurations drawn twice contribute nothing after deduplication.
  trace.packed_bins.compact();
  return trace;
}

std::vector<RoundOutput> simple_round(const Instance& inst, const Rat&) {
  RoundOutput out;
  out.rounded.d = inst.d;
  for (const Item& it : inst.items) {
    Item r;
    r.id = it.id;
    Rat s = span(it);
    r.w = s == 0 ? Rat(0) : Rat(1);  // zero-span items stay degenerate
    r.h = s;
    r.v.assign(inst.d, s);
    out.rounded.items.push_back(std::move(r));
  }
  return {std::move(out)};
}

BinPacking simple_complex_pack(const Instance& rounded_subset) {
  BinPacking out;
  std::vector<Rat> sizes;
  for (const Item& it : rounded_subset.items) sizes.push_back(span(it));
  for (const std::vector<int>& group : next_fit(sizes)) {
    int bin = out.bin_count++;
    Rat y = 0;
    for (int i : group) {
      const Item& it = rounded_subset.items[i];
      out.placements.push_back({it.id, bin, Rat(0), y});
      y += it.h;
    }
  }
  return out;
}

BinPacking simple_unround(const Instance& originals, const Instance&,
                          const BinPacking& rounded_packing) {
  BinPacking out;
  std::map<int, std::vector<int>> bins;
  for (const Placement& p : rounded_packing.placements)
    bins[p.bin_index].push_back(originals.item_index(p.item_id));
  for (auto& [bin, members] : bins) {
    std::vector<Rect> rects;
    std::vector<int> degenerate;
    for (int i : members) {
      const Item& it = originals.items[i];
      if (it.area() == 0)
        degenerate.push_back(i);
      else
        rects.push_back({it.id, it.w, it.h});
    }
    ThreeBinPacking split = steinberg_three_bins(rects);
    if (split.bins.empty() && !degenerate.empty()) split.bins.emplace_back();
    int first = out.bin_count;
    for (const auto& placed : split.bins) {
      for (const PlacedRect& p : placed)
        out.placements.push_back({p.id, out.bin_count, p.x, p.y});
      ++out.bin_count;
    }
    for (int i : degenerate)
      out.placements.push_back({originals.items[i].id, first, Rat(0), Rat(0)});
  }
  return out;
}

RnaSubroutines simple_subroutines() {
  RnaSubroutines subs;
  subs.round = simple_round;
  subs.complex_pack = simple_complex_pack;
  subs.unround = simple_unround;
  subs.discard_slack = 0;
  return subs;
}

RnaResult rna_pack(const Instance& inst, const RnaSubroutines& subs,
                   const RnaOptions& opt) {
  inst.check();
  RnaResult result;
  if (inst.items.empty()) {
    result.beta_used = opt.beta.value_or(Beta{Rat(1), false});
    return result;
  }

  result.lp = solve_config_lp_cg(inst, opt.lp);

  Beta beta;
  if (opt.beta) {
    beta = *opt.beta;
  } else {
    // gamma * alpha * rho / mu with gamma = 3, alpha = 2, rho = d+1 and mu
    // the certified LP ratio, clamped to at least 1.
    Rat mu = std::max(result.lp.certificate.price_bound, Rat(1));
    beta.value = std::max(Rat(6) * (inst.d + 1) / mu, Rat(1));
    beta.is_e = false;
  }
  result.beta_used = beta;

  result.trace = randomized_round(inst, result.lp, beta, opt.seed);

  Instance residual = select_items(inst, result.trace.residual_ids);
  std::set<std::string> residual_set(result.trace.residual_ids.begin(),
                                     result.trace.residual_ids.end());

  Rat total_span = inst.span_total();
  std::optional<BinPacking> best;
  for (const RoundOutput& guess : subs.round(inst, opt.eps)) {
    Instance discarded = select_items(inst, guess.discarded_ids);
    if (discarded.span_total() > opt.eps * total_span + subs.discard_slack)
      throw SubroutineContractError("round discards more span than allowed");

    std::set<std::string> discard_set(guess.discarded_ids.begin(),
                                      guess.discarded_ids.end());
    std::vector<std::string> residual_discard, residual_kept;
    for (const std::string& id : result.trace.residual_ids)
      (discard_set.count(id) ? residual_discard : residual_kept).push_back(id);

    BinPacking j_discard = simple_pack(select_items(inst, residual_discard));

    Instance rounded_residual = select_items(guess.rounded, residual_kept);
    BinPacking rounded_packing = subs.complex_pack(rounded_residual);
    BinPacking unrounded = subs.unround(select_items(inst, residual_kept),
                                        rounded_residual, rounded_packing);

    BinPacking candidate =
        concat(result.trace.packed_bins, concat(j_discard, unrounded));
    if (!best || candidate.bin_count < best->bin_count) best = candidate;
  }
  if (!best) throw SubroutineContractError("round returned no guesses");

  result.packing = *best;
  ValidationReport report = validate_packing(inst, result.packing, true);
  if (!report.ok())
    throw std::logic_error("meta-algorithm produced an invalid packing: " +
                           report.violations.front().detail);
  return result;
}

}  // namespace gvbp
