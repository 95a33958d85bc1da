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

#ifndef GVBP_RNA_HPP_
#define GVBP_RNA_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gvbp/config_lp.hpp"
#include "gvbp/core.hpp"
#include "gvbp/packing.hpp"

namespace gvbp {

// beta parameter; "e" is represented symbolically so ln(beta) = 1 exactly.
struct Beta {
  Rat value = Rat(2);
  bool is_e = false;
  static Beta e() { return {Rat(0), true}; }
  double ln() const;
};

// One rounding guess: modified items (same ids, by the identity bijection),
// plus the discarded set packed separately.
struct RoundOutput {
  Instance rounded;
  std::vector<std::string> discarded_ids;
};

class SubroutineContractError : public std::runtime_error {
 public:
  explicit SubroutineContractError(const std::string& what)
      : std::runtime_error(what) {}
};

// The three pluggable pieces of the meta-algorithm. `round` emits one or
// more guesses; each guess's discard must obey span(D) <= eps * span(I) (+
// the configured additive slack) or the framework rejects it. `unround`
// receives the rounded packing plus the original items and must produce a
// packing of the originals.
struct RnaSubroutines {
  std::function<std::vector<RoundOutput>(const Instance&, const Rat& eps)> round;
  std::function<BinPacking(const Instance& rounded_subset)> complex_pack;
  std::function<BinPacking(const Instance& originals, const Instance& rounded,
                           const BinPacking& rounded_packing)>
      unround;
  Rat discard_slack = 0;  // additive allowance on the discard bound
};

struct RoundingTrace {
  std::vector<int> chosen_columns;  // indices into the LP solution, in order
  BinPacking packed_bins;           // one bin per chosen configuration
  std::vector<std::string> residual_ids;
  Beta beta;
  long trials = 0;  // T
  uint64_t seed = 0;
};

// Packs T = ceil(ln(beta) * objective) bins by i.i.d. draws from the LP
// coefficient distribution; items covered more than once stay in the
// earliest bin. Deterministic given the seed.
RoundingTrace randomized_round(const Instance& inst, const SparseLpSolution& lp,
                               const Beta& beta, uint64_t seed);

// The span-preserving single-class rounding: width 1, height = span, every
// weight = span; nothing discarded.
std::vector<RoundOutput> simple_round(const Instance& inst, const Rat& eps);

// Next-Fit over spans of the rounded items; each group stacks in one bin.
BinPacking simple_complex_pack(const Instance& rounded_subset);

// Per rounded bin, packs the original items into at most three bins.
BinPacking simple_unround(const Instance& originals, const Instance& rounded,
                          const BinPacking& rounded_packing);

RnaSubroutines simple_subroutines();

struct RnaOptions {
  std::optional<Beta> beta;  // default: 6(d+1) / certified LP ratio, >= 1
  Rat eps = Rat(1, 8);
  CgOptions lp;
  uint64_t seed = 0;
};

struct RnaResult {
  BinPacking packing;
  RoundingTrace trace;
  SparseLpSolution lp;
  Beta beta_used;
};

// Full meta-algorithm: approximate LP solve, randomized rounding, then for
// each rounding guess pack the residual discard with the span heuristic and
// the rest with complex_pack + unround; the best guess wins.
RnaResult rna_pack(const Instance& inst, const RnaSubroutines& subs,
                   const RnaOptions& opt = {});

}  // namespace gvbp

#endif  // GVBP_RNA_HPP_
