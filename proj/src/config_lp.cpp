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

#include "gvbp/config_lp.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gvbp/exact.hpp"
#include "gvbp/geometry.hpp"
#include "gvbp/simple_algorithms.hpp"

namespace gvbp {

namespace {

// Restricted master for  min sum x_C  s.t.  sum_{C contains i} x_C >= 1.
// Primal simplex with Bland's rule on exact rationals; surplus variables
// turn the covering rows into equalities. Singleton columns 0..n-1 form the
// initial identity basis. Variable order for Bland: surpluses 0..n-1, then
// configuration column j at n+j.
class MasterLp {
 public:
  explicit MasterLp(int n) : n_(n) {
    binv_.assign(n_, std::vector<Rat>(n_, Rat(0)));
    for (int i = 0; i < n_; ++i) binv_[i][i] = 1;
    basis_.resize(n_);
    for (int i = 0; i < n_; ++i) basis_[i] = i;  // column i = singleton of item i
  }

  int add_column(uint64_t mask) {
    cols_.push_back(mask);
    return static_cast<int>(cols_.size()) - 1;
  }
  uint64_t column_mask(int j) const { return cols_[j]; }
  int column_count() const { return static_cast<int>(cols_.size()); }
  bool has_mask(uint64_t mask) const {
    return std::find(cols_.begin(), cols_.end(), mask) != cols_.end();
  }

  void solve() {
    while (true) {
      std::vector<Rat> y = duals();
      int entering = -1;  // global variable index
      for (int i = 0; i < n_ && entering < 0; ++i)
        if (y[i] < 0 && !in_basis_surplus(i)) entering = i;
      if (entering < 0) {
        for (int j = 0; j < column_count() && entering < 0; ++j) {
          if (in_basis_col(j)) continue;
          Rat rc = 1;
          for (int i = 0; i < n_; ++i)
            if (cols_[j] & (uint64_t{1} << i)) rc -= y[i];
          if (rc < 0) entering = n_ + j;
        }
      }
      if (entering < 0) return;
      pivot(entering);
    }
  }

  std::vector<Rat> duals() const {
    std::vector<Rat> y(n_, Rat(0));
    for (int r = 0; r < n_; ++r) {
      if (basis_[r] < 0) continue;  // surplus rows carry cost 0
      for (int i = 0; i < n_; ++i) y[i] += binv_[r][i];
    }
    return y;
  }

  Rat objective() const {
    std::vector<Rat> x = basic_values();
    Rat obj = 0;
    for (int r = 0; r < n_; ++r)
      if (basis_[r] >= 0) obj += x[r];
    return obj;
  }

  // (column index, value) for basic configuration columns with value > 0.
  std::vector<std::pair<int, Rat>> solution() const {
    std::vector<Rat> x = basic_values();
    std::vector<std::pair<int, Rat>> out;
    for (int r = 0; r < n_; ++r)
      if (basis_[r] >= 0 && x[r] > 0) out.emplace_back(basis_[r], x[r]);
    return out;
  }

 private:
  std::vector<Rat> basic_values() const {
    std::vector<Rat> x(n_, Rat(0));
    for (int r = 0; r < n_; ++r)
      for (int i = 0; i < n_; ++i) x[r] += binv_[r][i];
    return x;
  }

  bool in_basis_col(int j) const {
    return std::find(basis_.begin(), basis_.end(), j) != basis_.end();
  }
  bool in_basis_surplus(int i) const {
    return std::find(basis_.begin(), basis_.end(), -(i + 1)) != basis_.end();
  }

  std::vector<Rat> column_vector(int global) const {
    std::vector<Rat> a(n_, Rat(0));
    if (global < n_) {
      a[global] = -1;  // surplus
    } else {
      uint64_t mask = cols_[global - n_];
      for (int i = 0; i < n_; ++i)
        if (mask & (uint64_t{1} << i)) a[i] = 1;
    }
    return a;
  }

  int global_of_basis(int r) const {
    return basis_[r] >= 0 ? n_ + basis_[r] : -basis_[r] - 1;
  }

  void pivot(int entering) {
    std::vector<Rat> a = column_vector(entering);
    std::vector<Rat> d(n_, Rat(0));
    for (int r = 0; r < n_; ++r)
      for (int i = 0; i < n_; ++i) d[r] += binv_[r][i] * a[i];
    std::vector<Rat> x = basic_values();
    int leave = -1;
    Rat best;
    for (int r = 0; r < n_; ++r) {
      if (d[r] <= 0) continue;
      Rat ratio = x[r] / d[r];
      if (leave < 0 || ratio < best ||
          (ratio == best && global_of_basis(r) < global_of_basis(leave))) {
        leave = r;
        best = ratio;
      }
    }
    if (leave < 0) throw std::logic_error("covering LP cannot be unbounded");
    Rat piv = d[leave];
    for (int i = 0; i < n_; ++i) binv_[leave][i] /= piv;
    for (int r = 0; r < n_; ++r) {
      if (r == leave || d[r] == 0) continue;
      for (int i = 0; i < n_; ++i) binv_[r][i] -= d[r] * binv_[leave][i];
    }
    basis_[leave] = entering >= n_ ? entering - n_ : -(entering + 1);
  }

  int n_;
  std::vector<uint64_t> cols_;
  std::vector<std::vector<Rat>> binv_;
  std::vector<int> basis_;  // >= 0: config column index; -(i+1): surplus i
};

uint64_t mask_of_ids(const Instance& inst, const std::vector<std::string>& ids) {
  uint64_t m = 0;
  for (const std::string& id : ids) m |= uint64_t{1} << inst.item_index(id);
  return m;
}

// Witnesses for every pool mask, so solutions never re-derive placements.
using WitnessStore = std::map<uint64_t, std::vector<Placement>>;

Configuration config_from_mask(const Instance& inst, const WitnessStore& store,
                               uint64_t mask) {
  Configuration c;
  auto it = store.find(mask);
  if (it == store.end()) throw std::logic_error("pool column without a witness");
  c.witness.bin_count = 1;
  c.witness.placements = it->second;
  for (size_t i = 0; i < inst.items.size(); ++i)
    if (mask & (uint64_t{1} << i)) c.item_ids.push_back(inst.items[i].id);
  return c;
}

void store_witness(WitnessStore& store, uint64_t mask,
                   const std::vector<Placement>& placements) {
  store.emplace(mask, placements);
}

void check_solution(const Instance& inst, const SparseLpSolution& sol) {
  const int n = static_cast<int>(inst.items.size());
  std::vector<Rat> cover(n, Rat(0));
  for (const LpColumn& col : sol.columns) {
    if (col.coefficient <= 0) throw std::logic_error("nonpositive LP coefficient");
    ValidationReport report = validate_packing(inst, col.config.witness, false);
    if (!report.ok()) throw std::logic_error("column witness fails validation");
    for (const std::string& id : col.config.item_ids)
      cover[inst.item_index(id)] += col.coefficient;
  }
  for (int i = 0; i < n; ++i)
    if (cover[i] < 1) throw std::logic_error("LP solution fails to cover an item");
  Rat spn = inst.span_total();
  if (sol.objective * (inst.d + 1) < spn)
    throw std::logic_error("objective below the span lower bound");
  if (sol.objective > 6 * spn + 3)
    throw std::logic_error("objective above the span upper bound");
}

std::vector<Placement> singleton_witness(const Item& item) {
  return {{item.id, 0, Rat(0), Rat(0)}};
}

}  // namespace

std::vector<Configuration> enumerate_configurations(const Instance& inst,
                                                    int max_items) {
  inst.check();
  const int n = static_cast<int>(inst.items.size());
  if (n > max_items)
    throw InstanceTooLarge("configuration enumeration capped at " +
                           std::to_string(max_items) + " items");
  BinFeasibility feas(inst);
  std::vector<char> good(uint64_t{1} << n, 0);
  good[0] = 1;
  std::vector<uint64_t> by_level{0};
  std::vector<uint64_t> feasible_masks;
  for (int level = 1; level <= n; ++level) {
    std::vector<uint64_t> next;
    std::set<uint64_t> seen;
    for (uint64_t base : by_level) {
      for (int i = 0; i < n; ++i) {
        uint64_t bit = uint64_t{1} << i;
        if (base & bit) continue;
        uint64_t cand = base | bit;
        if (seen.count(cand)) continue;
        seen.insert(cand);
        bool closed = true;  // every one-item-removed submask must be feasible
        for (int k = 0; k < n && closed; ++k)
          if ((cand >> k) & 1) closed = good[cand & ~(uint64_t{1} << k)];
        if (closed && feas.feasible(cand)) {
          good[cand] = 1;
          next.push_back(cand);
          feasible_masks.push_back(cand);
        }
      }
    }
    by_level = std::move(next);
    if (by_level.empty()) break;
  }

  std::vector<Configuration> out;
  for (uint64_t mask : feasible_masks) {
    bool maximal = true;
    for (int i = 0; i < n && maximal; ++i) {
      uint64_t bit = uint64_t{1} << i;
      if (!(mask & bit) && good[mask | bit]) maximal = false;
    }
    if (maximal) {
      Configuration c;
      auto w = feas.witness(mask);
      if (!w) throw std::logic_error("feasible mask lost its witness");
      c.witness.bin_count = 1;
      c.witness.placements = *w;
      for (int i = 0; i < n; ++i)
        if (mask & (uint64_t{1} << i)) c.item_ids.push_back(inst.items[i].id);
      out.push_back(std::move(c));
    }
  }
  return out;
}

SparseLpSolution solve_config_lp_exact(const Instance& inst, int max_items) {
  const int n = static_cast<int>(inst.items.size());
  SparseLpSolution sol;
  if (n == 0) return sol;
  std::vector<Configuration> maximal = enumerate_configurations(inst, max_items);

  WitnessStore store;
  MasterLp master(n);
  for (int i = 0; i < n; ++i) {
    master.add_column(uint64_t{1} << i);
    store_witness(store, uint64_t{1} << i, singleton_witness(inst.items[i]));
  }
  for (const Configuration& c : maximal) {
    uint64_t m = mask_of_ids(inst, c.item_ids);
    if (!master.has_mask(m)) {
      master.add_column(m);
      store_witness(store, m, c.witness.placements);
    }
  }
  master.solve();

  sol.objective = master.objective();
  auto basic = master.solution();
  if (static_cast<int>(basic.size()) > n)
    throw std::logic_error("extreme point support exceeds the row count");
  for (auto& [j, value] : basic) {
    LpColumn col;
    col.config = config_from_mask(inst, store, master.column_mask(j));
    col.coefficient = value;
    sol.columns.push_back(std::move(col));
  }
  sol.certificate.price_bound = 1;
  sol.certificate.eta = 1;
  check_solution(inst, sol);
  return sol;
}

SparseLpSolution solve_config_lp_cg(const Instance& inst, const CgOptions& opt) {
  inst.check();
  const int n = static_cast<int>(inst.items.size());
  if (n > 63) throw InstanceTooLarge("column generation capped at 63 items");
  SparseLpSolution sol;
  if (n == 0) return sol;

  WitnessStore store;
  MasterLp master(n);
  for (int i = 0; i < n; ++i) {
    master.add_column(uint64_t{1} << i);
    store_witness(store, uint64_t{1} << i, singleton_witness(inst.items[i]));
  }
  {
    // Seeding with the span-pack bins keeps the restricted optimum inside
    // the Span sandwich from the first iteration.
    BinPacking seed = simple_pack(inst);
    std::map<int, std::vector<Placement>> bins;
    for (const Placement& p : seed.placements) bins[p.bin_index].push_back(p);
    for (auto& [bin, placements] : bins) {
      std::vector<std::string> ids;
      std::vector<Placement> witness;
      for (Placement p : placements) {
        ids.push_back(p.item_id);
        p.bin_index = 0;
        witness.push_back(p);
      }
      uint64_t m = mask_of_ids(inst, ids);
      if (!master.has_mask(m)) {
        master.add_column(m);
        store_witness(store, m, witness);
      }
    }
  }

  std::vector<Configuration> exact_pool;
  if (opt.pricing == CgOptions::kExactConfigurations)
    exact_pool = enumerate_configurations(inst, opt.exact_pricing_cap);

  const Rat alpha = opt.vk.kind == VkMode::kExact ? Rat(1) : Rat(1) + opt.vk.eps;
  LpCertificate cert;
  cert.eps = opt.eps;
  cert.eta = opt.pricing == CgOptions::kExactConfigurations ? Rat(1) : 3 * alpha;

  long cap = opt.iteration_cap_per_item * std::max(1, n);
  bool capped = true;
  for (long round = 0; round < cap; ++round) {
    master.solve();
    std::vector<Rat> y = master.duals();

    uint64_t cand_mask = 0;
    Rat cand_value = 0;
    std::vector<Placement> cand_witness;
    Rat price_bound = 0;
    if (opt.pricing == CgOptions::kExactConfigurations) {
      for (const Configuration& c : exact_pool) {
        uint64_t m = mask_of_ids(inst, c.item_ids);
        Rat value = 0;
        for (int i = 0; i < n; ++i)
          if (m & (uint64_t{1} << i)) value += y[i];
        if (value > cand_value) {
          cand_value = value;
          cand_mask = m;
          cand_witness = c.witness.placements;
        }
      }
      price_bound = cand_value;
    } else {
      // Duals as profits: solve the area-relaxed vector knapsack and split
      // the winner over three bins; the best bin is the candidate column and
      // alpha times the full knapsack value bounds every configuration.
      Instance priced = inst;
      for (int i = 0; i < n; ++i) priced.items[i].profit = y[i];
      KnapsackPacking ks = gvbp_knapsack(priced, opt.vk);
      price_bound = alpha * ks.vks_profit;
      for (const Placement& p : ks.packing.placements) {
        cand_mask |= uint64_t{1} << inst.item_index(p.item_id);
        cand_value += y[inst.item_index(p.item_id)];
      }
      cand_witness = ks.packing.placements;
    }

    if (price_bound <= 1 + opt.eps || cand_value <= 1 ||
        master.has_mask(cand_mask)) {
      cert.price_bound = std::max(price_bound, Rat(1));
      capped = false;
      break;
    }
    master.add_column(cand_mask);
    store_witness(store, cand_mask, cand_witness);
  }
  cert.iteration_capped = capped;
  if (capped) cert.price_bound = cert.eta * (1 + opt.eps);

  // The certified bound must stay inside the advertised (1+eps)*eta contract.
  if (!capped && cert.price_bound > (1 + opt.eps) * cert.eta)
    throw std::logic_error("pricing certificate exceeds the advertised ratio");

  sol.objective = master.objective();
  sol.certificate = cert;
  for (auto& [j, value] : master.solution()) {
    LpColumn col;
    col.config = config_from_mask(inst, store, master.column_mask(j));
    col.coefficient = value;
    sol.columns.push_back(std::move(col));
  }
  check_solution(inst, sol);
  return sol;
}

}  // namespace gvbp
