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

#include "gvbp/packing.hpp"

#include <map>
#include <set>

namespace gvbp {

void BinPacking::append_bin_of(const BinPacking& other, int other_bin) {
  int target = bin_count++;
  for (const Placement& p : other.placements) {
    if (p.bin_index != other_bin) continue;
    Placement q = p;
    q.bin_index = target;
    placements.push_back(q);
  }
}

void BinPacking::compact() {
  std::map<int, int> remap;
  for (const Placement& p : placements)
    remap.emplace(p.bin_index, 0);
  int next = 0;
  for (auto& [old_index, fresh] : remap) fresh = next++;
  for (Placement& p : placements) p.bin_index = remap[p.bin_index];
  bin_count = next;
}

BinPacking concat(const BinPacking& a, const BinPacking& b) {
  BinPacking out = a;
  for (const Placement& p : b.placements) {
    Placement q = p;
    q.bin_index += a.bin_count;
    out.placements.push_back(q);
  }
  out.bin_count = a.bin_count + b.bin_count;
  return out;
}

ValidationReport validate_packing(const Instance& inst, const BinPacking& packing,
                                  bool require_all_packed, const Rat& tol) {
  ValidationReport report;
  auto flag = [&](const std::string& kind, const std::string& detail) {
    report.violations.push_back({kind, detail});
  };

  std::set<std::string> placed_ids;
  std::set<int> used_bins;
  std::vector<std::pair<const Placement*, const Item*>> resolved;
  for (const Placement& p : packing.placements) {
    int idx = inst.item_index(p.item_id);
    if (idx < 0) {
      flag("unknown_item", "placement references unknown item '" + p.item_id + "'");
      continue;
    }
    if (!placed_ids.insert(p.item_id).second) {
      flag("duplicate", "item '" + p.item_id + "' placed more than once");
      continue;
    }
    if (p.bin_index < 0 || p.bin_index >= packing.bin_count) {
      flag("bad_bin_index", "item '" + p.item_id + "' in bin " +
                                std::to_string(p.bin_index) + " of " +
                                std::to_string(packing.bin_count));
      continue;
    }
    used_bins.insert(p.bin_index);
    resolved.emplace_back(&p, &inst.items[idx]);
  }

  // Containment.
  for (auto& [p, it] : resolved) {
    if (p->x < -tol || p->y < -tol || p->x + it->w > 1 + tol ||
        p->y + it->h > 1 + tol)
      flag("out_of_bin", "item '" + p->item_id + "' at (" +
                             to_fraction_string(p->x) + "," +
                             to_fraction_string(p->y) + ") exceeds the bin");
  }

  // Pairwise open-interior disjointness inside each bin. Shared edges are
  // legal; zero-area items occupy no interior.
  for (size_t a = 0; a < resolved.size(); ++a) {
    auto& [pa, ia] = resolved[a];
    if (ia->area() == 0) continue;
    for (size_t b = a + 1; b < resolved.size(); ++b) {
      auto& [pb, ib] = resolved[b];
      if (ib->area() == 0 || pa->bin_index != pb->bin_index) continue;
      bool x_overlap = pa->x + ia->w > pb->x + tol && pb->x + ib->w > pa->x + tol;
      bool y_overlap = pa->y + ia->h > pb->y + tol && pb->y + ib->h > pa->y + tol;
      if (x_overlap && y_overlap)
        flag("overlap", "items '" + pa->item_id + "' and '" + pb->item_id +
                            "' intersect in bin " + std::to_string(pa->bin_index));
    }
  }

  // Per-bin weight sums.
  {
    std::map<int, std::vector<Rat>> load;
    for (auto& [p, it] : resolved) {
      auto& w = load[p->bin_index];
      if (w.empty()) w.assign(inst.d, Rat(0));
      for (int j = 0; j < inst.d; ++j) w[j] += it->v[j];
    }
    for (auto& [bin, w] : load)
      for (int j = 0; j < inst.d; ++j)
        if (w[j] > 1 + tol)
          flag("weight", "bin " + std::to_string(bin) + " dimension " +
                             std::to_string(j) + " sums to " +
                             to_fraction_string(w[j]));
  }

  if (require_all_packed) {
    for (const Item& it : inst.items)
      if (!placed_ids.count(it.id))
        flag("unpacked", "item '" + it.id + "' is not placed");
  }

  return report;
}

}  // namespace gvbp
