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

#include "gvbp/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gvbp {

namespace {

using nlohmann::json;

Rat rat_from_json(const json& j, const std::string& where) {
  if (j.is_string()) return parse_decimal(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_number_float()) return rat_from_double(j.get<double>());
  throw ParseError("expected number or decimal string at " + where);
}

json rat_to_json(const Rat& r) {
  // Exact round trip: integers as JSON ints, everything else as "p/q".
  if (is_integer(r) && den(r) == 1 && num(r) >= -(1LL << 53) && num(r) <= (1LL << 53))
    return json(to_long(num(r)));
  return json(to_fraction_string(r));
}

}  // namespace

Instance instance_from_json(const std::string& text) {
  json j = json::parse(text);
  Instance inst;
  inst.d = j.at("d").get<int>();
  for (const auto& ij : j.at("items")) {
    Item it;
    it.id = ij.at("id").get<std::string>();
    it.w = rat_from_json(ij.at("w"), "item '" + it.id + "' w");
    it.h = rat_from_json(ij.at("h"), "item '" + it.id + "' h");
    if (ij.contains("v"))
      for (const auto& vj : ij.at("v"))
        it.v.push_back(rat_from_json(vj, "item '" + it.id + "' v"));
    if (ij.contains("p") && !ij.at("p").is_null())
      it.profit = rat_from_json(ij.at("p"), "item '" + it.id + "' p");
    inst.items.push_back(std::move(it));
  }
  inst.check();
  return inst;
}

std::string instance_to_json(const Instance& inst) {
  json j;
  j["d"] = inst.d;
  j["items"] = json::array();
  for (const Item& it : inst.items) {
    json ij;
    ij["id"] = it.id;
    ij["w"] = rat_to_json(it.w);
    ij["h"] = rat_to_json(it.h);
    ij["v"] = json::array();
    for (const Rat& x : it.v) ij["v"].push_back(rat_to_json(x));
    if (it.profit) ij["p"] = rat_to_json(*it.profit);
    j["items"].push_back(ij);
  }
  return j.dump(2);
}

BinPacking packing_from_json(const std::string& text) {
  json j = json::parse(text);
  BinPacking p;
  p.bin_count = j.at("bin_count").get<int>();
  for (const auto& pj : j.at("placements")) {
    Placement pl;
    pl.item_id = pj.at("id").get<std::string>();
    pl.bin_index = pj.at("bin").get<int>();
    pl.x = rat_from_json(pj.at("x"), "placement x");
    pl.y = rat_from_json(pj.at("y"), "placement y");
    p.placements.push_back(std::move(pl));
  }
  return p;
}

std::string packing_to_json(const BinPacking& packing) {
  json j;
  j["bin_count"] = packing.bin_count;
  j["placements"] = json::array();
  for (const Placement& pl : packing.placements) {
    json pj;
    pj["id"] = pl.item_id;
    pj["bin"] = pl.bin_index;
    pj["x"] = rat_to_json(pl.x);
    pj["y"] = rat_to_json(pl.y);
    j["placements"].push_back(pj);
  }
  return j.dump(2);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << content;
}

Instance load_instance(const std::string& path) {
  return instance_from_json(read_file(path));
}
void save_instance(const Instance& inst, const std::string& path) {
  write_file(path, instance_to_json(inst));
}
BinPacking load_packing(const std::string& path) {
  return packing_from_json(read_file(path));
}
void save_packing(const BinPacking& packing, const std::string& path) {
  write_file(path, packing_to_json(packing));
}

}  // namespace gvbp
