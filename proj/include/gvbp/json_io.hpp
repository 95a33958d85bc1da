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

#ifndef GVBP_JSON_IO_HPP_
#define GVBP_JSON_IO_HPP_

#include <string>

#include "gvbp/core.hpp"
#include "gvbp/packing.hpp"

namespace gvbp {

// Instance file format:
//   {"d": int, "items": [{"id": str, "w": num|str, "h": num|str,
//                         "v": [num|str x d], "p": optional num|str}]}
// Numbers given as strings are parsed as exact decimals; plain JSON numbers
// convert exactly from their double representation.
Instance instance_from_json(const std::string& text);
Instance load_instance(const std::string& path);
std::string instance_to_json(const Instance& inst);
void save_instance(const Instance& inst, const std::string& path);

// Packing file format:
//   {"bin_count": int, "placements": [{"id": str, "bin": int,
//                                      "x": num|str, "y": num|str}]}
BinPacking packing_from_json(const std::string& text);
BinPacking load_packing(const std::string& path);
std::string packing_to_json(const BinPacking& packing);
void save_packing(const BinPacking& packing, const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace gvbp

#endif  // GVBP_JSON_IO_HPP_
