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

#ifndef GVBP_RATIONAL_HPP_
#define GVBP_RATIONAL_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gvbp {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

// All solver arithmetic is exact. Decimal strings parse losslessly and
// doubles convert losslessly (every finite double is a dyadic rational), so
// there is a single numeric path through the whole library. Expression
// templates are off so values interoperate with std::max/std::tie.
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline BigInt num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Largest integer <= r.
inline BigInt floor_int(const Rat& r) {
  BigInt q = num(r) / den(r);
  if (r < 0 && q * den(r) != num(r)) --q;
  return q;
}

// Smallest integer >= r.
inline BigInt ceil_int(const Rat& r) {
  BigInt q = num(r) / den(r);
  if (r > 0 && q * den(r) != num(r)) ++q;
  return q;
}

inline bool is_integer(const Rat& r) { return den(r) == 1; }

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }

inline long to_long(const BigInt& b) { return b.template convert_to<long>(); }

Rat parse_decimal(const std::string& text);

// Shortest-ish representation: integers and p/q stay exact, used by reports.
std::string to_fraction_string(const Rat& r);

// Fixed number of significant digits, for CSV/JSON output of float-ish data.
std::string to_decimal_string(const Rat& r, int significant_digits = 9);

// Exact conversion; throws on NaN/inf.
Rat rat_from_double(double x);

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gvbp

#endif  // GVBP_RATIONAL_HPP_
