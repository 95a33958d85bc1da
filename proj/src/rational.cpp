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

#include "gvbp/rational.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace gvbp {

namespace {

BigInt pow10(long e) {
  BigInt r = 1;
  for (long i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

// Accepts: [+-]digits[.digits][(e|E)[+-]digits]  and  "p/q" fractions.
Rat parse_decimal(const std::string& text) {
  if (text.empty()) throw ParseError("empty number");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Rat p = parse_decimal(text.substr(0, slash));
    Rat q = parse_decimal(text.substr(slash + 1));
    if (q == 0) throw ParseError("zero denominator in '" + text + "'");
    return p / q;
  }
  size_t i = 0;
  bool neg = false;
  if (text[i] == '+' || text[i] == '-') {
    neg = text[i] == '-';
    ++i;
  }
  BigInt mantissa = 0;
  long frac_digits = 0;
  bool any_digit = false, seen_dot = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '.') {
      if (seen_dot) throw ParseError("bad number '" + text + "'");
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa = mantissa * 10 + (c - '0');
      if (seen_dot) ++frac_digits;
      any_digit = true;
    } else if (c == 'e' || c == 'E') {
      break;
    } else {
      throw ParseError("bad number '" + text + "'");
    }
  }
  long exp = 0;
  if (i < text.size()) {  // exponent part
    ++i;
    bool eneg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      eneg = text[i] == '-';
      ++i;
    }
    if (i >= text.size()) throw ParseError("bad exponent in '" + text + "'");
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("bad exponent in '" + text + "'");
      exp = exp * 10 + (text[i] - '0');
      if (exp > 1000000) throw ParseError("exponent too large in '" + text + "'");
    }
    if (eneg) exp = -exp;
  }
  if (!any_digit) throw ParseError("bad number '" + text + "'");
  long net = exp - frac_digits;
  Rat r(mantissa);
  if (net > 0)
    r *= Rat(pow10(net));
  else if (net < 0)
    r /= Rat(pow10(-net));
  return neg ? -r : r;
}

std::string to_fraction_string(const Rat& r) {
  std::ostringstream os;
  if (is_integer(r)) {
    os << num(r);
  } else {
    os << num(r) << '/' << den(r);
  }
  return os.str();
}

std::string to_decimal_string(const Rat& r, int significant_digits) {
  std::ostringstream os;
  os.precision(significant_digits);
  os << to_double(r);
  return os.str();
}

Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw ParseError("non-finite double");
  return Rat(x);  // exact: doubles are dyadic rationals
}

}  // namespace gvbp
