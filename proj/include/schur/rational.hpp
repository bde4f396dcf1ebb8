// Copyright 2026 The schur-choice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCHUR_RATIONAL_HPP
#define SCHUR_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>

#include "schur/error.hpp"

namespace schur {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Canonical text form: "p" when the denominator is 1, else "p/q" reduced.
inline std::string to_string(const Rat& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Parses "p", "p/q" (q > 0) or a plain decimal "12.375". Exact; no floating
/// point is involved.
inline Rat parse_rational(const std::string& text) {
  auto fail = [&] {
    throw InputError("cannot parse rational number from \"" + text + "\"");
  };
  if (text.empty()) fail();
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from == to) fail();
    Int value = 0;
    for (std::size_t i = from; i < to; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail();
      value = value * 10 + (text[i] - '0');
    }
    return value;
  };
  const std::size_t slash = text.find('/', pos);
  const std::size_t dot = text.find('.', pos);
  Rat out;
  if (slash != std::string::npos) {
    if (dot != std::string::npos) fail();
    Int num = digits(pos, slash);
    Int den = digits(slash + 1, text.size());
    if (den == 0) fail();
    out = Rat(num, den);
  } else if (dot != std::string::npos) {
    Int whole = digits(pos, dot);
    Int frac = digits(dot + 1, text.size());
    Int scale = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) scale *= 10;
    out = Rat(whole) + Rat(frac, scale);
  } else {
    out = Rat(digits(pos, text.size()));
  }
  return negative ? Rat(-out) : out;
}

}  // namespace schur

#endif  // SCHUR_RATIONAL_HPP
