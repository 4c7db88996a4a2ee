// Copyright 2026 The relbound authors.
//
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

#include "core/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstddef>

#include "core/errors.hpp"

namespace relbound {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  std::size_t start = 0;
  if (start < text.size() && (text[start] == '+' || text[start] == '-')) {
    ++start;
  }
  std::size_t slash = text.find('/');
  bool ok;
  if (slash == std::string::npos) {
    ok = all_digits(text, start, text.size());
  } else {
    ok = all_digits(text, start, slash) &&
         all_digits(text, slash + 1, text.size());
  }
  if (!ok) throw ParseError("not a rational: \"" + text + "\"");

  Rat q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) {
    throw ParseError("not a rational: \"" + text + "\"");
  }
  if (q.get_den() == 0) {
    throw ParseError("zero denominator: \"" + text + "\"");
  }
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

double rat_to_double(const Rat& q) { return q.get_d(); }

double rat_log2(const Rat& q) {
  // mpz_get_d_2exp gives z = d * 2^e with 0.5 <= |d| < 1, so log2 stays exact
  // in range even when the integer itself overflows double.
  signed long num_exp = 0, den_exp = 0;
  double num_d = mpz_get_d_2exp(&num_exp, q.get_num().get_mpz_t());
  double den_d = mpz_get_d_2exp(&den_exp, q.get_den().get_mpz_t());
  return (std::log2(num_d) + static_cast<double>(num_exp)) -
         (std::log2(den_d) + static_cast<double>(den_exp));
}

}  // namespace relbound
