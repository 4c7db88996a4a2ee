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

#ifndef RELBOUND_CORE_RATIONAL_HPP_
#define RELBOUND_CORE_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>

namespace relbound {

// Exact rational scalar. All channel entries and game values are Rat; floats
// never enter the exact layer.
using Rat = mpq_class;

// Parses "num/den" or a bare integer (optional sign). Rejects anything else,
// including decimal points and exponents, with ParseError.
Rat parse_rational(const std::string& text);

// Canonical "num/den" (or "num" when den == 1) rendering.
std::string rat_to_string(const Rat& q);

double rat_to_double(const Rat& q);

// log2 of a positive rational, robust to numerators/denominators far outside
// double range.
double rat_log2(const Rat& q);

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace relbound

#endif  // RELBOUND_CORE_RATIONAL_HPP_
