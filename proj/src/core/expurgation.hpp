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

#ifndef RELBOUND_CORE_EXPURGATION_HPP_
#define RELBOUND_CORE_EXPURGATION_HPP_

#include <vector>

#include "core/channel.hpp"
#include "core/gallager.hpp"

namespace relbound {

// Pairwise Bhattacharyya overlaps of the k-letter extension, indexed by
// input k-tuples. Values are doubles, the zero pattern is exact, and the
// diagonal is exactly 1. The k-letter matrix is the elementwise k-fold
// Kronecker power of the single-letter one.
struct GramMatrix {
  int n = 0;
  std::vector<double> values;       // row-major n*n
  std::vector<std::uint8_t> zeros;  // 1 where the overlap is exactly zero

  double at(int i, int j) const {
    return values[static_cast<std::size_t>(i) * n + j];
  }
  bool is_zero(int i, int j) const {
    return zeros[static_cast<std::size_t>(i) * n + j] != 0;
  }
};

GramMatrix gram(const Channel& w, int k, long size_cap = kDefaultSizeCap);

struct QkMinimum {
  double value;
  std::vector<double> minimizer;
};

// min over input distributions P of sum_{i,j} P_i P_j g_ij^(1/rho), where
// zero overlaps stay exactly zero for every rho.

// Projected-gradient multistart: uniform, all vertices, and two-point seeds
// favouring non-confusable pairs; each run is polished by solving the
// stationary system on its support.
QkMinimum qk_min_multistart(const GramMatrix& g, double rho);

// Exhaustive stationary-point enumeration over all supports; exact up to
// linear-solve rounding. Requires n <= 12.
QkMinimum qk_min_exhaustive(const GramMatrix& g, double rho);

// Dispatches to the exhaustive oracle when |X|^k <= 12, else multistart.
QkMinimum qk_min(const Channel& w, double rho, int k,
                 long size_cap = kDefaultSizeCap);

// Expurgated exponent at parameter rho >= 1:
//   E_x(rho, k) = -(rho/k) log2 qk_min(rho, k).
double e_x(const Channel& w, double rho, int k,
           long size_cap = kDefaultSizeCap);

// Exact k-letter expurgation threshold (1/k) log2 alpha(G(W)^k); below this
// rate the expurgated bound is infinite.
struct ExpurgationRate {
  long alpha;
  int k;
  double rate;
};

ExpurgationRate r_ex(const Channel& w, int k, long size_cap = kDefaultSizeCap);

struct ExpurgationResult {
  BoundValue value;
  double rho_star = 0.0;
  std::vector<double> p_star;
};

// Expurgated bound E_ex(R, k) = sup over rho >= 1 of E_x(rho, k) - rho R.
// R <= r_ex(W, k) reports infinity with the exact alpha certificate; finite
// values are clamped below at 0. Throws RhoCapExceeded if the bracket is
// still climbing at cfg.rho_cap.
ExpurgationResult e_ex(const Channel& w, double rate, int k,
                       const RhoSearchConfig& cfg = {},
                       long size_cap = kDefaultSizeCap);

}  // namespace relbound

#endif  // RELBOUND_CORE_EXPURGATION_HPP_
