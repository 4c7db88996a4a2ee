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

#ifndef RELBOUND_CORE_GAME_HPP_
#define RELBOUND_CORE_GAME_HPP_

#include <vector>

#include "core/channel.hpp"
#include "core/rational.hpp"

namespace relbound {

using RatMatrix = std::vector<std::vector<Rat>>;

// Exact solution of the zero-sum matrix game value = max_v min_u v^T M u,
// v a distribution over rows, u over columns. The payoff vectors certify
// optimality: every entry of column_payoffs is >= value (the row strategy
// guarantees value against any pure column) and every entry of row_payoffs
// is <= value.
struct GameSolution {
  Rat value;
  std::vector<Rat> row_strategy;
  std::vector<Rat> col_strategy;
  std::vector<Rat> column_payoffs;  // (M^T row_strategy)_j
  std::vector<Rat> row_payoffs;     // (M col_strategy)_i
};

// An exactly known rational psi together with rate = log2(1/psi).
struct ExactLogRate {
  Rat psi;
  double rate;
};

// Solves the game exactly with rational simplex (Bland's rule, so pivoting
// terminates). Requires a nonnegative payoff matrix in which every column has
// a positive entry; DegenerateMatrix otherwise.
GameSolution solve_game(const RatMatrix& payoff);

// The 0/1 game on a channel's support pattern: rows are outputs, columns are
// inputs, payoff [W(y|x) > 0].
GameSolution solve_support_game(const SupportMatrix& support);

// psi_inf = max over output distributions Q of min_x Q(supp W(.|x)); the
// rate log2(1/psi) is the threshold below which sphere packing is infinite.
ExactLogRate psi_inf(const Channel& w);

// psi_fb = min over input distributions P of max_y P(inputs reaching y).
// Solved as its own LP on the shifted transposed game 2J - A^T, giving an
// independent pivot path from psi_inf; the two values agree by minimax.
ExactLogRate psi_fb(const Channel& w);

// Zero-error feedback capacity: 0 when no two inputs are non-confusable,
// log2(1/psi_fb) otherwise. psi is the gate value (1 in the zero case).
ExactLogRate c0_fb(const Channel& w);

struct FictitiousPlayResult {
  double value;      // midpoint of the final bracket
  double gap;        // width of the bracket, an a posteriori error bound
  long iterations;
};

// Iterative floating-point oracle for the same game value. Tracks the
// monotone bracket [best lower, best upper] from both players' empirical
// mixtures and stops once its width reaches tol. Throws NonConvergence if
// the budget runs out first.
FictitiousPlayResult fictitious_play_value(
    const std::vector<std::vector<double>>& payoff, double tol = 1e-6,
    long max_iterations = 50000000);

}  // namespace relbound

#endif  // RELBOUND_CORE_GAME_HPP_
