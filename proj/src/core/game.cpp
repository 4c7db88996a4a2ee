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

#include "core/game.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

#include "core/errors.hpp"

namespace relbound {

namespace {

// Normalized game (value known positive, M >= 0): the LP
//     max 1^T z   s.t.   M z <= 1,  z >= 0
// has optimum 1/value; z*/1^T z* is the column player's optimal mixture and
// the duals y*/1^T y* the row player's.
struct ScaledLp {
  Rat objective;
  std::vector<Rat> z;      // one per column
  std::vector<Rat> duals;  // one per row
};

ScaledLp solve_scaled_lp(const RatMatrix& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  const int total = cols + rows;  // structural variables, then slacks

  // Dense tableau [M | I | b] with b = 1; cost row holds reduced costs and
  // the negated objective in its last cell.
  std::vector<std::vector<Rat>> t(rows, std::vector<Rat>(total + 1, Rat(0)));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) t[i][j] = m[i][j];
    t[i][cols + i] = 1;
    t[i][total] = 1;
  }
  std::vector<Rat> cost(total + 1, Rat(0));
  for (int j = 0; j < cols; ++j) cost[j] = 1;
  std::vector<int> basis(rows);
  for (int i = 0; i < rows; ++i) basis[i] = cols + i;

  for (;;) {
    // Bland's rule: smallest-index column with positive reduced cost.
    int enter = -1;
    for (int j = 0; j < total; ++j) {
      if (cost[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    Rat best_ratio;
    for (int i = 0; i < rows; ++i) {
      if (t[i][enter] > 0) {
        Rat ratio = t[i][total] / t[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave < 0) {
      throw DegenerateMatrix("game LP is unbounded");
    }

    Rat pivot = t[leave][enter];
    for (int j = 0; j <= total; ++j) t[leave][j] /= pivot;
    for (int i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat factor = t[i][enter];
      for (int j = 0; j <= total; ++j) t[i][j] -= factor * t[leave][j];
    }
    if (cost[enter] != 0) {
      Rat factor = cost[enter];
      for (int j = 0; j <= total; ++j) cost[j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
  }

  ScaledLp out;
  out.objective = -cost[total];
  out.z.assign(cols, Rat(0));
  for (int i = 0; i < rows; ++i) {
    if (basis[i] < cols) out.z[basis[i]] = t[i][total];
  }
  out.duals.resize(rows);
  for (int i = 0; i < rows; ++i) out.duals[i] = -cost[cols + i];
  return out;
}

RatMatrix support_to_payoff(const SupportMatrix& support) {
  RatMatrix payoff(support.outputs(),
                   std::vector<Rat>(support.inputs(), Rat(0)));
  for (int y = 0; y < support.outputs(); ++y) {
    for (int x = 0; x < support.inputs(); ++x) {
      if (support.at(y, x)) payoff[y][x] = 1;
    }
  }
  return payoff;
}

// Payoff matrix (2J - A^T) whose max-min value is 2 - min-max value of A.
RatMatrix shifted_transpose(const RatMatrix& a) {
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  RatMatrix out(cols, std::vector<Rat>(rows));
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) out[j][i] = Rat(2) - a[i][j];
  }
  return out;
}

}  // namespace

GameSolution solve_game(const RatMatrix& payoff) {
  if (payoff.empty() || payoff[0].empty()) {
    throw DegenerateMatrix("payoff matrix is empty");
  }
  const int rows = static_cast<int>(payoff.size());
  const int cols = static_cast<int>(payoff[0].size());
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(payoff[i].size()) != cols) {
      throw DegenerateMatrix("payoff matrix is ragged");
    }
    for (int j = 0; j < cols; ++j) {
      if (payoff[i][j] < 0) {
        throw DegenerateMatrix("payoff entries must be nonnegative");
      }
    }
  }
  for (int j = 0; j < cols; ++j) {
    bool any = false;
    for (int i = 0; i < rows && !any; ++i) any = payoff[i][j] > 0;
    if (!any) {
      throw DegenerateMatrix("column " + std::to_string(j) +
                             " is identically zero");
    }
  }

  ScaledLp lp = solve_scaled_lp(payoff);
  if (lp.objective <= 0) {
    throw std::logic_error("scaled game LP returned nonpositive objective");
  }

  GameSolution sol;
  sol.value = 1 / lp.objective;
  sol.col_strategy.resize(cols);
  for (int j = 0; j < cols; ++j) sol.col_strategy[j] = lp.z[j] * sol.value;
  sol.row_strategy.resize(rows);
  for (int i = 0; i < rows; ++i) sol.row_strategy[i] = lp.duals[i] * sol.value;

  sol.column_payoffs.assign(cols, Rat(0));
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      sol.column_payoffs[j] += sol.row_strategy[i] * payoff[i][j];
    }
  }
  sol.row_payoffs.assign(rows, Rat(0));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      sol.row_payoffs[i] += payoff[i][j] * sol.col_strategy[j];
    }
  }

  // Exact optimality certificate; failure would mean a solver bug.
  Rat row_sum = 0, col_sum = 0;
  for (const Rat& p : sol.row_strategy) {
    if (p < 0) throw std::logic_error("negative row strategy weight");
    row_sum += p;
  }
  for (const Rat& p : sol.col_strategy) {
    if (p < 0) throw std::logic_error("negative column strategy weight");
    col_sum += p;
  }
  if (row_sum != 1 || col_sum != 1) {
    throw std::logic_error("game strategies do not normalize");
  }
  for (const Rat& p : sol.column_payoffs) {
    if (p < sol.value) throw std::logic_error("row strategy not optimal");
  }
  for (const Rat& p : sol.row_payoffs) {
    if (p > sol.value) throw std::logic_error("column strategy not optimal");
  }
  return sol;
}

GameSolution solve_support_game(const SupportMatrix& support) {
  return solve_game(support_to_payoff(support));
}

ExactLogRate psi_inf(const Channel& w) {
  GameSolution sol = solve_support_game(support_matrix(w));
  return {sol.value, rat_log2(1 / sol.value)};
}

ExactLogRate psi_fb(const Channel& w) {
  RatMatrix game = shifted_transpose(support_to_payoff(support_matrix(w)));
  GameSolution sol = solve_game(game);
  Rat psi = Rat(2) - sol.value;
  return {psi, rat_log2(1 / psi)};
}

ExactLogRate c0_fb(const Channel& w) {
  bool has_nonconfusable_pair = false;
  for (int i = 0; i < w.input_size() && !has_nonconfusable_pair; ++i) {
    for (int j = i + 1; j < w.input_size(); ++j) {
      if (bhattacharyya(w, i, j).is_zero) {
        has_nonconfusable_pair = true;
        break;
      }
    }
  }
  if (!has_nonconfusable_pair) return {Rat(1), 0.0};
  return psi_fb(w);
}

FictitiousPlayResult fictitious_play_value(
    const std::vector<std::vector<double>>& payoff, double tol,
    long max_iterations) {
  if (payoff.empty() || payoff[0].empty()) {
    throw DegenerateMatrix("payoff matrix is empty");
  }
  const int rows = static_cast<int>(payoff.size());
  const int cols = static_cast<int>(payoff[0].size());

  // row_cum[i]: payoff of pure row i against the column player's history;
  // col_cum[j]: payoff of pure column j against the row player's history.
  std::vector<double> row_cum(rows, 0.0), col_cum(cols, 0.0);
  double upper_best = std::numeric_limits<double>::infinity();
  double lower_best = -std::numeric_limits<double>::infinity();

  for (long t = 1; t <= max_iterations; ++t) {
    int bi = 0;
    for (int i = 1; i < rows; ++i) {
      if (row_cum[i] > row_cum[bi]) bi = i;
    }
    for (int j = 0; j < cols; ++j) col_cum[j] += payoff[bi][j];

    int bj = 0;
    for (int j = 1; j < cols; ++j) {
      if (col_cum[j] < col_cum[bj]) bj = j;
    }
    for (int i = 0; i < rows; ++i) row_cum[i] += payoff[i][bj];

    // After t plays each: max_i row_cum[i]/t upper-bounds the value (best
    // pure reply to the column mixture), min_j col_cum[j]/t lower-bounds it.
    double upper = row_cum[0], lower = col_cum[0];
    for (int i = 1; i < rows; ++i) upper = std::max(upper, row_cum[i]);
    for (int j = 1; j < cols; ++j) lower = std::min(lower, col_cum[j]);
    upper_best = std::min(upper_best, upper / t);
    lower_best = std::max(lower_best, lower / t);
    if (upper_best - lower_best <= tol) {
      return {(upper_best + lower_best) / 2, upper_best - lower_best, t};
    }
  }
  throw NonConvergence("fictitious play did not reach gap " +
                       std::to_string(tol) + " within " +
                       std::to_string(max_iterations) + " iterations");
}

}  // namespace relbound
