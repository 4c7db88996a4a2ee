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

#include "core/approx.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "core/errors.hpp"
#include "core/game.hpp"

namespace relbound {

namespace {

void check_n(int n) {
  if (n < 1) throw ValidationError("smoothing index N must be >= 1");
}

// B_N[y][x] = N W(y|x) / (1 + N W(y|x)), exact.
RatMatrix smoothed_payoff(const Channel& w, int n) {
  RatMatrix b(w.output_size(), std::vector<Rat>(w.input_size()));
  for (int y = 0; y < w.output_size(); ++y) {
    for (int x = 0; x < w.input_size(); ++x) {
      Rat scaled = Rat(n) * w.prob(x, y);
      b[y][x] = scaled / (1 + scaled);
    }
  }
  return b;
}

// log of the decay prefactor for V_N: N * log(1 - prod g) in natural log,
// or exactly zero prefactor (returns -inf) when all overlaps are 1.
double v_n_prefactor(const Channel& w, int n) {
  for (int i = 0; i < w.input_size(); ++i) {
    for (int j = 0; j < w.input_size(); ++j) {
      if (i != j && bhattacharyya(w, i, j).is_zero) return 1.0;
    }
  }
  // Overlap is exactly 1 iff the rows coincide; if every pair does, the
  // prefactor is exactly zero and no float product should say otherwise.
  bool all_equal = true;
  for (int i = 1; i < w.input_size() && all_equal; ++i) {
    all_equal = w.row(i) == w.row(0);
  }
  if (all_equal) return 0.0;

  double log_prod = 0.0;
  for (int i = 0; i < w.input_size(); ++i) {
    for (int j = 0; j < w.input_size(); ++j) {
      if (i != j) log_prod += std::log(bhattacharyya(w, i, j).value);
    }
  }
  const double prod = std::exp(log_prod);
  if (prod >= 1.0) return 0.0;
  return std::exp(n * std::log1p(-prod));
}

}  // namespace

Rat phi_n_exact(const Channel& w, int n) {
  check_n(n);
  return solve_game(smoothed_payoff(w, n)).value;
}

double phi_n(const Channel& w, int n) {
  return rat_to_double(phi_n_exact(w, n));
}

double f_n(const Channel& w, int n) {
  return rat_log2(1 / phi_n_exact(w, n));
}

Rat phi_error_bound_exact(const Channel& w, int n) {
  check_n(n);
  Rat m = 1;
  bool seen = false;
  for (int x = 0; x < w.input_size(); ++x) {
    for (int y = 0; y < w.output_size(); ++y) {
      const Rat& p = w.prob(x, y);
      if (p > 0 && (!seen || p < m)) {
        m = p;
        seen = true;
      }
    }
  }
  return 1 / (1 + Rat(n) * m);
}

double phi_error_bound(const Channel& w, int n) {
  return rat_to_double(phi_error_bound_exact(w, n));
}

Rat u_n_psi_exact(const Channel& w, int n) {
  check_n(n);
  // Same shift as psi_fb: the min-max value of B_N is 2 minus the max-min
  // value of 2J - B_N^T.
  RatMatrix b = smoothed_payoff(w, n);
  RatMatrix shifted(w.input_size(), std::vector<Rat>(w.output_size()));
  for (int x = 0; x < w.input_size(); ++x) {
    for (int y = 0; y < w.output_size(); ++y) {
      shifted[x][y] = Rat(2) - b[y][x];
    }
  }
  return Rat(2) - solve_game(shifted).value;
}

double u_n(const Channel& w, int n) {
  return rat_log2(1 / u_n_psi_exact(w, n));
}

double v_n(const Channel& w, int n) {
  check_n(n);
  return v_n_prefactor(w, n) * u_n(w, n);
}

ApproxTrace build_trace(const Channel& w, ApproxQuantity quantity, int n_max) {
  check_n(n_max);
  ApproxTrace trace;
  trace.quantity = quantity;
  if (quantity == ApproxQuantity::kRInf) {
    trace.target = psi_inf(w).rate;
  } else {
    trace.target = c0_fb(w).rate;
  }
  trace.points.reserve(n_max);
  for (int n = 1; n <= n_max; ++n) {
    TracePoint p;
    p.n = n;
    if (quantity == ApproxQuantity::kRInf) {
      p.value = f_n(w, n);
      p.error_bound = phi_error_bound(w, n);
    } else {
      p.value = v_n(w, n);
      p.error_bound = std::numeric_limits<double>::quiet_NaN();
    }
    trace.points.push_back(p);
  }
  return trace;
}

std::string trace_to_csv(const ApproxTrace& trace) {
  std::ostringstream out;
  out.precision(12);
  out << "N,value,error_bound,target\n";
  for (const TracePoint& p : trace.points) {
    out << p.n << ',' << p.value << ',';
    if (!std::isnan(p.error_bound)) out << p.error_bound;
    out << ',' << trace.target << '\n';
  }
  return out.str();
}

SemiDecision semi_decide_below(const Channel& w, double lambda,
                               ApproxQuantity quantity, int budget) {
  if (lambda <= 0.0) throw ValidationError("lambda must be positive");
  if (budget < 1) throw ValidationError("budget must be >= 1");
  for (int n = 1; n <= budget; ++n) {
    const double value =
        quantity == ApproxQuantity::kRInf ? f_n(w, n) : v_n(w, n);
    if (value < lambda) return {true, n, budget, lambda};
  }
  return {false, 0, budget, lambda};
}

}  // namespace relbound
