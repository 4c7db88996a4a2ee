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

#ifndef RELBOUND_CORE_APPROX_HPP_
#define RELBOUND_CORE_APPROX_HPP_

#include <string>
#include <vector>

#include "core/channel.hpp"
#include "core/rational.hpp"

namespace relbound {

// Smoothed support game: the 0/1 payoff [W(y|x) > 0] is replaced by
// N W(y|x) / (1 + N W(y|x)), which increases to the indicator as N grows.
// All evaluations below are exact rationals; the log rates are doubles.

// phi_N = value of the smoothed game, nondecreasing in N with limit psi_inf.
Rat phi_n_exact(const Channel& w, int n);
double phi_n(const Channel& w, int n);

// F_N = log2(1/phi_N), a computable nonincreasing upper bound on R_inf.
double f_n(const Channel& w, int n);

// Guaranteed gap: psi_inf - phi_N <= 1/(1 + N m) with m the smallest
// positive channel entry.
Rat phi_error_bound_exact(const Channel& w, int n);
double phi_error_bound(const Channel& w, int n);

// Feedback analogue: min-max value of the smoothed game, and the rate
// U_N = log2(1/value), a nonincreasing upper bound on log2(1/psi_fb).
Rat u_n_psi_exact(const Channel& w, int n);
double u_n(const Channel& w, int n);

// V_N = (1 - prod g)^N * U_N with g the Bhattacharyya overlap over ordered
// pairs of distinct inputs. When some pair is non-confusable the prefactor
// is exactly 1 and V_N tracks U_N -> C0_fb from above; when every pair is
// confusable the prefactor drives V_N -> 0 = C0_fb.
double v_n(const Channel& w, int n);

enum class ApproxQuantity { kRInf, kC0Fb };

struct TracePoint {
  int n;
  double value;        // F_N or V_N
  double error_bound;  // psi gap bound for kRInf, NaN otherwise
};

struct ApproxTrace {
  ApproxQuantity quantity;
  double target;  // exact limit, for reference
  std::vector<TracePoint> points;
};

ApproxTrace build_trace(const Channel& w, ApproxQuantity quantity, int n_max);

// CSV with header N,value,error_bound,target; error_bound cells are empty
// when no guaranteed bound applies.
std::string trace_to_csv(const ApproxTrace& trace);

struct SemiDecision {
  bool accepted;
  int accepted_at;  // first N with value < lambda; 0 when not accepted
  int budget;
  double lambda;
};

// Semi-decision procedure for "quantity < lambda": scans N = 1..budget and
// accepts at the first N whose upper bound drops below lambda. Sound always;
// termination guaranteed only when the strict inequality holds.
SemiDecision semi_decide_below(const Channel& w, double lambda,
                               ApproxQuantity quantity, int budget);

}  // namespace relbound

#endif  // RELBOUND_CORE_APPROX_HPP_
