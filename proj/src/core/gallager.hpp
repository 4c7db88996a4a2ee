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

#ifndef RELBOUND_CORE_GALLAGER_HPP_
#define RELBOUND_CORE_GALLAGER_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "core/channel.hpp"
#include "core/rational.hpp"

namespace relbound {

// Knobs for the rho searches and inner ascents. rho_cap bounds the expanding
// bracket for sup over rho; tolerance is an absolute tolerance on returned
// values (bits).
struct RhoSearchConfig {
  double rho_cap = 64.0;
  double tolerance = 1e-9;
  int max_iter = 200;
};

// Gallager exponent function
//   E0(rho, P) = -log2 sum_y (sum_x P(x) W(y|x)^(1/(1+rho)))^(1+rho)
// in bits, with 0^s = 0.
double e0(const Channel& w, double rho, const std::vector<double>& p);

struct E0Maximum {
  double value;
  std::vector<double> input_distribution;
};

// max_P E0(rho, P) by alternating minimization on the inner sum (convex in
// P), uniform start plus perturbed vertex restarts, KKT-gap stopping rule.
E0Maximum e0_max(const Channel& w, double rho,
                 const RhoSearchConfig& cfg = {});

// Shannon capacity in bits, Blahut-Arimoto with a monotone two-sided
// bracket; the result is within `tolerance` of C(W).
double capacity(const Channel& w, double tolerance = 1e-9);

// Random-coding exponent E_r(R) = max over rho in [0,1] of E0*(rho) - rho R,
// clamped below at 0.
double e_r(const Channel& w, double rate, const RhoSearchConfig& cfg = {});

// Exact witness attached to an infinite bound: the rational game value psi
// behind the finiteness gate and the threshold rate it encodes.
struct InfinityCertificate {
  Rat psi;
  double threshold_rate;
};

// Value of a bound that may be infinite. Finite values are >= 0 and may
// carry the maximizing (rho, P).
struct BoundValue {
  bool infinite = false;
  double value = 0.0;
  std::optional<InfinityCertificate> certificate;            // when infinite
  std::optional<std::pair<double, std::vector<double>>> witness;  // (rho*, P*)
};

// Sphere-packing exponent E_sp(R) = sup over rho >= 0 of E0*(rho) - rho R.
// R <= R_inf(W) (exact rational gate, equality included) reports infinity
// with certificate; R >= C(W) reports 0. Throws RhoCapExceeded if the
// bracket is still climbing at rho_cap.
BoundValue e_sp(const Channel& w, double rate, const RhoSearchConfig& cfg = {});

// Critical rate dE0*/drho at rho = 1, clamped into [R_inf(W), C(W)].
// Throws DegenerateChannel when C(W) = 0.
double r_crit(const Channel& w, const RhoSearchConfig& cfg = {});

}  // namespace relbound

#endif  // RELBOUND_CORE_GALLAGER_HPP_
