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

// Acceptance gate: twelve independently checkable statements about the
// library, each printed as a single [PASS]/[FAIL] line. The process exits
// with the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "core/approx.hpp"
#include "core/channel.hpp"
#include "core/expurgation.hpp"
#include "core/gallager.hpp"
#include "core/game.hpp"
#include "core/zero_error.hpp"
#include "testutil.hpp"

namespace {

using namespace relbound;
using testing::random_channel;
using testing::random_support_channel;
using Clock = std::chrono::steady_clock;

struct Checker {
  std::ostringstream detail;
  int failed = 0;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (failed++) detail << "; ";
      detail << what;
    }
  }
};

double h2(double e) {
  if (e == 0.0 || e == 1.0) return 0.0;
  return -e * std::log2(e) - (1.0 - e) * std::log2(1.0 - e);
}

constexpr double kLog2ThreeHalves = 0.5849625007211562;

void criterion_1(Checker& c) {
  auto t0 = Clock::now();
  for (long den : {10L, 4L, 2L}) {
    ExactLogRate r = psi_inf(Channel::typewriter(3, rat(1, den)));
    c.require(r.psi == rat(2, 3),
              "psi(TW3(1/" + std::to_string(den) + ")) != 2/3");
    c.require(std::abs(r.rate - kLog2ThreeHalves) <= 1e-12,
              "R_inf(TW3) off log2(3/2)");
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  c.require(secs < 1.0, "took " + std::to_string(secs) + "s (budget 1s)");
}

void criterion_2(Checker& c) {
  std::mt19937_64 rng(0xACCE0002);
  int bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int nx = 2 + static_cast<int>(rng() % 5);
    int ny = 2 + static_cast<int>(rng() % 5);
    Channel w = random_channel(rng, nx, ny);
    if (psi_inf(w).psi != psi_fb(w).psi) ++bad;
  }
  c.require(bad == 0, std::to_string(bad) + "/200 minimax mismatches");
}

void criterion_3(Checker& c) {
  std::mt19937_64 rng(0xACCE0003);
  int bad = 0;
  for (int trial = 0; trial < 50; ++trial) {
    // Factors up to 6x6 keep every product alphabet at or below 36.
    Channel a = random_channel(rng, 2 + static_cast<int>(rng() % 5),
                               2 + static_cast<int>(rng() % 5));
    Channel b = random_channel(rng, 2 + static_cast<int>(rng() % 5),
                               2 + static_cast<int>(rng() % 5));
    Rat lhs = psi_inf(kronecker(a, b)).psi;
    Rat rhs = psi_inf(a).psi * psi_inf(b).psi;
    if (lhs != rhs) ++bad;
  }
  c.require(bad == 0, std::to_string(bad) + "/50 additivity failures");
}

void criterion_4(Checker& c) {
  Channel id2 = Channel::identity(2);
  Channel tw3 = Channel::typewriter(3, rat(1, 4));
  ExactLogRate a = c0_fb(id2);
  ExactLogRate b = c0_fb(tw3);
  ExactLogRate p = c0_fb(kronecker(id2, tw3));
  c.require(a.psi == rat(1, 2) && std::abs(a.rate - 1.0) <= 1e-12,
            "C0_fb(I2) != 1");
  c.require(b.psi == Rat(1) && b.rate == 0.0, "C0_fb(TW3) != 0");
  c.require(p.psi == rat(1, 3), "psi(I2 x TW3) != 1/3");
  c.require(std::abs(p.rate - (1.0 + kLog2ThreeHalves)) <= 1e-12,
            "C0_fb(I2 x TW3) != 1 + log2(3/2)");
}

void criterion_5(Checker& c) {
  for (int q : {3, 4, 5}) {
    for (long den : {10L, 4L, 2L}) {
      auto t0 = Clock::now();
      double cap = capacity(Channel::typewriter(q, rat(1, den)), 1e-9);
      double secs = std::chrono::duration<double>(Clock::now() - t0).count();
      double want = std::log2(q) - h2(1.0 / den);
      std::string tag = "TW" + std::to_string(q) + "(1/" +
                        std::to_string(den) + ")";
      c.require(std::abs(cap - want) <= 1e-6, tag + " capacity off");
      c.require(secs < 1.0, tag + " took " + std::to_string(secs) + "s");
    }
  }
}

void criterion_6(Checker& c) {
  ZeroErrorLowerBound tw4 = c0_lower(Channel::typewriter(4, rat(1, 4)), 1);
  c.require(tw4.alpha == 2 && std::abs(tw4.rate - 1.0) <= 1e-12,
            "c0_lower(TW4,1) != 1");
  Channel tw5 = Channel::typewriter(5, rat(1, 4));
  ZeroErrorLowerBound one = c0_lower(tw5, 1);
  c.require(one.alpha == 2 && std::abs(one.rate - 1.0) <= 1e-12,
            "c0_lower(TW5,1) != 1");
  auto t0 = Clock::now();
  ZeroErrorLowerBound two = c0_lower(tw5, 2);
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  c.require(two.alpha == 5, "alpha(C5 strong 2) != 5");
  c.require(std::abs(two.rate - 0.5 * std::log2(5.0)) <= 1e-12,
            "c0_lower(TW5,2) != (1/2) log2 5");
  c.require(secs < 5.0,
            "25-vertex search took " + std::to_string(secs) + "s");
}

void criterion_7(Checker& c) {
  Channel tw5 = Channel::typewriter(5, rat(1, 2));
  ExpurgationRate r1 = r_ex(tw5, 1);
  ExpurgationRate r2 = r_ex(tw5, 2);
  c.require(r1.alpha == 2 && std::abs(r1.rate - 1.0) <= 1e-12,
            "r_ex(TW5,1) != 1");
  c.require(r2.alpha == 5 && std::abs(r2.rate - 0.5 * std::log2(5.0)) <= 1e-12,
            "r_ex(TW5,2) != (1/2) log2 5");
  c.require(r2.rate >= r1.rate, "r_ex not monotone in k");
}

void criterion_8(Checker& c) {
  for (const Channel& w : {Channel::binary_symmetric(rat(1, 10)),
                           Channel::typewriter(3, rat(1, 4))}) {
    double r_inf = psi_inf(w).rate;
    double cap = capacity(w);
    double rc = r_crit(w);
    double span = cap - r_inf;
    int order_bad = 0, equal_bad = 0;
    for (int i = 0; i < 100; ++i) {
      double r = r_inf + span * (0.02 + (1.10 - 0.02) * i / 99.0);
      BoundValue sp = e_sp(w, r);
      if (sp.infinite) {
        ++order_bad;
        continue;
      }
      double er = e_r(w, r);
      if (er > sp.value + 1e-9) ++order_bad;
      if (r >= rc && std::abs(er - sp.value) > 1e-6) ++equal_bad;
    }
    c.require(order_bad == 0,
              std::to_string(order_bad) + " ordering violations");
    c.require(equal_bad == 0,
              std::to_string(equal_bad) + " equality violations above R_crit");
  }
}

void criterion_9(Checker& c) {
  Channel bsc = Channel::binary_symmetric(rat(1, 10));
  ExpurgationResult ex = e_ex(bsc, 0.01, 1);
  double er = e_r(bsc, 0.01);
  c.require(!ex.value.infinite, "E_ex unexpectedly infinite");
  c.require(ex.value.value - er >= 1e-4,
            "margin " + std::to_string(ex.value.value - er) + " < 1e-4");
}

void criterion_10(Checker& c) {
  std::mt19937_64 rng(0xACCE0010);
  std::vector<Channel> channels{
      Channel::typewriter(3, rat(1, 4)),  Channel::typewriter(3, rat(1, 2)),
      Channel::typewriter(5, rat(1, 2)),  Channel::binary_symmetric(rat(1, 10)),
      Channel::identity(2),               Channel::identity(3),
      Channel::uniform(2, 2),             random_channel(rng, 3, 4),
      random_support_channel(rng, 4, 3)};
  for (std::size_t i = 0; i < channels.size(); ++i) {
    const Channel& w = channels[i];
    Rat psi = psi_inf(w).psi;
    Rat prev(0);
    for (int n = 1; n <= 50; ++n) {
      Rat phi = phi_n_exact(w, n);
      std::string tag = "channel " + std::to_string(i) + ", N=" +
                        std::to_string(n);
      c.require(phi >= prev, "phi decreased at " + tag);
      c.require(phi <= psi, "phi above psi at " + tag);
      Rat gap = psi - phi;
      c.require(gap <= phi_error_bound_exact(w, n),
                "gap bound violated at " + tag);
      prev = phi;
      if (c.failed > 8) return;  // enough detail
    }
  }

  // V_N collapses below 1e-3 within budget while U_N stays above R_inf.
  Channel tw3 = Channel::typewriter(3, rat(1, 4));
  int hit = 0;
  for (int n = 1; n <= 2000; ++n) {
    if (u_n_psi_exact(tw3, n) > rat(2, 3)) {
      c.require(false, "U_N below log2(3/2) at N=" + std::to_string(n));
      break;
    }
    if (v_n(tw3, n) <= 1e-3) {
      hit = n;
      break;
    }
  }
  c.require(hit > 0, "V_N never reached 1e-3 by N=2000");
}

void criterion_11(Checker& c) {
  std::mt19937_64 rng(0xACCE0011);
  int sound_bad = 0, complete_bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    int nx = 2 + static_cast<int>(rng() % 5);
    int ny = 2 + static_cast<int>(rng() % 5);
    Channel w = random_support_channel(rng, nx, ny);
    double rate = psi_inf(w).rate;
    if (rate > 0.0) {
      SemiDecision sd = semi_decide_below(w, rate, ApproxQuantity::kRInf, 500);
      if (sd.accepted) ++sound_bad;
    }
    SemiDecision cd =
        semi_decide_below(w, rate + 0.1, ApproxQuantity::kRInf, 500);
    if (!cd.accepted) ++complete_bad;
  }
  c.require(sound_bad == 0,
            std::to_string(sound_bad) + " unsound acceptances");
  c.require(complete_bad == 0,
            std::to_string(complete_bad) + " missed certificates");
}

void criterion_12(Checker& c) {
  std::mt19937_64 rng(0xACCE0012);
  int fp_bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    int nx = 2 + static_cast<int>(rng() % 5);
    int ny = 2 + static_cast<int>(rng() % 5);
    Channel w = random_support_channel(rng, nx, ny);
    SupportMatrix s = support_matrix(w);
    std::vector<std::vector<double>> payoff(
        s.outputs(), std::vector<double>(s.inputs(), 0.0));
    for (int y = 0; y < s.outputs(); ++y) {
      for (int x = 0; x < s.inputs(); ++x) payoff[y][x] = s.at(y, x) ? 1 : 0;
    }
    double exact = rat_to_double(solve_support_game(s).value);
    FictitiousPlayResult fp = fictitious_play_value(payoff, 2e-6);
    if (std::abs(fp.value - exact) > 1e-6) ++fp_bad;
  }
  c.require(fp_bad == 0,
            std::to_string(fp_bad) + "/100 fictitious-play mismatches");

  int qk_bad = 0;
  for (int trial = 0; trial < 15; ++trial) {
    Channel w = random_channel(rng, 3, 4, 24, 0.35);
    for (double rho : {1.0, 2.0}) {
      for (int k : {1, 2}) {  // 3^k <= 10
        GramMatrix g = gram(w, k);
        double oracle = qk_min_exhaustive(g, rho).value;
        double fast = qk_min_multistart(g, rho).value;
        if (std::abs(fast - oracle) > 1e-6) ++qk_bad;
      }
    }
  }
  c.require(qk_bad == 0, std::to_string(qk_bad) + " qk_min mismatches");
}

struct Criterion {
  int index;
  const char* label;
  std::function<void(Checker&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "exact typewriter game values", criterion_1},
      {2, "minimax equality psi_inf == psi_fb", criterion_2},
      {3, "additivity over kronecker products", criterion_3},
      {4, "feedback super-additivity witness", criterion_4},
      {5, "typewriter capacity closed form", criterion_5},
      {6, "zero-error pentagon values", criterion_6},
      {7, "expurgation thresholds", criterion_7},
      {8, "bound ordering and tangency", criterion_8},
      {9, "expurgation beats random coding", criterion_9},
      {10, "monotone approximation sequences", criterion_10},
      {11, "semi-decision soundness and completeness", criterion_11},
      {12, "numeric oracles match exact solvers", criterion_12},
  };

  int failures = 0;
  for (const Criterion& cr : criteria) {
    Checker check;
    auto t0 = Clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.require(false, std::string("exception: ") + e.what());
    }
    double ms =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (check.failed == 0) {
      std::printf("[PASS] criterion %2d: %s (%.0f ms)\n", cr.index, cr.label,
                  ms);
    } else {
      ++failures;
      std::printf("[FAIL] criterion %2d: %s — %s\n", cr.index, cr.label,
                  check.detail.str().c_str());
    }
  }
  if (failures) std::printf("%d of 12 criteria failed\n", failures);
  return failures;
}
