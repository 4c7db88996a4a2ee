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

#include "core/gallager.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "core/errors.hpp"
#include "core/game.hpp"

namespace relbound {

namespace {

void check_distribution(const Channel& w, const std::vector<double>& p) {
  if (static_cast<int>(p.size()) != w.input_size()) {
    throw AlphabetMismatch("distribution has " + std::to_string(p.size()) +
                           " entries, channel has " +
                           std::to_string(w.input_size()) + " inputs");
  }
  double sum = 0.0;
  for (double v : p) {
    if (v < 0.0) throw ValidationError("distribution entry is negative");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw ValidationError("distribution sums to " + std::to_string(sum));
  }
}

// W(y|x)^(1/(1+rho)) with exact zeros preserved, indexed [x][y].
std::vector<std::vector<double>> powered_rows(const Channel& w, double rho) {
  const double s = 1.0 / (1.0 + rho);
  std::vector<std::vector<double>> v(w.input_size(),
                                     std::vector<double>(w.output_size()));
  for (int x = 0; x < w.input_size(); ++x) {
    for (int y = 0; y < w.output_size(); ++y) {
      v[x][y] = w.positive(x, y) ? std::pow(rat_to_double(w.prob(x, y)), s)
                                 : 0.0;
    }
  }
  return v;
}

// F(P) = sum_y (sum_x P(x) V(x,y))^(1+rho), the quantity E0 minimizes the
// log of. Convex in P for rho >= 0.
double inner_objective(const std::vector<std::vector<double>>& v, double rho,
                       const std::vector<double>& p) {
  const int inputs = static_cast<int>(v.size());
  const int outputs = static_cast<int>(v[0].size());
  double f = 0.0;
  for (int y = 0; y < outputs; ++y) {
    double a = 0.0;
    for (int x = 0; x < inputs; ++x) a += p[x] * v[x][y];
    if (a > 0.0) f += std::pow(a, 1.0 + rho);
  }
  return f;
}

struct AscentRun {
  bool converged = false;
  double objective = std::numeric_limits<double>::infinity();
  std::vector<double> p;
};

// Minimizes the convex F over the simplex with multiplicative mirror steps
// P(x) <- P(x) k_x^{-beta}, where k_x = sum_y V(x,y) alpha_y^rho is
// (1+rho)^{-1} dF/dP(x). Convexity gives the global gap certificate
// F - F* <= (1+rho)(F - min_x k_x), the only acceptance test. beta = 1/rho
// is the classical monotone alternating-minimization step; near the fixed
// point the dynamics are linear in each coordinate, so escalating beta
// geometrically (keeping only F-decreases) fast-forwards the slow tail that
// plain steps crawl through when rho is large or an input is nearly tied.
AscentRun ascend(const std::vector<std::vector<double>>& v, double rho,
                 std::vector<double> p, double tol, int max_iter) {
  const int inputs = static_cast<int>(v.size());
  const int outputs = static_cast<int>(v[0].size());
  std::vector<double> alpha_pow(outputs), k(inputs), k_cand(inputs);
  std::vector<double> cand(inputs), best_p(inputs), best_k(inputs), t(inputs);

  auto eval = [&](const std::vector<double>& q, std::vector<double>& kq) {
    double f = 0.0;
    for (int y = 0; y < outputs; ++y) {
      double a = 0.0;
      for (int x = 0; x < inputs; ++x) a += q[x] * v[x][y];
      alpha_pow[y] = a > 0.0 ? std::pow(a, rho) : 0.0;
      f += a * alpha_pow[y];
    }
    for (int x = 0; x < inputs; ++x) {
      double kx = 0.0;
      for (int y = 0; y < outputs; ++y) kx += v[x][y] * alpha_pow[y];
      kq[x] = kx;
    }
    return f;
  };
  // q(x) proportional to p(x) k_x^{-beta}, in log space so huge beta is safe.
  // p(x) > 0 forces k_x > 0 (rows are stochastic), so the log is defined.
  auto step = [&](double beta, std::vector<double>& out) {
    double t_max = -std::numeric_limits<double>::infinity();
    for (int x = 0; x < inputs; ++x) {
      t[x] = p[x] > 0.0 ? std::log(p[x]) - beta * std::log(k[x])
                        : -std::numeric_limits<double>::infinity();
      t_max = std::max(t_max, t[x]);
    }
    double z = 0.0;
    for (int x = 0; x < inputs; ++x) {
      out[x] = std::isfinite(t[x]) ? std::exp(t[x] - t_max) : 0.0;
      z += out[x];
    }
    for (int x = 0; x < inputs; ++x) out[x] /= z;
  };

  AscentRun run;
  double f = eval(p, k);
  for (int iter = 0; iter < max_iter; ++iter) {
    const double k_min = *std::min_element(k.begin(), k.end());
    const double f_floor = f - (1.0 + rho) * (f - k_min);
    if (f_floor > 0.0 && std::log2(f / f_floor) <= tol) {
      run.converged = true;
      run.objective = f;
      run.p = std::move(p);
      return run;
    }
    double best_f = std::numeric_limits<double>::infinity();
    double prev = std::numeric_limits<double>::infinity();
    double beta = (1.0 + rho) / rho;
    for (int lvl = 0; lvl < 64; ++lvl) {
      step(beta, cand);
      const double fc = eval(cand, k_cand);
      if (fc < best_f) {
        best_f = fc;
        best_p = cand;
        best_k = k_cand;
      }
      if (!(fc < prev)) break;
      prev = fc;
      beta *= 2.0;
    }
    if (best_f < f) {
      p = best_p;
      k = best_k;
      f = best_f;
      continue;
    }
    // No strict decrease found: take the plain step unconditionally. It is
    // mathematically non-increasing, and it keeps contracting p (and the
    // certificate gap) even once F is pinned at double resolution.
    step(1.0 / rho, cand);
    f = eval(cand, k_cand);
    std::swap(p, cand);
    std::swap(k, k_cand);
  }
  run.objective = f;
  run.p = std::move(p);
  return run;
}

// Golden-section maximization of a unimodal-or-concave f on [lo, hi];
// returns the better of the interior probe and both endpoints.
std::pair<double, double> golden_max(const std::function<double(double)>& f,
                                     double lo, double hi, double xtol,
                                     double f_lo, double f_hi) {
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - ratio * (b - a), d = a + ratio * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > xtol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = f(d);
    }
  }
  double x = (a + b) / 2;
  double fx = f(x);
  if (f_lo > fx) {
    x = lo;
    fx = f_lo;
  }
  if (f_hi > fx) {
    x = hi;
    fx = f_hi;
  }
  return {x, fx};
}

bool all_rows_equal(const Channel& w) {
  for (int x = 1; x < w.input_size(); ++x) {
    for (int y = 0; y < w.output_size(); ++y) {
      if (w.prob(x, y) != w.prob(0, y)) return false;
    }
  }
  return true;
}

}  // namespace

double e0(const Channel& w, double rho, const std::vector<double>& p) {
  if (rho < 0.0) throw ValidationError("rho must be >= 0");
  check_distribution(w, p);
  if (rho == 0.0) return 0.0;
  return -std::log2(inner_objective(powered_rows(w, rho), rho, p));
}

E0Maximum e0_max(const Channel& w, double rho, const RhoSearchConfig& cfg) {
  if (rho < 0.0) throw ValidationError("rho must be >= 0");
  const int n = w.input_size();
  std::vector<double> uniform(n, 1.0 / n);
  if (rho < 1e-12) return {0.0, uniform};

  const auto v = powered_rows(w, rho);
  const double tol = std::min(cfg.tolerance, 1e-9) * 0.5;

  std::vector<std::vector<double>> starts;
  starts.push_back(uniform);
  for (int x = 0; x < n; ++x) {
    std::vector<double> p(n, 0.1 / n);
    p[x] += 0.9;
    starts.push_back(std::move(p));
  }

  // The gap certificate bounds the global minimum, so the first start that
  // certifies settles the value; extra starts only rescue stalled runs.
  for (auto& start : starts) {
    AscentRun run = ascend(v, rho, std::move(start), tol, cfg.max_iter);
    if (run.converged) return {-std::log2(run.objective), std::move(run.p)};
  }
  throw NonConvergence("E0 ascent did not converge at rho = " +
                       std::to_string(rho));
}

double capacity(const Channel& w, double tolerance) {
  const int n = w.input_size(), m = w.output_size();
  std::vector<double> p(n, 1.0 / n), q(m), d(n);
  std::vector<std::vector<double>> rows(n, std::vector<double>(m));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < m; ++y) rows[x][y] = rat_to_double(w.prob(x, y));
  }

  double upper_best = std::numeric_limits<double>::infinity();
  const long max_iter = 1000000;
  for (long iter = 0; iter < max_iter; ++iter) {
    for (int y = 0; y < m; ++y) {
      double qy = 0.0;
      for (int x = 0; x < n; ++x) qy += p[x] * rows[x][y];
      q[y] = qy;
    }
    double lower = 0.0, upper = -std::numeric_limits<double>::infinity();
    for (int x = 0; x < n; ++x) {
      double dx = 0.0;
      for (int y = 0; y < m; ++y) {
        if (rows[x][y] > 0.0) {
          dx += rows[x][y] * std::log2(rows[x][y] / q[y]);
        }
      }
      d[x] = dx;
      lower += p[x] * dx;
      upper = std::max(upper, dx);
    }
    upper_best = std::min(upper_best, upper);
    if (upper_best - lower <= tolerance) {
      return (upper_best + lower) / 2;
    }
    double z = 0.0;
    for (int x = 0; x < n; ++x) {
      p[x] *= std::exp2(d[x] - upper);
      z += p[x];
    }
    for (int x = 0; x < n; ++x) p[x] /= z;
  }
  throw NonConvergence("capacity iteration did not reach tolerance " +
                       std::to_string(tolerance));
}

double e_r(const Channel& w, double rate, const RhoSearchConfig& cfg) {
  if (rate < 0.0) throw ValidationError("rate must be >= 0");
  auto f = [&](double rho) { return e0_max(w, rho, cfg).value - rho * rate; };
  auto [rho_star, best] = golden_max(f, 0.0, 1.0, 1e-6, 0.0, f(1.0));
  (void)rho_star;
  return std::max(0.0, best);
}

BoundValue e_sp(const Channel& w, double rate, const RhoSearchConfig& cfg) {
  if (rate < 0.0) throw ValidationError("rate must be >= 0");

  // Finiteness is decided by the exact game value, not by the numeric sup.
  ExactLogRate gate = psi_inf(w);
  if (rate <= gate.rate) {
    BoundValue out;
    out.infinite = true;
    out.value = std::numeric_limits<double>::infinity();
    out.certificate = InfinityCertificate{gate.psi, gate.rate};
    return out;
  }
  if (rate >= capacity(w, std::min(cfg.tolerance, 1e-9))) {
    BoundValue out;
    out.value = 0.0;
    return out;
  }

  auto f = [&](double rho) { return e0_max(w, rho, cfg).value - rho * rate; };

  // Expanding bracket 1, 2, 4, ... until the objective turns over.
  std::vector<double> grid{0.0};
  std::vector<double> vals{0.0};
  double rho = std::min(1.0, cfg.rho_cap);
  int turn = -1;
  for (;;) {
    grid.push_back(rho);
    vals.push_back(f(rho));
    const std::size_t k = grid.size() - 1;
    if (vals[k] <= vals[k - 1]) {
      turn = static_cast<int>(k);
      break;
    }
    if (rho >= cfg.rho_cap) break;
    rho = std::min(rho * 2.0, cfg.rho_cap);
  }
  if (turn < 0) {
    throw RhoCapExceeded("sphere packing objective still increasing at rho " +
                         std::to_string(cfg.rho_cap) + " for rate " +
                         std::to_string(rate));
  }

  const double lo = grid[turn >= 2 ? turn - 2 : 0];
  const double hi = grid[turn];
  const double f_lo = vals[turn >= 2 ? turn - 2 : 0];
  auto [rho_star, best] =
      golden_max(f, lo, hi, 1e-7 * (1.0 + hi), f_lo, vals[turn]);

  BoundValue out;
  out.value = std::max(0.0, best);
  out.witness = {rho_star, e0_max(w, rho_star, cfg).input_distribution};
  return out;
}

double r_crit(const Channel& w, const RhoSearchConfig& cfg) {
  if (all_rows_equal(w)) {
    throw DegenerateChannel("critical rate undefined at zero capacity");
  }
  RhoSearchConfig tight = cfg;
  tight.tolerance = 1e-12;
  const double h = 1e-5;
  double slope = (e0_max(w, 1.0 + h, tight).value -
                  e0_max(w, 1.0 - h, tight).value) /
                 (2.0 * h);
  const double lo = psi_inf(w).rate;
  const double hi = std::max(lo, capacity(w, 1e-10));
  return std::clamp(slope, lo, hi);
}

}  // namespace relbound
