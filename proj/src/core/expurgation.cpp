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

#include "core/expurgation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "core/errors.hpp"
#include "core/zero_error.hpp"

namespace relbound {

namespace {

// g^(1/rho) elementwise, zeros kept exactly zero.
std::vector<double> powered_gram(const GramMatrix& g, double rho) {
  std::vector<double> m(g.values.size());
  const double e = 1.0 / rho;
  for (std::size_t i = 0; i < m.size(); ++i) {
    m[i] = g.zeros[i] ? 0.0 : std::pow(g.values[i], e);
  }
  return m;
}

double quad_form(const std::vector<double>& m, const std::vector<double>& p) {
  const int n = static_cast<int>(p.size());
  double f = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += m[static_cast<std::size_t>(i) * n + j] * p[j];
    f += p[i] * row;
  }
  return f;
}

// Euclidean projection onto the probability simplex.
void project_simplex(std::vector<double>& p) {
  std::vector<double> u = p;
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cum = 0.0, theta = 0.0;
  int k = 0;
  for (int i = 0; i < static_cast<int>(u.size()); ++i) {
    cum += u[i];
    double t = (cum - 1.0) / (i + 1);
    if (u[i] - t > 0.0) {
      k = i + 1;
      theta = t;
    }
  }
  (void)k;
  for (double& v : p) v = std::max(0.0, v - theta);
}

// Stationary point of the quadratic on the given support: solve M_S x = 1,
// require x > 0, value 1/sum(x). Returns false when the face has no interior
// stationary point (singular system or a nonpositive coordinate).
bool face_stationary(const std::vector<double>& m, int n,
                     const std::vector<int>& support, double* value,
                     std::vector<double>* minimizer) {
  const int s = static_cast<int>(support.size());
  std::vector<double> a(static_cast<std::size_t>(s) * (s + 1));
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      a[static_cast<std::size_t>(i) * (s + 1) + j] =
          m[static_cast<std::size_t>(support[i]) * n + support[j]];
    }
    a[static_cast<std::size_t>(i) * (s + 1) + s] = 1.0;
  }
  // Gaussian elimination with partial pivoting.
  for (int col = 0; col < s; ++col) {
    int piv = col;
    for (int r = col + 1; r < s; ++r) {
      if (std::abs(a[static_cast<std::size_t>(r) * (s + 1) + col]) >
          std::abs(a[static_cast<std::size_t>(piv) * (s + 1) + col])) {
        piv = r;
      }
    }
    double head = a[static_cast<std::size_t>(piv) * (s + 1) + col];
    if (std::abs(head) < 1e-12) return false;
    if (piv != col) {
      for (int j = col; j <= s; ++j) {
        std::swap(a[static_cast<std::size_t>(piv) * (s + 1) + j],
                  a[static_cast<std::size_t>(col) * (s + 1) + j]);
      }
    }
    for (int r = 0; r < s; ++r) {
      if (r == col) continue;
      double factor = a[static_cast<std::size_t>(r) * (s + 1) + col] / head;
      if (factor == 0.0) continue;
      for (int j = col; j <= s; ++j) {
        a[static_cast<std::size_t>(r) * (s + 1) + j] -=
            factor * a[static_cast<std::size_t>(col) * (s + 1) + j];
      }
    }
  }
  std::vector<double> x(s);
  double sum = 0.0;
  for (int i = 0; i < s; ++i) {
    x[i] = a[static_cast<std::size_t>(i) * (s + 1) + s] /
           a[static_cast<std::size_t>(i) * (s + 1) + i];
    if (!(x[i] > 1e-12)) return false;
    sum += x[i];
  }
  *value = 1.0 / sum;
  minimizer->assign(n, 0.0);
  for (int i = 0; i < s; ++i) (*minimizer)[support[i]] = x[i] / sum;
  return true;
}

QkMinimum descend_from(const std::vector<double>& m, int n,
                       std::vector<double> p) {
  const double step = 0.5 / n;  // 1/L with L <= 2n for entries in [0, 1]
  std::vector<double> grad(n), next(n);
  for (int iter = 0; iter < 3000; ++iter) {
    for (int i = 0; i < n; ++i) {
      double row = 0.0;
      for (int j = 0; j < n; ++j) {
        row += m[static_cast<std::size_t>(i) * n + j] * p[j];
      }
      grad[i] = 2.0 * row;
    }
    for (int i = 0; i < n; ++i) next[i] = p[i] - step * grad[i];
    project_simplex(next);
    double moved = 0.0;
    for (int i = 0; i < n; ++i) moved = std::max(moved, std::abs(next[i] - p[i]));
    p.swap(next);
    if (moved < 1e-13) break;
  }
  double f = quad_form(m, p);

  // Polish on the detected support; accept only on improvement.
  std::vector<int> support;
  for (int i = 0; i < n; ++i) {
    if (p[i] > 1e-9) support.push_back(i);
  }
  double face_value;
  std::vector<double> face_min;
  if (!support.empty() &&
      face_stationary(m, n, support, &face_value, &face_min) &&
      face_value < f) {
    return {face_value, std::move(face_min)};
  }
  return {f, std::move(p)};
}

}  // namespace

GramMatrix gram(const Channel& w, int k, long size_cap) {
  if (k < 1) throw ValidationError("gram needs k >= 1");
  const int base = w.input_size();
  long size = 1;
  for (int i = 0; i < k; ++i) {
    size *= base;
    if (size > size_cap) {
      throw SizeOverflow("gram matrix would have " + std::to_string(size) +
                         " rows, over the size cap " +
                         std::to_string(size_cap));
    }
  }

  GramMatrix single;
  single.n = base;
  single.values.assign(static_cast<std::size_t>(base) * base, 0.0);
  single.zeros.assign(static_cast<std::size_t>(base) * base, 0);
  for (int i = 0; i < base; ++i) {
    for (int j = 0; j < base; ++j) {
      if (i == j) {
        single.values[static_cast<std::size_t>(i) * base + j] = 1.0;
        continue;
      }
      BhattacharyyaCoefficient b = bhattacharyya(w, i, j);
      single.values[static_cast<std::size_t>(i) * base + j] = b.value;
      single.zeros[static_cast<std::size_t>(i) * base + j] = b.is_zero ? 1 : 0;
    }
  }
  GramMatrix out = single;
  for (int step = 1; step < k; ++step) {
    const int prev = out.n;
    GramMatrix next;
    next.n = prev * base;
    next.values.assign(static_cast<std::size_t>(next.n) * next.n, 0.0);
    next.zeros.assign(static_cast<std::size_t>(next.n) * next.n, 0);
    for (int i1 = 0; i1 < prev; ++i1) {
      for (int i2 = 0; i2 < base; ++i2) {
        for (int j1 = 0; j1 < prev; ++j1) {
          for (int j2 = 0; j2 < base; ++j2) {
            const std::size_t idx =
                (static_cast<std::size_t>(i1) * base + i2) * next.n +
                (static_cast<std::size_t>(j1) * base + j2);
            const bool zero =
                out.is_zero(i1, j1) || single.is_zero(i2, j2);
            next.zeros[idx] = zero ? 1 : 0;
            next.values[idx] = zero ? 0.0 : out.at(i1, j1) * single.at(i2, j2);
          }
        }
      }
    }
    out = std::move(next);
  }
  return out;
}

QkMinimum qk_min_multistart(const GramMatrix& g, double rho) {
  if (rho <= 0.0) throw ValidationError("rho must be positive");
  const int n = g.n;
  if (n == 1) return {1.0, {1.0}};
  const std::vector<double> m = powered_gram(g, rho);

  std::vector<std::vector<double>> seeds;
  seeds.emplace_back(n, 1.0 / n);
  for (int i = 0; i < n; ++i) {
    std::vector<double> p(n, 0.0);
    p[i] = 1.0;
    seeds.push_back(std::move(p));
  }
  // Two-point seeds, smallest overlaps first (non-confusable pairs give the
  // strong local minima).
  std::vector<std::pair<double, std::pair<int, int>>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      pairs.push_back({m[static_cast<std::size_t>(i) * n + j], {i, j}});
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  const std::size_t pair_budget = std::min<std::size_t>(pairs.size(), 2 * n);
  for (std::size_t t = 0; t < pair_budget; ++t) {
    std::vector<double> p(n, 0.0);
    p[pairs[t].second.first] = 0.5;
    p[pairs[t].second.second] = 0.5;
    seeds.push_back(std::move(p));
  }

  QkMinimum best{std::numeric_limits<double>::infinity(), {}};
  for (auto& seed : seeds) {
    QkMinimum run = descend_from(m, n, std::move(seed));
    if (run.value < best.value) best = std::move(run);
  }
  return best;
}

QkMinimum qk_min_exhaustive(const GramMatrix& g, double rho) {
  if (rho <= 0.0) throw ValidationError("rho must be positive");
  const int n = g.n;
  if (n > 12) {
    throw BudgetExceeded("exhaustive support enumeration limited to 12 "
                         "inputs, got " + std::to_string(n));
  }
  if (n == 1) return {1.0, {1.0}};
  const std::vector<double> m = powered_gram(g, rho);

  QkMinimum best{1.0, std::vector<double>(n, 0.0)};
  best.minimizer[0] = 1.0;  // any vertex scores the unit diagonal
  std::vector<int> support;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    support.clear();
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) support.push_back(i);
    }
    if (support.size() < 2) continue;
    double value;
    std::vector<double> minimizer;
    if (face_stationary(m, n, support, &value, &minimizer) &&
        value < best.value) {
      best.value = value;
      best.minimizer = std::move(minimizer);
    }
  }
  return best;
}

namespace {

QkMinimum qk_min_on_matrix_dispatch(const GramMatrix& g, double rho) {
  return g.n <= 12 ? qk_min_exhaustive(g, rho) : qk_min_multistart(g, rho);
}

double e_x_from_gram(const GramMatrix& g, double rho, int k) {
  QkMinimum q = qk_min_on_matrix_dispatch(g, rho);
  return -(rho / k) * std::log2(q.value);
}

}  // namespace

QkMinimum qk_min(const Channel& w, double rho, int k, long size_cap) {
  return qk_min_on_matrix_dispatch(gram(w, k, size_cap), rho);
}

double e_x(const Channel& w, double rho, int k, long size_cap) {
  if (rho < 1.0) throw ValidationError("expurgation needs rho >= 1");
  return e_x_from_gram(gram(w, k, size_cap), rho, k);
}

ExpurgationRate r_ex(const Channel& w, int k, long size_cap) {
  if (k < 1) throw ValidationError("r_ex needs k >= 1");
  ConfusabilityGraph g = strong_power(confusability_graph(w), k, size_cap);
  const int alpha = independence_number(g);
  return {alpha, k, std::log2(static_cast<double>(alpha)) / k};
}

ExpurgationResult e_ex(const Channel& w, double rate, int k,
                       const RhoSearchConfig& cfg, long size_cap) {
  if (rate < 0.0) throw ValidationError("rate must be >= 0");
  ExpurgationRate threshold = r_ex(w, k, size_cap);
  if (rate <= threshold.rate) {
    ExpurgationResult out;
    out.value.infinite = true;
    out.value.value = std::numeric_limits<double>::infinity();
    out.value.certificate =
        InfinityCertificate{Rat(1, threshold.alpha), threshold.rate};
    return out;
  }

  const GramMatrix g = gram(w, k, size_cap);
  auto h = [&](double rho) { return e_x_from_gram(g, rho, k) - rho * rate; };

  std::vector<double> grid{1.0};
  std::vector<double> vals{h(1.0)};
  double rho = std::min(2.0, cfg.rho_cap);
  int turn = -1;
  if (rho <= 1.0) {
    turn = 0;  // cap at or below 1 pins the search to rho = 1
  }
  while (turn < 0) {
    grid.push_back(rho);
    vals.push_back(h(rho));
    const std::size_t j = grid.size() - 1;
    if (vals[j] <= vals[j - 1]) {
      turn = static_cast<int>(j);
      break;
    }
    if (rho >= cfg.rho_cap) break;
    rho = std::min(rho * 2.0, cfg.rho_cap);
  }
  if (turn < 0) {
    throw RhoCapExceeded("expurgated objective still increasing at rho " +
                         std::to_string(cfg.rho_cap) + " for rate " +
                         std::to_string(rate));
  }

  ExpurgationResult out;
  double rho_star, best;
  if (turn == 0) {
    rho_star = 1.0;
    best = vals[0];
  } else {
    const int lo_idx = turn >= 2 ? turn - 2 : 0;
    const double lo = grid[lo_idx], hi = grid[turn];
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - ratio * (b - a), d = a + ratio * (b - a);
    double fc = h(c), fd = h(d);
    const double xtol = 1e-7 * (1.0 + hi);
    while (b - a > xtol) {
      if (fc >= fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - ratio * (b - a);
        fc = h(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + ratio * (b - a);
        fd = h(d);
      }
    }
    rho_star = (a + b) / 2;
    best = h(rho_star);
    if (vals[lo_idx] > best) {
      rho_star = grid[lo_idx];
      best = vals[lo_idx];
    }
    if (vals[turn] > best) {
      rho_star = grid[turn];
      best = vals[turn];
    }
  }

  QkMinimum opt = qk_min_on_matrix_dispatch(g, rho_star);
  out.value.value = std::max(0.0, best);
  out.value.witness = {rho_star, opt.minimizer};
  out.rho_star = rho_star;
  out.p_star = opt.minimizer;
  return out;
}

}  // namespace relbound
