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

#include "core/zero_error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "core/errors.hpp"

namespace relbound {

ConfusabilityGraph::ConfusabilityGraph(int n) : n_(n) {
  if (n < 1) throw EmptyAlphabet("graph needs at least one vertex");
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

bool ConfusabilityGraph::adjacent(int a, int b) const {
  if (a < 0 || a >= n_ || b < 0 || b >= n_) {
    throw IndexOutOfRange("vertex outside graph of size " +
                          std::to_string(n_));
  }
  return adj_[static_cast<std::size_t>(a) * n_ + b] != 0;
}

void ConfusabilityGraph::add_edge(int a, int b) {
  if (a < 0 || a >= n_ || b < 0 || b >= n_) {
    throw IndexOutOfRange("vertex outside graph of size " +
                          std::to_string(n_));
  }
  if (a == b) return;
  adj_[static_cast<std::size_t>(a) * n_ + b] = 1;
  adj_[static_cast<std::size_t>(b) * n_ + a] = 1;
}

int ConfusabilityGraph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < n_; ++u) {
    if (u != v && adjacent(v, u)) ++d;
  }
  return d;
}

long ConfusabilityGraph::edge_count() const {
  long e = 0;
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      if (adjacent(a, b)) ++e;
    }
  }
  return e;
}

std::string ConfusabilityGraph::to_adjacency_text() const {
  std::ostringstream out;
  for (int v = 0; v < n_; ++v) {
    out << v << ':';
    for (int u = 0; u < n_; ++u) {
      if (u != v && adjacent(v, u)) out << ' ' << u;
    }
    out << '\n';
  }
  return out.str();
}

ConfusabilityGraph confusability_graph(const Channel& w) {
  ConfusabilityGraph g(w.input_size());
  for (int a = 0; a < w.input_size(); ++a) {
    for (int b = a + 1; b < w.input_size(); ++b) {
      if (!bhattacharyya(w, a, b).is_zero) g.add_edge(a, b);
    }
  }
  return g;
}

ConfusabilityGraph strong_product(const ConfusabilityGraph& a,
                                  const ConfusabilityGraph& b,
                                  long size_cap) {
  const long n = static_cast<long>(a.size()) * b.size();
  if (n > size_cap) {
    throw SizeOverflow("strong product has " + std::to_string(n) +
                       " vertices, over the size cap " +
                       std::to_string(size_cap));
  }
  ConfusabilityGraph g(static_cast<int>(n));
  auto index = [&](int va, int vb) { return va * b.size() + vb; };
  for (int a1 = 0; a1 < a.size(); ++a1) {
    for (int b1 = 0; b1 < b.size(); ++b1) {
      for (int a2 = 0; a2 < a.size(); ++a2) {
        for (int b2 = 0; b2 < b.size(); ++b2) {
          if (a1 == a2 && b1 == b2) continue;
          const bool a_ok = (a1 == a2) || a.adjacent(a1, a2);
          const bool b_ok = (b1 == b2) || b.adjacent(b1, b2);
          if (a_ok && b_ok) g.add_edge(index(a1, b1), index(a2, b2));
        }
      }
    }
  }
  return g;
}

ConfusabilityGraph strong_power(const ConfusabilityGraph& g, int n,
                                long size_cap) {
  if (n < 1) throw ValidationError("strong power needs n >= 1");
  long vertices = g.size();
  for (int i = 1; i < n; ++i) {
    vertices *= g.size();
    if (vertices > size_cap) {
      throw SizeOverflow("strong power " + std::to_string(n) + " has " +
                         std::to_string(vertices) +
                         " vertices, over the size cap " +
                         std::to_string(size_cap));
    }
  }
  ConfusabilityGraph out = g;
  for (int i = 1; i < n; ++i) out = strong_product(out, g, size_cap);
  return out;
}

namespace {

// Branch and bound over 64-bit vertex masks. Vertices are pre-sorted by
// descending degree, which both picks strong branching vertices first and
// tightens the greedy clique cover.
struct MisSolver {
  int n;
  std::vector<std::uint64_t> nbr;  // closed-ish: neighbors only, sans self
  int best = 0;

  // Upper bound: partition the candidate set into greedily grown cliques;
  // an independent set meets each clique at most once.
  int clique_cover_bound(std::uint64_t cands) const {
    int cliques = 0;
    while (cands) {
      int v = std::countr_zero(cands);
      cands &= cands - 1;
      std::uint64_t common = cands & nbr[v];
      while (common) {
        int u = std::countr_zero(common);
        common &= common - 1;
        cands &= ~(std::uint64_t{1} << u);
        common &= nbr[u];
      }
      ++cliques;
    }
    return cliques;
  }

  void expand(std::uint64_t cands, int current) {
    if (current > best) best = current;
    if (!cands) return;
    if (current + clique_cover_bound(cands) <= best) return;
    int v = std::countr_zero(cands);
    std::uint64_t bit = std::uint64_t{1} << v;
    expand((cands & ~bit) & ~nbr[v], current + 1);  // take v
    expand(cands & ~bit, current);                  // skip v
  }
};

}  // namespace

int independence_number(const ConfusabilityGraph& g) {
  const int n = g.size();
  if (n > 64) {
    throw BudgetExceeded("independence number limited to 64 vertices, got " +
                         std::to_string(n));
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return g.degree(a) > g.degree(b);
  });
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  MisSolver solver;
  solver.n = n;
  solver.nbr.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && g.adjacent(a, b)) {
        solver.nbr[pos[a]] |= std::uint64_t{1} << pos[b];
      }
    }
  }
  std::uint64_t all =
      (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  solver.expand(all, 0);
  return solver.best;
}

ZeroErrorLowerBound c0_lower(const Channel& w, int n, long size_cap) {
  ConfusabilityGraph g = strong_power(confusability_graph(w), n, size_cap);
  int alpha = independence_number(g);
  return {alpha, n, std::log2(static_cast<double>(alpha)) / n};
}

bool c0_positive(const Channel& w) {
  for (int a = 0; a < w.input_size(); ++a) {
    for (int b = a + 1; b < w.input_size(); ++b) {
      if (bhattacharyya(w, a, b).is_zero) return true;
    }
  }
  return false;
}

}  // namespace relbound
