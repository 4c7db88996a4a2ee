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

#ifndef RELBOUND_CORE_ZERO_ERROR_HPP_
#define RELBOUND_CORE_ZERO_ERROR_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "core/channel.hpp"

namespace relbound {

// Undirected graph on channel inputs; an edge means the two inputs share an
// output and can be confused.
class ConfusabilityGraph {
 public:
  explicit ConfusabilityGraph(int n);

  int size() const { return n_; }
  bool adjacent(int a, int b) const;
  void add_edge(int a, int b);
  int degree(int v) const;
  long edge_count() const;

  // One line per vertex: "v: n1 n2 ...".
  std::string to_adjacency_text() const;

 private:
  int n_;
  std::vector<std::uint8_t> adj_;
};

ConfusabilityGraph confusability_graph(const Channel& w);

// Strong graph product: distinct (a1, b1) ~ (a2, b2) iff each coordinate is
// equal or adjacent. Independent sets correspond to zero-error codes for the
// product channel.
ConfusabilityGraph strong_product(const ConfusabilityGraph& a,
                                  const ConfusabilityGraph& b,
                                  long size_cap = kDefaultSizeCap);

ConfusabilityGraph strong_power(const ConfusabilityGraph& g, int n,
                                long size_cap = kDefaultSizeCap);

// Exact maximum independent set size, branch and bound with greedy
// clique-cover pruning. Throws BudgetExceeded above 64 vertices.
int independence_number(const ConfusabilityGraph& g);

struct ZeroErrorLowerBound {
  long alpha;        // independence number of the n-th strong power
  int block_length;  // n
  double rate;       // log2(alpha) / n
};

// (1/n) log2 alpha(G(W)^n): the best zero-error rate achievable with block
// length n, a lower bound on the zero-error capacity.
ZeroErrorLowerBound c0_lower(const Channel& w, int n,
                             long size_cap = kDefaultSizeCap);

// Whether any two inputs are non-confusable, i.e. C0 > 0. Exact.
bool c0_positive(const Channel& w);

}  // namespace relbound

#endif  // RELBOUND_CORE_ZERO_ERROR_HPP_
