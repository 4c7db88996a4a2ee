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

#ifndef RELBOUND_CORE_CHANNEL_HPP_
#define RELBOUND_CORE_CHANNEL_HPP_

#include <cstdint>
#include <vector>

#include "core/rational.hpp"

namespace relbound {

// Default cap on |X|*|Y| for constructed channels (products, extensions).
inline constexpr long kDefaultSizeCap = 4096;

// Zero/nonzero pattern of a channel, indexed [output][input]. Finiteness
// questions (which bounds are infinite, which inputs are confusable) depend
// on W only through this matrix.
class SupportMatrix {
 public:
  SupportMatrix(int outputs, int inputs)
      : outputs_(outputs), inputs_(inputs), bits_(
            static_cast<std::size_t>(outputs) * inputs, 0) {}

  int outputs() const { return outputs_; }
  int inputs() const { return inputs_; }
  bool at(int y, int x) const {
    return bits_[static_cast<std::size_t>(y) * inputs_ + x] != 0;
  }
  void set(int y, int x, bool value) {
    bits_[static_cast<std::size_t>(y) * inputs_ + x] = value ? 1 : 0;
  }
  bool operator==(const SupportMatrix& other) const {
    return outputs_ == other.outputs_ && inputs_ == other.inputs_ &&
           bits_ == other.bits_;
  }

 private:
  int outputs_;
  int inputs_;
  std::vector<std::uint8_t> bits_;
};

// Discrete memoryless channel: a row-stochastic matrix of exact rationals,
// rows indexed by input, columns by output. Construction validates shape,
// nonnegativity, and exact row sums.
class Channel {
 public:
  static Channel from_rows(std::vector<std::vector<Rat>> rows);

  // Noiseless n-ary channel, W(y|x) = [y == x].
  static Channel identity(int n);

  // Cyclic typewriter channel on q >= 2 symbols: W(x|x) = 1 - epsilon,
  // W(x+1 mod q|x) = epsilon, with 0 <= epsilon <= 1/2.
  static Channel typewriter(int q, const Rat& epsilon);

  // Binary symmetric channel with crossover probability p in [0, 1].
  static Channel binary_symmetric(const Rat& p);

  // Channel whose every row is uniform over all outputs (zero capacity).
  static Channel uniform(int inputs, int outputs);

  int input_size() const { return static_cast<int>(rows_.size()); }
  int output_size() const {
    return rows_.empty() ? 0 : static_cast<int>(rows_[0].size());
  }

  // W(y|x); throws IndexOutOfRange.
  const Rat& prob(int x, int y) const;
  bool positive(int x, int y) const { return prob(x, y) > 0; }

  const std::vector<Rat>& row(int x) const;

  bool operator==(const Channel& other) const { return rows_ == other.rows_; }

 private:
  explicit Channel(std::vector<std::vector<Rat>> rows)
      : rows_(std::move(rows)) {}

  std::vector<std::vector<Rat>> rows_;
};

// Bhattacharyya overlap sum_y sqrt(W(y|x0) W(y|x1)). The zero flag is exact
// (decided on the support pattern); the value is a double evaluation.
struct BhattacharyyaCoefficient {
  bool is_zero;
  double value;
};

// Product channel on X_a x X_b -> Y_a x Y_b; row-major index pairing.
// Throws SizeOverflow when an alphabet would exceed size_cap.
Channel kronecker(const Channel& a, const Channel& b,
                  long size_cap = kDefaultSizeCap);

// n-fold memoryless extension W^n.
Channel extension(const Channel& w, int n, long size_cap = kDefaultSizeCap);

SupportMatrix support_matrix(const Channel& w);

BhattacharyyaCoefficient bhattacharyya(const Channel& w, int x0, int x1);

// L1 distance max_x sum_y |W(y|x) - V(y|x)|, exact. Alphabets must match.
Rat channel_distance(const Channel& a, const Channel& b);

}  // namespace relbound

#endif  // RELBOUND_CORE_CHANNEL_HPP_
