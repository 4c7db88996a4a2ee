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

#include "core/channel.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "core/errors.hpp"

namespace relbound {

namespace {

void check_size(long inputs, long outputs, long size_cap,
                const std::string& what) {
  if (inputs <= 0 || outputs <= 0 || inputs > size_cap ||
      outputs > size_cap || inputs * outputs > size_cap) {
    throw SizeOverflow(what + " would have " + std::to_string(inputs) + "x" +
                       std::to_string(outputs) +
                       " entries, over the size cap " +
                       std::to_string(size_cap));
  }
}

}  // namespace

Channel Channel::from_rows(std::vector<std::vector<Rat>> rows) {
  if (rows.empty() || rows[0].empty()) {
    throw EmptyAlphabet("channel needs at least one input and one output");
  }
  const std::size_t outputs = rows[0].size();
  for (std::size_t x = 0; x < rows.size(); ++x) {
    if (rows[x].size() != outputs) {
      throw AlphabetMismatch("row " + std::to_string(x) + " has " +
                             std::to_string(rows[x].size()) +
                             " entries, expected " + std::to_string(outputs));
    }
    Rat sum = 0;
    for (std::size_t y = 0; y < outputs; ++y) {
      if (rows[x][y] < 0) {
        throw NegativeEntry(static_cast<int>(x), static_cast<int>(y));
      }
      sum += rows[x][y];
    }
    if (sum != 1) {
      throw NonStochasticRow(static_cast<int>(x), rat_to_string(sum));
    }
  }
  return Channel(std::move(rows));
}

Channel Channel::identity(int n) {
  if (n < 1) throw EmptyAlphabet("identity channel needs n >= 1");
  std::vector<std::vector<Rat>> rows(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) rows[i][i] = 1;
  return Channel(std::move(rows));
}

Channel Channel::typewriter(int q, const Rat& epsilon) {
  if (q < 2) throw EmptyAlphabet("typewriter channel needs q >= 2");
  if (epsilon < 0 || epsilon > Rat(1, 2)) {
    throw InvalidEpsilon("typewriter epsilon must lie in [0, 1/2], got " +
                         rat_to_string(epsilon));
  }
  std::vector<std::vector<Rat>> rows(q, std::vector<Rat>(q, Rat(0)));
  for (int x = 0; x < q; ++x) {
    rows[x][x] = Rat(1) - epsilon;
    rows[x][(x + 1) % q] += epsilon;
  }
  return Channel::from_rows(std::move(rows));
}

Channel Channel::binary_symmetric(const Rat& p) {
  if (p < 0 || p > 1) {
    throw InvalidEpsilon("crossover probability must lie in [0, 1], got " +
                         rat_to_string(p));
  }
  std::vector<std::vector<Rat>> rows{{Rat(1) - p, p}, {p, Rat(1) - p}};
  return Channel(std::move(rows));
}

Channel Channel::uniform(int inputs, int outputs) {
  if (inputs < 1 || outputs < 1) {
    throw EmptyAlphabet("uniform channel needs nonempty alphabets");
  }
  std::vector<std::vector<Rat>> rows(
      inputs, std::vector<Rat>(outputs, Rat(1, outputs)));
  return Channel(std::move(rows));
}

const Rat& Channel::prob(int x, int y) const {
  if (x < 0 || x >= input_size() || y < 0 || y >= output_size()) {
    throw IndexOutOfRange("entry (" + std::to_string(x) + ", " +
                          std::to_string(y) + ") outside " +
                          std::to_string(input_size()) + "x" +
                          std::to_string(output_size()) + " channel");
  }
  return rows_[x][y];
}

const std::vector<Rat>& Channel::row(int x) const {
  if (x < 0 || x >= input_size()) {
    throw IndexOutOfRange("row " + std::to_string(x) + " outside " +
                          std::to_string(input_size()) + " inputs");
  }
  return rows_[x];
}

Channel kronecker(const Channel& a, const Channel& b, long size_cap) {
  const long nx = static_cast<long>(a.input_size()) * b.input_size();
  const long ny = static_cast<long>(a.output_size()) * b.output_size();
  check_size(nx, ny, size_cap, "product channel");
  std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(nx),
                                     std::vector<Rat>(ny));
  for (int xa = 0; xa < a.input_size(); ++xa) {
    for (int xb = 0; xb < b.input_size(); ++xb) {
      auto& row = rows[static_cast<std::size_t>(xa) * b.input_size() + xb];
      for (int ya = 0; ya < a.output_size(); ++ya) {
        for (int yb = 0; yb < b.output_size(); ++yb) {
          row[static_cast<std::size_t>(ya) * b.output_size() + yb] =
              a.prob(xa, ya) * b.prob(xb, yb);
        }
      }
    }
  }
  return Channel::from_rows(std::move(rows));
}

Channel extension(const Channel& w, int n, long size_cap) {
  if (n < 1) throw ValidationError("extension length must be >= 1");
  // Check the final size up front so a huge n fails before any allocation.
  long nx = 1, ny = 1;
  for (int i = 0; i < n; ++i) {
    nx *= w.input_size();
    ny *= w.output_size();
    if (nx > size_cap || ny > size_cap || nx * ny > size_cap) {
      throw SizeOverflow("extension " + std::to_string(n) + " would exceed " +
                         "the size cap " + std::to_string(size_cap));
    }
  }
  Channel out = w;
  for (int i = 1; i < n; ++i) out = kronecker(out, w, size_cap);
  return out;
}

SupportMatrix support_matrix(const Channel& w) {
  SupportMatrix s(w.output_size(), w.input_size());
  for (int y = 0; y < w.output_size(); ++y) {
    for (int x = 0; x < w.input_size(); ++x) {
      s.set(y, x, w.positive(x, y));
    }
  }
  return s;
}

BhattacharyyaCoefficient bhattacharyya(const Channel& w, int x0, int x1) {
  bool zero = true;
  double value = 0.0;
  for (int y = 0; y < w.output_size(); ++y) {
    const Rat& p = w.prob(x0, y);
    const Rat& q = w.prob(x1, y);
    if (p > 0 && q > 0) {
      zero = false;
      value += std::sqrt(rat_to_double(p) * rat_to_double(q));
    }
  }
  return {zero, zero ? 0.0 : value};
}

Rat channel_distance(const Channel& a, const Channel& b) {
  if (a.input_size() != b.input_size() ||
      a.output_size() != b.output_size()) {
    throw AlphabetMismatch("channel distance needs matching alphabets, got " +
                           std::to_string(a.input_size()) + "x" +
                           std::to_string(a.output_size()) + " vs " +
                           std::to_string(b.input_size()) + "x" +
                           std::to_string(b.output_size()));
  }
  Rat best = 0;
  for (int x = 0; x < a.input_size(); ++x) {
    Rat sum = 0;
    for (int y = 0; y < a.output_size(); ++y) {
      Rat diff = a.prob(x, y) - b.prob(x, y);
      if (diff < 0) diff = -diff;
      sum += diff;
    }
    if (sum > best) best = sum;
  }
  return best;
}

}  // namespace relbound
