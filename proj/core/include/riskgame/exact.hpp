// Copyright 2026 The riskgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RISKGAME_EXACT_HPP
#define RISKGAME_EXACT_HPP

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "riskgame/game.hpp"

namespace riskgame {

// Exact rational in lowest terms with a positive denominator. GMP keeps the
// canonical form after every arithmetic operation.
using BigRational = mpq_class;

BigRational rational(long numerator, long denominator = 1);

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input or a
// zero denominator.
BigRational parse_rational(std::string_view text);

std::string numerator_string(const BigRational& value);
std::string denominator_string(const BigRational& value);
// "p/q", or "p" when the denominator is 1.
std::string to_string(const BigRational& value);

class SingularSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Square system A x = rhs stored by sparse rows. Each row usually encodes one
// position's value equation, so most rows hold only a handful of entries.
class LinearSystem {
 public:
  using Entry = std::pair<std::size_t, BigRational>;

  explicit LinearSystem(std::size_t dimension);
  LinearSystem(const std::vector<std::vector<BigRational>>& matrix,
               std::vector<BigRational> rhs);

  std::size_t dimension() const { return rhs_.size(); }

  // Adds value to A(row, col); entries that cancel to zero are dropped.
  void add(std::size_t row, std::size_t col, const BigRational& value);
  BigRational coefficient(std::size_t row, std::size_t col) const;
  const std::vector<Entry>& row(std::size_t index) const { return rows_.at(index); }

  BigRational& rhs(std::size_t row) { return rhs_.at(row); }
  const BigRational& rhs(std::size_t row) const { return rhs_.at(row); }

  // Optional variable labels; distinct when present.
  void set_labels(std::vector<Position> labels);
  const std::vector<Position>& labels() const { return labels_; }

 private:
  std::vector<std::vector<Entry>> rows_;
  std::vector<BigRational> rhs_;
  std::vector<Position> labels_;
};

// Exact solution of a nonsingular system.
//
// The variable dependency graph is split into strongly connected components,
// which are solved in dependency order. Each component is cleared of
// denominators and reduced by fraction-free (Bareiss) elimination, choosing
// the first nonzero entry of the column as pivot. Throws SingularSystem when a
// column has no pivot.
std::vector<BigRational> solve_exact(const LinearSystem& system);

// Same, keyed by the system's labels. Throws std::invalid_argument when the
// system is unlabeled.
std::map<Position, BigRational> solve_exact_labeled(const LinearSystem& system);

// A x - rhs, computed exactly.
std::vector<BigRational> residual(const LinearSystem& system,
                                  const std::vector<BigRational>& x);

}  // namespace riskgame

#endif  // RISKGAME_EXACT_HPP
