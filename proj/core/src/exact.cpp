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

#include "riskgame/exact.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace riskgame {

BigRational rational(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  BigRational q(numerator, denominator);
  q.canonicalize();
  return q;
}

BigRational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto valid = [](const std::string& digits) {
    std::size_t start = (!digits.empty() && digits[0] == '-') ? 1 : 0;
    return digits.size() > start &&
           std::all_of(digits.begin() + static_cast<std::ptrdiff_t>(start),
                       digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
  };
  if (!valid(num) || !valid(den)) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
  mpz_class p(num, 10), q(den, 10);
  if (q == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  BigRational r(p, q);
  r.canonicalize();
  return r;
}

std::string numerator_string(const BigRational& value) {
  return value.get_num().get_str();
}

std::string denominator_string(const BigRational& value) {
  return value.get_den().get_str();
}

std::string to_string(const BigRational& value) { return value.get_str(); }

LinearSystem::LinearSystem(std::size_t dimension)
    : rows_(dimension), rhs_(dimension) {}

LinearSystem::LinearSystem(const std::vector<std::vector<BigRational>>& matrix,
                           std::vector<BigRational> rhs)
    : rows_(rhs.size()), rhs_(std::move(rhs)) {
  if (matrix.size() != rhs_.size()) {
    throw std::invalid_argument("matrix and rhs sizes differ");
  }
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    if (matrix[i].size() != rhs_.size()) {
      throw std::invalid_argument("matrix is not square");
    }
    for (std::size_t j = 0; j < matrix[i].size(); ++j) {
      if (matrix[i][j] != 0) add(i, j, matrix[i][j]);
    }
  }
}

void LinearSystem::add(std::size_t row, std::size_t col, const BigRational& value) {
  if (row >= dimension() || col >= dimension()) {
    throw std::out_of_range("linear system index out of range");
  }
  auto& entries = rows_[row];
  for (auto it = entries.begin(); it != entries.end(); ++it) {
    if (it->first == col) {
      it->second += value;
      if (it->second == 0) entries.erase(it);
      return;
    }
  }
  if (value != 0) entries.emplace_back(col, value);
}

BigRational LinearSystem::coefficient(std::size_t row, std::size_t col) const {
  for (const auto& [j, v] : rows_.at(row)) {
    if (j == col) return v;
  }
  return 0;
}

void LinearSystem::set_labels(std::vector<Position> labels) {
  if (labels.size() != dimension()) {
    throw std::invalid_argument("label count differs from dimension");
  }
  std::set<Position> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) {
    throw std::invalid_argument("labels are not distinct");
  }
  labels_ = std::move(labels);
}

namespace {

constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

// Tarjan's algorithm, iterative. Components come out in reverse topological
// order: every component only depends on components emitted before it.
std::vector<std::vector<std::size_t>> strongly_connected_components(
    const LinearSystem& system) {
  const std::size_t m = system.dimension();
  std::vector<std::size_t> index(m, kUnvisited), low(m, 0);
  std::vector<bool> on_stack(m, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t counter = 0;

  struct Frame {
    std::size_t node;
    std::size_t edge;
  };
  std::vector<Frame> call;

  for (std::size_t root = 0; root < m; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call.empty()) {
      Frame& frame = call.back();
      const auto& edges = system.row(frame.node);
      if (frame.edge < edges.size()) {
        std::size_t next = edges[frame.edge++].first;
        if (index[next] == kUnvisited) {
          index[next] = low[next] = counter++;
          stack.push_back(next);
          on_stack[next] = true;
          call.push_back({next, 0});
        } else if (on_stack[next]) {
          low[frame.node] = std::min(low[frame.node], index[next]);
        }
        continue;
      }
      std::size_t node = frame.node;
      call.pop_back();
      if (!call.empty()) {
        low[call.back().node] = std::min(low[call.back().node], low[node]);
      }
      if (low[node] == index[node]) {
        std::vector<std::size_t> component;
        std::size_t member;
        do {
          member = stack.back();
          stack.pop_back();
          on_stack[member] = false;
          component.push_back(member);
        } while (member != node);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
    }
  }
  return components;
}

// Solves one component in place given every variable it depends on outside
// the component.
void solve_component(const LinearSystem& system,
                     const std::vector<std::size_t>& vars,
                     std::vector<BigRational>& x, std::vector<bool>& solved) {
  const std::size_t k = vars.size();
  std::vector<std::size_t> local(system.dimension(), kUnvisited);
  for (std::size_t i = 0; i < k; ++i) local[vars[i]] = i;

  // Integer augmented matrix [M | rhs] after clearing denominators row-wise.
  std::vector<std::vector<mpz_class>> m(k, std::vector<mpz_class>(k + 1));
  std::vector<BigRational> dense(k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    std::fill(dense.begin(), dense.end(), BigRational(0));
    BigRational rhs = system.rhs(vars[i]);
    for (const auto& [j, v] : system.row(vars[i])) {
      if (local[j] != kUnvisited) {
        dense[local[j]] += v;
      } else {
        rhs -= v * x[j];
      }
    }
    dense[k] = rhs;
    mpz_class lcm = 1;
    for (const auto& v : dense) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    for (std::size_t j = 0; j <= k; ++j) {
      m[i][j] = dense[j].get_num() * (lcm / dense[j].get_den());
    }
  }

  mpz_class prev = 1;
  for (std::size_t p = 0; p < k; ++p) {
    std::size_t pivot = p;
    while (pivot < k && m[pivot][p] == 0) ++pivot;
    if (pivot == k) {
      throw SingularSystem("singular system: no pivot for variable " +
                           std::to_string(vars[p]));
    }
    if (pivot != p) std::swap(m[pivot], m[p]);
    for (std::size_t i = p + 1; i < k; ++i) {
      if (m[i][p] == 0) {
        // Bareiss still rescales untouched rows to keep the invariant.
        for (std::size_t j = p + 1; j <= k; ++j) {
          m[i][j] *= m[p][p];
          mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
        }
        continue;
      }
      for (std::size_t j = p + 1; j <= k; ++j) {
        m[i][j] = m[p][p] * m[i][j] - m[i][p] * m[p][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][p] = 0;
    }
    prev = m[p][p];
  }

  for (std::size_t ii = k; ii-- > 0;) {
    BigRational acc(m[ii][k]);
    for (std::size_t j = ii + 1; j < k; ++j) {
      if (m[ii][j] != 0) acc -= BigRational(m[ii][j]) * x[vars[j]];
    }
    acc /= BigRational(m[ii][ii]);
    x[vars[ii]] = acc;
    solved[vars[ii]] = true;
  }
}

}  // namespace

std::vector<BigRational> solve_exact(const LinearSystem& system) {
  std::vector<BigRational> x(system.dimension());
  std::vector<bool> solved(system.dimension(), false);
  for (const auto& component : strongly_connected_components(system)) {
    solve_component(system, component, x, solved);
  }
  return x;
}

std::map<Position, BigRational> solve_exact_labeled(const LinearSystem& system) {
  if (system.labels().size() != system.dimension()) {
    throw std::invalid_argument("system has no labels");
  }
  auto x = solve_exact(system);
  std::map<Position, BigRational> out;
  for (std::size_t i = 0; i < x.size(); ++i) out.emplace(system.labels()[i], x[i]);
  return out;
}

std::vector<BigRational> residual(const LinearSystem& system,
                                  const std::vector<BigRational>& x) {
  if (x.size() != system.dimension()) {
    throw std::invalid_argument("solution size differs from dimension");
  }
  std::vector<BigRational> r(system.dimension());
  for (std::size_t i = 0; i < system.dimension(); ++i) {
    BigRational acc = -system.rhs(i);
    for (const auto& [j, v] : system.row(i)) acc += v * x[j];
    r[i] = acc;
  }
  return r;
}

}  // namespace riskgame
