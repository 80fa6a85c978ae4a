// Copyright 2026 The qcjkls Authors
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

// Colorings of a braid closure by an Alexander quandle X = Z_n[T^+-1]/(p)
// are the solutions of (M - I) x = 0 where M is the R-linear map the braid
// induces on R^s. Viewing R as Z_n^d, the system becomes an (sd x sd)
// matrix over Z_n. It is diagonalised with unimodular row and column
// operations (extended-gcd pivots, valid over any Z_n), and the kernel is
// read off the diagonal.

#include <algorithm>
#include <numeric>

#include "qcjkls/coloring.hpp"
#include "qcjkls/error.hpp"

namespace qcjkls {

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;
__extension__ using Wide = __int128;

struct ExtendedGcd {
  std::int64_t g, u, v;  // u a + v b = g
};

ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
    std::tie(old_t, t) = std::pair{t, old_t - q * t};
  }
  return {old_r, old_s, old_t};
}

class ModMatrixDiagonalizer {
 public:
  ModMatrixDiagonalizer(Matrix a, std::int64_t modulus)
      : a_(std::move(a)), n_(modulus), rows_(a_.size()), cols_(rows_ ? a_[0].size() : 0) {
    q_.assign(cols_, std::vector<std::int64_t>(cols_, 0));
    for (std::size_t i = 0; i < cols_; ++i) q_[i][i] = 1;
  }

  /// Returns the diagonal entries d_0..d_{min(rows,cols)-1}.
  std::vector<std::int64_t> run() {
    const std::size_t rank_bound = std::min(rows_, cols_);
    for (std::size_t t = 0; t < rank_bound; ++t) {
      if (!select_pivot(t)) break;
      while (true) {
        for (std::size_t i = t + 1; i < rows_; ++i)
          if (a_[i][t] != 0) eliminate_row(t, i);
        bool column_changed = false;
        for (std::size_t j = t + 1; j < cols_; ++j)
          if (a_[t][j] != 0) column_changed |= eliminate_col(t, j);
        if (!column_changed) break;
      }
    }
    std::vector<std::int64_t> diag(rank_bound);
    for (std::size_t t = 0; t < rank_bound; ++t) diag[t] = a_[t][t];
    return diag;
  }

  /// Column transform: original x = Q y.
  const Matrix& q() const noexcept { return q_; }

 private:
  std::int64_t mod(std::int64_t v) const {
    v %= n_;
    return v < 0 ? v + n_ : v;
  }
  std::int64_t mulmod(std::int64_t x, std::int64_t y) const {
    return static_cast<std::int64_t>((static_cast<Wide>(mod(x)) * mod(y)) % n_);
  }

  bool select_pivot(std::size_t t) {
    for (std::size_t j = t; j < cols_; ++j)
      for (std::size_t i = t; i < rows_; ++i)
        if (a_[i][j] != 0) {
          std::swap(a_[i], a_[t]);
          if (j != t) swap_cols(t, j);
          return true;
        }
    return false;
  }

  void swap_cols(std::size_t x, std::size_t y) {
    for (auto& row : a_) std::swap(row[x], row[y]);
    for (auto& row : q_) std::swap(row[x], row[y]);
  }

  // [row_t; row_i] <- [[u, v], [-b/g, a/g]] [row_t; row_i], determinant 1.
  void eliminate_row(std::size_t t, std::size_t i) {
    const std::int64_t a = a_[t][t], b = a_[i][t];
    if (b % a == 0) {
      const std::int64_t k = b / a;
      for (std::size_t j = 0; j < cols_; ++j) a_[i][j] = mod(a_[i][j] - mulmod(k, a_[t][j]));
      return;
    }
    const auto [g, u, v] = extended_gcd(a, b);
    const std::int64_t p = -(b / g), r = a / g;
    for (std::size_t j = 0; j < cols_; ++j) {
      const std::int64_t x = a_[t][j], y = a_[i][j];
      a_[t][j] = mod(mulmod(u, x) + mulmod(v, y));
      a_[i][j] = mod(mulmod(p, x) + mulmod(r, y));
    }
  }

  // Returns true when column t itself changed.
  bool eliminate_col(std::size_t t, std::size_t j) {
    const std::int64_t a = a_[t][t], b = a_[t][j];
    if (b % a == 0) {
      const std::int64_t k = b / a;
      for (auto* m : {&a_, &q_})
        for (auto& row : *m) row[j] = mod(row[j] - mulmod(k, row[t]));
      return false;
    }
    const auto [g, u, v] = extended_gcd(a, b);
    const std::int64_t p = -(b / g), r = a / g;
    for (auto* m : {&a_, &q_})
      for (auto& row : *m) {
        const std::int64_t x = row[t], y = row[j];
        row[t] = mod(mulmod(u, x) + mulmod(v, y));
        row[j] = mod(mulmod(p, x) + mulmod(r, y));
      }
    return true;
  }

  Matrix a_;
  std::int64_t n_;
  std::size_t rows_, cols_;
  Matrix q_;
};

struct LinearSystem {
  std::int64_t modulus = 0;
  std::size_t degree = 0;
  std::vector<std::int64_t> diag;  // length = sd
  Matrix q;
};

LinearSystem build_system(const BraidWord& w, const QuotientRing& ring) {
  const Element t = ring.variable();
  const auto t_inv = ring.inverse(t);
  if (!t_inv) throw DomainError("T is not invertible in the coefficient ring; not an Alexander quandle");
  const Element one_minus_t = ring.sub(ring.one(), t);
  const Element one_minus_t_inv = ring.sub(ring.one(), *t_inv);

  const std::size_t s = w.strands();
  const std::size_t d = ring.degree();
  const std::size_t r = ring.size();

  std::vector<Element> add_table(r * r);
  for (Element x = 0; x < r; ++x)
    for (Element y = 0; y < r; ++y) add_table[x * r + y] = ring.add(x, y);
  auto scale_table = [&](Element c) {
    std::vector<Element> out(r);
    for (Element x = 0; x < r; ++x) out[x] = ring.mul(c, x);
    return out;
  };
  const auto by_t = scale_table(t), by_1mt = scale_table(one_minus_t);
  const auto by_ti = scale_table(*t_inv), by_1mti = scale_table(one_minus_t_inv);

  // state[p][v] = coefficient of top variable v in the color at position p.
  std::vector<std::vector<Element>> state(s, std::vector<Element>(s, ring.zero()));
  for (std::size_t p = 0; p < s; ++p) state[p][p] = ring.one();
  auto combine = [&](const std::vector<Element>& x, const std::vector<Element>& sx,
                     const std::vector<Element>& y, const std::vector<Element>& sy) {
    std::vector<Element> out(s);
    for (std::size_t v = 0; v < s; ++v) out[v] = add_table[sx[x[v]] * r + sy[y[v]]];
    return out;
  };
  for (const auto& l : w.letters()) {
    const std::size_t i = l.index - 1;
    auto x = std::move(state[i]);
    auto y = std::move(state[i + 1]);
    if (l.sign == Sign::kPositive) {
      state[i + 1] = combine(x, by_t, y, by_1mt);  // x * y
      state[i] = std::move(y);
    } else {
      state[i] = combine(y, by_ti, x, by_1mti);  // y *bar x
      state[i + 1] = std::move(x);
    }
  }

  std::vector<Element> t_powers(d);
  if (d > 0) {
    t_powers[0] = ring.one();
    for (std::size_t k = 1; k < d; ++k) {
      std::vector<std::uint32_t> basis(d, 0);
      basis[k] = 1;
      t_powers[k] = ring.encode(basis);
    }
  }

  Matrix a(s * d, std::vector<std::int64_t>(s * d, 0));
  for (std::size_t p = 0; p < s; ++p)
    for (std::size_t v = 0; v < s; ++v) {
      Element c = state[p][v];
      if (p == v) c = ring.sub(c, ring.one());
      if (c == ring.zero()) continue;
      for (std::size_t k = 0; k < d; ++k) {
        const auto coeffs = ring.coefficients(ring.mul(c, t_powers[k]));
        for (std::size_t j = 0; j < d; ++j) a[p * d + j][v * d + k] = coeffs[j];
      }
    }

  LinearSystem sys;
  sys.modulus = ring.modulus();
  sys.degree = d;
  ModMatrixDiagonalizer diag(std::move(a), sys.modulus);
  sys.diag = diag.run();
  sys.diag.resize(s * d, 0);  // columns past the last pivot are unconstrained
  sys.q = diag.q();
  return sys;
}

}  // namespace

BigInt count_colorings_affine(const BraidWord& w, const AlexanderQuandleSpec& spec) {
  const QuotientRing ring(spec);
  const LinearSystem sys = build_system(w, ring);
  BigInt count = 1;
  for (auto d : sys.diag) count *= std::gcd(d, sys.modulus);
  return count;
}

std::vector<Coloring> enumerate_colorings_affine(const BraidWord& w, const AlexanderQuandleSpec& spec,
                                                 const EnumerationOptions& options) {
  const QuotientRing ring(spec);
  const LinearSystem sys = build_system(w, ring);
  const std::size_t dims = sys.diag.size();

  // y_i ranges over multiples of n / gcd(d_i, n).
  std::vector<std::int64_t> step(dims), choices(dims);
  BigInt count = 1;
  for (std::size_t i = 0; i < dims; ++i) {
    const std::int64_t g = std::gcd(sys.diag[i], sys.modulus);
    choices[i] = g;
    step[i] = sys.modulus / g;
    count *= g;
  }
  if (count > options.budget)
    throw BudgetError("closure has " + count.str() + " colorings, more than the budget of " +
                      std::to_string(options.budget));

  const std::size_t s = w.strands();
  const std::size_t d = sys.degree;
  std::vector<Coloring> out;
  out.reserve(count.convert_to<std::size_t>());
  std::vector<std::int64_t> counter(dims, 0);
  std::vector<std::uint32_t> coeffs(d);
  while (true) {
    Coloring coloring(s);
    for (std::size_t v = 0; v < s; ++v) {
      for (std::size_t k = 0; k < d; ++k) {
        Wide acc = 0;
        const auto& row = sys.q[v * d + k];
        for (std::size_t i = 0; i < dims; ++i) acc += static_cast<Wide>(row[i]) * (counter[i] * step[i]);
        coeffs[k] = static_cast<std::uint32_t>(acc % sys.modulus);
      }
      coloring[v] = ring.encode(coeffs);
    }
    out.push_back(std::move(coloring));

    std::size_t i = 0;
    for (; i < dims; ++i) {
      if (++counter[i] < choices[i]) break;
      counter[i] = 0;
    }
    if (i == dims) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qcjkls
