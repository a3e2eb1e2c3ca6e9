#pragma once

// Independent reference implementations used only by tests. These stay
// deliberately naive (Laplace expansion, rational elimination) so they share
// no code path with the library's production algorithms.

#include <random>
#include <vector>

#include "zdg/exact.hpp"
#include "zdg/polynomial.hpp"
#include "zdg/types.hpp"

namespace zdg::testing {

inline IntPolynomial det_reference(std::vector<std::vector<IntPolynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPolynomial::constant(1);
  if (n == 1) return m[0][0];
  IntPolynomial result;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<IntPolynomial>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<IntPolynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    IntPolynomial term = m[0][j] * det_reference(std::move(minor));
    result = (j % 2 == 0) ? result + term : result - term;
  }
  return result;
}

/// det(xI - A) by Laplace expansion over polynomial entries; feasible to ~7x7.
inline IntPolynomial charpoly_reference(const IntMatrix& a) {
  const Index n = a.rows();
  std::vector<std::vector<IntPolynomial>> m(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      IntPolynomial entry = IntPolynomial::constant(-a(i, j));
      if (i == j) entry = entry + IntPolynomial::x();
      m[static_cast<std::size_t>(i)].push_back(std::move(entry));
    }
  }
  return det_reference(std::move(m));
}

/// Rank by plain Gaussian elimination over the rationals.
inline Index rank_reference(const IntMatrix& a) {
  const Index rows = a.rows(), cols = a.cols();
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(rows));
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m[static_cast<std::size_t>(i)].emplace_back(a(i, j));
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot = -1;
    for (Index i = r; i < rows; ++i)
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(r)]);
    for (Index i = r + 1; i < rows; ++i) {
      const Rational f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] /
                         m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      for (Index j = c; j < cols; ++j)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            f * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
    }
    ++r;
  }
  return r;
}

inline IntMatrix random_int_matrix(std::mt19937_64& rng, Index rows, Index cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

inline IntMatrix random_symmetric_01(std::mt19937_64& rng, Index n) {
  std::uniform_int_distribution<int> coin(0, 1);
  IntMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    m(i, i) = coin(rng);
    for (Index j = i + 1; j < n; ++j) {
      const int v = coin(rng);
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return m;
}

/// Random n x n matrix of rank at most r (sum of r rank-one outer products).
inline IntMatrix random_low_rank(std::mt19937_64& rng, Index n, Index r) {
  std::uniform_int_distribution<int> dist(-2, 2);
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Index k = 0; k < r; ++k) {
    std::vector<BigInt> u(static_cast<std::size_t>(n)), v(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
      u[static_cast<std::size_t>(i)] = dist(rng);
      v[static_cast<std::size_t>(i)] = dist(rng);
    }
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        m(i, j) += u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
  }
  return m;
}

}  // namespace zdg::testing
