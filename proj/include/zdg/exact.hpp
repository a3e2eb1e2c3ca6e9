#pragma once

#include <string>

#include "zdg/polynomial.hpp"
#include "zdg/types.hpp"

namespace zdg {

/// Exact characteristic polynomial det(xI - m); monic of degree m.rows().
/// The 0x0 matrix yields the constant polynomial 1.
/// Throws std::invalid_argument for non-square input.
///
/// Computed by Hessenberg reduction modulo machine-word primes followed by
/// CRT reconstruction against a proven coefficient bound, so the result is
/// exact and deterministic. The bound uses the exact rank of m: coefficients
/// of degree below n - rank(m) vanish, which keeps the prime count small for
/// the highly rank-deficient adjacency matrices this library produces.
IntPolynomial charpoly(const IntMatrix& m);

/// Exact rank over the rationals (duplicate row/column removal followed by
/// fraction-free Bareiss elimination; no floating point).
Index rank(const IntMatrix& m);
Index rank(const AdjacencyMatrix& m);

/// Kronecker product with the standard row-major block layout.
template <typename Scalar>
DenseMatrix<Scalar> kronecker(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  DenseMatrix<Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      for (Index k = 0; k < b.rows(); ++k)
        for (Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

/// Dense CSV: one row per line, entries comma-separated.
std::string to_csv(const IntMatrix& m);
/// Matrix Market coordinate format (integer general).
std::string to_matrix_market(const IntMatrix& m);

}  // namespace zdg
