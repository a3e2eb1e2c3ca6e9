#pragma once

#include <cstdint>
#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace zdg {

/// Exact arbitrary-precision integer scalar used for all proof-grade arithmetic.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Index = Eigen::Index;

/// Dense matrix over an arbitrary scalar. BigInt matrices are manipulated with
/// explicit loops (fraction-free algorithms); double matrices use the full
/// Eigen solver API.
template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Exact integer matrix (entries never rounded).
using IntMatrix = DenseMatrix<BigInt>;

/// 0/1 adjacency storage. Kept in machine integers; convert with to_exact()
/// before exact linear algebra.
using AdjacencyMatrix = DenseMatrix<std::int32_t>;

inline IntMatrix to_exact(const AdjacencyMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

}  // namespace zdg
