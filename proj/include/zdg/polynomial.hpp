#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zdg/types.hpp"

namespace zdg {

/// Polynomial with exact integer coefficients, stored in ascending degree.
/// The zero polynomial has an empty coefficient vector; otherwise the leading
/// coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending_coeffs);
  IntPolynomial(std::initializer_list<BigInt> ascending_coeffs);

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial constant(BigInt c);
  static IntPolynomial x();
  /// c * x^k
  static IntPolynomial monomial(int k, BigInt c);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^k (0 beyond the stored range).
  const BigInt& coeff(int k) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }

  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const BigInt& c) const;
  IntPolynomial operator-() const;
  bool operator==(const IntPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }
  bool operator!=(const IntPolynomial& rhs) const { return !(*this == rhs); }

  /// p(-x)
  IntPolynomial compose_negate() const;
  /// x^k * p
  IntPolynomial shifted(int k) const;
  IntPolynomial derivative() const;
  BigInt evaluate(const BigInt& v) const;
  Rational evaluate(const Rational& v) const;

  /// Human-readable form, e.g. "x^4 - 2*x^3 - 2*x^2 + 2*x".
  std::string to_string() const;
  /// JSON array of decimal coefficient strings, ascending degree.
  std::string to_json() const;
  static IntPolynomial from_json(const std::string& text);

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

inline IntPolynomial operator*(const BigInt& c, const IntPolynomial& p) { return p * c; }

/// Multiplicity of the root 0 = index of the first nonzero coefficient.
/// Throws std::invalid_argument on the zero polynomial.
int zero_root_multiplicity(const IntPolynomial& p);

/// Exact quotient q / p when the remainder vanishes over the rationals and the
/// quotient clears to integer coefficients; std::nullopt otherwise.
std::optional<IntPolynomial> try_divide(const IntPolynomial& q, const IntPolynomial& p);

/// True iff q = p * h for some rational-coefficient polynomial h.
/// Throws std::invalid_argument when p is zero.
bool divides(const IntPolynomial& p, const IntPolynomial& q);

/// Content (gcd of coefficients, nonnegative) and primitive part.
BigInt content(const IntPolynomial& p);
IntPolynomial primitive_part(const IntPolynomial& p);

/// Exact gcd over Z[x] (primitive pseudo-remainder sequence); result is
/// primitive with positive leading coefficient. gcd(0, 0) = 0.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Yun square-free decomposition: p = c * prod f_i^{m_i} with the f_i
/// square-free, pairwise coprime and primitive. Returned pairs are
/// (factor, multiplicity) with multiplicities strictly increasing; the
/// constant c is dropped. Requires p nonzero.
std::vector<std::pair<IntPolynomial, int>> square_free_decomposition(const IntPolynomial& p);

}  // namespace zdg
