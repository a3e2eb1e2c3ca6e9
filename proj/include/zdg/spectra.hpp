#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zdg/construct.hpp"
#include "zdg/exact.hpp"
#include "zdg/polynomial.hpp"
#include "zdg/ring.hpp"

namespace zdg {

/// Multiset of eigenvalues as (value, multiplicity) entries sorted by
/// descending value, with values separated by more than the grouping
/// tolerance used to build the spectrum.
class Spectrum {
 public:
  struct Entry {
    double value = 0.0;
    Index multiplicity = 0;
  };

  Spectrum() = default;
  /// Groups values within `grouping_tol` of each other (weighted mean as the
  /// group representative) and sorts descending.
  static Spectrum from_values(std::vector<std::pair<double, Index>> values, double grouping_tol);

  const std::vector<Entry>& entries() const { return entries_; }
  /// Sum of multiplicities.
  Index dimension() const;
  double weighted_sum() const;
  double weighted_square_sum() const;
  /// Multiplicity of the entry grouped at 0 (0 when absent).
  Index zero_multiplicity(double tol = 1e-9) const;

  /// JSON list of {value: 12-significant-digit decimal string, multiplicity}.
  std::string to_json() const;

 private:
  std::vector<Entry> entries_;
};

/// Numeric spectrum of an exactly symmetric integer matrix.
/// Throws std::invalid_argument on non-symmetric input.
Spectrum eigenvalues_symmetric(const IntMatrix& m, double grouping_tol = 1e-6);

/// Exact real roots of an integer polynomial: multiplicities from the exact
/// square-free decomposition, values from polished numeric root-finding on
/// the square-free parts. Requires all roots real (holds for characteristic
/// polynomials of equitable-quotient and symmetric matrices).
std::vector<std::pair<double, Index>> real_roots_with_multiplicity(const IntPolynomial& p);

/// Spectrum of Gamma(R). For products of Z_n factors the nonzero part comes
/// from the exact characteristic polynomial of the weighted quotient matrix
/// and the zero part from the exact nullity; other rings fall back to the
/// numeric symmetric solver on A(Gamma).
/// Throws std::invalid_argument when the ring has no zero-divisors.
Spectrum spectrum_of_ring(const FiniteRing& ring, double grouping_tol = 1e-6);

/// Closed-form spectrum of Gamma(Z_p x Z_p x Z_p); p must be prime.
Spectrum closed_form_p3(std::uint64_t p);
/// Closed-form spectrum of Gamma(Z_p^4 product); p must be prime. Nonzero
/// values come from the factored characteristic polynomial with
/// multiplicities {5,1,3,3,1,1}; the zero multiplicity is p^4-(p-1)^4-15.
Spectrum closed_form_p4(std::uint64_t p);

/// Displayed characteristic polynomial of the quotient matrix for
/// Z_p x Z_p x Z_p (degree 6 in factored form).
IntPolynomial charpoly_formula_p3(std::uint64_t p);
/// Displayed factored characteristic polynomial for the four-fold product
/// (degree 14).
IntPolynomial charpoly_formula_p4(std::uint64_t p);
/// Displayed sextic for Z_p x Z_p x Z_q; requires distinct primes.
IntPolynomial charpoly_formula_ppq(std::uint64_t p, std::uint64_t q);
/// Displayed quartic for Z_{p^2} x Z_p; requires p prime.
IntPolynomial charpoly_formula_p2p(std::uint64_t p);

}  // namespace zdg
