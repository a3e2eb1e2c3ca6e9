#include "zdg/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace zdg {

namespace {

double big_to_double(const BigInt& v) { return v.convert_to<double>(); }

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  // Normalize "-0" for byte-stable output.
  if (std::string(buf) == "-0") return "0";
  return buf;
}

// Numeric roots of a square-free integer polynomial, all assumed real.
// The variable is rescaled by a power of two so the monic coefficients fit
// comfortably in doubles, then a balanced companion solve is polished with
// Newton steps in long double.
std::vector<double> roots_of_square_free(const IntPolynomial& q) {
  std::vector<double> roots;
  if (q.degree() <= 0) return roots;
  if (q.coeff(0) == 0) {
    roots.push_back(0.0);
    auto rest = try_divide(q, IntPolynomial::x());
    auto more = roots_of_square_free(*rest);
    roots.insert(roots.end(), more.begin(), more.end());
    return roots;
  }
  const int n = q.degree();
  if (n == 1) {
    const Rational r = -Rational(q.coeff(0)) / Rational(q.coeff(1));
    roots.push_back(r.convert_to<double>());
    return roots;
  }

  auto bitlen = [](const BigInt& v) -> long {
    if (v == 0) return 0;
    return static_cast<long>(boost::multiprecision::msb(boost::multiprecision::abs(v))) + 1;
  };
  const long lead_bits = bitlen(q.coeff(n));
  long e = 0;
  for (int k = 0; k < n; ++k) {
    const long bits = bitlen(q.coeff(k)) - lead_bits;
    if (bits <= 0) continue;
    const long ek = (bits + (n - k) - 1) / (n - k);
    e = std::max(e, ek);
  }

  // Monic coefficients of q(s*y)/(lc*s^n) with s = 2^e.
  std::vector<long double> a(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Rational r(q.coeff(k), q.coeff(n));
    const long shift = e * (n - k);
    BigInt den = denominator(r) << shift;
    a[static_cast<std::size_t>(k)] =
        numerator(r).convert_to<long double>() / den.convert_to<long double>();
  }

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -static_cast<double>(a[static_cast<std::size_t>(i)]);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);

  auto eval = [&](long double y, long double& value, long double& deriv) {
    value = a[static_cast<std::size_t>(n)];
    deriv = 0.0L;
    for (int k = n - 1; k >= 0; --k) {
      deriv = deriv * y + value;
      value = value * y + a[static_cast<std::size_t>(k)];
    }
  };

  const double scale = std::ldexp(1.0, static_cast<int>(e));
  for (int i = 0; i < n; ++i) {
    long double y = static_cast<long double>(solver.eigenvalues()(i).real());
    for (int it = 0; it < 8; ++it) {
      long double value, deriv;
      eval(y, value, deriv);
      if (deriv == 0.0L) break;
      const long double step = value / deriv;
      y -= step;
      if (std::abs(static_cast<double>(step)) <= 1e-18 * std::max(1.0, std::abs(static_cast<double>(y))))
        break;
    }
    roots.push_back(static_cast<double>(y) * scale);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

Spectrum Spectrum::from_values(std::vector<std::pair<double, Index>> values, double grouping_tol) {
  Spectrum s;
  std::sort(values.begin(), values.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  for (const auto& [v, m] : values) {
    if (!s.entries_.empty()) {
      Entry& last = s.entries_.back();
      if (std::abs(last.value - v) <= grouping_tol) {
        // Weighted mean keeps the representative stable under grouping order.
        last.value = (last.value * static_cast<double>(last.multiplicity) +
                      v * static_cast<double>(m)) /
                     static_cast<double>(last.multiplicity + m);
        last.multiplicity += m;
        continue;
      }
    }
    s.entries_.push_back({v, m});
  }
  for (Entry& e : s.entries_)
    if (std::abs(e.value) <= grouping_tol) e.value = 0.0;
  return s;
}

Index Spectrum::dimension() const {
  Index d = 0;
  for (const auto& e : entries_) d += e.multiplicity;
  return d;
}

double Spectrum::weighted_sum() const {
  double s = 0;
  for (const auto& e : entries_) s += e.value * static_cast<double>(e.multiplicity);
  return s;
}

double Spectrum::weighted_square_sum() const {
  double s = 0;
  for (const auto& e : entries_) s += e.value * e.value * static_cast<double>(e.multiplicity);
  return s;
}

Index Spectrum::zero_multiplicity(double tol) const {
  for (const auto& e : entries_)
    if (std::abs(e.value) <= tol) return e.multiplicity;
  return 0;
}

std::string Spectrum::to_json() const {
  std::string out = "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += "{\"value\":\"" + format_value(entries_[i].value) +
           "\",\"multiplicity\":" + std::to_string(entries_[i].multiplicity) + "}";
  }
  out += "]";
  return out;
}

Spectrum eigenvalues_symmetric(const IntMatrix& m, double grouping_tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigenvalues_symmetric: not square");
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) throw std::invalid_argument("eigenvalues_symmetric: not symmetric");
  Eigen::MatrixXd d(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) d(i, j) = big_to_double(m(i, j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(d);
  std::vector<std::pair<double, Index>> vals;
  for (Index i = 0; i < m.rows(); ++i) vals.emplace_back(solver.eigenvalues()(i), 1);
  return Spectrum::from_values(std::move(vals), grouping_tol);
}

std::vector<std::pair<double, Index>> real_roots_with_multiplicity(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("roots of zero polynomial");
  std::vector<std::pair<double, Index>> out;
  for (const auto& [factor, mult] : square_free_decomposition(p)) {
    for (double r : roots_of_square_free(factor)) out.emplace_back(r, mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  return out;
}

Spectrum spectrum_of_ring(const FiniteRing& ring, double grouping_tol) {
  const LoopGraph gamma = zero_divisor_graph(ring);
  const Index n = gamma.vertex_count();
  if (n == 0) throw std::invalid_argument("spectrum_of_ring: ring has no zero-divisors");

  if (!ring.is_modular_product())
    return eigenvalues_symmetric(adjacency_matrix(gamma), grouping_tol);

  const IntMatrix quotient = weighted_quotient_matrix(compressed_graph(ring));
  const IntPolynomial chi = charpoly(quotient);
  std::vector<std::pair<double, Index>> values;
  Index nonzero_total = 0;
  for (const auto& [v, m] : real_roots_with_multiplicity(chi)) {
    if (v == 0.0) continue;  // exact zero roots of the quotient never feed the nonzero part
    values.emplace_back(v, m);
    nonzero_total += m;
  }
  const Index eta = n - rank(gamma.adjacency());
  if (nonzero_total + eta != n)
    throw std::logic_error("spectrum_of_ring: quotient spectrum inconsistent with exact nullity");
  if (eta > 0) values.emplace_back(0.0, eta);
  return Spectrum::from_values(std::move(values), grouping_tol);
}

namespace {

void require_prime(std::uint64_t p, const char* what) {
  if (!is_prime(p)) throw std::invalid_argument(std::string(what) + ": p must be prime");
}

}  // namespace

Spectrum closed_form_p3(std::uint64_t p) {
  require_prime(p, "closed_form_p3");
  const double dp = static_cast<double>(p);
  std::vector<std::pair<double, Index>> vals;
  const double s1 = (dp - 1.0) * std::sqrt(4.0 * dp - 3.0);
  vals.emplace_back(0.5 * (1.0 - dp + s1), 2);
  vals.emplace_back(0.5 * (1.0 - dp - s1), 2);
  const double s2 = std::sqrt(dp - 2.0 * dp * dp + dp * dp * dp);
  vals.emplace_back(dp - 1.0 + s2, 1);
  vals.emplace_back(dp - 1.0 - s2, 1);
  const Index eta = static_cast<Index>(3 * (p + 1) * (p - 2));
  if (eta > 0) vals.emplace_back(0.0, eta);
  return Spectrum::from_values(std::move(vals), 0.0);
}

Spectrum closed_form_p4(std::uint64_t p) {
  require_prime(p, "closed_form_p4");
  const double dp = static_cast<double>(p);
  const double c = (dp - 1.0) * (dp - 1.0);
  std::vector<std::pair<double, Index>> vals;
  vals.emplace_back(c, 5);
  vals.emplace_back(-c, 1);
  // x^2 + (1-3p+2p^2) x + (p-1)^4, each root with multiplicity 3
  {
    const double b = 1.0 - 3.0 * dp + 2.0 * dp * dp;
    const double disc = std::sqrt(b * b - 4.0 * c * c);
    vals.emplace_back(0.5 * (-b + disc), 3);
    vals.emplace_back(0.5 * (-b - disc), 3);
  }
  // x^2 + (1+p-2p^2) x + (p-1)^4, simple roots
  {
    const double b = 1.0 + dp - 2.0 * dp * dp;
    const double disc = std::sqrt(b * b - 4.0 * c * c);
    vals.emplace_back(0.5 * (-b + disc), 1);
    vals.emplace_back(0.5 * (-b - disc), 1);
  }
  const std::uint64_t p4 = p * p * p * p;
  const std::uint64_t q4 = (p - 1) * (p - 1) * (p - 1) * (p - 1);
  const Index eta = static_cast<Index>(p4 - q4 - 15);
  if (eta > 0) vals.emplace_back(0.0, eta);
  return Spectrum::from_values(std::move(vals), 0.0);
}

IntPolynomial charpoly_formula_p3(std::uint64_t p) {
  require_prime(p, "charpoly_formula_p3");
  const BigInt bp = p;
  const BigInt k = -1 + 3 * bp - 3 * bp * bp + bp * bp * bp;  // (p-1)^3 - ... constant block
  const IntPolynomial f1({k, 1 - bp, -1});                     // k + (1-p)x - x^2
  const IntPolynomial f2({k, 2 * (bp - 1), -1});               // k + 2(p-1)x - x^2
  return -(f1 * f1 * f2);
}

IntPolynomial charpoly_formula_p4(std::uint64_t p) {
  require_prime(p, "charpoly_formula_p4");
  const BigInt bp = p;
  const BigInt c = (bp - 1) * (bp - 1);
  const BigInt c4 = c * c;
  const IntPolynomial lin_minus({c, -1});  // (p-1)^2 - x
  const IntPolynomial lin_plus({c, 1});    // (p-1)^2 + x
  const IntPolynomial quad_simple({c4, 1 + bp - 2 * bp * bp, 1});
  const IntPolynomial quad_triple({c4, 1 - 3 * bp + 2 * bp * bp, 1});
  IntPolynomial out = lin_minus * lin_minus;
  out = out * out * lin_minus;  // (c - x)^5
  out = out * lin_plus * quad_simple * quad_triple * quad_triple * quad_triple;
  return -out;
}

IntPolynomial charpoly_formula_ppq(std::uint64_t p, std::uint64_t q) {
  require_prime(p, "charpoly_formula_ppq");
  require_prime(q, "charpoly_formula_ppq");
  if (p == q) throw std::invalid_argument("charpoly_formula_ppq: primes must be distinct");
  const BigInt bp = p, bq = q;
  const BigInt pm = bp - 1, qm = bq - 1;
  const BigInt mixed = bp * (3 * bq - 2) - bq;
  std::vector<BigInt> c(7, BigInt(0));
  c[0] = -pm * pm * pm * pm * pm * pm * qm * qm * qm;
  c[2] = pm * pm * pm * qm * mixed;
  c[3] = -2 * pm * pm * qm;
  c[4] = -pm * mixed;
  c[6] = 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial charpoly_formula_p2p(std::uint64_t p) {
  require_prime(p, "charpoly_formula_p2p");
  const BigInt bp = p;
  const BigInt pm = bp - 1;
  return IntPolynomial({pm * pm * pm * pm * pm * bp, pm * pm * pm * bp, -2 * pm * pm * bp, -pm,
                        BigInt(1)});
}

}  // namespace zdg
