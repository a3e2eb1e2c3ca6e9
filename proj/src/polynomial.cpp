#include "zdg/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/integer.hpp>
#include <nlohmann/json.hpp>

namespace zdg {

namespace {
const BigInt kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<BigInt> ascending_coeffs)
    : coeffs_(ascending_coeffs) {
  normalize();
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(BigInt c) {
  IntPolynomial p;
  p.coeffs_.push_back(std::move(c));
  p.normalize();
  return p;
}

IntPolynomial IntPolynomial::x() { return IntPolynomial({BigInt(0), BigInt(1)}); }

IntPolynomial IntPolynomial::monomial(int k, BigInt c) {
  if (k < 0) throw std::invalid_argument("monomial: negative degree");
  IntPolynomial p;
  p.coeffs_.assign(static_cast<std::size_t>(k) + 1, BigInt(0));
  p.coeffs_.back() = std::move(c);
  p.normalize();
  return p;
}

const BigInt& IntPolynomial::coeff(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return kZero;
  return coeffs_[static_cast<std::size_t>(k)];
}

const BigInt& IntPolynomial::leading() const {
  if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
  return coeffs_.back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] -= rhs.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return IntPolynomial();
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const BigInt& c) const {
  std::vector<BigInt> out = coeffs_;
  for (auto& v : out) v *= c;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> out = coeffs_;
  for (auto& v : out) v = -v;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::compose_negate() const {
  std::vector<BigInt> out = coeffs_;
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("shifted: negative shift");
  if (is_zero()) return IntPolynomial();
  std::vector<BigInt> out(static_cast<std::size_t>(k), BigInt(0));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return IntPolynomial();
  std::vector<BigInt> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * BigInt(i);
  return IntPolynomial(std::move(out));
}

BigInt IntPolynomial::evaluate(const BigInt& v) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

Rational IntPolynomial::evaluate(const Rational& v) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + Rational(*it);
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeff(k);
    if (c == 0) continue;
    BigInt a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (k == 0 || a != 1) os << a.str();
    if (k > 0) {
      if (a != 1) os << "*";
      os << "x";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::string IntPolynomial::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : coeffs_) arr.push_back(c.str());
  return arr.dump();
}

IntPolynomial IntPolynomial::from_json(const std::string& text) {
  nlohmann::json arr = nlohmann::json::parse(text);
  if (!arr.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<BigInt> coeffs;
  coeffs.reserve(arr.size());
  for (const auto& item : arr) {
    if (!item.is_string()) throw std::invalid_argument("polynomial JSON entries must be strings");
    coeffs.emplace_back(item.get<std::string>());
  }
  return IntPolynomial(std::move(coeffs));
}

int zero_root_multiplicity(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("zero_root_multiplicity of zero polynomial");
  int k = 0;
  while (p.coeff(k) == 0) ++k;
  return k;
}

std::optional<IntPolynomial> try_divide(const IntPolynomial& q, const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (q.is_zero()) return IntPolynomial();
  if (q.degree() < p.degree()) return std::nullopt;

  // Long division over Q; succeed only when the remainder vanishes and the
  // quotient clears to integers.
  const int dq = q.degree(), dp = p.degree();
  std::vector<Rational> rem(static_cast<std::size_t>(dq) + 1);
  for (int i = 0; i <= dq; ++i) rem[static_cast<std::size_t>(i)] = Rational(q.coeff(i));
  const Rational lead(p.leading());
  std::vector<Rational> quot(static_cast<std::size_t>(dq - dp) + 1);
  for (int k = dq - dp; k >= 0; --k) {
    Rational f = rem[static_cast<std::size_t>(k + dp)] / lead;
    quot[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (int i = 0; i <= dp; ++i)
      rem[static_cast<std::size_t>(k + i)] -= f * Rational(p.coeff(i));
  }
  for (int i = 0; i < dp; ++i)
    if (rem[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  std::vector<BigInt> out(quot.size());
  for (std::size_t i = 0; i < quot.size(); ++i) {
    if (denominator(quot[i]) != 1) return std::nullopt;
    out[i] = numerator(quot[i]);
  }
  return IntPolynomial(std::move(out));
}

bool divides(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero()) throw std::invalid_argument("divides: zero divisor polynomial");
  if (q.is_zero()) return true;
  if (q.degree() < p.degree()) return false;

  const int dq = q.degree(), dp = p.degree();
  std::vector<Rational> rem(static_cast<std::size_t>(dq) + 1);
  for (int i = 0; i <= dq; ++i) rem[static_cast<std::size_t>(i)] = Rational(q.coeff(i));
  const Rational lead(p.leading());
  for (int k = dq - dp; k >= 0; --k) {
    Rational f = rem[static_cast<std::size_t>(k + dp)] / lead;
    if (f == 0) continue;
    for (int i = 0; i <= dp; ++i)
      rem[static_cast<std::size_t>(k + i)] -= f * Rational(p.coeff(i));
  }
  for (int i = 0; i < dp; ++i)
    if (rem[static_cast<std::size_t>(i)] != 0) return false;
  return true;
}

BigInt content(const IntPolynomial& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) g = boost::multiprecision::gcd(g, c);
  return g < 0 ? BigInt(-g) : g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  BigInt c = content(p);
  std::vector<BigInt> out = p.coeffs();
  for (auto& v : out) v /= c;
  return IntPolynomial(std::move(out));
}

namespace {

// Pseudo-remainder of a by b: prem(a, b) with a scaled by lc(b)^(deg a - deg b + 1).
IntPolynomial pseudo_rem(IntPolynomial a, const IntPolynomial& b) {
  const int db = b.degree();
  const BigInt& lb = b.leading();
  while (!a.is_zero() && a.degree() >= db) {
    const int shift = a.degree() - db;
    const BigInt la = a.leading();
    a = a * lb - (b * la).shifted(shift);
  }
  return a;
}

}  // namespace

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() && b.is_zero()) return IntPolynomial();
  if (a.is_zero()) return primitive_part(b).leading() < 0 ? -primitive_part(b) : primitive_part(b);
  if (b.is_zero()) return primitive_part(a).leading() < 0 ? -primitive_part(a) : primitive_part(a);

  IntPolynomial u = primitive_part(a);
  IntPolynomial v = primitive_part(b);
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPolynomial r = primitive_part(pseudo_rem(u, v));
    u = std::move(v);
    v = std::move(r);
  }
  if (u.leading() < 0) u = -u;
  return u;
}

std::vector<std::pair<IntPolynomial, int>> square_free_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("square-free decomposition of zero polynomial");
  std::vector<std::pair<IntPolynomial, int>> out;
  if (p.degree() == 0) return out;

  IntPolynomial f = primitive_part(p);
  if (f.leading() < 0) f = -f;

  // Yun's algorithm over Z[x].
  IntPolynomial fp = f.derivative();
  IntPolynomial g = poly_gcd(f, fp);
  IntPolynomial w = *try_divide(f, g);
  IntPolynomial y = *try_divide(fp, g);
  IntPolynomial z = y - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    IntPolynomial gi = poly_gcd(w, z);
    if (gi.degree() > 0) out.emplace_back(gi, i);
    w = *try_divide(w, gi);
    y = *try_divide(z, gi);
    z = y - w.derivative();
    ++i;
  }
  return out;
}

}  // namespace zdg
