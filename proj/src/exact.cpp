#include "zdg/exact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace zdg {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 addmod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin witness set for 64-bit inputs.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Shared descending list of 62-bit primes for CRT; extended on demand.
const u64 kPrimeStart = (1ull << 62) - 1;

std::vector<u64>& prime_pool() {
  static std::vector<u64> pool;
  return pool;
}

u64 crt_prime(std::size_t idx) {
  auto& pool = prime_pool();
  while (pool.size() <= idx) {
    u64 cand = pool.empty() ? kPrimeStart : pool.back() - 2;
    while (!is_prime_u64(cand)) cand -= 2;
    pool.push_back(cand);
  }
  return pool[idx];
}

// --- fraction-free rank -----------------------------------------------------

// Lexicographic de-duplication of rows (duplicate rows never change the rank).
template <typename Scalar>
std::vector<Index> distinct_rows(const DenseMatrix<Scalar>& m) {
  std::vector<Index> idx(static_cast<std::size_t>(m.rows()));
  std::iota(idx.begin(), idx.end(), Index{0});
  auto cmp = [&](Index a, Index b) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (m(a, j) != m(b, j)) return m(a, j) < m(b, j);
    }
    return false;
  };
  auto eq = [&](Index a, Index b) {
    for (Index j = 0; j < m.cols(); ++j)
      if (m(a, j) != m(b, j)) return false;
    return true;
  };
  std::sort(idx.begin(), idx.end(), cmp);
  idx.erase(std::unique(idx.begin(), idx.end(), eq), idx.end());
  return idx;
}

// Distinct rows, then distinct columns, as a small exact core matrix.
template <typename Scalar>
IntMatrix dedupe_core(const DenseMatrix<Scalar>& m) {
  std::vector<Index> rows = distinct_rows(m);
  DenseMatrix<Scalar> reduced(static_cast<Index>(rows.size()), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    reduced.row(static_cast<Index>(i)) = m.row(rows[i]);
  DenseMatrix<Scalar> t = reduced.transpose();
  std::vector<Index> cols = distinct_rows(t);
  IntMatrix core(static_cast<Index>(cols.size()), reduced.rows());
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (Index j = 0; j < reduced.rows(); ++j) core(static_cast<Index>(i), j) = t(cols[i], j);
  return core;
}

Index bareiss_rank(IntMatrix m) {
  const Index rows = m.rows(), cols = m.cols();
  Index r = 0;
  BigInt prev = 1;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot = -1;
    for (Index i = r; i < rows; ++i) {
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    for (Index i = r + 1; i < rows; ++i) {
      // Rows with a zero in the pivot column still get scaled; Bareiss
      // exactness needs every row updated with the same pivot.
      for (Index j = c + 1; j < cols; ++j)
        m(i, j) = (m(i, j) * m(r, c) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

template <typename Scalar>
Index rank_impl(const DenseMatrix<Scalar>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss_rank(dedupe_core(m));
}

// --- charpoly modulo a word prime -------------------------------------------

// In-place similarity reduction to upper Hessenberg form over Z_p.
void hessenberg_mod(std::vector<u64>& h, Index n, u64 p) {
  auto at = [&](Index i, Index j) -> u64& { return h[static_cast<std::size_t>(i * n + j)]; };
  for (Index k = 0; k + 2 <= n; ++k) {
    Index pivot = -1;
    for (Index i = k + 1; i < n; ++i) {
      if (at(i, k) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != k + 1) {
      for (Index j = 0; j < n; ++j) std::swap(at(pivot, j), at(k + 1, j));
      for (Index i = 0; i < n; ++i) std::swap(at(i, pivot), at(i, k + 1));
    }
    const u64 inv = invmod(at(k + 1, k), p);
    for (Index i = k + 2; i < n; ++i) {
      if (at(i, k) == 0) continue;
      const u64 f = mulmod(at(i, k), inv, p);
      for (Index j = k; j < n; ++j) at(i, j) = submod(at(i, j), mulmod(f, at(k + 1, j), p), p);
      for (Index j = 0; j < n; ++j) at(j, k + 1) = addmod(at(j, k + 1), mulmod(f, at(j, i), p), p);
    }
  }
}

// Characteristic polynomial of an upper Hessenberg block h[s..e] via the
// classical recurrence p_m = (x - h_mm) p_{m-1} - sum_i h_im (prod subdiag) p_{i-1}.
std::vector<u64> hessenberg_block_charpoly(const std::vector<u64>& h, Index n, Index s, Index e,
                                           u64 p) {
  auto at = [&](Index i, Index j) -> u64 { return h[static_cast<std::size_t>(i * n + j)]; };
  const Index len = e - s + 1;
  std::vector<std::vector<u64>> polys(static_cast<std::size_t>(len) + 1);
  polys[0] = {1};
  for (Index m = s; m <= e; ++m) {
    const std::size_t idx = static_cast<std::size_t>(m - s) + 1;
    const auto& prevp = polys[idx - 1];
    std::vector<u64> cur(prevp.size() + 1, 0);
    for (std::size_t t = 0; t < prevp.size(); ++t) {
      cur[t + 1] = addmod(cur[t + 1], prevp[t], p);
      cur[t] = submod(cur[t], mulmod(at(m, m), prevp[t], p), p);
    }
    u64 prod = 1;
    for (Index i = m - 1; i >= s; --i) {
      prod = mulmod(prod, at(i + 1, i), p);
      const u64 c = mulmod(at(i, m), prod, p);
      if (c == 0) continue;
      const auto& pi = polys[static_cast<std::size_t>(i - s)];
      for (std::size_t t = 0; t < pi.size(); ++t) cur[t] = submod(cur[t], mulmod(c, pi[t], p), p);
    }
    polys[idx] = std::move(cur);
  }
  return polys[static_cast<std::size_t>(len)];
}

std::vector<u64> poly_mul_mod(const std::vector<u64>& a, const std::vector<u64>& b, u64 p) {
  std::vector<u64> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = addmod(out[i + j], mulmod(a[i], b[j], p), p);
  }
  return out;
}

u64 reduce_mod(const BigInt& v, u64 p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return r.convert_to<u64>();
}

u64 reduce_mod(std::int64_t v, u64 p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  return static_cast<u64>(r);
}

template <typename Scalar>
std::vector<u64> charpoly_mod(const DenseMatrix<Scalar>& m, u64 p) {
  const Index n = m.rows();
  std::vector<u64> h(static_cast<std::size_t>(n * n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) h[static_cast<std::size_t>(i * n + j)] = reduce_mod(m(i, j), p);
  hessenberg_mod(h, n, p);
  std::vector<u64> acc = {1};
  Index s = 0;
  for (Index k = 0; k < n; ++k) {
    const bool last = (k == n - 1) || h[static_cast<std::size_t>((k + 1) * n + k)] == 0;
    if (!last) continue;
    std::vector<u64> block = hessenberg_block_charpoly(h, n, s, k, p);
    acc = poly_mul_mod(acc, block, p);
    s = k + 1;
  }
  return acc;
}

// Proven bound on |coeff| of charpoly: the degree-(n-k) coefficient is a sum of
// C(n,k) principal k-minors, each at most N^k by Hadamard's inequality, and all
// minors above the rank vanish.
BigInt charpoly_coeff_bound(const IntMatrix& m, Index rank_bound) {
  const Index n = m.rows();
  BigInt max_row_sq = 0;
  for (Index i = 0; i < n; ++i) {
    BigInt s = 0;
    for (Index j = 0; j < n; ++j) s += m(i, j) * m(i, j);
    if (s > max_row_sq) max_row_sq = s;
  }
  BigInt norm = boost::multiprecision::sqrt(max_row_sq);
  if (norm * norm < max_row_sq) ++norm;
  BigInt bound = 1, binom = 1, norm_pow = 1;
  for (Index k = 1; k <= rank_bound; ++k) {
    binom = binom * (n - k + 1) / k;
    norm_pow *= norm;
    BigInt cand = binom * norm_pow;
    if (cand > bound) bound = cand;
  }
  return bound;
}

}  // namespace

Index rank(const IntMatrix& m) { return rank_impl(m); }

Index rank(const AdjacencyMatrix& m) { return rank_impl(m); }

IntPolynomial charpoly(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("charpoly: matrix must be square");
  const Index n = m.rows();
  if (n == 0) return IntPolynomial::constant(1);

  // Machine-word staging avoids per-prime big-integer reductions for the
  // common case of adjacency and quotient matrices.
  static const BigInt kI64Max = std::numeric_limits<std::int64_t>::max();
  static const BigInt kI64Min = std::numeric_limits<std::int64_t>::min();
  bool fits64 = true;
  DenseMatrix<std::int64_t> staged(n, n);
  for (Index i = 0; i < n && fits64; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (m(i, j) > kI64Max || m(i, j) < kI64Min) {
        fits64 = false;
        break;
      }
      staged(i, j) = m(i, j).convert_to<std::int64_t>();
    }
  }

  const Index r = fits64 ? rank_impl(staged) : rank_impl(m);
  const BigInt bound = charpoly_coeff_bound(m, r);

  std::vector<u64> primes;
  BigInt modulus = 1;
  while (modulus <= 2 * bound) {
    primes.push_back(crt_prime(primes.size()));
    modulus *= primes.back();
  }

  std::vector<std::vector<u64>> residues;
  residues.reserve(primes.size());
  for (u64 p : primes)
    residues.push_back(fits64 ? charpoly_mod(staged, p) : charpoly_mod(m, p));

  std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1);
  for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) {
    BigInt x = 0, mod = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const u64 p = primes[i];
      const u64 r_i = residues[i][k];
      u64 x_mod_p;
      {
        BigInt t = x % p;
        if (t < 0) t += p;
        x_mod_p = t.convert_to<u64>();
      }
      const u64 m_mod_p = (mod % p).convert_to<u64>();
      const u64 delta = mulmod(submod(r_i % p, x_mod_p, p), invmod(m_mod_p, p), p);
      x += mod * delta;
      mod *= p;
    }
    if (x * 2 > mod) x -= mod;
    coeffs[k] = std::move(x);
  }
  return IntPolynomial(std::move(coeffs));
}

std::string to_csv(const IntMatrix& m) {
  std::ostringstream os;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) os << ",";
      os << m(i, j).str();
    }
    os << "\n";
  }
  return os.str();
}

std::string to_matrix_market(const IntMatrix& m) {
  std::ostringstream os;
  Index nnz = 0;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) ++nnz;
  os << "%%MatrixMarket matrix coordinate integer general\n";
  os << m.rows() << " " << m.cols() << " " << nnz << "\n";
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) os << (i + 1) << " " << (j + 1) << " " << m(i, j).str() << "\n";
  return os.str();
}

}  // namespace zdg
