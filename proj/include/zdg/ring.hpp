#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zdg/types.hpp"

namespace zdg {

enum class Locality { Local, NonLocal, Unknown };
enum class Ternary { Yes, No, Unknown };

struct FactorSpec {
  enum class Kind { Modular, Table, Fixture };
  Kind kind = Kind::Modular;
  std::uint64_t modulus = 0;  // Modular only
  std::string source;         // Table: file path; Fixture: fixture name
};

struct RingDescriptor {
  std::vector<FactorSpec> factors;
  std::string spec_string;
};

/// Ring-spec grammar: factor ('x' factor)*, where factor is
///   Z<n> | Z(<p>^<t>) | table:<path> | fixture:ex34
/// Whitespace-insensitive; 'Z' and the keywords are case-insensitive.
/// Throws std::invalid_argument on syntax errors or modulus < 2.
RingDescriptor parse_ring_spec(const std::string& text);

/// Immutable finite commutative ring with element indices 0..size-1.
/// Product rings enumerate tuples in row-major order (first factor most
/// significant). Only multiplication is required; addition is an optional
/// capability used by the locality test.
class FiniteRing {
 public:
  struct Atom {
    Index size = 0;
    bool modular = false;  // Z_size with the natural operations
    std::vector<std::uint32_t> mul;  // size*size row-major, table atoms only
    std::vector<std::uint32_t> add;  // optional
    bool has_add = false;
    std::uint32_t zero = 0;
    std::uint32_t one = 0;
    std::vector<std::string> labels;
    std::vector<char> unit_mask;
    Locality locality = Locality::Unknown;
  };

  explicit FiniteRing(std::vector<Atom> atoms, std::string spec_string = "");

  Index size() const { return size_; }
  Index zero() const { return zero_; }
  Index one() const { return one_; }
  Index mul(Index x, Index y) const;
  bool has_addition() const { return has_add_; }
  Index add(Index x, Index y) const;
  /// True iff x * y = 0; early-exits on the first nonzero component.
  bool mul_is_zero(Index x, Index y) const;
  bool is_unit(Index x) const;
  const std::string& label(Index x) const { return labels_[static_cast<std::size_t>(x)]; }
  Locality known_locality() const { return locality_; }
  /// Every factor is some Z_n (the scope of the exact-rank theorems).
  bool is_modular_product() const;
  std::vector<std::uint64_t> modular_moduli() const;

  Index atom_count() const { return static_cast<Index>(atoms_.size()); }
  const Atom& atom(Index i) const { return atoms_[static_cast<std::size_t>(i)]; }
  std::vector<Index> decode(Index x) const;
  Index encode(const std::vector<Index>& components) const;

  const std::string& spec_string() const { return spec_string_; }

 private:
  std::vector<Atom> atoms_;
  std::vector<std::uint32_t> components_;  // size * atom_count, cached decode
  std::vector<std::string> labels_;
  std::vector<char> unit_mask_;
  Index size_ = 0;
  Index zero_ = 0;
  Index one_ = 0;
  bool has_add_ = false;
  Locality locality_ = Locality::Unknown;
  std::string spec_string_;
};

FiniteRing build_ring(const RingDescriptor& descriptor);

/// Table-ring JSON: { "size": n, "labels": [...], "zero": i, "one": j,
/// "mul": n*n nested arrays, "add": optional }. Ring axioms are validated
/// exhaustively up to size 512 and with seeded random triples above.
FiniteRing load_table_ring(const std::string& path);
FiniteRing parse_table_ring_json(const std::string& text);
std::string table_ring_to_json(const FiniteRing& ring);

/// Z_3[[X,Y]]/(XY, X^3, Y^3, X^2-Y^2): 81 elements a+bX+cY+dX^2 with
/// (a1,b1,c1,d1)(a2,b2,c2,d2) = (a1a2, a1b2+a2b1, a1c2+a2c1,
/// a1d2+a2d1+b1b2+c1c2) mod 3 and componentwise addition.
FiniteRing fixture_ex34();

/// Seed for the randomized axiom spot-checks on large table rings.
inline constexpr std::uint64_t kAxiomCheckSeed = 0x5D61;

std::vector<Index> units(const FiniteRing& ring);
/// Nonzero zero-divisors, ascending. In a finite commutative ring these are
/// exactly the nonzero nonunits.
std::vector<Index> zero_divisors(const FiniteRing& ring);
std::vector<Index> annihilator(const FiniteRing& ring, Index x);

struct AnnClass {
  Index representative = 0;  // smallest member
  std::vector<Index> members;
  std::vector<Index> annihilator;
};

/// Partition of all ring elements by identical annihilator, ordered by
/// smallest member index.
std::vector<AnnClass> ann_classes(const FiniteRing& ring);

/// Locality from construction metadata when known; otherwise, when addition
/// is available, by testing whether the nonunits are closed under addition.
Ternary is_local(const FiniteRing& ring);

std::uint64_t euler_phi(std::uint64_t n);
bool is_prime(std::uint64_t n);
/// Prime factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize(std::uint64_t n);

}  // namespace zdg
