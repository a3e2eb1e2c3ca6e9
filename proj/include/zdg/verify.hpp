#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zdg/construct.hpp"
#include "zdg/exact.hpp"
#include "zdg/graph.hpp"
#include "zdg/ring.hpp"

namespace zdg {

enum class Verdict { Pass, Fail, Errata, Skipped };
std::string to_string(Verdict v);

/// One checked claim instance: the formula value(s), the independently
/// computed value(s) and the outcome. `errata` means the literal statement
/// fails while a documented corrected form passes.
struct VerificationReport {
  std::string claim;
  std::string subject;
  std::vector<std::pair<std::string, std::string>> values;
  Verdict verdict = Verdict::Pass;
  std::string details;
};

std::string report_to_json(const VerificationReport& report);

// --- vertex-count and locality claims ---------------------------------------

/// #V(Gamma(R)) = prod #R_i - prod #U(R_i) - 1 against the direct count.
VerificationReport check_thm31(const RingDescriptor& descriptor);
/// #V(Gamma_E(R)) = prod (#V(Gamma_E(R_i)) + 2) - 2 against the class count.
VerificationReport check_thm32(const RingDescriptor& descriptor);
/// #V(Gamma_E)+2 prime => local; local => #V(Gamma_E)+2 a prime power.
VerificationReport check_cor33(const RingDescriptor& descriptor);
/// Nullity lower bound from the vertex-count formulas; exact nullity compared.
VerificationReport check_thm35(const RingDescriptor& descriptor);

// --- exact rank / nullity claims --------------------------------------------

/// rank A(Gamma) = rank of the weighted quotient = #V(Gamma_E); requires all
/// factors modular.
VerificationReport check_thm41(const RingDescriptor& descriptor);
/// Nonzero eigenvalue count prod(t_i+1)-2 and the closed nullity formula
/// against exact rank/nullity, for the ring prod Z_{p_i^{t_i}}.
VerificationReport check_thm42(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& prime_powers);
VerificationReport check_thm42(const RingDescriptor& descriptor);
/// chi of the weighted quotient divides chi of A(Gamma); for modular products
/// the quotient charpoly times x^nullity reproduces chi(A(Gamma)) exactly.
VerificationReport check_quotient_divides(const RingDescriptor& descriptor);

// --- characteristic polynomial identities (section 5) ------------------------

/// Point-identification identity; skipped when both glued vertices carry loops.
VerificationReport check_lemma51(const LoopGraph& g, const LoopGraph& h, Index v, Index w);
/// Complete-product identity for loop-free graphs; skipped on looped input.
VerificationReport check_lemma52(const LoopGraph& g, const LoopGraph& h);
/// Block-matrix identity chi_M for M = [[A, a d^t],[b c^t, B]].
VerificationReport check_lemma53(const IntMatrix& A, const IntMatrix& B, const IntMatrix& a,
                                 const IntMatrix& b, const IntMatrix& c, const IntMatrix& d);
/// Extended-graph factorization. Evaluates the right-hand side under both
/// sign conventions (exponent = unit count as stated; exponent = vertex count
/// as the proof produces) and reports errata when only the corrected form
/// matches.
VerificationReport check_thm54(const FiniteRing& ring);

// --- product and isomorphism claims ------------------------------------------

/// Bit-exact equality of gamma_product with the zero-divisor graph of the
/// product ring under the canonical tuple bijection.
VerificationReport check_gamma_product(const RingDescriptor& r1, const RingDescriptor& r2);
/// Equal characteristic polynomials of Gamma(Z_{mn}) and Gamma(Z_m x Z_n) for
/// coprime m, n.
VerificationReport check_crt_cospectral(std::uint64_t m, std::uint64_t n);

// --- worked spectra examples --------------------------------------------------

/// Triple product of Z_p: displayed charpoly, nullity and closed-form spectrum.
VerificationReport check_example43(std::uint64_t p);
/// Fourfold product of Z_p: the factored charpoly passes; the displayed
/// nullity expression and lambda_2 are adjudicated as errata against the
/// exact-rank oracle.
std::vector<VerificationReport> check_example44(std::uint64_t p);
/// Displayed quartic (Z_{p^2} x Z_p) and sextic (Z_p x Z_p x Z_q).
VerificationReport check_example45_quartic(std::uint64_t p);
VerificationReport check_example45_sextic(std::uint64_t p, std::uint64_t q);

// --- corpora and suite runner --------------------------------------------------

/// All Z_n descriptors for lo <= n <= hi.
std::vector<RingDescriptor> corpus_zn(Index lo, Index hi);
/// All products of 2..max_factors moduli >= 2 (unordered, ascending) with
/// total size <= max_total.
std::vector<RingDescriptor> corpus_products(Index max_total, int max_factors = 3);

struct SuiteOptions {
  Index zn_cap = 200;        // Z_n corpus bound
  Index product_cap = 1000;  // product-corpus total-size bound
  Index thm54_cap = 100;     // Z_n bound for the extended-graph factorization
  int instances = 200;       // random instances per lemma
  int threads = 1;
  bool include_fixture = true;
  std::string only_ring;     // restrict ring-based suites to one spec
  bool aggregate = true;     // one summary report per claim
};

std::vector<std::string> suite_names();
/// Runs one suite ("thm31", ..., "all") and returns reports sorted by claim
/// then subject. With aggregate=true, ring-level results are folded into one
/// report per claim.
std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& options);

std::vector<VerificationReport> aggregate_by_claim(const std::vector<VerificationReport>& reports);

}  // namespace zdg
