#include <doctest.h>

#include <cmath>

#include "zdg/spectra.hpp"

using zdg::build_ring;
using zdg::FiniteRing;
using zdg::Index;
using zdg::IntMatrix;
using zdg::IntPolynomial;
using zdg::parse_ring_spec;
using zdg::Spectrum;

namespace {

FiniteRing ring_of(const std::string& spec) { return build_ring(parse_ring_spec(spec)); }

IntMatrix quotient_of(const std::string& spec) {
  return zdg::weighted_quotient_matrix(zdg::compressed_graph(ring_of(spec)));
}

void check_entry(const Spectrum& s, std::size_t i, double value, Index mult) {
  REQUIRE(i < s.entries().size());
  CHECK(s.entries()[i].value == doctest::Approx(value).epsilon(1e-9));
  CHECK(s.entries()[i].multiplicity == mult);
}

}  // namespace

TEST_CASE("eigenvalues_symmetric basics") {
  IntMatrix m(2, 2);
  m << 0, 1, 1, 0;
  const Spectrum s = zdg::eigenvalues_symmetric(m);
  REQUIRE(s.entries().size() == 2);
  check_entry(s, 0, 1.0, 1);
  check_entry(s, 1, -1.0, 1);

  IntMatrix bad(2, 2);
  bad << 0, 1, 0, 0;
  CHECK_THROWS_AS(zdg::eigenvalues_symmetric(bad), std::invalid_argument);

  // A(Gamma(Z_8)) has spectrum {2, 0, -1}.
  const Spectrum s8 =
      zdg::eigenvalues_symmetric(zdg::adjacency_matrix(zdg::zero_divisor_graph(ring_of("Z8"))));
  REQUIRE(s8.entries().size() == 3);
  check_entry(s8, 0, 2.0, 1);
  check_entry(s8, 1, 0.0, 1);
  check_entry(s8, 2, -1.0, 1);

  // K_{2,2}: {2, 0^2, -2}.
  const Spectrum s33 =
      zdg::eigenvalues_symmetric(zdg::adjacency_matrix(zdg::zero_divisor_graph(ring_of("Z3xZ3"))));
  REQUIRE(s33.entries().size() == 3);
  check_entry(s33, 0, 2.0, 1);
  check_entry(s33, 1, 0.0, 2);
  check_entry(s33, 2, -2.0, 1);
}

TEST_CASE("real roots with multiplicity") {
  const IntPolynomial x = IntPolynomial::x();
  const IntPolynomial p =
      (x - IntPolynomial::constant(2)) * (x - IntPolynomial::constant(2)) *
      (x + IntPolynomial::constant(1));
  const auto roots = zdg::real_roots_with_multiplicity(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].first == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(roots[0].second == 2);
  CHECK(roots[1].first == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(roots[1].second == 1);

  const auto cube = zdg::real_roots_with_multiplicity(x * x * x);
  REQUIRE(cube.size() == 1);
  CHECK(cube[0].first == 0.0);
  CHECK(cube[0].second == 3);

  // Quintic with an irrational pair: x^2 - 2 times (x-1)^3.
  const IntPolynomial q = IntPolynomial({-2, 0, 1}) * (x - IntPolynomial::constant(1)) *
                          (x - IntPolynomial::constant(1)) * (x - IntPolynomial::constant(1));
  const auto qr = zdg::real_roots_with_multiplicity(q);
  REQUIRE(qr.size() == 3);
  CHECK(qr[0].first == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(qr[1].second == 3);
}

TEST_CASE("spectrum_of_ring on small rings") {
  const Spectrum z4 = zdg::spectrum_of_ring(ring_of("Z4"));
  REQUIRE(z4.entries().size() == 1);
  check_entry(z4, 0, 1.0, 1);

  CHECK_THROWS_AS(zdg::spectrum_of_ring(ring_of("Z7")), std::invalid_argument);

  // Errata-free sanity: dimension equals the vertex count.
  for (const char* spec : {"Z8", "Z12", "Z8xZ4", "Z3xZ3"}) {
    const FiniteRing r = ring_of(spec);
    CHECK(zdg::spectrum_of_ring(r).dimension() ==
          zdg::zero_divisor_graph(r).vertex_count());
  }
}

TEST_CASE("spectrum_of_ring matches closed_form_p3") {
  for (std::uint64_t p : {2, 3, 5}) {
    const std::string z = "Z" + std::to_string(p);
    const Spectrum computed = zdg::spectrum_of_ring(ring_of(z + "x" + z + "x" + z));
    const Spectrum closed = zdg::closed_form_p3(p);
    REQUIRE(computed.entries().size() == closed.entries().size());
    for (std::size_t i = 0; i < computed.entries().size(); ++i) {
      CHECK(computed.entries()[i].multiplicity == closed.entries()[i].multiplicity);
      CHECK(computed.entries()[i].value ==
            doctest::Approx(closed.entries()[i].value).epsilon(1e-9));
    }
  }
}

TEST_CASE("closed_form_p3 frozen values at p = 3") {
  const Spectrum s = zdg::closed_form_p3(3);
  REQUIRE(s.entries().size() == 5);
  check_entry(s, 0, 2.0 + 2.0 * std::sqrt(3.0), 1);
  check_entry(s, 1, 2.0, 2);
  check_entry(s, 2, 0.0, 12);
  check_entry(s, 3, 2.0 - 2.0 * std::sqrt(3.0), 1);
  check_entry(s, 4, -4.0, 2);
  CHECK(s.dimension() == 18);  // #V(Gamma) = 27 - 8 - 1
}

TEST_CASE("closed_form_p3 edge cases") {
  const Spectrum p2 = zdg::closed_form_p3(2);
  CHECK(p2.zero_multiplicity() == 0);
  CHECK(p2.dimension() == 6);  // 2^3 - 1 - 1
  CHECK(p2.weighted_sum() == doctest::Approx(0.0).epsilon(1e-9));

  const Spectrum p5 = zdg::closed_form_p3(5);
  CHECK(p5.zero_multiplicity() == 54);
  CHECK(p5.weighted_sum() == doctest::Approx(0.0).epsilon(1e-9));  // loop-free graph

  CHECK_THROWS_AS(zdg::closed_form_p3(4), std::invalid_argument);
  CHECK_THROWS_AS(zdg::closed_form_p3(1), std::invalid_argument);
}

TEST_CASE("closed_form_p4 values") {
  const Spectrum p2 = zdg::closed_form_p4(2);
  CHECK(p2.zero_multiplicity() == 0);
  Index nonzero = 0;
  for (const auto& e : p2.entries()) nonzero += e.multiplicity;
  CHECK(nonzero == 14);  // prod(t_i + 1) - 2 = 2^4 - 2
  CHECK(p2.weighted_sum() == doctest::Approx(0.0).epsilon(1e-9));
  // Frozen values: {(5+sqrt(21))/2, 1^[5], (5-sqrt(21))/2, (-3+sqrt(5))/2^[3],
  //                 -1, (-3-sqrt(5))/2^[3]}
  check_entry(p2, 0, (5.0 + std::sqrt(21.0)) / 2.0, 1);
  check_entry(p2, 1, 1.0, 5);
  check_entry(p2, 2, (5.0 - std::sqrt(21.0)) / 2.0, 1);
  check_entry(p2, 3, (-3.0 + std::sqrt(5.0)) / 2.0, 3);
  check_entry(p2, 4, -1.0, 1);
  check_entry(p2, 5, (-3.0 - std::sqrt(5.0)) / 2.0, 3);

  const Spectrum p3 = zdg::closed_form_p4(3);
  CHECK(p3.zero_multiplicity() == 50);  // 81 - 16 - 15
  CHECK(p3.dimension() == 64);          // 81 - 16 - 1
}

TEST_CASE("charpoly_formula_p3 and p4 match the quotient matrices") {
  for (std::uint64_t p : {2, 3, 5}) {
    const std::string z = "Z" + std::to_string(p);
    CHECK(zdg::charpoly(quotient_of(z + "x" + z + "x" + z)) == zdg::charpoly_formula_p3(p));
  }
  for (std::uint64_t p : {2, 3}) {
    const std::string z = "Z" + std::to_string(p);
    CHECK(zdg::charpoly(quotient_of(z + "x" + z + "x" + z + "x" + z)) ==
          zdg::charpoly_formula_p4(p));
  }
}

TEST_CASE("charpoly_formula_ppq") {
  // The displayed sextic, evaluated: no x^5 or x term; constant -(p-1)^6 (q-1)^3.
  const IntPolynomial f23 = zdg::charpoly_formula_ppq(2, 3);
  CHECK(f23.degree() == 6);
  CHECK(f23.coeff(5) == 0);
  CHECK(f23.coeff(1) == 0);
  CHECK(f23.coeff(0) == -8);
  CHECK(zdg::charpoly_formula_ppq(3, 2).coeff(0) == -64);

  for (auto [p, q] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {2, 3}, {3, 2}, {3, 5}, {2, 5}, {5, 2}, {5, 3}}) {
    const std::string spec =
        "Z" + std::to_string(p) + "xZ" + std::to_string(p) + "xZ" + std::to_string(q);
    CHECK(zdg::charpoly(quotient_of(spec)) == zdg::charpoly_formula_ppq(p, q));
  }
  CHECK_THROWS_AS(zdg::charpoly_formula_ppq(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(zdg::charpoly_formula_ppq(4, 3), std::invalid_argument);
}

TEST_CASE("charpoly_formula_p2p") {
  CHECK(zdg::charpoly_formula_p2p(2) == IntPolynomial({2, 2, -4, -1, 1}));
  CHECK(zdg::charpoly_formula_p2p(3) == IntPolynomial({96, 24, -24, -2, 1}));
  for (std::uint64_t p : {2, 3, 5, 7}) {
    CHECK(zdg::charpoly_formula_p2p(p).degree() == 4);
    const std::string spec = "Z" + std::to_string(p * p) + "xZ" + std::to_string(p);
    CHECK(zdg::charpoly(quotient_of(spec)) == zdg::charpoly_formula_p2p(p));
  }
}

TEST_CASE("trace identities for spectra") {
  for (const char* spec : {"Z8", "Z16", "Z12", "Z8xZ4", "Z3xZ3xZ3", "fixture:ex34"}) {
    const FiniteRing r = ring_of(spec);
    const zdg::LoopGraph gamma = zdg::zero_divisor_graph(r);
    const Spectrum s = zdg::spectrum_of_ring(r);
    CHECK(s.weighted_sum() ==
          doctest::Approx(static_cast<double>(gamma.loop_count())).epsilon(1e-6));
    double trace_sq = 0;
    for (Index i = 0; i < gamma.vertex_count(); ++i)
      for (Index j = 0; j < gamma.vertex_count(); ++j)
        trace_sq += gamma.adjacency()(i, j) * gamma.adjacency()(j, i);
    CHECK(s.weighted_square_sum() == doctest::Approx(trace_sq).epsilon(1e-6));
  }
}

TEST_CASE("fixture spectrum uses the symmetric fallback with exact nullity") {
  const FiniteRing fx = ring_of("fixture:ex34");
  const zdg::LoopGraph gamma = zdg::zero_divisor_graph(fx);
  const Spectrum s = zdg::spectrum_of_ring(fx);
  CHECK(s.dimension() == 26);
  CHECK(s.zero_multiplicity(1e-6) == 21);
  CHECK(gamma.vertex_count() - zdg::rank(gamma.adjacency()) == 21);
}

TEST_CASE("quotient spectrum reproduces the nonzero symmetric spectrum") {
  for (const char* spec : {"Z16", "Z12", "Z8xZ4", "Z2xZ2xZ2"}) {
    const FiniteRing r = ring_of(spec);
    const Spectrum quotient_route = zdg::spectrum_of_ring(r);
    const Spectrum numeric_route =
        zdg::eigenvalues_symmetric(zdg::adjacency_matrix(zdg::zero_divisor_graph(r)));
    REQUIRE(quotient_route.entries().size() == numeric_route.entries().size());
    for (std::size_t i = 0; i < quotient_route.entries().size(); ++i) {
      CHECK(quotient_route.entries()[i].multiplicity ==
            numeric_route.entries()[i].multiplicity);
      CHECK(quotient_route.entries()[i].value ==
            doctest::Approx(numeric_route.entries()[i].value).epsilon(1e-6));
    }
  }
}

TEST_CASE("spectrum grouping and serialization") {
  Spectrum s = Spectrum::from_values({{1.0000001, 1}, {1.0, 2}, {-3.0, 1}}, 1e-5);
  REQUIRE(s.entries().size() == 2);
  CHECK(s.entries()[0].multiplicity == 3);
  const std::string json = zdg::spectrum_of_ring(ring_of("Z4")).to_json();
  CHECK(json == "[{\"value\":\"1\",\"multiplicity\":1}]");
}
