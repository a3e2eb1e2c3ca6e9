#include <doctest.h>

#include "zdg/census.hpp"
#include "zdg/construct.hpp"

using zdg::CensusRecord;
using zdg::Index;

TEST_CASE("census over a small range") {
  const auto records = zdg::run_census(2, 30, 2);
  REQUIRE(records.size() == 29);
  for (std::size_t i = 0; i < records.size(); ++i)
    CHECK(records[i].spec == "Z" + std::to_string(i + 2));

  const CensusRecord& z12 = records[10];
  CHECK(z12.spec == "Z12");
  CHECK(z12.compressed_vertices == 4);
  CHECK(z12.nullity == z12.gamma_vertices - 4);

  // Primes have empty zero-divisor graphs.
  const CensusRecord& z29 = records[27];
  CHECK(z29.gamma_vertices == 0);
  CHECK(z29.nullity == 0);
  CHECK(z29.quotient_charpoly == zdg::IntPolynomial::constant(1));
}

TEST_CASE("census invariant: nullity equals vertices minus quotient degree") {
  for (const auto& rec : zdg::run_census(2, 60, 2)) {
    CHECK(rec.nullity == rec.gamma_vertices - rec.quotient_charpoly.degree());
    CHECK(rec.locality == (zdg::factorize(static_cast<std::uint64_t>(
                               std::stoull(rec.spec.substr(1)))).size() == 1
                               ? "local"
                               : "nonlocal"));
  }
}

TEST_CASE("census distinguishes non-isomorphic rings of equal size") {
  const CensusRecord z16 = zdg::census_record(zdg::parse_ring_spec("Z16"));
  const CensusRecord z2z8 = zdg::census_record(zdg::parse_ring_spec("Z2xZ8"));
  CHECK(z16.gamma_vertices != z2z8.gamma_vertices);
  CHECK(!(z16.quotient_charpoly == z2z8.quotient_charpoly));
}

TEST_CASE("census record JSON shape") {
  const std::string j = zdg::census_record_to_json(zdg::census_record(zdg::parse_ring_spec("Z8")));
  CHECK(j.find("\"spec\":\"Z8\"") != std::string::npos);
  CHECK(j.find("\"gamma_vertices\":3") != std::string::npos);
  CHECK(j.find("\"compressed_vertices\":2") != std::string::npos);
  CHECK(j.find("\"nullity\":1") != std::string::npos);
  CHECK(j.find("\"loop_count\":1") != std::string::npos);
  CHECK(j.find("\"locality\":\"local\"") != std::string::npos);
  CHECK(j.find("\"time_ms\"") != std::string::npos);
}

TEST_CASE("census rejects bad ranges") {
  CHECK_THROWS_AS(zdg::run_census(1, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(zdg::run_census(10, 5, 1), std::invalid_argument);
}
