#include <doctest.h>

#include <algorithm>

#include "zdg/spectra.hpp"
#include "zdg/verify.hpp"

using zdg::build_ring;
using zdg::Index;
using zdg::IntMatrix;
using zdg::parse_ring_spec;
using zdg::Verdict;
using zdg::VerificationReport;

namespace {

std::string value_of(const VerificationReport& r, const std::string& key) {
  for (const auto& [k, v] : r.values)
    if (k == key) return v;
  return "";
}

}  // namespace

TEST_CASE("check_thm31") {
  const auto r = zdg::check_thm31(parse_ring_spec("Z8xZ4"));
  CHECK(r.verdict == Verdict::Pass);
  CHECK(value_of(r, "formula") == "23");
  CHECK(value_of(r, "direct_count") == "23");

  CHECK(value_of(zdg::check_thm31(parse_ring_spec("Z7")), "formula") == "0");
  CHECK(value_of(zdg::check_thm31(parse_ring_spec("Z2xZ2xZ2")), "formula") == "6");
  CHECK(zdg::check_thm31(parse_ring_spec("fixture:ex34")).verdict == Verdict::Pass);
}

TEST_CASE("check_thm32") {
  const auto r = zdg::check_thm32(parse_ring_spec("Z8xZ4"));
  CHECK(r.verdict == Verdict::Pass);
  CHECK(value_of(r, "formula") == "10");  // (2+2)(1+2) - 2

  CHECK(value_of(zdg::check_thm32(parse_ring_spec("Z2xZ2")), "formula") == "2");
  CHECK(value_of(zdg::check_thm32(parse_ring_spec("Z16")), "formula") == "3");
}

TEST_CASE("check_cor33") {
  const auto fixture = zdg::check_cor33(parse_ring_spec("fixture:ex34"));
  CHECK(fixture.verdict == Verdict::Pass);
  CHECK(value_of(fixture, "classes_plus_2") == "7");
  CHECK(value_of(fixture, "prime") == "yes");
  CHECK(value_of(fixture, "local") == "yes");

  const auto klein = zdg::check_cor33(parse_ring_spec("Z2xZ2"));
  CHECK(klein.verdict == Verdict::Pass);
  CHECK(value_of(klein, "prime_power") == "yes");
  CHECK(value_of(klein, "local") == "no");
  CHECK(klein.details.find("converse") != std::string::npos);

  CHECK(zdg::check_cor33(parse_ring_spec("Z27")).verdict == Verdict::Pass);

  // Z_32 is local with 4 + 2 = 6 classes-plus-two: the displayed prime-power
  // direction fails on a genuine local ring and is adjudicated as errata.
  const auto z32 = zdg::check_cor33(parse_ring_spec("Z32"));
  CHECK(z32.verdict == Verdict::Errata);
  CHECK(value_of(z32, "classes_plus_2") == "6");
  CHECK(value_of(z32, "local") == "yes");
}

TEST_CASE("check_thm35") {
  const auto r84 = zdg::check_thm35(parse_ring_spec("Z8xZ4"));
  CHECK(r84.verdict == Verdict::Pass);
  CHECK(value_of(r84, "bound") == "13");
  CHECK(value_of(r84, "exact_nullity") == "13");
  CHECK(value_of(r84, "tight") == "yes");

  const auto r9 = zdg::check_thm35(parse_ring_spec("Z9"));
  CHECK(value_of(r9, "bound") == "1");
  CHECK(value_of(r9, "exact_nullity") == "1");

  const auto fx = zdg::check_thm35(parse_ring_spec("fixture:ex34"));
  CHECK(fx.verdict == Verdict::Pass);
  CHECK(value_of(fx, "bound") == "21");
  CHECK(value_of(fx, "exact_nullity") == "21");
}

TEST_CASE("check_thm41") {
  const auto z12 = zdg::check_thm41(parse_ring_spec("Z12"));
  CHECK(z12.verdict == Verdict::Pass);
  CHECK(value_of(z12, "rank_adjacency") == "4");
  CHECK(value_of(z12, "compressed_vertices") == "4");

  CHECK(value_of(zdg::check_thm41(parse_ring_spec("Z16")), "rank_adjacency") == "3");
  CHECK(value_of(zdg::check_thm41(parse_ring_spec("Z2xZ2xZ2xZ2")), "rank_adjacency") == "14");
  CHECK_THROWS_AS(zdg::check_thm41(parse_ring_spec("fixture:ex34")), std::invalid_argument);
}

TEST_CASE("check_thm42") {
  const auto r84 = zdg::check_thm42({{2, 3}, {2, 2}});
  CHECK(r84.verdict == Verdict::Pass);
  CHECK(value_of(r84, "nonzero_count_formula") == "10");
  CHECK(value_of(r84, "nullity_formula") == "13");

  const auto r333 = zdg::check_thm42(parse_ring_spec("Z3xZ3xZ3"));
  CHECK(r333.verdict == Verdict::Pass);
  CHECK(value_of(r333, "nonzero_count_formula") == "6");
  CHECK(value_of(r333, "exact_nullity") == "12");

  const auto r2222 = zdg::check_thm42(parse_ring_spec("Z2xZ2xZ2xZ2"));
  CHECK(r2222.verdict == Verdict::Pass);
  CHECK(value_of(r2222, "nullity_formula") == "0");

  // CRT refactoring: Z_12 is the (2,2),(3,1) product.
  CHECK(zdg::check_thm42(parse_ring_spec("Z12")).verdict == Verdict::Pass);
}

TEST_CASE("check_quotient_divides") {
  CHECK(zdg::check_quotient_divides(parse_ring_spec("Z12")).verdict == Verdict::Pass);
  CHECK(zdg::check_quotient_divides(parse_ring_spec("fixture:ex34")).verdict == Verdict::Pass);
  const auto z8 = zdg::check_quotient_divides(parse_ring_spec("Z8"));
  CHECK(z8.verdict == Verdict::Pass);
  CHECK(value_of(z8, "exact_nullity") == "1");
  CHECK(value_of(z8, "x_eta_times_quotient") == "equal");
}

TEST_CASE("check_lemma51 instances") {
  zdg::AdjacencyMatrix k2(2, 2);
  k2 << 0, 1, 1, 0;
  const zdg::LoopGraph K2({"a", "b"}, k2);
  CHECK(zdg::check_lemma51(K2, K2, 1, 0).verdict == Verdict::Pass);

  zdg::AdjacencyMatrix looped(1, 1);
  looped(0, 0) = 1;
  const zdg::LoopGraph L({"l"}, looped);
  CHECK(zdg::check_lemma51(L, L, 0, 0).verdict == Verdict::Skipped);
  CHECK(zdg::check_lemma51(L, K2, 0, 1).verdict == Verdict::Pass);
}

TEST_CASE("check_lemma52 instances") {
  const zdg::LoopGraph K1({"a"}, zdg::AdjacencyMatrix::Zero(1, 1));
  CHECK(zdg::check_lemma52(K1, K1).verdict == Verdict::Pass);
  zdg::AdjacencyMatrix looped(1, 1);
  looped(0, 0) = 1;
  CHECK(zdg::check_lemma52(zdg::LoopGraph({"l"}, looped), K1).verdict == Verdict::Skipped);
}

TEST_CASE("check_lemma53 star case") {
  IntMatrix A(1, 1), B = IntMatrix::Zero(4, 4);
  A(0, 0) = 1;
  IntMatrix ones1(1, 1), ones4(4, 1);
  ones1(0, 0) = 1;
  for (Index i = 0; i < 4; ++i) ones4(i, 0) = 1;
  CHECK(zdg::check_lemma53(A, B, ones1, ones4, ones1, ones4).verdict == Verdict::Pass);
  CHECK_THROWS_AS(zdg::check_lemma53(A, B, ones4, ones4, ones1, ones4), std::invalid_argument);
}

TEST_CASE("check_thm54 sign adjudication") {
  // Z_9: both parities even, statement holds as written.
  const auto z9 = zdg::check_thm54(build_ring(parse_ring_spec("Z9")));
  CHECK(z9.verdict == Verdict::Pass);

  // Z_4: #U = 2, #V(Gamma) = 1 -> literal sign fails, corrected passes.
  const auto z4 = zdg::check_thm54(build_ring(parse_ring_spec("Z4")));
  CHECK(z4.verdict == Verdict::Errata);
  CHECK(value_of(z4, "sign_exponent_units") == "mismatch");
  CHECK(value_of(z4, "sign_exponent_vertices") == "match");

  CHECK(zdg::check_thm54(build_ring(parse_ring_spec("Z25"))).verdict == Verdict::Pass);
  CHECK(zdg::check_thm54(build_ring(parse_ring_spec("Z2"))).verdict == Verdict::Errata);

  // The frozen Z_4 witness polynomial.
  const zdg::IntPolynomial chi =
      zdg::charpoly(zdg::adjacency_matrix(zdg::extended_graph(build_ring(parse_ring_spec("Z4")))));
  CHECK(chi == zdg::IntPolynomial({0, 2, -2, -2, 1}));
}

TEST_CASE("check_gamma_product named cases") {
  const auto r = zdg::check_gamma_product(parse_ring_spec("Z8"), parse_ring_spec("Z4"));
  CHECK(r.verdict == Verdict::Pass);
  CHECK(value_of(r, "vertices") == "23");
  CHECK(zdg::check_gamma_product(parse_ring_spec("Z9"), parse_ring_spec("Z6")).verdict ==
        Verdict::Pass);
}

TEST_CASE("check_crt_cospectral") {
  CHECK(zdg::check_crt_cospectral(4, 3).verdict == Verdict::Pass);
  CHECK(zdg::check_crt_cospectral(2, 3).verdict == Verdict::Pass);
  CHECK(zdg::check_crt_cospectral(5, 7).verdict == Verdict::Pass);
  CHECK_THROWS_AS(zdg::check_crt_cospectral(4, 6), std::invalid_argument);
}

TEST_CASE("check_example43") {
  for (std::uint64_t p : {2, 3}) CHECK(zdg::check_example43(p).verdict == Verdict::Pass);
}

TEST_CASE("check_example44 adjudicates the two errata") {
  const auto reports = zdg::check_example44(2);
  REQUIRE(reports.size() == 3);
  CHECK(reports[0].verdict == Verdict::Pass);  // factored polynomial matches
  CHECK(reports[1].verdict == Verdict::Errata);
  CHECK(value_of(reports[1], "displayed") == "-2");
  CHECK(value_of(reports[1], "exact_nullity") == "0");
  CHECK(reports[2].verdict == Verdict::Errata);
  CHECK(value_of(reports[2], "factored_in_spectrum") == "yes");
  CHECK(value_of(reports[2], "displayed_in_spectrum") == "no");

  const auto p3 = zdg::check_example44(3);
  CHECK(value_of(p3[1], "displayed") == "48");
  CHECK(value_of(p3[1], "exact_nullity") == "50");
  CHECK(p3[1].verdict == Verdict::Errata);
}

TEST_CASE("check_example45") {
  CHECK(zdg::check_example45_quartic(2).verdict == Verdict::Pass);
  CHECK(zdg::check_example45_quartic(3).verdict == Verdict::Pass);
  CHECK(zdg::check_example45_sextic(2, 3).verdict == Verdict::Pass);
  CHECK(zdg::check_example45_sextic(3, 2).verdict == Verdict::Pass);
}

TEST_CASE("corpus enumeration") {
  const auto zs = zdg::corpus_zn(2, 10);
  CHECK(zs.size() == 9);
  CHECK(zs.front().spec_string == "Z2");

  const auto products = zdg::corpus_products(30, 3);
  for (const auto& d : products) {
    REQUIRE(d.factors.size() >= 2);
    REQUIRE(d.factors.size() <= 3);
    Index total = 1;
    Index prev = 0;
    for (const auto& f : d.factors) {
      total *= static_cast<Index>(f.modulus);
      CHECK(f.modulus >= 2);
      CHECK(static_cast<Index>(f.modulus) >= prev);
      prev = static_cast<Index>(f.modulus);
    }
    CHECK(total <= 30);
  }
  // Multisets are unique.
  std::vector<std::string> specs;
  for (const auto& d : products) specs.push_back(d.spec_string);
  std::sort(specs.begin(), specs.end());
  CHECK(std::adjacent_find(specs.begin(), specs.end()) == specs.end());
  // Spot count: pairs with n1 <= n2, n1*n2 <= 12 -> (2,2..6),(3,3,4) = 7.
  const auto small = zdg::corpus_products(12, 2);
  CHECK(small.size() == 7);
}

TEST_CASE("run_suite aggregates and sorts") {
  zdg::SuiteOptions opts;
  opts.zn_cap = 20;
  opts.product_cap = 24;
  opts.thm54_cap = 20;
  opts.instances = 10;
  const auto agg = zdg::run_suite("thm31", opts);
  REQUIRE(agg.size() == 1);
  CHECK(agg[0].claim == "thm3.1");
  CHECK(agg[0].verdict == Verdict::Pass);

  opts.aggregate = false;
  const auto raw = zdg::run_suite("thm31", opts);
  CHECK(raw.size() > 20);
  CHECK(std::is_sorted(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
    return a.subject < b.subject;
  }));

  opts.only_ring = "Z4";
  opts.aggregate = false;
  const auto single = zdg::run_suite("thm54", opts);
  REQUIRE(single.size() == 1);
  CHECK(single[0].verdict == Verdict::Errata);

  CHECK_THROWS_AS(zdg::run_suite("nonsense", opts), std::invalid_argument);
}

TEST_CASE("ex44 suite carries exactly one errata claim through aggregation") {
  zdg::SuiteOptions opts;
  const auto agg = zdg::run_suite("ex44", opts);
  REQUIRE(agg.size() == 1);
  CHECK(agg[0].claim == "ex4.4");
  CHECK(agg[0].verdict == Verdict::Errata);
}

TEST_CASE("report JSON shape") {
  const auto r = zdg::check_thm31(parse_ring_spec("Z8"));
  const std::string j = zdg::report_to_json(r);
  CHECK(j.find("\"claim\":\"thm3.1\"") != std::string::npos);
  CHECK(j.find("\"subject\":\"Z8\"") != std::string::npos);
  CHECK(j.find("\"verdict\":\"pass\"") != std::string::npos);
}
