#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "zdg/census.hpp"
#include "zdg/construct.hpp"
#include "zdg/exact.hpp"
#include "zdg/spectra.hpp"
#include "zdg/verify.hpp"

namespace {

int default_threads() {
  if (const char* env = std::getenv("ZDG_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

std::string graph_to_json(const zdg::LoopGraph& g) {
  nlohmann::ordered_json j;
  j["labels"] = g.labels();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (zdg::Index i = 0; i < g.vertex_count(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (zdg::Index k = 0; k < g.vertex_count(); ++k) row.push_back(g.adjacency()(i, k));
    rows.push_back(std::move(row));
  }
  j["adjacency"] = std::move(rows);
  return j.dump();
}

int cmd_graph(const std::string& spec, const std::string& format, bool compressed, bool extended) {
  const zdg::FiniteRing ring = zdg::build_ring(zdg::parse_ring_spec(spec));
  if (compressed) {
    const zdg::CompressedGraph c = zdg::compressed_graph(ring);
    if (format == "dot") {
      std::cout << zdg::to_dot(c);
    } else if (format == "csv") {
      std::cout << zdg::to_csv(zdg::weighted_quotient_matrix(c));
    } else {
      std::cout << graph_to_json(c.to_loop_graph()) << "\n";
    }
    return 0;
  }
  const zdg::LoopGraph g = extended ? zdg::extended_graph(ring) : zdg::zero_divisor_graph(ring);
  if (format == "dot") {
    std::cout << zdg::to_dot(g);
  } else if (format == "csv") {
    std::cout << zdg::to_csv(zdg::adjacency_matrix(g));
  } else {
    std::cout << graph_to_json(g) << "\n";
  }
  return 0;
}

int cmd_spectrum(const std::string& spec, double tol) {
  const zdg::FiniteRing ring = zdg::build_ring(zdg::parse_ring_spec(spec));
  const zdg::LoopGraph gamma = zdg::zero_divisor_graph(ring);
  const zdg::Spectrum spectrum = zdg::spectrum_of_ring(ring, tol);
  const zdg::IntPolynomial chi =
      zdg::charpoly(zdg::weighted_quotient_matrix(zdg::compressed_graph(ring)));
  nlohmann::ordered_json j;
  j["ring"] = spec;
  j["vertices"] = gamma.vertex_count();
  j["nullity"] = gamma.vertex_count() - zdg::rank(gamma.adjacency());
  j["spectrum"] = nlohmann::ordered_json::parse(spectrum.to_json());
  j["quotient_charpoly"] = nlohmann::ordered_json::parse(chi.to_json());
  std::cout << j.dump() << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, const zdg::SuiteOptions& opts, bool strict) {
  const auto reports = zdg::run_suite(suite, opts);
  bool any_fail = false, any_errata = false;
  for (const auto& r : reports) {
    std::cout << zdg::report_to_json(r) << "\n";
    if (r.verdict == zdg::Verdict::Fail) any_fail = true;
    if (r.verdict == zdg::Verdict::Errata) any_errata = true;
  }
  if (any_fail) return 1;
  if (strict && any_errata) return 1;
  return 0;
}

int cmd_census(const std::string& range, const std::string& output, int threads) {
  const auto sep = range.find("..");
  if (sep == std::string::npos)
    throw std::invalid_argument("census range must look like 2..30");
  const zdg::Index lo = std::stoll(range.substr(0, sep));
  const zdg::Index hi = std::stoll(range.substr(sep + 2));
  const auto records = zdg::run_census(lo, hi, threads);
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!output.empty()) {
    file.open(output);
    if (!file) throw std::runtime_error("cannot write census output: " + output);
    os = &file;
  }
  for (const auto& rec : records) (*os) << zdg::census_record_to_json(rec) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero-divisor graph toolkit: exact spectra and verification suites"};
  app.require_subcommand(1);

  std::string spec, format = "dot";
  bool compressed = false, extended = false;
  auto* graph = app.add_subcommand("graph", "export Gamma(R) or derived graphs");
  graph->add_option("spec", spec, "ring spec, e.g. Z8xZ4")->required();
  graph->add_option("--format", format, "dot, csv or json")
      ->check(CLI::IsMember({"dot", "csv", "json"}));
  graph->add_flag("--compressed", compressed, "compressed graph with class sizes");
  graph->add_flag("--extended", extended, "extended graph on all ring elements");

  std::string sspec;
  double tol = 1e-6;
  auto* spectrum = app.add_subcommand("spectrum", "spectrum, nullity and quotient charpoly");
  spectrum->add_option("spec", sspec, "ring spec")->required();
  spectrum->add_option("--tol", tol, "eigenvalue grouping tolerance");

  std::string suite, only_ring;
  long long max_size = 0;
  int threads = default_threads();
  bool strict = false, verbose = false;
  auto* verify = app.add_subcommand("verify", "run verification suites (JSONL reports)");
  std::vector<std::string> names = zdg::suite_names();
  names.push_back("all");
  verify->add_option("suite", suite, "suite name or 'all'")
      ->required()
      ->check(CLI::IsMember(names));
  verify->add_option("--ring", only_ring, "restrict ring-based checks to one spec");
  verify->add_option("--max-size", max_size, "cap corpus ring sizes");
  verify->add_option("--threads", threads, "worker threads");
  verify->add_flag("--strict", strict, "errata verdicts fail the exit code");
  verify->add_flag("--verbose", verbose, "one report per instance instead of per claim");

  std::string range, output;
  int census_threads = default_threads();
  auto* census = app.add_subcommand("census", "JSONL census of Z_n rings");
  census->add_option("range", range, "n_min..n_max")->required();
  census->add_option("--output", output, "output path (default stdout)");
  census->add_option("--threads", census_threads, "worker threads");

  try {
    app.parse(argc, argv);
    if (graph->parsed()) return cmd_graph(spec, format, compressed, extended);
    if (spectrum->parsed()) return cmd_spectrum(sspec, tol);
    if (verify->parsed()) {
      zdg::SuiteOptions opts;
      opts.threads = threads;
      opts.only_ring = only_ring;
      opts.aggregate = !verbose && only_ring.empty();
      if (max_size > 0) {
        opts.zn_cap = max_size;
        opts.product_cap = max_size;
        opts.thm54_cap = std::min<long long>(max_size, 100);
      }
      return cmd_verify(suite, opts, strict);
    }
    if (census->parsed()) return cmd_census(range, output, census_threads);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
