#include "zdg/census.hpp"

#include <chrono>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "zdg/construct.hpp"
#include "zdg/exact.hpp"
#include "zdg/parallel.hpp"

namespace zdg {

CensusRecord census_record(const RingDescriptor& descriptor) {
  const auto start = std::chrono::steady_clock::now();
  CensusRecord rec;
  rec.spec = descriptor.spec_string;
  const FiniteRing ring = build_ring(descriptor);
  const LoopGraph gamma = zero_divisor_graph(ring);
  rec.gamma_vertices = gamma.vertex_count();
  rec.loop_count = gamma.loop_count();
  rec.nullity = gamma.vertex_count() - rank(gamma.adjacency());
  const CompressedGraph compressed = compressed_graph(ring);
  rec.compressed_vertices = compressed.vertex_count();
  rec.quotient_charpoly = charpoly(weighted_quotient_matrix(compressed));
  switch (is_local(ring)) {
    case Ternary::Yes:
      rec.locality = "local";
      break;
    case Ternary::No:
      rec.locality = "nonlocal";
      break;
    case Ternary::Unknown:
      rec.locality = "unknown";
      break;
  }
  rec.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return rec;
}

std::string census_record_to_json(const CensusRecord& record) {
  nlohmann::ordered_json j;
  j["spec"] = record.spec;
  j["gamma_vertices"] = record.gamma_vertices;
  j["compressed_vertices"] = record.compressed_vertices;
  j["nullity"] = record.nullity;
  j["loop_count"] = record.loop_count;
  j["quotient_charpoly"] = nlohmann::ordered_json::parse(record.quotient_charpoly.to_json());
  j["locality"] = record.locality;
  j["time_ms"] = record.time_ms;
  return j.dump();
}

std::vector<CensusRecord> run_census(Index n_min, Index n_max, int threads) {
  if (n_min < 2 || n_min > n_max) throw std::invalid_argument("census: need 2 <= n_min <= n_max");
  const std::size_t count = static_cast<std::size_t>(n_max - n_min + 1);
  std::vector<CensusRecord> out(count);
  parallel_for(count, threads, [&](std::size_t i) {
    out[i] = census_record(parse_ring_spec("Z" + std::to_string(n_min + static_cast<Index>(i))));
  });
  return out;
}

}  // namespace zdg
