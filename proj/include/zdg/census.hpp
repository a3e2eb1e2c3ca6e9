#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zdg/polynomial.hpp"
#include "zdg/ring.hpp"

namespace zdg {

/// Per-ring summary row: vertex counts, exact nullity, the quotient charpoly
/// and loop count of Gamma(R). time_ms is wall time and is the only
/// non-deterministic field.
struct CensusRecord {
  std::string spec;
  Index gamma_vertices = 0;
  Index compressed_vertices = 0;
  Index nullity = 0;
  Index loop_count = 0;
  IntPolynomial quotient_charpoly;
  std::string locality;
  std::int64_t time_ms = 0;
};

CensusRecord census_record(const RingDescriptor& descriptor);
std::string census_record_to_json(const CensusRecord& record);

/// One record per Z_n, n_min <= n <= n_max, emitted in ascending order
/// regardless of worker completion order.
std::vector<CensusRecord> run_census(Index n_min, Index n_max, int threads);

}  // namespace zdg
