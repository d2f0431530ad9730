#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "abcd/graph.hpp"

namespace abcd {

/// Machine-readable run record. Everything except the timing block is a pure
/// function of (dataset, params, seed), so default reports are byte-identical
/// across reruns; timings are serialized only when has_timings is set.
struct RunReport {
  std::string dataset;
  std::string format;
  std::string criterion;
  int64_t iterations = 0;
  int64_t top_k = 0;
  uint64_t seed = 0;

  GraphStats raw;
  GraphStats lcc;

  int64_t states_retained = 0;
  int64_t frustration_min = 0;
  int64_t frustration_max = 0;
  int32_t winner_state = -1;
  int64_t winner_size = 0;
  std::vector<int64_t> per_state_sizes;
  std::vector<std::string> winner_vertices;

  bool has_timings = false;
  double time_ingest_s = 0.0;
  double time_phase1_s = 0.0;
  double time_phase2_s = 0.0;
  double time_verify_s = 0.0;
  double time_total_s = 0.0;
};

void write_report(std::ostream& out, const RunReport& r);
RunReport parse_report(std::istream& in);

bool operator==(const RunReport& a, const RunReport& b);

}  // namespace abcd
