#pragma once

#include <string>
#include <vector>

#include "abcd/graph.hpp"

namespace abcd {

struct BalanceReport {
  bool balanced = false;
  std::vector<uint8_t> side;   // witness bipartition when balanced
  int32_t violating_edge = -1;  // edge id otherwise
};

// Sign-aware 2-coloring, component by component. Balanced graphs come back
// with a witness bipartition, unbalanced ones with one violating edge.
BalanceReport is_balanced(const SignedGraph& g);

// Flips the given edge signs on a copy and reports whether that balances the
// graph. Throws on unknown edge ids.
bool switch_set_balances(const SignedGraph& g, const std::vector<int32_t>& edge_ids);

// Exact frustration index by bipartition enumeration; graphs up to 20
// vertices only.
int64_t frustration_index(const SignedGraph& g);

struct OracleResult {
  int32_t size = 0;
  std::vector<int32_t> vertices;  // lexicographically smallest witness
};

// Exhaustive maximum balanced induced sub-graph; graphs up to 16 vertices
// only. Scans subsets by descending size, in lexicographic order within a
// size.
OracleResult oracle_max_balanced(const SignedGraph& g, bool require_connected);

struct ResultCheck {
  BalanceReport balance;
  bool connected = false;
};

// Independently re-induces the sub-graph named by `winner_labels` inside g and
// checks balance and connectivity. Throws when a label is unknown or repeated.
ResultCheck verify_result(const SignedGraph& g, const std::vector<std::string>& winner_labels);

}  // namespace abcd
