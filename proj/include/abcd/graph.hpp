#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace abcd {

struct Edge {
  int32_t u = 0;  // u < v
  int32_t v = 0;
  int8_t sign = 1;  // +1 or -1
};

/// Undirected simple signed graph. Vertex ids are dense in [0, n); edges are
/// stored with u < v and sorted by (u, v), so edge ids are stable.
struct SignedGraph {
  int32_t n = 0;
  std::vector<Edge> edges;
  std::vector<std::string> labels;  // original external ids, one per vertex

  // CSR adjacency over half-edges
  std::vector<int64_t> adj_index;   // size n + 1
  std::vector<int32_t> adj_vertex;  // neighbor
  std::vector<int32_t> adj_edge;    // edge id

  int64_t edge_count() const { return (int64_t)edges.size(); }
  int32_t degree(int32_t v) const { return (int32_t)(adj_index[v + 1] - adj_index[v]); }
  void rebuild_adjacency();
};

struct GraphStats {
  int64_t vertices = 0;
  int64_t edges = 0;
  int64_t cycle_space_dimension = 0;
  double density = 0.0;
  double negative_fraction = 0.0;
  double degree_avg = 0.0;
  double degree_median = 0.0;
  int64_t degree_max = 0;
};

struct RawRecord {
  std::string u;
  std::string v;
  double w = 1.0;
};

struct RawEdgeList {
  std::vector<std::string> declared_vertices;  // optional, keeps isolated vertices
  std::vector<RawRecord> records;
  std::string source_format;
  int64_t rejected_records = 0;
};

// Builds the canonical graph: direction dropped, self-loops removed, parallel
// records aggregated by weight sum (sum >= 0 maps to +1), labels interned
// densely in first-appearance order.
SignedGraph canonicalize(const RawEdgeList& raw);

// Largest connected component plus the old-id -> new-id mapping (-1 when the
// vertex is dropped). Ties between equal components keep the one containing
// the smallest vertex id. Idempotent.
std::pair<SignedGraph, std::vector<int32_t>> largest_connected_component(const SignedGraph& g);

std::vector<int32_t> degrees(const SignedGraph& g);

// Repeated neighbor-degree propagation: round 1 sums plain degrees over each
// vertex's neighborhood, later rounds feed the previous round's values back in.
std::vector<double> neighborhood_degree_sums(const SignedGraph& g, int rounds = 3);

int32_t connected_component_count(const SignedGraph& g);

// |E| - |V| + (#components); the number of fundamental cycles per spanning
// tree on each component.
int64_t cycle_space_dimension(const SignedGraph& g);

GraphStats stats(const SignedGraph& g);

}  // namespace abcd
