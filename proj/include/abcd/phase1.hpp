#pragma once

#include "abcd/graph.hpp"
#include "abcd/rng.hpp"

namespace abcd {

struct SpanningTree {
  int32_t root = -1;
  std::vector<int32_t> parent;       // parent[root] == root
  std::vector<int32_t> parent_edge;  // -1 at the root
  std::vector<int8_t> path_sign;     // sign product along the tree path from the root
  std::vector<uint8_t> tree_edge;    // per edge id
};

/// One near-balanced state: switching the signs of `candidates` balances the
/// graph, and `harary` is the bipartition of the switched graph (bit 1 marks
/// the larger side).
struct BalancedState {
  std::vector<int32_t> candidates;  // sorted edge ids
  std::vector<uint8_t> harary;
  int64_t arrival = -1;  // iteration that produced the state
  int64_t frustration() const { return (int64_t)candidates.size(); }
};

struct StateSet {
  std::vector<BalancedState> states;  // sorted by (frustration, candidates)
  int64_t iterations_run = 0;
  int64_t k_limit = 0;
};

// Per-iteration and per-state streams; both kernels and the reference
// implementation draw from these, which is what makes runs reproducible
// independent of thread count.
Rng iteration_rng(uint64_t seed, int64_t iteration);
Rng state_rng(uint64_t seed, int64_t arrival);

// BFS tree from a uniformly chosen root with shuffled neighbor visit order.
// Throws if g is empty or disconnected (pass the largest component).
SpanningTree sample_bfs_spanning_tree(const SignedGraph& g, Rng rng);

// Sign of the cycle closed by off-tree edge `edge_id`; throws on tree edges.
int fundamental_cycle_sign(const SignedGraph& g, const SpanningTree& t, int32_t edge_id);

// Off-tree edges whose fundamental cycle is negative, sorted by edge id.
// Switching exactly these signs balances the graph.
std::vector<int32_t> candidate_edge_set(const SignedGraph& g, const SpanningTree& t);

// Sign-aware 2-coloring of the switched graph. Bit 1 goes to the larger color
// class; ties keep the class containing vertex 0. Throws "state not balanced"
// on a coloring contradiction.
std::vector<uint8_t> harary_vector(const SignedGraph& g, const std::vector<int32_t>& candidates);

// Runs `iterations` independent tree samples and keeps at most k states with
// the smallest frustration (duplicate candidate sets are dropped first; when
// the buffer is full, the stored worst is evicted only for a strictly better
// newcomer). Harary vectors are computed for the retained states only.
//
// The parallel version batches iterations across OpenMP threads; the serial
// version is the straight-line reference the tests compare against. Both
// return identical StateSets for the same (g, iterations, k, seed).
StateSet collect_topk_states(const SignedGraph& g, int64_t iterations, int64_t k, uint64_t seed);
StateSet collect_topk_states_serial(const SignedGraph& g, int64_t iterations, int64_t k,
                                    uint64_t seed);

}  // namespace abcd
