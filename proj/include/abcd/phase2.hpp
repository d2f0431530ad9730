#pragma once

#include <string>

#include "abcd/phase1.hpp"

namespace abcd {

enum class Criterion : int {
  degree = 1,  // smaller plain degree loses
  harary = 2,  // smaller-side endpoint loses on crossing edges, neighborhood sums otherwise
  status = 3,  // smaller adjusted status loses
};

const char* to_string(Criterion c);
Criterion criterion_from_string(const std::string& s);

// Vertex measures computed once on the full graph and shared by every state.
struct Phase2Aux {
  std::vector<int32_t> degree;
  std::vector<double> neighborhood;  // three propagation rounds
  std::vector<double> status;        // mean Harary membership over retained states
};

// Element-wise mean of the retained Harary vectors; throws on an empty set.
std::vector<double> adjusted_status(const StateSet& states, int32_t vertex_count);

Phase2Aux make_phase2_aux(const SignedGraph& g, const StateSet& states);

struct DeletionPlan {
  int32_t state_index = -1;
  std::vector<int32_t> removed;  // sorted vertex ids
  Criterion criterion = Criterion::degree;
  int64_t rng_decisions = 0;  // tie breaks that consumed randomness
};

// Picks the endpoint of candidate edge `edge_id` to delete. For the harary
// criterion the edge is classified by its post-switch sign: switched-negative
// edges cross the bipartition and the bit-0 endpoint loses; switched-positive
// edges fall back to the smaller neighborhood sum, random on ties.
int32_t select_victim(const SignedGraph& g, const BalancedState& state, int32_t edge_id,
                      Criterion criterion, const Phase2Aux& aux, Rng& rng,
                      int64_t* rng_decisions = nullptr);

// Walks candidate edges in sorted order, skipping edges that already lost an
// endpoint; at most one deletion per candidate edge.
DeletionPlan build_deletion_plan(const SignedGraph& g, const BalancedState& state,
                                 int32_t state_index, Criterion criterion, const Phase2Aux& aux,
                                 Rng rng);

// Removes the planned vertices and every candidate edge of the state, then
// returns the largest connected component (balanced by construction).
SignedGraph apply_plan(const SignedGraph& g, const BalancedState& state, const DeletionPlan& plan);

// Component sizes after purging each retained state. Parallel over states plus
// a serial reference; identical outputs for identical inputs.
std::vector<int32_t> purge_state_sizes(const SignedGraph& g, const StateSet& states,
                                       Criterion criterion, const Phase2Aux& aux, uint64_t seed);
std::vector<int32_t> purge_state_sizes_serial(const SignedGraph& g, const StateSet& states,
                                              Criterion criterion, const Phase2Aux& aux,
                                              uint64_t seed);

// K schedule by vertex count: the defaults used for benchmark runs and the
// reduced schedule of the fast profile.
int64_t auto_top_k(int64_t vertices);  // 4000 / 100 / 20
int64_t fast_top_k(int64_t vertices);  // 700 / 100 / 20

struct AbcdParams {
  int64_t iterations = 5000;
  int64_t top_k = 0;  // 0 = auto schedule
  Criterion criterion = Criterion::harary;
  uint64_t seed = 1;
};

struct AbcdResult {
  SignedGraph winner;  // original vertex labels
  int32_t winner_state_index = -1;
  std::vector<int32_t> per_state_sizes;
  int64_t iterations = 0;
  int64_t top_k = 0;
  Criterion criterion = Criterion::harary;
  uint64_t seed = 0;
  int64_t states_retained = 0;
  int64_t frustration_min = 0;
  int64_t frustration_max = 0;
  int64_t lcc_vertices = 0;
  int64_t lcc_edges = 0;
  double phase1_seconds = 0.0;
  double phase2_seconds = 0.0;
  double total_seconds = 0.0;
};

// Full pipeline: largest connected component, state extraction, one purge per
// retained state, winner = largest balanced component across states (ties go
// to the lowest state index).
AbcdResult run_abcd(const SignedGraph& g, const AbcdParams& params);

}  // namespace abcd
