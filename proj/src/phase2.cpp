#include "abcd/phase2.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace abcd {

const char* to_string(Criterion c) {
  switch (c) {
    case Criterion::degree: return "degree";
    case Criterion::harary: return "harary";
    case Criterion::status: return "status";
  }
  return "?";
}

Criterion criterion_from_string(const std::string& s) {
  if (s == "degree") return Criterion::degree;
  if (s == "harary") return Criterion::harary;
  if (s == "status") return Criterion::status;
  throw std::invalid_argument("unknown criterion '" + s + "' (degree|harary|status)");
}

std::vector<double> adjusted_status(const StateSet& states, int32_t vertex_count) {
  if (states.states.empty()) throw std::invalid_argument("adjusted_status: empty state set");
  std::vector<double> out((size_t)vertex_count, 0.0);
  for (const BalancedState& st : states.states) {
    for (int32_t v = 0; v < vertex_count; ++v) out[(size_t)v] += st.harary[(size_t)v];
  }
  const double divisor = (double)states.states.size();
  for (double& x : out) x /= divisor;
  return out;
}

Phase2Aux make_phase2_aux(const SignedGraph& g, const StateSet& states) {
  Phase2Aux aux;
  aux.degree = degrees(g);
  aux.neighborhood = neighborhood_degree_sums(g, 3);
  aux.status = adjusted_status(states, g.n);
  return aux;
}

namespace {

int32_t victim_unchecked(const SignedGraph& g, const BalancedState& state, int32_t edge_id,
                         Criterion criterion, const Phase2Aux& aux, Rng& rng,
                         int64_t* rng_decisions) {
  const Edge& e = g.edges[(size_t)edge_id];
  const int32_t q = e.u;  // q < w
  const int32_t w = e.v;
  switch (criterion) {
    case Criterion::degree:
      return aux.degree[(size_t)q] < aux.degree[(size_t)w] ? q : w;
    case Criterion::status: {
      const double sq = aux.status[(size_t)q];
      const double sw = aux.status[(size_t)w];
      if (sq < sw) return q;
      if (sw < sq) return w;
      if (rng_decisions) ++*rng_decisions;
      return rng.coin() ? q : w;
    }
    case Criterion::harary: {
      // candidate edges switch sign, so original-positive edges end up
      // negative and must cross the bipartition
      if (e.sign > 0) {
        const uint8_t hq = state.harary[(size_t)q];
        const uint8_t hw = state.harary[(size_t)w];
        if (hq == hw) throw std::runtime_error("select_victim: inconsistent Harary state");
        return hq == 0 ? q : w;
      }
      const double nq = aux.neighborhood[(size_t)q];
      const double nw = aux.neighborhood[(size_t)w];
      if (nq < nw) return q;
      if (nw < nq) return w;
      if (rng_decisions) ++*rng_decisions;
      return rng.coin() ? q : w;
    }
  }
  throw std::invalid_argument("select_victim: bad criterion");
}

}  // namespace

int32_t select_victim(const SignedGraph& g, const BalancedState& state, int32_t edge_id,
                      Criterion criterion, const Phase2Aux& aux, Rng& rng,
                      int64_t* rng_decisions) {
  if (!std::binary_search(state.candidates.begin(), state.candidates.end(), edge_id)) {
    throw std::invalid_argument("select_victim: edge is not a candidate of this state");
  }
  return victim_unchecked(g, state, edge_id, criterion, aux, rng, rng_decisions);
}

namespace {

struct PurgeScratch {
  std::vector<uint8_t> removed;    // per vertex
  std::vector<uint8_t> cut_edge;   // per edge, candidate edges of the state
  std::vector<int32_t> comp;       // per vertex
  std::vector<int32_t> queue;

  void resize(const SignedGraph& g) {
    removed.assign((size_t)g.n, 0);
    cut_edge.assign(g.edges.size(), 0);
    comp.resize((size_t)g.n);
    queue.resize((size_t)g.n);
  }
};

void plan_into(const SignedGraph& g, const BalancedState& state, int32_t state_index,
               Criterion criterion, const Phase2Aux& aux, Rng rng, PurgeScratch& ws,
               DeletionPlan& plan) {
  plan.state_index = state_index;
  plan.criterion = criterion;
  plan.rng_decisions = 0;
  plan.removed.clear();
  for (int32_t e : state.candidates) {
    const Edge& ed = g.edges[(size_t)e];
    if (ws.removed[(size_t)ed.u] || ws.removed[(size_t)ed.v]) continue;
    const int32_t victim =
        victim_unchecked(g, state, e, criterion, aux, rng, &plan.rng_decisions);
    ws.removed[(size_t)victim] = 1;
    plan.removed.push_back(victim);
  }
  std::sort(plan.removed.begin(), plan.removed.end());
}

// survivors = vertices not removed, edges neither candidate nor touching a
// removed vertex; returns the size of the largest surviving component and the
// component id per vertex (-1 for removed). Component ids follow discovery
// order from vertex 0 upward, so the first largest is the canonical winner.
int32_t surviving_components(const SignedGraph& g, const BalancedState& state,
                             const DeletionPlan& plan, PurgeScratch& ws, int32_t* best_comp_out) {
  for (int32_t v : plan.removed) ws.removed[(size_t)v] = 1;  // idempotent re-mark
  for (int32_t e : state.candidates) ws.cut_edge[(size_t)e] = 1;
  std::fill(ws.comp.begin(), ws.comp.end(), -1);

  int32_t best_size = 0, best_comp = -1, comps = 0;
  for (int32_t s = 0; s < g.n; ++s) {
    if (ws.removed[(size_t)s] || ws.comp[(size_t)s] >= 0) continue;
    const int32_t id = comps++;
    ws.comp[(size_t)s] = id;
    ws.queue[0] = s;
    int32_t tail = 1;
    for (int32_t head = 0; head < tail; ++head) {
      const int32_t v = ws.queue[(size_t)head];
      for (int64_t i = g.adj_index[v]; i < g.adj_index[v + 1]; ++i) {
        const int32_t eid = g.adj_edge[(size_t)i];
        if (ws.cut_edge[(size_t)eid]) continue;
        const int32_t nbr = g.adj_vertex[(size_t)i];
        if (ws.removed[(size_t)nbr] || ws.comp[(size_t)nbr] >= 0) continue;
        ws.comp[(size_t)nbr] = id;
        ws.queue[(size_t)tail++] = nbr;
      }
    }
    if (tail > best_size) {
      best_size = tail;
      best_comp = id;
    }
  }
  if (best_comp_out) *best_comp_out = best_comp;
  return best_size;
}

void clear_scratch(const SignedGraph&, const BalancedState& state, const DeletionPlan& plan,
                   PurgeScratch& ws) {
  for (int32_t v : plan.removed) ws.removed[(size_t)v] = 0;
  for (int32_t e : state.candidates) ws.cut_edge[(size_t)e] = 0;
}

}  // namespace

DeletionPlan build_deletion_plan(const SignedGraph& g, const BalancedState& state,
                                 int32_t state_index, Criterion criterion, const Phase2Aux& aux,
                                 Rng rng) {
  PurgeScratch ws;
  ws.resize(g);
  DeletionPlan plan;
  plan_into(g, state, state_index, criterion, aux, rng, ws, plan);
  return plan;
}

SignedGraph apply_plan(const SignedGraph& g, const BalancedState& state, const DeletionPlan& plan) {
  PurgeScratch ws;
  ws.resize(g);
  int32_t best_comp = -1;
  surviving_components(g, state, plan, ws, &best_comp);

  SignedGraph out;
  std::vector<int32_t> remap((size_t)g.n, -1);
  for (int32_t v = 0; v < g.n; ++v) {
    if (!ws.removed[(size_t)v] && ws.comp[(size_t)v] == best_comp) {
      remap[(size_t)v] = out.n++;
      out.labels.push_back(g.labels.empty() ? std::to_string(v) : g.labels[(size_t)v]);
    }
  }
  for (size_t e = 0; e < g.edges.size(); ++e) {
    if (ws.cut_edge[e]) continue;
    const Edge& ed = g.edges[e];
    if (remap[(size_t)ed.u] >= 0 && remap[(size_t)ed.v] >= 0) {
      out.edges.push_back({remap[(size_t)ed.u], remap[(size_t)ed.v], ed.sign});
    }
  }
  out.rebuild_adjacency();
  return out;
}

namespace {

std::vector<int32_t> purge_sizes_impl(const SignedGraph& g, const StateSet& states,
                                      Criterion criterion, const Phase2Aux& aux, uint64_t seed,
                                      bool parallel) {
  const int64_t count = (int64_t)states.states.size();
  std::vector<int32_t> sizes((size_t)count, 0);
  const int threads = parallel ? omp_get_max_threads() : 1;
  std::vector<PurgeScratch> scratch((size_t)threads);
  std::vector<DeletionPlan> plans((size_t)threads);

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (parallel)
  for (int64_t i = 0; i < count; ++i) {
    const int tid = parallel ? omp_get_thread_num() : 0;
    PurgeScratch& ws = scratch[(size_t)tid];
    if (ws.comp.empty()) ws.resize(g);
    DeletionPlan& plan = plans[(size_t)tid];
    const BalancedState& st = states.states[(size_t)i];
    plan_into(g, st, (int32_t)i, criterion, aux, state_rng(seed, st.arrival), ws, plan);
    sizes[(size_t)i] = surviving_components(g, st, plan, ws, nullptr);
    clear_scratch(g, st, plan, ws);
  }
  return sizes;
}

}  // namespace

std::vector<int32_t> purge_state_sizes(const SignedGraph& g, const StateSet& states,
                                       Criterion criterion, const Phase2Aux& aux, uint64_t seed) {
  return purge_sizes_impl(g, states, criterion, aux, seed, true);
}

std::vector<int32_t> purge_state_sizes_serial(const SignedGraph& g, const StateSet& states,
                                              Criterion criterion, const Phase2Aux& aux,
                                              uint64_t seed) {
  return purge_sizes_impl(g, states, criterion, aux, seed, false);
}

int64_t auto_top_k(int64_t vertices) {
  if (vertices < 100000) return 4000;
  if (vertices < 300000) return 100;
  return 20;
}

int64_t fast_top_k(int64_t vertices) {
  if (vertices < 100000) return 700;
  if (vertices < 300000) return 100;
  return 20;
}

AbcdResult run_abcd(const SignedGraph& g, const AbcdParams& params) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();

  AbcdResult res;
  res.iterations = params.iterations;
  res.criterion = params.criterion;
  res.seed = params.seed;

  auto [lcc, mapping] = largest_connected_component(g);
  (void)mapping;
  res.lcc_vertices = lcc.n;
  res.lcc_edges = lcc.edge_count();
  res.top_k = params.top_k > 0 ? params.top_k : auto_top_k(lcc.n);
  if (lcc.n == 0) {
    res.winner.rebuild_adjacency();
    res.total_seconds = std::chrono::duration<double>(clock::now() - t0).count();
    return res;
  }

  const auto t1 = clock::now();
  StateSet states = collect_topk_states(lcc, params.iterations, res.top_k, params.seed);
  const auto t2 = clock::now();

  Phase2Aux aux = make_phase2_aux(lcc, states);
  res.per_state_sizes = purge_state_sizes(lcc, states, params.criterion, aux, params.seed);

  res.states_retained = (int64_t)states.states.size();
  res.frustration_min = states.states.front().frustration();
  res.frustration_max = states.states.back().frustration();

  int32_t best = 0;
  for (int32_t i = 1; i < (int32_t)res.per_state_sizes.size(); ++i) {
    if (res.per_state_sizes[(size_t)i] > res.per_state_sizes[(size_t)best]) best = i;
  }
  res.winner_state_index = best;
  const BalancedState& win_state = states.states[(size_t)best];
  DeletionPlan plan = build_deletion_plan(lcc, win_state, best, params.criterion, aux,
                                          state_rng(params.seed, win_state.arrival));
  res.winner = apply_plan(lcc, win_state, plan);
  const auto t3 = clock::now();

  res.phase1_seconds = std::chrono::duration<double>(t2 - t1).count();
  res.phase2_seconds = std::chrono::duration<double>(t3 - t2).count();
  res.total_seconds = std::chrono::duration<double>(t3 - t0).count();
  return res;
}

}  // namespace abcd
