#include "abcd/phase1.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>
#include <unordered_set>
#include <set>

namespace abcd {

namespace {
constexpr uint64_t kTreeSalt = 0x7472;   // per-iteration tree sampling
constexpr uint64_t kPurgeSalt = 0x7067;  // per-state purge tie breaks
}  // namespace

Rng iteration_rng(uint64_t seed, int64_t iteration) {
  return Rng::stream(seed, kTreeSalt, (uint64_t)iteration);
}

Rng state_rng(uint64_t seed, int64_t arrival) {
  return Rng::stream(seed, kPurgeSalt, (uint64_t)arrival);
}

namespace detail {

struct TreeScratch {
  std::vector<int32_t> parent;
  std::vector<int32_t> parent_edge;
  std::vector<int8_t> path_sign;
  std::vector<int32_t> queue;
  std::vector<int32_t> perm;  // shuffled half-edge positions of one vertex

  void resize(const SignedGraph& g) {
    parent.resize((size_t)g.n);
    parent_edge.resize((size_t)g.n);
    path_sign.resize((size_t)g.n);
    queue.resize((size_t)g.n);
    int64_t max_deg = 0;
    for (int32_t v = 0; v < g.n; ++v) max_deg = std::max<int64_t>(max_deg, g.degree(v));
    perm.resize((size_t)max_deg);
  }
};

// BFS from a random root, visiting each vertex's incident edges in a freshly
// shuffled order. Returns the number of visited vertices.
int32_t bfs_tree_walk(const SignedGraph& g, Rng& rng, TreeScratch& ws) {
  std::fill(ws.parent.begin(), ws.parent.end(), -1);
  const int32_t root = (int32_t)rng.bounded((uint64_t)g.n);
  ws.parent[(size_t)root] = root;
  ws.parent_edge[(size_t)root] = -1;
  ws.path_sign[(size_t)root] = 1;
  ws.queue[0] = root;
  int32_t tail = 1;
  for (int32_t head = 0; head < tail; ++head) {
    const int32_t v = ws.queue[(size_t)head];
    const int64_t beg = g.adj_index[v];
    const int32_t deg = (int32_t)(g.adj_index[v + 1] - beg);
    for (int32_t i = 0; i < deg; ++i) ws.perm[(size_t)i] = i;
    rng.shuffle(ws.perm.data(), (size_t)deg);
    for (int32_t i = 0; i < deg; ++i) {
      const int64_t slot = beg + ws.perm[(size_t)i];
      const int32_t nbr = g.adj_vertex[(size_t)slot];
      if (ws.parent[(size_t)nbr] >= 0) continue;
      const int32_t eid = g.adj_edge[(size_t)slot];
      ws.parent[(size_t)nbr] = v;
      ws.parent_edge[(size_t)nbr] = eid;
      ws.path_sign[(size_t)nbr] = (int8_t)(ws.path_sign[(size_t)v] * g.edges[(size_t)eid].sign);
      ws.queue[(size_t)tail++] = nbr;
    }
  }
  return tail;
}

// off-tree edges whose fundamental cycle is negative, ascending edge id
void extract_candidates(const SignedGraph& g, const TreeScratch& ws, std::vector<int32_t>& out) {
  out.clear();
  for (int32_t e = 0; e < (int32_t)g.edges.size(); ++e) {
    const Edge& ed = g.edges[(size_t)e];
    if (ws.parent_edge[(size_t)ed.u] == e || ws.parent_edge[(size_t)ed.v] == e) continue;
    const int cycle_sign =
        (int)ed.sign * ws.path_sign[(size_t)ed.u] * ws.path_sign[(size_t)ed.v];
    if (cycle_sign < 0) out.push_back(e);
  }
}

uint64_t hash_edge_set(const std::vector<int32_t>& v) {
  uint64_t h = 0x243f6a8885a308d3ULL ^ (uint64_t)v.size();
  for (int32_t e : v) h = mix64(h ^ mix64((uint64_t)(uint32_t)e + 0x9e3779b97f4a7c15ULL));
  return h;
}

struct ColorScratch {
  std::vector<uint8_t> flip;   // per edge
  std::vector<uint8_t> color;  // per vertex, 2 = unset
  std::vector<int32_t> queue;

  void resize(const SignedGraph& g) {
    flip.assign(g.edges.size(), 0);
    color.resize((size_t)g.n);
    queue.resize((size_t)g.n);
  }
};

// 2-coloring of the switched graph; bit 1 lands on the larger class, ties keep
// the class of vertex 0
void harary_into(const SignedGraph& g, const std::vector<int32_t>& candidates, ColorScratch& ws,
                 std::vector<uint8_t>& out) {
  for (int32_t e : candidates) {
    if (e < 0 || e >= (int32_t)g.edges.size()) {
      throw std::invalid_argument("harary_vector: edge id out of range");
    }
    ws.flip[(size_t)e] = 1;
  }
  std::fill(ws.color.begin(), ws.color.end(), (uint8_t)2);
  int64_t ones = 0;
  for (int32_t s = 0; s < g.n; ++s) {
    if (ws.color[(size_t)s] != 2) continue;
    ws.color[(size_t)s] = 1;
    ++ones;
    ws.queue[0] = s;
    int32_t tail = 1;
    for (int32_t head = 0; head < tail; ++head) {
      const int32_t v = ws.queue[(size_t)head];
      for (int64_t i = g.adj_index[v]; i < g.adj_index[v + 1]; ++i) {
        const int32_t nbr = g.adj_vertex[(size_t)i];
        const int32_t eid = g.adj_edge[(size_t)i];
        const int post =
            (int)g.edges[(size_t)eid].sign * (ws.flip[(size_t)eid] ? -1 : 1);
        const uint8_t want = post > 0 ? ws.color[(size_t)v] : (uint8_t)(1 - ws.color[(size_t)v]);
        if (ws.color[(size_t)nbr] == 2) {
          ws.color[(size_t)nbr] = want;
          ones += want;
          ws.queue[(size_t)tail++] = nbr;
        } else if (ws.color[(size_t)nbr] != want) {
          for (int32_t c : candidates) ws.flip[(size_t)c] = 0;
          throw std::runtime_error("harary_vector: state not balanced");
        }
      }
    }
  }
  for (int32_t c : candidates) ws.flip[(size_t)c] = 0;
  out.assign(ws.color.begin(), ws.color.end());
  if (2 * ones < g.n) {
    for (uint8_t& b : out) b = (uint8_t)(1 - b);
  }
}

}  // namespace detail

SpanningTree sample_bfs_spanning_tree(const SignedGraph& g, Rng rng) {
  if (g.n == 0) throw std::invalid_argument("sample_bfs_spanning_tree: empty graph");
  detail::TreeScratch ws;
  ws.resize(g);
  const int32_t visited = detail::bfs_tree_walk(g, rng, ws);
  if (visited != g.n) {
    throw std::invalid_argument(
        "sample_bfs_spanning_tree: graph is disconnected; pass the largest connected component");
  }
  SpanningTree t;
  t.parent = std::move(ws.parent);
  t.parent_edge = std::move(ws.parent_edge);
  t.path_sign = std::move(ws.path_sign);
  t.tree_edge.assign(g.edges.size(), 0);
  for (int32_t v = 0; v < g.n; ++v) {
    if (t.parent[(size_t)v] == v) {
      t.root = v;
    } else {
      t.tree_edge[(size_t)t.parent_edge[(size_t)v]] = 1;
    }
  }
  return t;
}

int fundamental_cycle_sign(const SignedGraph& g, const SpanningTree& t, int32_t edge_id) {
  if (edge_id < 0 || edge_id >= (int32_t)g.edges.size()) {
    throw std::invalid_argument("fundamental_cycle_sign: edge id out of range");
  }
  if (t.tree_edge[(size_t)edge_id]) {
    throw std::invalid_argument("fundamental_cycle_sign: edge is a tree edge");
  }
  const Edge& e = g.edges[(size_t)edge_id];
  return (int)e.sign * t.path_sign[(size_t)e.u] * t.path_sign[(size_t)e.v];
}

std::vector<int32_t> candidate_edge_set(const SignedGraph& g, const SpanningTree& t) {
  std::vector<int32_t> out;
  for (int32_t e = 0; e < (int32_t)g.edges.size(); ++e) {
    if (t.tree_edge[(size_t)e]) continue;
    if (fundamental_cycle_sign(g, t, e) < 0) out.push_back(e);
  }
  return out;
}

std::vector<uint8_t> harary_vector(const SignedGraph& g, const std::vector<int32_t>& candidates) {
  detail::ColorScratch ws;
  ws.resize(g);
  std::vector<uint8_t> out;
  detail::harary_into(g, candidates, ws, out);
  return out;
}

namespace {

void validate_collect_args(const SignedGraph& g, int64_t iterations, int64_t k) {
  if (g.n == 0) throw std::invalid_argument("collect_topk_states: empty graph");
  if (iterations < 1) throw std::invalid_argument("collect_topk_states: iterations must be >= 1");
  if (k < 1) throw std::invalid_argument("collect_topk_states: k must be >= 1");
  if (connected_component_count(g) != 1) {
    throw std::invalid_argument(
        "collect_topk_states: graph is disconnected; pass the largest connected component");
  }
}

struct PendingState {
  std::vector<int32_t> candidates;
  int64_t arrival = -1;
};

// eviction key: evict the largest (frustration, arrival); a newcomer always
// has the latest arrival, so it only displaces strictly worse frustration.
// The retained set is therefore exactly the k smallest keys of the stream,
// which is what makes retention monotone in k.
bool key_less(const PendingState& a, const PendingState& b) {
  if (a.candidates.size() != b.candidates.size()) {
    return a.candidates.size() < b.candidates.size();
  }
  return a.arrival < b.arrival;
}

StateSet finalize_states(const SignedGraph& g, std::vector<PendingState> kept, int64_t iterations,
                         int64_t k) {
  StateSet out;
  out.iterations_run = iterations;
  out.k_limit = k;
  out.states.resize(kept.size());
  const int64_t count = (int64_t)kept.size();
  const int threads = omp_get_max_threads();
  std::vector<detail::ColorScratch> scratch((size_t)threads);
#pragma omp parallel for schedule(dynamic, 1)
  for (int64_t i = 0; i < count; ++i) {
    detail::ColorScratch& ws = scratch[(size_t)omp_get_thread_num()];
    if (ws.color.empty()) ws.resize(g);
    BalancedState& st = out.states[(size_t)i];
    st.candidates = std::move(kept[(size_t)i].candidates);
    st.arrival = kept[(size_t)i].arrival;
    detail::harary_into(g, st.candidates, ws, st.harary);
  }
  std::sort(out.states.begin(), out.states.end(), [](const BalancedState& a,
                                                     const BalancedState& b) {
    if (a.candidates.size() != b.candidates.size()) {
      return a.candidates.size() < b.candidates.size();
    }
    return a.candidates < b.candidates;
  });
  return out;
}

}  // namespace

StateSet collect_topk_states_serial(const SignedGraph& g, int64_t iterations, int64_t k,
                                    uint64_t seed) {
  validate_collect_args(g, iterations, k);
  std::set<std::vector<int32_t>> seen;
  std::vector<PendingState> kept;
  for (int64_t i = 0; i < iterations; ++i) {
    SpanningTree t = sample_bfs_spanning_tree(g, iteration_rng(seed, i));
    std::vector<int32_t> m = candidate_edge_set(g, t);
    if (!seen.insert(m).second) continue;
    PendingState incoming{std::move(m), i};
    if ((int64_t)kept.size() < k) {
      kept.push_back(std::move(incoming));
      continue;
    }
    size_t worst = 0;
    for (size_t j = 1; j < kept.size(); ++j) {
      if (key_less(kept[worst], kept[j])) worst = j;
    }
    if (incoming.candidates.size() < kept[worst].candidates.size()) {
      kept[worst] = std::move(incoming);
    }
  }
  return finalize_states(g, std::move(kept), iterations, k);
}

StateSet collect_topk_states(const SignedGraph& g, int64_t iterations, int64_t k, uint64_t seed) {
  validate_collect_args(g, iterations, k);

  const int threads = omp_get_max_threads();
  std::vector<detail::TreeScratch> scratch((size_t)threads);

  // max-heap on the eviction key; merge order is the iteration order, so the
  // result is independent of thread count and batch size
  auto heap_cmp = key_less;
  std::vector<PendingState> heap;
  std::unordered_set<uint64_t> seen_hashes;

  const int64_t batch = std::max<int64_t>(256, 8 * threads);
  std::vector<std::vector<int32_t>> batch_out((size_t)batch);

  for (int64_t base = 0; base < iterations; base += batch) {
    const int64_t count = std::min(batch, iterations - base);
#pragma omp parallel for schedule(dynamic, 1)
    for (int64_t j = 0; j < count; ++j) {
      detail::TreeScratch& ws = scratch[(size_t)omp_get_thread_num()];
      if (ws.parent.empty()) ws.resize(g);
      Rng rng = iteration_rng(seed, base + j);
      detail::bfs_tree_walk(g, rng, ws);
      detail::extract_candidates(g, ws, batch_out[(size_t)j]);
    }
    for (int64_t j = 0; j < count; ++j) {
      std::vector<int32_t>& m = batch_out[(size_t)j];
      if (!seen_hashes.insert(detail::hash_edge_set(m)).second) continue;
      PendingState incoming{std::move(m), base + j};
      if ((int64_t)heap.size() < k) {
        heap.push_back(std::move(incoming));
        std::push_heap(heap.begin(), heap.end(), heap_cmp);
      } else if (incoming.candidates.size() < heap.front().candidates.size()) {
        std::pop_heap(heap.begin(), heap.end(), heap_cmp);
        heap.back() = std::move(incoming);
        std::push_heap(heap.begin(), heap.end(), heap_cmp);
      }
    }
  }
  return finalize_states(g, std::move(heap), iterations, k);
}

}  // namespace abcd
