#pragma once

// shared test fixtures: direct graph builders, random generators, and the
// brute-force oracles the unit tests compare against

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "abcd/graph.hpp"
#include "abcd/phase1.hpp"
#include "abcd/rng.hpp"

namespace testsup {

using abcd::Edge;
using abcd::SignedGraph;

// graph over vertices 0..n-1 straight from an edge list (labels are the ids)
inline SignedGraph graph_of(int32_t n, const std::vector<std::tuple<int, int, int>>& edges) {
  abcd::RawEdgeList raw;
  for (int32_t v = 0; v < n; ++v) raw.declared_vertices.push_back(std::to_string(v));
  for (const auto& [u, v, s] : edges) {
    raw.records.push_back({std::to_string(u), std::to_string(v), (double)s});
  }
  return abcd::canonicalize(raw);
}

inline SignedGraph random_graph(abcd::Rng& rng, int32_t n, double p, double neg_fraction) {
  std::vector<std::tuple<int, int, int>> edges;
  for (int32_t u = 0; u < n; ++u) {
    for (int32_t v = u + 1; v < n; ++v) {
      const double draw = ((double)(rng.next() >> 11) + 0.5) * 0x1.0p-53;
      if (draw >= p) continue;
      const double sdraw = ((double)(rng.next() >> 11) + 0.5) * 0x1.0p-53;
      edges.push_back({u, v, sdraw < neg_fraction ? -1 : 1});
    }
  }
  return graph_of(n, edges);
}

inline SignedGraph random_connected_graph(abcd::Rng& rng, int32_t n, double p,
                                          double neg_fraction) {
  while (true) {
    SignedGraph g = random_graph(rng, n, p, neg_fraction);
    auto [lcc, mapping] = abcd::largest_connected_component(g);
    (void)mapping;
    if (lcc.n >= 2) return lcc;
  }
}

// plain double loop over edges; the independent route for neighborhood sums
inline std::vector<double> brute_neighbor_degree_sum(const SignedGraph& g) {
  std::vector<double> deg((size_t)g.n, 0.0), out((size_t)g.n, 0.0);
  for (const Edge& e : g.edges) {
    deg[(size_t)e.u] += 1;
    deg[(size_t)e.v] += 1;
  }
  for (const Edge& e : g.edges) {
    out[(size_t)e.u] += deg[(size_t)e.v];
    out[(size_t)e.v] += deg[(size_t)e.u];
  }
  return out;
}

// walks the actual tree path u -> lca -> v and multiplies signs along it
inline int path_walk_cycle_sign(const SignedGraph& g, const abcd::SpanningTree& t,
                                int32_t edge_id) {
  const Edge& e = g.edges[(size_t)edge_id];
  std::set<int32_t> on_u;
  for (int32_t x = e.u;; x = t.parent[(size_t)x]) {
    on_u.insert(x);
    if (t.parent[(size_t)x] == x) break;
  }
  int sign = e.sign;
  int32_t lca = e.v;
  while (!on_u.count(lca)) {
    sign *= g.edges[(size_t)t.parent_edge[(size_t)lca]].sign;
    lca = t.parent[(size_t)lca];
  }
  for (int32_t x = e.u; x != lca; x = t.parent[(size_t)x]) {
    sign *= g.edges[(size_t)t.parent_edge[(size_t)x]].sign;
  }
  return sign;
}

// enumerates every simple cycle (n <= 10) and checks each sign product
inline bool all_simple_cycles_positive(const SignedGraph& g) {
  // DFS over paths anchored at their smallest vertex to enumerate each cycle once
  bool ok = true;
  std::vector<int32_t> path;
  std::vector<uint8_t> in_path((size_t)g.n, 0);

  auto dfs = [&](auto&& self, int32_t anchor, int32_t v, int sign) -> void {
    if (!ok) return;
    for (int64_t i = g.adj_index[v]; i < g.adj_index[v + 1]; ++i) {
      const int32_t nbr = g.adj_vertex[(size_t)i];
      const int s = sign * g.edges[(size_t)g.adj_edge[(size_t)i]].sign;
      if (nbr == anchor && path.size() >= 3) {
        // count each cycle once: second path vertex smaller than the last
        if (path[1] < path.back()) {
          if (s < 0) {
            ok = false;
            return;
          }
        }
        continue;
      }
      if (nbr <= anchor || in_path[(size_t)nbr]) continue;
      in_path[(size_t)nbr] = 1;
      path.push_back(nbr);
      self(self, anchor, nbr, s);
      path.pop_back();
      in_path[(size_t)nbr] = 0;
      if (!ok) return;
    }
  };

  for (int32_t a = 0; a < g.n && ok; ++a) {
    in_path.assign((size_t)g.n, 0);
    in_path[(size_t)a] = 1;
    path = {a};
    dfs(dfs, a, a, 1);
  }
  return ok;
}

// independent reconstruction of a purge outcome: delete vertices, drop edges,
// scan components by hand
inline std::pair<int32_t, std::vector<int32_t>> brute_purge_lcc(
    const SignedGraph& g, const std::vector<int32_t>& removed_vertices,
    const std::vector<int32_t>& removed_edges) {
  std::set<int32_t> rv(removed_vertices.begin(), removed_vertices.end());
  std::set<int32_t> re(removed_edges.begin(), removed_edges.end());
  std::vector<std::vector<int32_t>> adj((size_t)g.n);
  for (int32_t e = 0; e < (int32_t)g.edges.size(); ++e) {
    if (re.count(e)) continue;
    const Edge& ed = g.edges[(size_t)e];
    if (rv.count(ed.u) || rv.count(ed.v)) continue;
    adj[(size_t)ed.u].push_back(ed.v);
    adj[(size_t)ed.v].push_back(ed.u);
  }
  std::vector<int32_t> comp((size_t)g.n, -1);
  int32_t best_size = 0;
  std::vector<int32_t> best;
  for (int32_t s = 0; s < g.n; ++s) {
    if (rv.count(s) || comp[(size_t)s] >= 0) continue;
    std::vector<int32_t> stack{s}, members;
    comp[(size_t)s] = s;
    while (!stack.empty()) {
      int32_t v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int32_t w : adj[(size_t)v]) {
        if (comp[(size_t)w] < 0) {
          comp[(size_t)w] = s;
          stack.push_back(w);
        }
      }
    }
    if ((int32_t)members.size() > best_size) {
      best_size = (int32_t)members.size();
      std::sort(members.begin(), members.end());
      best = members;
    }
  }
  return {best_size, best};
}

}  // namespace testsup
