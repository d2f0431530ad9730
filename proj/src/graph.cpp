#include "abcd/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace abcd {

void SignedGraph::rebuild_adjacency() {
  adj_index.assign((size_t)n + 1, 0);
  adj_vertex.assign(edges.size() * 2, 0);
  adj_edge.assign(edges.size() * 2, 0);
  for (const Edge& e : edges) {
    adj_index[(size_t)e.u + 1]++;
    adj_index[(size_t)e.v + 1]++;
  }
  for (int32_t v = 0; v < n; ++v) adj_index[(size_t)v + 1] += adj_index[v];
  std::vector<int64_t> cursor(adj_index.begin(), adj_index.end() - 1);
  for (size_t id = 0; id < edges.size(); ++id) {
    const Edge& e = edges[id];
    adj_vertex[(size_t)cursor[e.u]] = e.v;
    adj_edge[(size_t)cursor[e.u]++] = (int32_t)id;
    adj_vertex[(size_t)cursor[e.v]] = e.u;
    adj_edge[(size_t)cursor[e.v]++] = (int32_t)id;
  }
}

SignedGraph canonicalize(const RawEdgeList& raw) {
  std::unordered_map<std::string, int32_t> id_of;
  std::vector<std::string> labels;
  auto intern = [&](const std::string& s) -> int32_t {
    auto [it, fresh] = id_of.try_emplace(s, (int32_t)labels.size());
    if (fresh) labels.push_back(s);
    return it->second;
  };

  for (const std::string& v : raw.declared_vertices) intern(v);

  struct Triple {
    int32_t u, v;
    double w;
  };
  std::vector<Triple> triples;
  triples.reserve(raw.records.size());
  for (const RawRecord& r : raw.records) {
    if (!std::isfinite(r.w)) {
      throw std::runtime_error("canonicalize: non-finite weight on edge '" + r.u + "' '" + r.v +
                               "'");
    }
    int32_t a = intern(r.u);
    int32_t b = intern(r.v);
    if (a == b) continue;  // self-loop
    triples.push_back({std::min(a, b), std::max(a, b), r.w});
  }

  // stable sort keeps weight aggregation order-independent of input hashing
  std::stable_sort(triples.begin(), triples.end(), [](const Triple& x, const Triple& y) {
    return x.u != y.u ? x.u < y.u : x.v < y.v;
  });

  SignedGraph g;
  g.n = (int32_t)labels.size();
  g.labels = std::move(labels);
  for (size_t i = 0; i < triples.size();) {
    size_t j = i;
    double sum = 0.0;
    while (j < triples.size() && triples[j].u == triples[i].u && triples[j].v == triples[i].v) {
      sum += triples[j].w;
      ++j;
    }
    g.edges.push_back({triples[i].u, triples[i].v, (int8_t)(sum >= 0.0 ? 1 : -1)});
    i = j;
  }
  g.rebuild_adjacency();
  return g;
}

namespace {

// component id per vertex, assigned in discovery order scanning v = 0..n-1
std::vector<int32_t> component_ids(const SignedGraph& g, int32_t* count_out) {
  std::vector<int32_t> comp((size_t)g.n, -1);
  std::vector<int32_t> queue;
  queue.reserve(g.n);
  int32_t comps = 0;
  for (int32_t s = 0; s < g.n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = comps;
    queue.clear();
    queue.push_back(s);
    for (size_t head = 0; head < queue.size(); ++head) {
      int32_t v = queue[head];
      for (int64_t i = g.adj_index[v]; i < g.adj_index[v + 1]; ++i) {
        int32_t w = g.adj_vertex[(size_t)i];
        if (comp[w] < 0) {
          comp[w] = comps;
          queue.push_back(w);
        }
      }
    }
    ++comps;
  }
  if (count_out) *count_out = comps;
  return comp;
}

}  // namespace

std::pair<SignedGraph, std::vector<int32_t>> largest_connected_component(const SignedGraph& g) {
  if (g.n == 0) return {SignedGraph{}, {}};

  int32_t comps = 0;
  std::vector<int32_t> comp = component_ids(g, &comps);
  std::vector<int64_t> size((size_t)comps, 0);
  for (int32_t v = 0; v < g.n; ++v) size[(size_t)comp[v]]++;
  int32_t best = 0;
  for (int32_t c = 1; c < comps; ++c) {
    if (size[(size_t)c] > size[(size_t)best]) best = c;  // first max wins ties
  }

  std::vector<int32_t> mapping((size_t)g.n, -1);
  SignedGraph out;
  for (int32_t v = 0; v < g.n; ++v) {
    if (comp[v] == best) {
      mapping[v] = out.n++;
      out.labels.push_back(g.labels.empty() ? std::to_string(v) : g.labels[(size_t)v]);
    }
  }
  for (const Edge& e : g.edges) {
    if (comp[e.u] == best) out.edges.push_back({mapping[e.u], mapping[e.v], e.sign});
  }
  out.rebuild_adjacency();
  return {std::move(out), std::move(mapping)};
}

std::vector<int32_t> degrees(const SignedGraph& g) {
  std::vector<int32_t> deg((size_t)g.n);
  for (int32_t v = 0; v < g.n; ++v) deg[(size_t)v] = g.degree(v);
  return deg;
}

std::vector<double> neighborhood_degree_sums(const SignedGraph& g, int rounds) {
  if (rounds < 1) throw std::invalid_argument("neighborhood_degree_sums: rounds must be >= 1");
  std::vector<double> cur((size_t)g.n);
  for (int32_t v = 0; v < g.n; ++v) cur[(size_t)v] = (double)g.degree(v);
  std::vector<double> next((size_t)g.n);
  for (int r = 0; r < rounds; ++r) {
#pragma omp parallel for schedule(static)
    for (int32_t v = 0; v < g.n; ++v) {
      double sum = 0.0;
      for (int64_t i = g.adj_index[v]; i < g.adj_index[v + 1]; ++i) {
        sum += cur[(size_t)g.adj_vertex[(size_t)i]];
      }
      next[(size_t)v] = sum;
    }
    cur.swap(next);
  }
  return cur;
}

int32_t connected_component_count(const SignedGraph& g) {
  int32_t comps = 0;
  component_ids(g, &comps);
  return comps;
}

int64_t cycle_space_dimension(const SignedGraph& g) {
  if (g.n == 0) return 0;
  return g.edge_count() - g.n + connected_component_count(g);
}

GraphStats stats(const SignedGraph& g) {
  GraphStats s;
  s.vertices = g.n;
  s.edges = g.edge_count();
  s.cycle_space_dimension = cycle_space_dimension(g);
  if (g.n >= 2) s.density = 2.0 * (double)s.edges / ((double)g.n * (double)(g.n - 1));
  if (s.edges > 0) {
    int64_t neg = 0;
    for (const Edge& e : g.edges) neg += e.sign < 0;
    s.negative_fraction = (double)neg / (double)s.edges;
  }
  if (g.n > 0) {
    s.degree_avg = 2.0 * (double)s.edges / (double)g.n;
    std::vector<int32_t> deg = degrees(g);
    std::sort(deg.begin(), deg.end());
    s.degree_max = deg.back();
    if (g.n % 2 == 1) {
      s.degree_median = deg[(size_t)g.n / 2];
    } else {
      s.degree_median = (deg[(size_t)g.n / 2 - 1] + deg[(size_t)g.n / 2]) / 2.0;
    }
  }
  return s;
}

}  // namespace abcd
