#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "abcd/graph.hpp"
#include "support.hpp"

using namespace abcd;
using testsup::graph_of;

TEST_CASE("canonicalize collapses duplicates and drops direction") {
  RawEdgeList raw;
  raw.records = {{"a", "b", 1.0}, {"b", "a", 1.0}};
  SignedGraph g = canonicalize(raw);
  CHECK(g.n == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.edges[0].sign == 1);
  CHECK(g.labels[0] == "a");
  CHECK(g.labels[1] == "b");
}

TEST_CASE("canonicalize drops self-loops but keeps the vertex") {
  RawEdgeList raw;
  raw.records = {{"a", "a", -1.0}};
  SignedGraph g = canonicalize(raw);
  CHECK(g.n == 1);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("canonicalize maps zero aggregate weight to positive") {
  RawEdgeList raw;
  raw.records = {{"a", "b", 1.0}, {"a", "b", -1.0}};
  SignedGraph g = canonicalize(raw);
  CHECK(g.edge_count() == 1);
  CHECK(g.edges[0].sign == 1);
}

TEST_CASE("canonicalize of nothing is the empty graph") {
  SignedGraph g = canonicalize(RawEdgeList{});
  CHECK(g.n == 0);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("canonical graphs are simple and degree sums match") {
  abcd::Rng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    SignedGraph g = testsup::random_graph(rng, 4 + (int32_t)rng.bounded(30), 0.3, 0.4);
    std::set<std::pair<int32_t, int32_t>> seen;
    int64_t touched = 0;
    for (const Edge& e : g.edges) {
      CHECK(e.u < e.v);
      CHECK((e.sign == 1 || e.sign == -1));
      CHECK(seen.insert({e.u, e.v}).second);
    }
    for (int32_t v = 0; v < g.n; ++v) touched += g.degree(v);
    CHECK(touched == 2 * g.edge_count());
  }
}

TEST_CASE("largest_connected_component keeps the bigger clique") {
  // 3-clique {0,1,2} and 4-clique {3,4,5,6}
  SignedGraph g = graph_of(7, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1},
                               {3, 4, 1}, {3, 5, 1}, {3, 6, 1}, {4, 5, 1}, {4, 6, 1}, {5, 6, 1}});
  auto [lcc, mapping] = largest_connected_component(g);
  CHECK(lcc.n == 4);
  CHECK(lcc.edge_count() == 6);
  CHECK(mapping[0] == -1);
  CHECK(mapping[3] == 0);
  CHECK(lcc.labels[0] == "3");
}

TEST_CASE("largest_connected_component of a connected graph is the identity") {
  SignedGraph g = graph_of(3, {{0, 1, 1}, {1, 2, -1}, {0, 2, 1}});
  auto [lcc, mapping] = largest_connected_component(g);
  CHECK(lcc.n == 3);
  for (int32_t v = 0; v < 3; ++v) CHECK(mapping[v] == v);
  CHECK(lcc.edges.size() == g.edges.size());
}

TEST_CASE("largest_connected_component is idempotent") {
  abcd::Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    SignedGraph g = testsup::random_graph(rng, 24, 0.08, 0.5);
    auto [once, m1] = largest_connected_component(g);
    auto [twice, m2] = largest_connected_component(once);
    CHECK(once.n == twice.n);
    CHECK(once.labels == twice.labels);
    REQUIRE(once.edges.size() == twice.edges.size());
    for (size_t e = 0; e < once.edges.size(); ++e) {
      CHECK(once.edges[e].u == twice.edges[e].u);
      CHECK(once.edges[e].v == twice.edges[e].v);
      CHECK(once.edges[e].sign == twice.edges[e].sign);
    }
  }
}

TEST_CASE("largest_connected_component of the empty graph") {
  auto [lcc, mapping] = largest_connected_component(SignedGraph{});
  CHECK(lcc.n == 0);
  CHECK(mapping.empty());
}

TEST_CASE("degrees: triangle and star") {
  SignedGraph tri = graph_of(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, -1}});
  CHECK(degrees(tri) == std::vector<int32_t>{2, 2, 2});

  SignedGraph star = graph_of(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}});
  std::vector<int32_t> d = degrees(star);
  CHECK(d[0] == 4);
  for (int v = 1; v < 5; ++v) CHECK(d[(size_t)v] == 1);
}

// two tagged vertices joined by an edge: degrees 3 and 4, one-round
// neighborhood sums 10 and 7
static SignedGraph two_hub_graph() {
  // 0 and 1 are the tagged endpoints
  return graph_of(12, {{0, 1, -1},
                       {0, 2, 1}, {0, 3, 1},              // 0's other neighbors
                       {1, 4, 1}, {1, 5, 1}, {1, 6, 1},   // 1's other neighbors
                       {2, 7, 1}, {2, 8, 1},              // deg(2) = 3
                       {3, 9, 1}, {3, 10, 1},             // deg(3) = 3
                       {4, 11, 1}});                      // deg(4) = 2
}

TEST_CASE("neighborhood sums: one round on the two-hub example") {
  SignedGraph g = two_hub_graph();
  std::vector<int32_t> d = degrees(g);
  CHECK(d[0] == 3);
  CHECK(d[1] == 4);
  std::vector<double> nds = neighborhood_degree_sums(g, 1);
  CHECK(nds[0] == 10.0);  // 4 + 3 + 3
  CHECK(nds[1] == 7.0);   // 3 + 2 + 1 + 1
}

TEST_CASE("neighborhood sums: path of three vertices") {
  SignedGraph g = graph_of(3, {{0, 1, 1}, {1, 2, 1}});
  CHECK(neighborhood_degree_sums(g, 1) == std::vector<double>{2.0, 2.0, 2.0});
}

TEST_CASE("neighborhood sums: one round equals the brute-force double loop") {
  abcd::Rng rng(1234);
  for (int trial = 0; trial < 40; ++trial) {
    SignedGraph g = testsup::random_graph(rng, 5 + (int32_t)rng.bounded(60), 0.15, 0.3);
    CHECK(neighborhood_degree_sums(g, 1) == testsup::brute_neighbor_degree_sum(g));
  }
}

TEST_CASE("neighborhood sums: rounds feed back the previous values") {
  SignedGraph g = graph_of(3, {{0, 1, 1}, {1, 2, 1}});
  // round 2 by hand: [2,2,2] -> [2, 4, 2]
  CHECK(neighborhood_degree_sums(g, 2) == std::vector<double>{2.0, 4.0, 2.0});
  CHECK_THROWS_AS(neighborhood_degree_sums(g, 0), std::invalid_argument);
}

TEST_CASE("cycle space dimension") {
  SignedGraph tree = graph_of(5, {{0, 1, 1}, {1, 2, 1}, {1, 3, -1}, {3, 4, 1}});
  CHECK(cycle_space_dimension(tree) == 0);

  SignedGraph tri = graph_of(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  CHECK(cycle_space_dimension(tri) == 1);

  // disconnected: |E| - |V| + #components
  SignedGraph two = graph_of(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}});
  CHECK(cycle_space_dimension(two) == 6 - 6 + 2);
}

TEST_CASE("stats: single positive edge") {
  SignedGraph g = graph_of(2, {{0, 1, 1}});
  GraphStats s = stats(g);
  CHECK(s.density == 1.0);
  CHECK(s.negative_fraction == 0.0);
  CHECK(s.degree_avg == 1.0);
  CHECK(s.degree_median == 1.0);
  CHECK(s.degree_max == 1);
}

TEST_CASE("stats: degenerate graphs report zero density") {
  CHECK(stats(SignedGraph{}).density == 0.0);
  SignedGraph one = graph_of(1, {});
  CHECK(stats(one).density == 0.0);
  CHECK(stats(one).degree_max == 0);
}

TEST_CASE("stats: fields match an independent recount on random graphs") {
  abcd::Rng rng(5150);
  for (int trial = 0; trial < 25; ++trial) {
    SignedGraph g = testsup::random_graph(rng, 20, 0.3, 0.45);
    GraphStats s = stats(g);
    int64_t neg = 0;
    std::vector<int32_t> deg((size_t)g.n, 0);
    for (const Edge& e : g.edges) {
      neg += e.sign < 0;
      deg[(size_t)e.u]++;
      deg[(size_t)e.v]++;
    }
    CHECK(s.vertices == g.n);
    CHECK(s.edges == (int64_t)g.edges.size());
    if (!g.edges.empty()) {
      CHECK(s.negative_fraction == doctest::Approx((double)neg / (double)g.edges.size()));
    }
    std::sort(deg.begin(), deg.end());
    CHECK(s.degree_max == deg.back());
    CHECK(s.degree_avg == doctest::Approx(2.0 * (double)g.edges.size() / g.n));
    CHECK(s.density ==
          doctest::Approx(2.0 * (double)g.edges.size() / ((double)g.n * (g.n - 1))));
    double median = g.n % 2 ? deg[(size_t)g.n / 2]
                            : (deg[(size_t)g.n / 2 - 1] + deg[(size_t)g.n / 2]) / 2.0;
    CHECK(s.degree_median == median);
  }
}
