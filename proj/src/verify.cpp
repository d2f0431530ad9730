#include "abcd/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace abcd {

BalanceReport is_balanced(const SignedGraph& g) {
  BalanceReport rep;
  std::vector<uint8_t> color((size_t)g.n, 2);
  std::vector<int32_t> queue((size_t)g.n);
  for (int32_t s = 0; s < g.n; ++s) {
    if (color[(size_t)s] != 2) continue;
    color[(size_t)s] = 1;
    queue[0] = s;
    int32_t tail = 1;
    for (int32_t head = 0; head < tail; ++head) {
      const int32_t v = queue[(size_t)head];
      for (int64_t i = g.adj_index[v]; i < g.adj_index[v + 1]; ++i) {
        const int32_t nbr = g.adj_vertex[(size_t)i];
        const int32_t eid = g.adj_edge[(size_t)i];
        const uint8_t want = g.edges[(size_t)eid].sign > 0 ? color[(size_t)v]
                                                           : (uint8_t)(1 - color[(size_t)v]);
        if (color[(size_t)nbr] == 2) {
          color[(size_t)nbr] = want;
          queue[(size_t)tail++] = nbr;
        } else if (color[(size_t)nbr] != want) {
          rep.balanced = false;
          rep.violating_edge = eid;
          return rep;
        }
      }
    }
  }
  rep.balanced = true;
  rep.side = std::move(color);
  return rep;
}

bool switch_set_balances(const SignedGraph& g, const std::vector<int32_t>& edge_ids) {
  SignedGraph flipped = g;
  for (int32_t e : edge_ids) {
    if (e < 0 || e >= (int32_t)g.edges.size()) {
      throw std::invalid_argument("switch_set_balances: unknown edge id " + std::to_string(e));
    }
    flipped.edges[(size_t)e].sign = (int8_t)-flipped.edges[(size_t)e].sign;
  }
  return is_balanced(flipped).balanced;
}

int64_t frustration_index(const SignedGraph& g) {
  if (g.n > 20) throw std::invalid_argument("frustration_index: oracle scale exceeded (max 20)");
  if (g.n == 0 || g.edges.empty()) return 0;

  // vertex 0 pinned to one side; violations = positive crossing + negative internal
  const uint32_t masks = 1u << (g.n - 1);
  int64_t best = g.edge_count();
  for (uint32_t m = 0; m < masks && best > 0; ++m) {
    const uint32_t assign = m << 1;  // bit v = side of vertex v, vertex 0 on side 0
    int64_t bad = 0;
    for (const Edge& e : g.edges) {
      const bool cross = ((assign >> e.u) ^ (assign >> e.v)) & 1u;
      bad += (e.sign > 0) == cross;
      if (bad >= best) break;
    }
    best = std::min(best, bad);
  }
  return best;
}

namespace {

// balance (+ optional connectivity) of the induced sub-graph over `member`
bool induced_ok(const SignedGraph& g, const std::vector<int32_t>& verts,
                const std::vector<int32_t>& member_stamp, int32_t stamp, bool require_connected,
                std::vector<uint8_t>& color, std::vector<int32_t>& queue) {
  for (int32_t v : verts) color[(size_t)v] = 2;
  int32_t seen_total = 0;
  int32_t comps = 0;
  for (int32_t s : verts) {
    if (color[(size_t)s] != 2) continue;
    ++comps;
    color[(size_t)s] = 1;
    queue[0] = s;
    int32_t tail = 1;
    for (int32_t head = 0; head < tail; ++head) {
      const int32_t v = queue[(size_t)head];
      for (int64_t i = g.adj_index[v]; i < g.adj_index[v + 1]; ++i) {
        const int32_t nbr = g.adj_vertex[(size_t)i];
        if (member_stamp[(size_t)nbr] != stamp) continue;
        const uint8_t want = g.edges[(size_t)g.adj_edge[(size_t)i]].sign > 0
                                 ? color[(size_t)v]
                                 : (uint8_t)(1 - color[(size_t)v]);
        if (color[(size_t)nbr] == 2) {
          color[(size_t)nbr] = want;
          queue[(size_t)tail++] = nbr;
        } else if (color[(size_t)nbr] != want) {
          return false;
        }
      }
    }
    seen_total += tail;
  }
  (void)seen_total;
  return !(require_connected && comps > 1);
}

}  // namespace

OracleResult oracle_max_balanced(const SignedGraph& g, bool require_connected) {
  if (g.n > 16) throw std::invalid_argument("oracle_max_balanced: oracle scale exceeded (max 16)");
  OracleResult res;
  if (g.n == 0) return res;

  std::vector<int32_t> member_stamp((size_t)g.n, -1);
  std::vector<uint8_t> color((size_t)g.n, 2);
  std::vector<int32_t> queue((size_t)g.n);
  int32_t stamp = 0;

  // combinations of ids in lexicographic order, sizes descending; the first
  // balanced subset found is the lexicographically smallest of the best size
  std::vector<int32_t> pick;
  for (int32_t s = g.n; s >= 1; --s) {
    pick.resize((size_t)s);
    for (int32_t i = 0; i < s; ++i) pick[(size_t)i] = i;
    while (true) {
      ++stamp;
      for (int32_t v : pick) member_stamp[(size_t)v] = stamp;
      if (induced_ok(g, pick, member_stamp, stamp, require_connected, color, queue)) {
        res.size = s;
        res.vertices = pick;
        return res;
      }
      // next combination
      int32_t i = s - 1;
      while (i >= 0 && pick[(size_t)i] == g.n - s + i) --i;
      if (i < 0) break;
      ++pick[(size_t)i];
      for (int32_t j = i + 1; j < s; ++j) pick[(size_t)j] = pick[(size_t)j - 1] + 1;
    }
  }
  return res;  // n >= 1 always returns at s = 1
}

ResultCheck verify_result(const SignedGraph& g, const std::vector<std::string>& winner_labels) {
  std::unordered_map<std::string, int32_t> id_of;
  id_of.reserve((size_t)g.n);
  for (int32_t v = 0; v < g.n; ++v) {
    id_of.emplace(g.labels.empty() ? std::to_string(v) : g.labels[(size_t)v], v);
  }

  std::vector<int32_t> verts;
  verts.reserve(winner_labels.size());
  std::vector<uint8_t> member((size_t)g.n, 0);
  for (const std::string& label : winner_labels) {
    auto it = id_of.find(label);
    if (it == id_of.end()) {
      throw std::invalid_argument("verify_result: vertex not in graph: " + label);
    }
    if (member[(size_t)it->second]) {
      throw std::invalid_argument("verify_result: duplicate vertex: " + label);
    }
    member[(size_t)it->second] = 1;
    verts.push_back(it->second);
  }

  // independent re-induction
  SignedGraph sub;
  std::vector<int32_t> remap((size_t)g.n, -1);
  std::sort(verts.begin(), verts.end());
  for (int32_t v : verts) {
    remap[(size_t)v] = sub.n++;
    sub.labels.push_back(g.labels.empty() ? std::to_string(v) : g.labels[(size_t)v]);
  }
  for (const Edge& e : g.edges) {
    if (member[(size_t)e.u] && member[(size_t)e.v]) {
      sub.edges.push_back({remap[(size_t)e.u], remap[(size_t)e.v], e.sign});
    }
  }
  sub.rebuild_adjacency();

  ResultCheck check;
  check.balance = is_balanced(sub);
  if (check.balance.violating_edge >= 0) {
    // translate back to an edge id of g
    const Edge& bad = sub.edges[(size_t)check.balance.violating_edge];
    const int32_t gu = verts[(size_t)bad.u];
    const int32_t gv = verts[(size_t)bad.v];
    for (size_t e = 0; e < g.edges.size(); ++e) {
      if (g.edges[e].u == std::min(gu, gv) && g.edges[e].v == std::max(gu, gv)) {
        check.balance.violating_edge = (int32_t)e;
        break;
      }
    }
  }
  check.connected = sub.n == 0 || connected_component_count(sub) == 1;
  return check;
}

}  // namespace abcd
