//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "swl/structure.hpp"

#include <algorithm>
#include <unordered_map>

#include "swl/error.hpp"
#include "swl/isomorphism.hpp"

namespace swl {

namespace {

struct Tarjan {
  const Graph& g;
  std::vector<std::vector<NodeId>> nb;
  std::vector<int> disc, low;
  std::vector<char> cut;
  std::vector<Edge> bridges;
  std::vector<Edge> stack;
  int timer = 0;
  int blocks = 0;

  explicit Tarjan(const Graph& graph)
      : g(graph), disc(graph.order(), -1), low(graph.order(), 0), cut(graph.order(), 0) {
    for (int u = 0; u < g.order(); ++u) nb.push_back(g.neighbors(u));
  }

  void dfs(NodeId u, NodeId parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (NodeId w : nb[u]) {
      if (w == parent) continue;
      if (disc[w] < 0) {
        stack.emplace_back(u, w);
        ++children;
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] > disc[u]) bridges.emplace_back(std::min(u, w), std::max(u, w));
        if (low[w] >= disc[u]) {
          if (parent >= 0) cut[u] = 1;
          ++blocks;
          while (!stack.empty()) {
            Edge e = stack.back();
            stack.pop_back();
            if (e.first == u && e.second == w) break;
          }
        }
      } else if (disc[w] < disc[u]) {
        stack.emplace_back(u, w);
        low[u] = std::min(low[u], disc[w]);
      }
    }
    if (parent < 0 && children > 1) cut[u] = 1;
  }
};

}  // namespace

BiconnectivityReport biconnectivity_report(const Graph& g) {
  Tarjan t(g);
  for (NodeId s = 0; s < g.order(); ++s)
    if (t.disc[s] < 0) t.dfs(s, -1);
  BiconnectivityReport r;
  for (NodeId u = 0; u < g.order(); ++u)
    if (t.cut[u]) r.cut_vertices.push_back(u);
  std::sort(t.bridges.begin(), t.bridges.end());
  r.cut_edges = std::move(t.bridges);
  r.biconnected_component_count = t.blocks;
  return r;
}

namespace {

std::vector<Graph> all_classes(int n) {
  if (n == 0) return {empty_graph(0)};
  if (n == 1) return {empty_graph(1)};
  std::vector<Graph> smaller = all_classes(n - 1);
  std::unordered_map<std::uint64_t, std::vector<Graph>> buckets;
  std::vector<Graph> out;
  for (const Graph& base : smaller) {
    const int k = n - 1;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      GraphBuilder b(n);
      for (auto [u, v] : base.edges()) b.add_edge(u, v);
      for (int u = 0; u < k; ++u)
        if (mask >> u & 1u) b.add_edge(u, k);
      Graph cand = b.build();
      auto& bucket = buckets[invariant_fingerprint(cand)];
      bool seen = false;
      for (const Graph& other : bucket)
        if (is_isomorphic(cand, other)) {
          seen = true;
          break;
        }
      if (!seen) {
        bucket.push_back(cand);
        out.push_back(cand);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
  if (n < 1) throw DomainError("enumerate_graphs requires n >= 1");
  if (n > 9) throw DomainError("exhaustive enumeration is limited to n <= 9; use random_graph for larger sizes");
  std::vector<Graph> all = all_classes(n);
  std::vector<std::pair<std::pair<std::size_t, std::string>, Graph>> keyed;
  for (auto& g : all) {
    if (connected_only && !g.is_connected()) continue;
    keyed.push_back({{g.size(), write_graph6(g)}, g});
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  for (auto& [k, g] : keyed) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> enumerate_range(int min_n, int max_n, bool connected_only) {
  std::vector<Graph> out;
  for (int n = min_n; n <= max_n; ++n) {
    auto part = enumerate_graphs(n, connected_only);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace swl
