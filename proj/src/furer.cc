//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "swl/furer.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "swl/error.hpp"
#include "swl/isomorphism.hpp"
#include "swl/refinement.hpp"
#include "swl/structure.hpp"

namespace swl {

FurerGraph furer(const Graph& base, int max_vertices) {
  if (base.order() == 0 || !base.is_connected() || base.has_isolated())
    throw DomainError("Fürer base graph must be connected without isolated vertices");
  FurerGraph fg;
  fg.base = base;
  const int n = base.order();
  long long total = 0;
  for (int x = 0; x < n; ++x) total += 1LL << (base.degree(x) - 1);
  if (total > max_vertices)
    throw DomainError("Fürer product would have " + std::to_string(total) + " vertices (limit " +
                      std::to_string(max_vertices) + ")");
  std::vector<std::vector<NodeId>> nb(n);
  for (int x = 0; x < n; ++x) nb[x] = base.neighbors(x);
  fg.meta.resize(n);
  for (int x = 0; x < n; ++x) {
    const int d = base.degree(x);
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
      if (__builtin_popcount(mask) % 2) continue;
      fg.meta[x].push_back(static_cast<NodeId>(fg.owner.size()));
      fg.owner.push_back(x);
      fg.subset.push_back(mask);
    }
  }
  auto contains = [&](NodeId p, NodeId y) {
    const auto& list = nb[fg.owner[p]];
    const auto pos = std::lower_bound(list.begin(), list.end(), y) - list.begin();
    return (fg.subset[p] >> pos) & 1u;
  };
  GraphBuilder b(static_cast<int>(fg.owner.size()));
  for (auto [x, y] : base.edges())
    for (NodeId p : fg.meta[x])
      for (NodeId q : fg.meta[y])
        if (contains(q, x) == contains(p, y)) b.add_edge(p, q);
  fg.product = b.build();

  for (int x = 0; x < n; ++x)
    if (fg.meta[x].size() != (std::size_t{1} << (base.degree(x) - 1)))
      throw InternalError("meta set size differs from 2^(deg-1)");
  return fg;
}

Graph twist(const FurerGraph& fg, const std::vector<Edge>& twist_set) {
  std::set<Edge> edges;
  for (auto [u, v] : twist_set) {
    if (u < 0 || v < 0 || u >= fg.base.order() || v >= fg.base.order() || u == v || !fg.base.adjacent(u, v))
      throw DomainError("twist edge " + std::to_string(u) + "-" + std::to_string(v) + " is not a base edge");
    edges.emplace(std::min(u, v), std::max(u, v));
  }
  GraphBuilder b(fg.product);
  for (auto [x, y] : edges)
    for (NodeId p : fg.meta[x])
      for (NodeId q : fg.meta[y]) b.toggle_edge(p, q);
  return b.build();
}

bool parity_check(const Graph& base, const std::vector<Edge>& s1, const std::vector<Edge>& s2) {
  FurerGraph fg = furer(base);
  auto norm = [](std::vector<Edge> s) {
    for (auto& e : s)
      if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  };
  const bool iso = is_isomorphic(twist(fg, s1), twist(fg, s2)).has_value();
  const bool expected = norm(s1).size() % 2 == norm(s2).size() % 2;
  if (iso != expected) throw InternalError("twisted Fürer graphs violate the parity rule");
  return iso;
}

namespace {

Graph rook_4x4() {
  GraphBuilder b(16);
  for (int u = 0; u < 16; ++u)
    for (int v = u + 1; v < 16; ++v)
      if (u / 4 == v / 4 || u % 4 == v % 4) b.add_edge(u, v);
  return b.build();
}

Graph shrikhande() {
  GraphBuilder b(16);
  const int d[3][2] = {{0, 1}, {1, 0}, {1, 1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (const auto& s : d) {
        const int u = i * 4 + j;
        const int v = ((i + s[0]) % 4) * 4 + (j + s[1]) % 4;
        if (!b.has_edge(u, v)) b.add_edge(u, v);
      }
  return b.build();
}

Graph prism() {
  return make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

Graph k33() {
  GraphBuilder b(6);
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) b.add_edge(u, v);
  return b.build();
}

}  // namespace

std::vector<std::pair<std::pair<Graph, Graph>, std::string>> trivial_pairs() {
  return {
      {{cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3))}, "C6|2C3"},
      {{cycle_graph(8), disjoint_union(cycle_graph(4), cycle_graph(4))}, "C8|2C4"},
      {{cycle_graph(8), disjoint_union(cycle_graph(3), cycle_graph(5))}, "C8|C3+C5"},
      {{k33(), prism()}, "K33|prism"},
      {{rook_4x4(), shrikhande()}, "rook4x4|shrikhande"},
  };
}

SearchResult search_counterexamples(const AlgorithmSpec& a, const AlgorithmSpec& b, const SearchOptions& opt) {
  SearchResult res;
  auto spend = [&]() {
    if (res.evaluated >= opt.budget) {
      res.budget_exhausted = true;
      return false;
    }
    ++res.evaluated;
    return true;
  };
  auto consider = [&](const Graph& g, const Graph& h, const std::string& source) {
    try {
      a.validate(g), a.validate(h), b.validate(g), b.validate(h);
    } catch (const DomainError&) {
      return;
    }
    const bool da = distinguishes(a, g, h);
    const bool db = distinguishes(b, g, h);
    if (da != db) res.witnesses.push_back({g, h, source, da, db});
  };
  auto try_base = [&](const Graph& base, const std::string& tag) {
    long long total = 0;
    for (int x = 0; x < base.order(); ++x) total += 1LL << (base.degree(x) - 1);
    if (total > opt.max_product_vertices) return true;
    if (!spend()) return false;
    FurerGraph fg = furer(base, opt.max_product_vertices);
    const Edge e = base.edges().front();
    consider(fg.product, twist(fg, {e}), tag + ":" + write_graph6(base) + ":twist=" + std::to_string(e.first) + "-" +
                                             std::to_string(e.second));
    return true;
  };

  if (opt.include_trivial)
    for (const auto& [pair, name] : trivial_pairs()) {
      if (!spend()) return res;
      consider(pair.first, pair.second, "trivial:" + name);
    }
  for (int n = std::max(3, opt.min_base_n); n <= opt.max_base_n; ++n)
    for (const Graph& base : enumerate_graphs(n, true)) {
      const auto& deg = base.degrees();
      if (*std::min_element(deg.begin(), deg.end()) < 2) continue;
      if (!try_base(base, "furer")) return res;
    }
  std::mt19937_64 rng(opt.seed);
  const int lo = std::max(3, opt.min_base_n);
  if (opt.max_random_n >= lo) {
    // Random bases continue until the budget runs out; give up after a long
    // streak of unusable samples so tiny size ranges terminate.
    int misses = 0;
    while (misses < 10000) {
      const int n = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(opt.max_random_n - lo + 1));
      Graph base = random_connected_graph(n, 0.35, rng());
      const auto& deg = base.degrees();
      long long total = 0;
      for (int x = 0; x < n; ++x) total += 1LL << (deg[x] - 1);
      if (*std::min_element(deg.begin(), deg.end()) < 2 || total > opt.max_product_vertices) {
        ++misses;
        continue;
      }
      misses = 0;
      if (!try_base(base, "furer-random")) return res;
    }
  }
  return res;
}

}  // namespace swl
