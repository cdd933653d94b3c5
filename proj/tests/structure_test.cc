//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "swl/error.hpp"
#include "swl/graph.hpp"
#include "swl/isomorphism.hpp"
#include "swl/structure.hpp"

namespace swl {
namespace {

// Canonical form by minimizing the upper-triangle bit string over all
// relabelings.
std::string brute_canonical(const Graph& g) {
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::string best;
  do {
    std::string bits;
    for (int u = 0; u < g.order(); ++u)
      for (int v = u + 1; v < g.order(); ++v) bits += g.adjacent(p[u], p[v]) ? '1' : '0';
    if (best.empty() || bits < best) best = bits;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

std::size_t brute_class_count(int n, bool connected_only) {
  const int pairs = n * (n - 1) / 2;
  std::set<std::string> classes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    GraphBuilder b(n);
    int k = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++k)
        if ((mask >> k) & 1) b.add_edge(u, v);
    const Graph g = b.build();
    if (connected_only && !g.is_connected()) continue;
    classes.insert(std::to_string(n) + ":" + brute_canonical(g));
  }
  return classes.size();
}

int component_count(const Graph& g) {
  const auto c = g.components();
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Blocks from the block-cut tree count: each component with an edge has
// 1 + sum over v of (extra components created by deleting v) blocks.
BiconnectivityReport brute_biconnectivity(const Graph& g) {
  BiconnectivityReport r;
  const int base = component_count(g);
  std::vector<int> comp = g.components();
  std::set<int> with_edges;
  for (auto [u, v] : g.edges()) with_edges.insert(comp[u]);
  r.biconnected_component_count = static_cast<int>(with_edges.size());
  for (int v = 0; v < g.order(); ++v) {
    std::vector<NodeId> keep;
    for (int u = 0; u < g.order(); ++u)
      if (u != v) keep.push_back(u);
    const int isolated_v = g.degree(v) == 0 ? 1 : 0;
    const int extra = component_count(induced_subgraph(g, keep)) - (base - isolated_v);
    if (extra > 0) r.cut_vertices.push_back(v);
    r.biconnected_component_count += extra;
  }
  for (auto e : g.edges()) {
    GraphBuilder b(g);
    b.remove_edge(e.first, e.second);
    if (component_count(b.build()) > base) r.cut_edges.push_back(e);
  }
  return r;
}

TEST(Enumerate, SpecCounts) {
  EXPECT_EQ(enumerate_graphs(1, false).size(), 1u);
  EXPECT_EQ(enumerate_graphs(3, false).size(), 4u);
  EXPECT_EQ(enumerate_graphs(3, true).size(), 2u);
  EXPECT_EQ(enumerate_graphs(4, true).size(), 6u);
}

TEST(Enumerate, MatchesBruteForceDedupe) {
  for (int n = 1; n <= 5; ++n)
    for (bool connected : {false, true}) EXPECT_EQ(enumerate_graphs(n, connected).size(), brute_class_count(n, connected)) << n;
}

TEST(Enumerate, CorpusSizesAndNoDuplicates) {
  // Brute-force dedupe above covers n <= 5; larger sizes are checked for
  // pairwise non-isomorphism and the classical class counts.
  const std::size_t connected[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 6; n <= 7; ++n) {
    const auto graphs = enumerate_graphs(n, true);
    EXPECT_EQ(graphs.size(), connected[n]);
    std::set<std::string> seen;
    for (const auto& g : graphs) EXPECT_TRUE(seen.insert(write_graph6(g)).second);
  }
  EXPECT_EQ(enumerate_graphs(6, false).size(), 156u);
  const auto range = enumerate_range(2, 7, true);
  EXPECT_EQ(range.size(), 995u);
  EXPECT_THROW(enumerate_graphs(10, true), DomainError);
}

TEST(Biconnectivity, SpecExamples) {
  const auto p3 = biconnectivity_report(path_graph(3));
  EXPECT_EQ(p3.cut_vertices, std::vector<NodeId>({1}));
  EXPECT_EQ(p3.cut_edges.size(), 2u);
  const auto c4 = biconnectivity_report(cycle_graph(4));
  EXPECT_TRUE(c4.cut_vertices.empty());
  EXPECT_TRUE(c4.cut_edges.empty());
  EXPECT_EQ(c4.biconnected_component_count, 1);
  const Graph bowtie = make_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  const auto bt = biconnectivity_report(bowtie);
  EXPECT_EQ(bt.cut_vertices, std::vector<NodeId>({2}));
  EXPECT_EQ(bt.biconnected_component_count, 2);
}

TEST(Biconnectivity, MatchesDeletionOracle) {
  for (const auto& g : enumerate_range(1, 6, false)) {
    const auto fast = biconnectivity_report(g);
    const auto slow = brute_biconnectivity(g);
    auto sorted = [](std::vector<Edge> e) {
      std::sort(e.begin(), e.end());
      return e;
    };
    EXPECT_EQ(fast.cut_vertices, slow.cut_vertices) << write_graph6(g);
    EXPECT_EQ(sorted(fast.cut_edges), sorted(slow.cut_edges)) << write_graph6(g);
    EXPECT_EQ(fast.biconnected_component_count, slow.biconnected_component_count) << write_graph6(g);
  }
}

TEST(Isomorphism, SpecExamples) {
  const Graph c6 = cycle_graph(6);
  const auto perm = random_permutation(6, 4);
  const auto iso = is_isomorphic(c6, permute(c6, perm));
  ASSERT_TRUE(iso.has_value());
  const Graph c6p = permute(c6, perm);
  for (auto [u, v] : c6.edges()) EXPECT_TRUE(c6p.adjacent((*iso)[u], (*iso)[v]));
  EXPECT_FALSE(is_isomorphic(c6, disjoint_union(complete_graph(3), complete_graph(3))));
  GraphBuilder k4e(complete_graph(4));
  k4e.remove_edge(0, 1);
  EXPECT_FALSE(is_isomorphic(complete_graph(4), k4e.build()));
}

TEST(Isomorphism, AgreesWithCanonicalFormOnRandomPairs) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const int n = 2 + static_cast<int>(s % 6);
    const Graph g = random_graph(n, 0.5, s), h = random_graph(n, 0.5, s + 1000);
    const bool expect = brute_canonical(g) == brute_canonical(h);
    EXPECT_EQ(is_isomorphic(g, h).has_value(), expect) << write_graph6(g) << " " << write_graph6(h);
  }
}

TEST(Isomorphism, RelabelingsOfRegularGraphs) {
  const Graph petersen = parse_graph6("IheA@GUAo");
  for (std::uint64_t s = 0; s < 10; ++s) {
    EXPECT_TRUE(is_isomorphic(petersen, permute(petersen, random_permutation(10, s))).has_value());
    EXPECT_EQ(invariant_fingerprint(petersen), invariant_fingerprint(permute(petersen, random_permutation(10, s))));
  }
}

}  // namespace
}  // namespace swl
