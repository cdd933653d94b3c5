//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "swl/algorithm.hpp"
#include "swl/error.hpp"
#include "swl/graph.hpp"
#include "swl/intern.hpp"
#include "swl/refinement.hpp"
#include "swl/structure.hpp"

namespace swl {
namespace {

// Plain 1-WL on the disjoint union: colors are renamed through a std::map of
// (old color, sorted neighbor colors) until the class count stops growing.
// Returns the stable color histogram of each graph.
std::vector<std::multiset<int>> wl1_oracle(const std::vector<Graph>& graphs) {
  std::vector<std::vector<int>> color(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) color[i].assign(graphs[i].order(), 0);
  std::size_t classes = 1;
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> names;
    std::vector<std::vector<int>> next(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      for (int u = 0; u < graphs[i].order(); ++u) {
        std::vector<int> nb;
        for (NodeId v : graphs[i].neighbors(u)) nb.push_back(color[i][v]);
        std::sort(nb.begin(), nb.end());
        auto key = std::make_pair(color[i][u], nb);
        auto it = names.emplace(key, static_cast<int>(names.size())).first;
        next[i].push_back(it->second);
      }
    }
    color.swap(next);
    if (names.size() == classes) break;
    classes = names.size();
  }
  std::vector<std::multiset<int>> out;
  for (const auto& c : color) out.emplace_back(c.begin(), c.end());
  return out;
}

std::size_t class_count(const std::vector<std::uint32_t>& colors) {
  return std::set<std::uint32_t>(colors.begin(), colors.end()).size();
}

TEST(Intern, DenseIdsAndKeys) {
  InternTable t;
  EXPECT_EQ(t.intern({1, 2, 3}), 0u);
  EXPECT_EQ(t.intern({1, 2}), 1u);
  EXPECT_EQ(t.intern({1, 2, 3}), 0u);
  EXPECT_EQ(t.intern({}), 2u);
  EXPECT_EQ(t.size(), 3u);
  EXPECT_EQ(t.key(1), std::vector<std::uint32_t>({1, 2}));
  EXPECT_EQ(t.key(2), std::vector<std::uint32_t>());
  const auto a = t.intern_bytes(7, "abc"), b = t.intern_bytes(8, "abc");
  EXPECT_NE(a, b);
  EXPECT_EQ(t.intern_bytes(7, "abc"), a);
  EXPECT_NE(t.intern_bytes(7, "abcd"), a);
  EXPECT_EQ(t.collisions(), 0u);
}

TEST(Intern, ManyKeysStayDistinct) {
  InternTable t;
  for (std::uint32_t i = 0; i < 50000; ++i) EXPECT_EQ(t.intern({i, i * 31u}), i);
  for (std::uint32_t i = 0; i < 50000; i += 997) EXPECT_EQ(t.intern({i, i * 31u}), i);
  const std::uint32_t w[] = {1, 2};
  EXPECT_EQ(hash128(w, 2), hash128(w, 2));
  EXPECT_FALSE(hash128(w, 2) == hash128(w, 1));
}

TEST(AlgorithmSpec, GrammarRoundTrips) {
  for (const char* text : {"wl1", "swl", "pswl", "fwl2", "ign2", "epwl:A", "epwl:L", "epwl:Lhat", "sign:L", "siam:A",
                           "weak:Lhat", "spe:A", "peg:Lhat", "basisnet:A", "basisnet:L:layers=3", "gdwl:spd", "gdwl:rd",
                           "gdwl:prd:w=0,1", "gdwl:diffusion:t=0.5", "girt", "girt:K=4"}) {
    const AlgorithmSpec s = AlgorithmSpec::parse(text);
    EXPECT_EQ(AlgorithmSpec::parse(s.str()).str(), s.str()) << text;
  }
  EXPECT_EQ(AlgorithmSpec::parse("epwl:Lhat").kind, MatrixKind::NormalizedLaplacian);
  EXPECT_EQ(AlgorithmSpec::parse("basisnet:L:layers=3").layers, 3);
  EXPECT_EQ(AlgorithmSpec::parse("girt:K=4").girt_steps, 4);
  EXPECT_EQ(AlgorithmSpec::parse("gdwl:rd").distance.kind, DistanceKind::RD);
  EXPECT_EQ(parse_spec_list("wl1, epwl:A  gdwl:spd").size(), 3u);
}

TEST(AlgorithmSpec, RejectsBadSpecs) {
  for (const char* text : {"", "wl3", "epwl", "epwl:X", "epwl:D", "gdwl", "gdwl:foo", "wl1:A", "basisnet:A:depth=2",
                           "girt:K=x"})
    EXPECT_THROW(AlgorithmSpec::parse(text), UsageError) << text;
  const Graph isolated = empty_graph(3);
  EXPECT_THROW(AlgorithmSpec::parse("epwl:Lhat").validate(isolated), DomainError);
  EXPECT_NO_THROW(AlgorithmSpec::parse("epwl:A").validate(isolated));
}

TEST(Refiner, InitialColorings) {
  Refiner wl({}, {random_graph(6, 0.5, 2)});
  EXPECT_EQ(class_count(wl.initial_coloring().colors[0]), 1u);

  Refiner swl(AlgorithmSpec::parse("swl"), {complete_graph(2)});
  const auto pairs = swl.initial_coloring();
  ASSERT_EQ(pairs.colors[0].size(), 4u);
  EXPECT_EQ(pairs.colors[0][0], pairs.colors[0][3]);
  EXPECT_EQ(pairs.colors[0][1], pairs.colors[0][2]);
  EXPECT_NE(pairs.colors[0][0], pairs.colors[0][1]);

  Refiner sign(AlgorithmSpec::parse("sign:A"), {complete_graph(2)});
  const auto sp = sign.initial_coloring();
  EXPECT_EQ(sp.domain, Domain::SpectralPairs);
  EXPECT_EQ(sp.colors[0].size(), 8u);
  // (lambda, P(u,v)) takes three values: (-1, 1/2), (-1, -1/2), (1, 1/2).
  EXPECT_EQ(class_count(sp.colors[0]), 3u);
}

TEST(Refiner, OneStepExamples) {
  Refiner wl({}, {star_graph(3)});
  const auto s = wl.refine_once(wl.initial_coloring());
  EXPECT_EQ(class_count(s.colors[0]), 2u);
  EXPECT_NE(s.colors[0][0], s.colors[0][1]);
  EXPECT_EQ(s.colors[0][1], s.colors[0][3]);

  const Graph c6 = cycle_graph(6), two_c3 = disjoint_union(complete_graph(3), complete_graph(3));
  Refiner ep(AlgorithmSpec::parse("epwl:A"), {c6, two_c3});
  const auto e = ep.refine_once(ep.initial_coloring());
  EXPECT_NE(e.colors[0][0], e.colors[1][0]);

  Refiner ign(AlgorithmSpec::parse("ign2"), {cycle_graph(5)});
  ColorState flat = ign.initial_coloring();
  for (auto& c : flat.colors[0]) c = flat.colors[0][0];
  const auto t = ign.refine_once(flat);
  EXPECT_NE(t.colors[0][0], t.colors[0][1]);
  EXPECT_EQ(t.colors[0][0], t.colors[0][6]);
}

TEST(Refiner, StableColorings) {
  for (int n = 2; n <= 6; ++n) {
    Refiner wl({}, {complete_graph(n)});
    const auto s = wl.stabilize(wl.initial_coloring());
    EXPECT_LE(s.iteration, 1);
    EXPECT_EQ(class_count(s.colors[0]), 1u);
  }
  const auto k3 = stable_coloring(AlgorithmSpec::parse("pswl"), {complete_graph(3)});
  EXPECT_EQ(class_count(k3.pair_colors[0]), 2u);

  const auto r = stable_coloring(AlgorithmSpec::parse("epwl:A"), {cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3))});
  const std::set<std::uint32_t> a(r.node_colors[0].begin(), r.node_colors[0].end());
  for (std::uint32_t c : r.node_colors[1]) EXPECT_EQ(a.count(c), 0u);
}

TEST(Refiner, RejectsForeignState) {
  Refiner a({}, {cycle_graph(4)}), b({}, {cycle_graph(4)});
  EXPECT_THROW(b.refine_once(a.initial_coloring()), UsageError);
}

TEST(Signatures, SpecExamples) {
  const Graph c6 = cycle_graph(6), two_c3 = disjoint_union(complete_graph(3), complete_graph(3));
  for (const char* spec : {"wl1", "epwl:A", "pswl", "fwl2", "gdwl:rd", "weak:L", "basisnet:A", "girt"}) {
    const auto r = stable_coloring(AlgorithmSpec::parse(spec), {complete_graph(2), complete_graph(2)});
    EXPECT_EQ(r.signatures[0], r.signatures[1]) << spec;
  }
  const auto wl = stable_coloring({}, {c6, two_c3});
  EXPECT_EQ(wl.signatures[0], wl.signatures[1]);
  const auto ep = stable_coloring(AlgorithmSpec::parse("epwl:A"), {c6, two_c3});
  EXPECT_NE(ep.signatures[0], ep.signatures[1]);
  EXPECT_THROW((void)(wl.signatures[0] == ep.signatures[0]), UsageError);
}

TEST(Distinguishes, SpecExamples) {
  const Graph c6 = cycle_graph(6), two_c3 = disjoint_union(complete_graph(3), complete_graph(3));
  EXPECT_FALSE(distinguishes({}, c6, two_c3));
  EXPECT_TRUE(distinguishes(AlgorithmSpec::parse("epwl:A"), c6, two_c3));
  const Graph g = random_connected_graph(8, 0.3, 7);
  for (const char* spec : {"wl1", "epwl:Lhat", "swl", "pswl", "fwl2", "ign2", "sign:A", "siam:L", "weak:A", "spe:L",
                           "basisnet:Lhat", "peg:A", "girt", "gdwl:htd"})
    EXPECT_FALSE(distinguishes(AlgorithmSpec::parse(spec), g, permute(g, random_permutation(8, 3)))) << spec;
}

TEST(Wl1, MatchesOracleOnRandomCorpus) {
  std::vector<Graph> corpus;
  for (std::uint64_t s = 0; s < 60; ++s) corpus.push_back(random_graph(3 + static_cast<int>(s % 6), 0.4, s));
  const auto r = stable_coloring({}, corpus);
  const auto oracle = wl1_oracle(corpus);
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) EXPECT_EQ(r.signatures[i] == r.signatures[j], oracle[i] == oracle[j]) << i << " " << j;
}

TEST(ComparePartitions, SpecExamples) {
  const auto corpus = enumerate_range(2, 5, true);
  const auto same = compare_partitions(AlgorithmSpec::parse("epwl:A"), AlgorithmSpec::parse("epwl:A"), corpus);
  EXPECT_EQ(same.relation, Relation::Equivalent);
  const auto ps = compare_partitions(AlgorithmSpec::parse("pswl"), AlgorithmSpec::parse("epwl:Lhat"), corpus);
  EXPECT_TRUE(ps.a_refines_b);
  EXPECT_TRUE(ps.a_misses.empty());
  const auto gd = compare_partitions(AlgorithmSpec::parse("epwl:Lhat"), AlgorithmSpec::parse("gdwl:spd"), corpus);
  EXPECT_TRUE(gd.a_refines_b);

  const std::vector<Graph> pair = {cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3))};
  const auto wl = compare_partitions({}, AlgorithmSpec::parse("epwl:A"), pair);
  EXPECT_EQ(wl.relation, Relation::Coarser);
  ASSERT_EQ(wl.a_misses.size(), 1u);
  EXPECT_EQ(to_string(wl.relation), "coarser");
  EXPECT_THROW(compare_partitions({}, {}, {}), UsageError);
}

TEST(ComparePartitions, FromIds) {
  const auto r = compare_signature_ids({0, 0, 1}, {0, 1, 1});
  EXPECT_EQ(r.relation, Relation::Incomparable);
  EXPECT_EQ(r.a_misses, (std::vector<std::pair<int, int>>{{0, 1}}));
  EXPECT_EQ(r.b_misses, (std::vector<std::pair<int, int>>{{1, 2}}));
  EXPECT_EQ(compare_signature_ids({0, 1, 2}, {0, 0, 1}).relation, Relation::Finer);
  EXPECT_THROW(compare_signature_ids({0}, {0, 1}), UsageError);
}

}  // namespace
}  // namespace swl
