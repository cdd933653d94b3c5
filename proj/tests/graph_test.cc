//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <cmath>

#include "swl/error.hpp"
#include "swl/graph.hpp"

namespace swl {
namespace {

// graph6 strings produced by networkx.to_graph6_bytes for the same graphs.
TEST(Graph6, MatchesReferenceEncoder) {
  EXPECT_EQ(write_graph6(complete_graph(2)), "A_");
  EXPECT_EQ(write_graph6(complete_graph(3)), "Bw");
  EXPECT_EQ(write_graph6(path_graph(5)), "DhC");
  EXPECT_EQ(write_graph6(cycle_graph(6)), "EhEG");
  EXPECT_EQ(write_graph6(star_graph(4)), "Ds_");
  const Graph petersen =
      make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                      {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  EXPECT_EQ(write_graph6(petersen), "IheA@GUAo");
}

TEST(Graph6, LongHeader) {
  const std::string p64 =
      "~?@?hCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@"
      "?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G??"
      "?????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????_?????????"
      "G?????????@";
  EXPECT_EQ(write_graph6(path_graph(64)), p64);
  EXPECT_EQ(parse_graph6(p64), path_graph(64));
  const Graph big = random_graph(300, 0.05, 3);
  EXPECT_EQ(parse_graph6(write_graph6(big)), big);
}

TEST(Graph6, ParsesSpecExamples) {
  const Graph k2 = parse_graph6("A_");
  EXPECT_EQ(k2.order(), 2);
  EXPECT_TRUE(k2.adjacent(0, 1));
  const Graph e5 = parse_graph6("D??");
  EXPECT_EQ(e5.order(), 5);
  EXPECT_EQ(e5.size(), 0u);
  EXPECT_TRUE(e5.has_isolated());
  EXPECT_EQ(parse_graph6(">>graph6<<Bw"), complete_graph(3));
  EXPECT_EQ(parse_graph6("Bw\n"), complete_graph(3));
}

TEST(Graph6, RoundTripsRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = random_graph(1 + static_cast<int>(seed % 20), 0.4, seed);
    EXPECT_EQ(parse_graph6(write_graph6(g)), g);
  }
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("B"), ParseError);        // missing data byte
  EXPECT_THROW(parse_graph6("Bw?"), ParseError);      // trailing garbage
  EXPECT_THROW(parse_graph6("Bx"), ParseError);       // nonzero padding bits
  EXPECT_THROW(parse_graph6("A\x7f"), ParseError);    // byte out of range
  try {
    parse_graph6("Bw?");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
}

TEST(Corpus, SkipsCommentsAndReportsLineNumbers) {
  const auto graphs = parse_corpus("# header\nA_\n\n  Bw  \n# end\n");
  ASSERT_EQ(graphs.size(), 2u);
  EXPECT_EQ(graphs[1], complete_graph(3));
  try {
    parse_corpus("A_\nBw\nB!\n");
    FAIL();
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  EXPECT_THROW(read_corpus("/nonexistent/corpus.g6"), UsageError);
}

TEST(Graph, AtomicTypes) {
  const Graph k2 = complete_graph(2);
  EXPECT_EQ(k2.atomic_type(0, 0), AtomicType::Equal);
  EXPECT_EQ(k2.atomic_type(0, 1), AtomicType::Adjacent);
  EXPECT_EQ(empty_graph(2).atomic_type(0, 1), AtomicType::NonAdjacent);
}

TEST(Graph, MatricesOnSmallGraphs) {
  const SymmetricMatrix l = build_matrix(complete_graph(2), MatrixKind::Laplacian);
  EXPECT_EQ(l(0, 0), 1);
  EXPECT_EQ(l(0, 1), -1);
  EXPECT_TRUE(build_matrix(complete_graph(2), MatrixKind::NormalizedLaplacian).isApprox(l));
  const Graph s3 = star_graph(3);
  const SymmetricMatrix lh = build_matrix(s3, MatrixKind::NormalizedLaplacian);
  EXPECT_NEAR(lh(0, 1), -1 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(lh(0, 0), 1, 1e-15);
  EXPECT_THROW(build_matrix(empty_graph(2), MatrixKind::NormalizedLaplacian), DomainError);
  const SymmetricMatrix d = build_matrix(s3, MatrixKind::Degree);
  EXPECT_EQ(d(0, 0), 3);
  EXPECT_EQ(d(1, 1), 1);
}

TEST(Graph, BuilderKeepsSymmetryAndRejectsLoops) {
  GraphBuilder b(4);
  b.add_edge(0, 1);
  b.toggle_edge(2, 3);
  b.toggle_edge(1, 0);
  EXPECT_THROW(b.add_edge(2, 2), DomainError);
  EXPECT_THROW(b.add_edge(0, 4), DomainError);
  const Graph g = b.build();
  EXPECT_FALSE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(3, 2));
  EXPECT_EQ(g.size(), 1u);
}

TEST(Graph, DisjointUnion) {
  const Graph two_k2 = disjoint_union(complete_graph(2), complete_graph(2));
  EXPECT_EQ(two_k2, make_graph(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(disjoint_union(cycle_graph(5), empty_graph(0)), cycle_graph(5));
  const Graph g = random_graph(7, 0.5, 1), h = random_graph(6, 0.3, 2);
  EXPECT_EQ(disjoint_union(g, h).size(), g.size() + h.size());
  EXPECT_FALSE(two_k2.is_connected());
  const auto comp = two_k2.components();
  EXPECT_EQ(comp[0], comp[1]);
  EXPECT_NE(comp[0], comp[2]);
}

TEST(Graph, RandomGraphs) {
  EXPECT_EQ(random_graph(6, 0.0, 5).size(), 0u);
  EXPECT_EQ(random_graph(6, 1.0, 5), complete_graph(6));
  EXPECT_EQ(random_graph(12, 0.3, 9), random_graph(12, 0.3, 9));
  for (std::uint64_t s = 0; s < 20; ++s) EXPECT_TRUE(random_connected_graph(9, 0.1, s).is_connected());
}

TEST(Graph, PermuteMapsEdges) {
  const Graph g = path_graph(4);
  const std::vector<NodeId> perm = {2, 0, 3, 1};
  const Graph pg = permute(g, perm);
  for (auto [u, v] : g.edges()) EXPECT_TRUE(pg.adjacent(perm[u], perm[v]));
  EXPECT_EQ(pg.size(), g.size());
  EXPECT_THROW(permute(g, {0, 0, 1, 2}), DomainError);
}

TEST(Graph, InducedSubgraph) {
  const Graph sub = induced_subgraph(cycle_graph(5), {0, 1, 2});
  EXPECT_EQ(sub, path_graph(3));
}

}  // namespace
}  // namespace swl
