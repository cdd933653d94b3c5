//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "swl/error.hpp"
#include "swl/exact.hpp"
#include "swl/graph.hpp"
#include "swl/spectral.hpp"

namespace swl {
namespace {

std::string record(double lambda, double p) {
  return format_quantized(quantize(lambda, 6), 6) + ":" + format_quantized(quantize(p, 6), 6) + ";";
}

TEST(Quantize, HalfEvenAndNegativeZero) {
  EXPECT_EQ(quantize(0.0000025, 6), 2);
  EXPECT_EQ(quantize(0.0000035, 6), 4);
  EXPECT_EQ(quantize(2.5, 0), 2);
  EXPECT_EQ(quantize(-1.5, 0), -2);
  EXPECT_EQ(quantize(1.0 / 3, 6), 333333);
  EXPECT_EQ(quantize(-0.0, 6), 0);
  EXPECT_EQ(quantize(-1e-12, 6), 0);
  EXPECT_EQ(format_quantized(quantize(-0.0, 6), 6), format_quantized(0, 6));
  EXPECT_EQ(format_quantized(1500000, 6), "+00000001.500000");
  EXPECT_THROW(quantize(std::numeric_limits<double>::quiet_NaN(), 6), NumericError);
  EXPECT_THROW(quantize(1.0, 10), UsageError);
}

TEST(Decompose, K2Adjacency) {
  const auto d = decompose(build_matrix(complete_graph(2), MatrixKind::Adjacency));
  ASSERT_EQ(d.size(), 2);
  EXPECT_NEAR(d.eigenvalues[0], -1, 1e-12);
  EXPECT_NEAR(d.eigenvalues[1], 1, 1e-12);
  SymmetricMatrix pm(2, 2), pp(2, 2);
  pm << 0.5, -0.5, -0.5, 0.5;
  pp << 0.5, 0.5, 0.5, 0.5;
  EXPECT_TRUE(d.projections[0].isApprox(pm, 1e-12));
  EXPECT_TRUE(d.projections[1].isApprox(pp, 1e-12));
}

TEST(Decompose, C4NormalizedLaplacian) {
  const auto d = decompose(build_matrix(cycle_graph(4), MatrixKind::NormalizedLaplacian));
  ASSERT_EQ(d.size(), 3);
  EXPECT_NEAR(d.eigenvalues[0], 0, 1e-12);
  EXPECT_NEAR(d.eigenvalues[1], 1, 1e-12);
  EXPECT_NEAR(d.eigenvalues[2], 2, 1e-12);
  EXPECT_EQ(d.multiplicities, std::vector<int>({1, 2, 1}));
  EXPECT_TRUE(d.projections[0].isApprox(SymmetricMatrix::Constant(4, 4, 0.25), 1e-12));
}

TEST(Decompose, IdentityIsOneProjection) {
  const auto d = decompose(SymmetricMatrix::Identity(5, 5));
  ASSERT_EQ(d.size(), 1);
  EXPECT_EQ(d.multiplicities[0], 5);
  EXPECT_TRUE(d.projections[0].isApprox(SymmetricMatrix::Identity(5, 5)));
}

TEST(Decompose, CompleteGraphLaplacianSpectrum) {
  for (int n = 2; n <= 8; ++n) {
    const auto d = decompose(build_matrix(complete_graph(n), MatrixKind::Laplacian));
    ASSERT_EQ(d.size(), 2);
    EXPECT_NEAR(d.eigenvalues[0], 0, 1e-10);
    EXPECT_NEAR(d.eigenvalues[1], n, 1e-10);
    EXPECT_EQ(d.multiplicities, std::vector<int>({1, n - 1}));
  }
}

TEST(Decompose, ResidualsOnRandomGraphs) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Graph g = random_connected_graph(4 + static_cast<int>(s % 9), 0.3, s);
    for (MatrixKind k : {MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::NormalizedLaplacian}) {
      const SymmetricMatrix m = build_matrix(g, k);
      EXPECT_TRUE(validate_decomposition(decompose(m), m).pass(1e-9)) << write_graph6(g);
    }
  }
}

TEST(Decompose, ValidationCatchesMissingProjection) {
  const SymmetricMatrix m = build_matrix(cycle_graph(5), MatrixKind::Adjacency);
  auto d = decompose(m);
  d.projections[0].setZero();
  const auto r = validate_decomposition(d, m);
  EXPECT_GT(r.completeness, 0.1);
  EXPECT_FALSE(r.pass(1e-8));
}

TEST(PairToken, K2MatchesHandBuiltRecords) {
  const Graph k2 = complete_graph(2);
  EXPECT_EQ(pair_token(k2, MatrixKind::Adjacency, 0, 1).bytes, record(1, 0.5) + record(-1, -0.5));
  EXPECT_EQ(pair_token(k2, MatrixKind::Adjacency, 0, 0).bytes, record(1, 0.5) + record(-1, 0.5));
  EXPECT_EQ(spectrum_token(k2, MatrixKind::Adjacency).bytes,
            format_quantized(quantize(1, 6), 6) + "x1;" + format_quantized(quantize(-1, 6), 6) + "x1;");
}

TEST(PairToken, DiagonalSumsToOne) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph g = random_connected_graph(7, 0.4, s);
    for (MatrixKind k : {MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::NormalizedLaplacian})
      for (int u = 0; u < g.order(); ++u) EXPECT_NEAR(token_projection_sum(pair_token(g, k, u, u)), 1, 1e-5);
  }
}

TEST(PairToken, SymmetricAndRelabelingInvariant) {
  const Graph g = random_connected_graph(8, 0.3, 11);
  const auto perm = random_permutation(8, 5);
  const Graph pg = permute(g, perm);
  for (int u = 0; u < 8; ++u)
    for (int v = 0; v < 8; ++v) {
      EXPECT_EQ(pair_token(g, MatrixKind::Laplacian, u, v), pair_token(g, MatrixKind::Laplacian, v, u));
      EXPECT_EQ(pair_token(g, MatrixKind::Adjacency, u, v), pair_token(pg, MatrixKind::Adjacency, perm[u], perm[v]));
    }
}

TEST(PairToken, C6AndTwoTrianglesDiffer) {
  const Graph c6 = cycle_graph(6);
  const Graph two_c3 = disjoint_union(complete_graph(3), complete_graph(3));
  EXPECT_NE(pair_token(c6, MatrixKind::Adjacency, 0, 0), pair_token(two_c3, MatrixKind::Adjacency, 0, 0));
  EXPECT_NE(spectrum_token(c6, MatrixKind::Adjacency), spectrum_token(two_c3, MatrixKind::Adjacency));
}

TEST(PairToken, CachedDecompositionIsShared) {
  const Graph g = cycle_graph(7);
  EXPECT_EQ(decomposition(g, MatrixKind::Adjacency).get(), decomposition(g, MatrixKind::Adjacency).get());
  EXPECT_THROW(decomposition(empty_graph(3), MatrixKind::NormalizedLaplacian), DomainError);
}

TEST(Exact, PathMomentsAndCharpoly) {
  // P3 adjacency: A^0(0,2) = 0, A^1(0,2) = 0, A^2(0,2) = 1; charpoly x^3 - 2x.
  EXPECT_EQ(exact_pair_token(path_graph(3), MatrixKind::Adjacency, 0, 2).bytes, "p0,-2,0,1,|m0,0,1,");
  EXPECT_EQ(exact_charpoly(complete_graph(2), MatrixKind::Adjacency), std::vector<std::string>({"-1", "0", "1"}));
  EXPECT_EQ(exact_charpoly(path_graph(3), MatrixKind::Laplacian), std::vector<std::string>({"0", "3", "-4", "1"}));
}

TEST(Exact, NormalizedLaplacianCarriesDegrees) {
  const Graph s3 = star_graph(3);
  EXPECT_NE(exact_pair_token(s3, MatrixKind::NormalizedLaplacian, 0, 1),
            exact_pair_token(s3, MatrixKind::NormalizedLaplacian, 1, 0));
  EXPECT_EQ(exact_pair_token(s3, MatrixKind::NormalizedLaplacian, 1, 2),
            exact_pair_token(s3, MatrixKind::NormalizedLaplacian, 2, 1));
}

TEST(Exact, PartitionMatchesFloatTokens) {
  for (const Graph& g : {cycle_graph(6), path_graph(5), random_connected_graph(8, 0.3, 2)}) {
    for (MatrixKind k : {MatrixKind::Adjacency, MatrixKind::Laplacian}) {
      for (int a = 0; a < g.order() * g.order(); ++a)
        for (int b = 0; b < a; ++b) {
          const int u1 = a / g.order(), v1 = a % g.order(), u2 = b / g.order(), v2 = b % g.order();
          EXPECT_EQ(pair_token(g, k, u1, v1) == pair_token(g, k, u2, v2),
                    exact_pair_token(g, k, u1, v1) == exact_pair_token(g, k, u2, v2));
        }
    }
  }
}

}  // namespace
}  // namespace swl
