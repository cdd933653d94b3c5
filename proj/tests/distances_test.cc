//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <cmath>

#include "swl/distances.hpp"
#include "swl/error.hpp"
#include "swl/graph.hpp"

namespace swl {
namespace {

// Effective resistance from the grounded Laplacian: R(u, v) = (L_v^-1)(u, u)
// with row and column v removed.
double grounded_resistance(const Graph& g, NodeId u, NodeId v) {
  const SymmetricMatrix l = build_matrix(g, MatrixKind::Laplacian);
  const int n = g.order();
  Eigen::MatrixXd r(n - 1, n - 1);
  auto idx = [v](int i) { return i < v ? i : i + 1; };
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n - 1; ++j) r(i, j) = l(idx(i), idx(j));
  const Eigen::MatrixXd inv = r.inverse();
  const int ui = u < v ? u : u - 1;
  return inv(ui, ui);
}

// Hitting times by value iteration of h(x) = 1 + mean over neighbors h(y),
// h(target) = 0.
std::vector<double> value_iteration_hitting(const Graph& g, NodeId target) {
  std::vector<double> h(g.order(), 0.0), next(g.order());
  for (int it = 0; it < 200000; ++it) {
    double delta = 0;
    for (int x = 0; x < g.order(); ++x) {
      if (x == target) {
        next[x] = 0;
        continue;
      }
      double s = 0;
      for (NodeId y : g.neighbors(x)) s += h[y];
      next[x] = 1 + s / g.degree(x);
      delta = std::max(delta, std::abs(next[x] - h[x]));
    }
    h.swap(next);
    if (delta < 1e-13) break;
  }
  return h;
}

TEST(Spd, HandValues) {
  const auto p3 = spd(path_graph(3));
  EXPECT_EQ(p3(0, 2), 2);
  EXPECT_EQ(p3(1, 1), 0);
  const auto two_k2 = spd(disjoint_union(complete_graph(2), complete_graph(2)));
  EXPECT_EQ(two_k2(0, 1), 1);
  EXPECT_TRUE(std::isinf(two_k2(0, 2)));
  EXPECT_EQ(spd_min_power(cycle_graph(7)).values, spd(cycle_graph(7)).values);
}

TEST(Resistance, HandValues) {
  EXPECT_NEAR(resistance(complete_graph(2))(0, 1), 1, 1e-12);
  EXPECT_NEAR(resistance(complete_graph(3))(0, 1), 2.0 / 3, 1e-12);
  EXPECT_NEAR(resistance(cycle_graph(4))(0, 1), 0.75, 1e-12);
  EXPECT_NEAR(resistance(cycle_graph(4))(0, 2), 1, 1e-12);
  EXPECT_NEAR(resistance(path_graph(4))(0, 3), 3, 1e-12);
  EXPECT_TRUE(std::isinf(resistance(disjoint_union(complete_graph(2), complete_graph(2)))(0, 3)));
}

TEST(Resistance, MatchesGroundedLaplacian) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph g = random_connected_graph(9, 0.3, s);
    const auto r = resistance(g);
    const auto rn = resistance_normalized(g);
    for (int u = 0; u < 9; ++u)
      for (int v = 0; v < 9; ++v) {
        if (u == v) continue;
        EXPECT_NEAR(r(u, v), grounded_resistance(g, u, v), 1e-9);
        EXPECT_NEAR(rn(u, v), r(u, v), 1e-9);
      }
  }
}

TEST(HittingTime, HandValuesAndValueIteration) {
  const Graph p3 = path_graph(3);
  const auto h = hitting_time(p3);
  EXPECT_FALSE(h.symmetric);
  EXPECT_NEAR(h(0, 1), 1, 1e-12);
  EXPECT_NEAR(h(1, 0), 3, 1e-12);
  EXPECT_NEAR(h(0, 2), 4, 1e-12);
  for (std::uint64_t s = 0; s < 5; ++s) {
    const Graph g = random_connected_graph(7, 0.4, s);
    const auto m = hitting_time(g);
    for (int t = 0; t < 7; ++t) {
      const auto oracle = value_iteration_hitting(g, t);
      for (int x = 0; x < 7; ++x) EXPECT_NEAR(m(x, t), oracle[x], 1e-8);
    }
  }
}

TEST(CommuteTime, HandValues) {
  EXPECT_NEAR(commute_time(complete_graph(2))(0, 1), 2, 1e-12);
  EXPECT_NEAR(commute_time(cycle_graph(4))(0, 1), 6, 1e-12);
  const Graph g = random_connected_graph(8, 0.3, 4);
  const auto c = commute_time(g);
  const auto h = hitting_time(g);
  for (int u = 0; u < 8; ++u)
    for (int v = 0; v < 8; ++v) EXPECT_NEAR(c(u, v), h(u, v) + h(v, u), 1e-8);
}

TEST(PageRank, HandValues) {
  EXPECT_NEAR(pagerank_distance(complete_graph(2), {0, 1})(0, 1), 1, 1e-12);
  const Graph s3 = star_graph(3);
  const auto p = pagerank_distance(s3, {0, 1});
  EXPECT_NEAR(p(0, 1), 1.0 / 3, 1e-12);
  EXPECT_NEAR(p(1, 0), 1, 1e-12);
  const auto id = pagerank_distance(cycle_graph(5), {1});
  for (int u = 0; u < 5; ++u)
    for (int v = 0; v < 5; ++v) EXPECT_NEAR(id(u, v), u == v ? 1 : 0, 1e-12);
  const Graph g = random_connected_graph(9, 0.3, 8);
  const std::vector<double> w = {0.3, 0.2, 0.1, 0.05};
  const auto a = pagerank_distance(g, w), b = pagerank_spectral(g, w);
  for (std::size_t i = 0; i < a.values.size(); ++i) EXPECT_NEAR(a.values[i], b.values[i], 1e-10);
}

TEST(Diffusion, HandValues) {
  const auto t0 = diffusion_distance(cycle_graph(5), 0);
  EXPECT_NEAR(t0(0, 3), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(t0(2, 2), 0, 1e-12);
  EXPECT_NEAR(diffusion_distance(complete_graph(2), 1)(0, 1), std::sqrt(2.0) * std::exp(-2.0), 1e-12);
  const Graph g = random_connected_graph(8, 0.4, 2);
  const auto a = diffusion_distance(g, 0.7), b = diffusion_series(g, 0.7);
  for (std::size_t i = 0; i < a.values.size(); ++i) EXPECT_NEAR(a.values[i], b.values[i], 1e-10);
}

TEST(Biharmonic, HandValues) {
  EXPECT_NEAR(biharmonic(complete_graph(2))(0, 1), 0.5, 1e-12);
  const Graph g = random_connected_graph(8, 0.3, 6);
  const auto a = biharmonic(g), b = biharmonic_squared_inverse(g);
  for (std::size_t i = 0; i < a.values.size(); ++i) EXPECT_NEAR(a.values[i], b.values[i], 1e-9);
}

TEST(DistanceSpec, ParseAndCrossValidate) {
  EXPECT_EQ(parse_distance_spec("prd:w=0,1,0.5").weights, std::vector<double>({0, 1, 0.5}));
  EXPECT_EQ(parse_distance_spec("diffusion:t=0.5").tau, 0.5);
  EXPECT_EQ(to_string(parse_distance_spec("rd")), "rd");
  EXPECT_EQ(all_distance_specs().size(), 7u);
  EXPECT_THROW(parse_distance_spec("euclid"), UsageError);
  const Graph g = random_connected_graph(10, 0.25, 1);
  for (const auto& spec : all_distance_specs()) EXPECT_TRUE(cross_validate(g, spec).pass) << to_string(spec);
  EXPECT_EQ(distance_matrix(g, DistanceSpec::rd()).get(), distance_matrix(g, DistanceSpec::rd()).get());
}

TEST(PseudoInverse, MoorePenroseConditions) {
  const SymmetricMatrix l = build_matrix(random_connected_graph(7, 0.4, 3), MatrixKind::Laplacian);
  const SymmetricMatrix p = pseudo_inverse(l);
  EXPECT_TRUE((l * p * l).isApprox(l, 1e-10));
  EXPECT_TRUE((p * l * p).isApprox(p, 1e-10));
}

}  // namespace
}  // namespace swl
