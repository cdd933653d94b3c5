//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "swl/graph.hpp"

namespace swl {

enum class DistanceKind { SPD, RD, HTD, CTD, PRD, Diffusion, Biharmonic };

struct DistanceSpec {
  DistanceKind kind = DistanceKind::SPD;
  std::vector<double> weights;  // PRD gamma_0..gamma_K
  double tau = 1.0;             // Diffusion time

  static DistanceSpec spd() { return {DistanceKind::SPD, {}, 1.0}; }
  static DistanceSpec rd() { return {DistanceKind::RD, {}, 1.0}; }
  static DistanceSpec htd() { return {DistanceKind::HTD, {}, 1.0}; }
  static DistanceSpec ctd() { return {DistanceKind::CTD, {}, 1.0}; }
  // gamma_k = 2^-k for k = 0..16 unless given.
  static DistanceSpec prd(std::vector<double> w = {});
  static DistanceSpec diffusion(double tau = 1.0) { return {DistanceKind::Diffusion, {}, tau}; }
  static DistanceSpec biharmonic() { return {DistanceKind::Biharmonic, {}, 1.0}; }
};

// "spd", "rd", "htd", "ctd", "prd", "prd:w=0,1,0.5", "diffusion",
// "diffusion:t=0.5", "biharmonic".
DistanceSpec parse_distance_spec(std::string_view text);
std::string to_string(const DistanceSpec& spec);
std::vector<DistanceSpec> all_distance_specs();

constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct DistanceMatrix {
  int n = 0;
  std::vector<double> values;  // row-major; +infinity across components
  bool symmetric = true;
  double operator()(NodeId u, NodeId v) const { return values[static_cast<std::size_t>(u) * n + v]; }
  double& operator()(NodeId u, NodeId v) { return values[static_cast<std::size_t>(u) * n + v]; }
};

DistanceMatrix spd(const Graph& g);
// min{i : Ahat^i(u,v) > 0} with Ahat = D^-1/2 A D^-1/2.
DistanceMatrix spd_min_power(const Graph& g);
DistanceMatrix resistance(const Graph& g);
// Same quantity through the pseudo-inverse of the normalized Laplacian.
DistanceMatrix resistance_normalized(const Graph& g);
// M(u,v): expected steps of a walk from u until it first reaches v.
DistanceMatrix hitting_time(const Graph& g);
DistanceMatrix hitting_time_recursion(const Graph& g);
DistanceMatrix commute_time(const Graph& g);
DistanceMatrix pagerank_distance(const Graph& g, const std::vector<double>& weights);
DistanceMatrix pagerank_spectral(const Graph& g, const std::vector<double>& weights);
DistanceMatrix diffusion_distance(const Graph& g, double tau);
DistanceMatrix diffusion_series(const Graph& g, double tau);
DistanceMatrix biharmonic(const Graph& g);
// (L^dagger)^2 route.
DistanceMatrix biharmonic_squared_inverse(const Graph& g);

// Primary backend, cached per (graph, spec).
std::shared_ptr<const DistanceMatrix> distance_matrix(const Graph& g, const DistanceSpec& spec);

struct CrossReport {
  double max_residual = 0;   // max |primary - secondary| over finite entries
  int mismatches = 0;        // entries differing beyond tolerance or in finiteness
  bool pass = true;
};

// Compares the primary backend against the second computation path.
// SPD must match exactly; everything else within tol. CTD is checked both
// against H + H^T and against 2|E| RD per component.
CrossReport cross_validate(const Graph& g, const DistanceSpec& spec, double tol = 1e-8);

// Spectral pseudo-inverse; eigenvalue clusters within the clustering gap of 0
// are treated as the kernel.
SymmetricMatrix pseudo_inverse(const SymmetricMatrix& m, double eig_rel_tol = 1e-8);

}  // namespace swl
