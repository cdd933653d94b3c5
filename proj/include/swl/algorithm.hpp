//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "swl/distances.hpp"
#include "swl/graph.hpp"

namespace swl {

enum class Variant {
  WL1,
  EPWL,
  SWL,
  PSWL,
  GDWL,
  FWL2,
  IGN2,
  SpectralIGN,
  SiameseIGN,
  WeakSpectralIGN,
  BasisNet,
  SPE,
  PEG,
  GIRT,
};

// Declarative choice of a refinement algorithm and its parameters.
//
// Text grammar:
//   wl1 | swl | pswl | fwl2 | ign2
//   epwl:<M> | sign:<M> | siam:<M> | weak:<M> | spe:<M> | peg:<M>
//   basisnet:<M>[:layers=<k>]
//   gdwl:<distance>            (see parse_distance_spec)
//   girt[:K=<k>]
// with <M> one of A, L, Lhat.
struct AlgorithmSpec {
  Variant variant = Variant::WL1;
  MatrixKind kind = MatrixKind::Adjacency;
  DistanceSpec distance;
  int layers = 1;
  int girt_steps = 16;

  static AlgorithmSpec parse(std::string_view text);
  std::string str() const;
  bool uses_matrix() const;
  // Throws DomainError if the spec cannot run on g (e.g. Lhat with an isolated
  // vertex).
  void validate(const Graph& g) const;
};

std::vector<AlgorithmSpec> parse_spec_list(std::string_view comma_or_space_separated);

}  // namespace swl
