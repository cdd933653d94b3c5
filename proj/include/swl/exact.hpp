//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "swl/graph.hpp"

namespace swl {

// Exact rational certificate for the projection invariant at (u, v):
// the characteristic polynomial of the matrix and the moments M^k(u,v),
// k = 0..n-1. For the normalized Laplacian the matrix is D^-1 L and the
// token also carries (deg u, deg v). Equal tokens imply equal invariants.
struct ExactPairToken {
  std::string bytes;
  bool operator==(const ExactPairToken& o) const { return bytes == o.bytes; }
  bool operator!=(const ExactPairToken& o) const { return bytes != o.bytes; }
  bool operator<(const ExactPairToken& o) const { return bytes < o.bytes; }
};

// Exact tokens for every ordered pair, row-major; cached per (graph, kind).
std::shared_ptr<const std::vector<ExactPairToken>> exact_token_table(const Graph& g, MatrixKind kind);
ExactPairToken exact_pair_token(const Graph& g, MatrixKind kind, NodeId u, NodeId v);

// Characteristic polynomial coefficients c_0..c_n (monic, c_n = 1) as
// canonical rational strings.
std::vector<std::string> exact_charpoly(const Graph& g, MatrixKind kind);

}  // namespace swl
