//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <vector>

#include "swl/graph.hpp"
#include "swl/spectral.hpp"

namespace swl {

// k-th symmetric power: vertices are the k-subsets of V (lexicographic order),
// adjacent when their symmetric difference is an edge of the base graph.
struct TokenGraph {
  Graph base;
  int k = 1;
  std::vector<std::vector<NodeId>> subsets;
  Graph product;
  // Product vertex of a sorted k-subset; -1 if absent.
  NodeId index_of(const std::vector<NodeId>& sorted_subset) const;
};

constexpr long long kMaxTokenVertices = 5000;

TokenGraph token_graph(const Graph& g, int k);
SpectrumToken token_spectrum(const Graph& g, int k, MatrixKind kind, const Quantization& q = {});
// Tuples are read as sets; a repeated vertex inside a tuple is a DomainError.
PairToken token_projection_entry(const Graph& g, int k, MatrixKind kind, const std::vector<NodeId>& us,
                                 const std::vector<NodeId>& vs, const Quantization& q = {});

}  // namespace swl
