//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <vector>

#include "swl/graph.hpp"

namespace swl {

struct BiconnectivityReport {
  std::vector<NodeId> cut_vertices;  // ascending
  std::vector<Edge> cut_edges;       // (u, v) with u < v, ascending
  // Blocks: maximal 2-connected subgraphs and bridges. Isolated vertices form
  // no block.
  int biconnected_component_count = 0;
};

BiconnectivityReport biconnectivity_report(const Graph& g);

// One representative per isomorphism class on n vertices, ordered by edge count
// then graph6 string. Refuses n > 9.
std::vector<Graph> enumerate_graphs(int n, bool connected_only);

// All classes with min_n <= n <= max_n, in increasing n.
std::vector<Graph> enumerate_range(int min_n, int max_n, bool connected_only);

}  // namespace swl
