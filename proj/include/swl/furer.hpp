//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "swl/algorithm.hpp"
#include "swl/graph.hpp"

namespace swl {

// Fürer (CFI-type) product of a base graph F. Product vertices are (x, X) with
// X an even subset of N_F(x), ordered by x and then by the bit mask of X over
// the ascending neighbor list of x.
struct FurerGraph {
  Graph base;
  Graph product;
  std::vector<std::vector<NodeId>> meta;  // meta[x]: product vertices of x
  std::vector<NodeId> owner;              // owner[p]: base vertex of p
  std::vector<std::uint32_t> subset;      // subset[p]: mask over sorted N_F(owner[p])
};

// Throws DomainError unless F is connected without isolated vertices, and if
// the product would exceed max_vertices.
FurerGraph furer(const Graph& base, int max_vertices = 4096);

// Symmetric difference of the product edges with Meta(x) x Meta(y) for every
// {x, y} in twist_set. Duplicate edges collapse (set semantics).
Graph twist(const FurerGraph& fg, const std::vector<Edge>& twist_set);

// is_isomorphic(twist(S1), twist(S2)); throws InternalError if the answer
// disagrees with |S1| = |S2| mod 2.
bool parity_check(const Graph& base, const std::vector<Edge>& s1, const std::vector<Edge>& s2);

struct Witness {
  Graph g, h;
  std::string source;
  bool a_distinguishes = false;
  bool b_distinguishes = false;
};

struct SearchOptions {
  int min_base_n = 3;
  int max_base_n = 6;
  int max_random_n = 8;
  std::uint64_t seed = 1;
  std::int64_t budget = 1000;  // candidate pair evaluations
  int max_product_vertices = 128;
  bool include_trivial = true;
};

struct SearchResult {
  std::vector<Witness> witnesses;
  std::int64_t evaluated = 0;
  bool budget_exhausted = false;
  std::string status() const { return budget_exhausted ? "budget_exhausted" : "complete"; }
};

// Small hand-picked pairs tried before any Fürer pair: (C6, 2C3), (C8, 2C4),
// (C8, C3+C5), (K3,3, prism), (4x4 rook, Shrikhande).
std::vector<std::pair<std::pair<Graph, Graph>, std::string>> trivial_pairs();

// Candidate pairs (G(F), twist(G(F), {e})) over exhaustive connected bases with
// min degree >= 2, then random connected bases, plus the trivial pairs. A pair
// is a witness when exactly one of a, b distinguishes it. Deterministic given
// the options.
SearchResult search_counterexamples(const AlgorithmSpec& a, const AlgorithmSpec& b, const SearchOptions& opt);

}  // namespace swl
