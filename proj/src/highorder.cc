//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "swl/highorder.hpp"

#include <algorithm>

#include "swl/error.hpp"

namespace swl {

namespace {

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > 1LL << 40) return r;
  }
  return r;
}

}  // namespace

NodeId TokenGraph::index_of(const std::vector<NodeId>& sorted_subset) const {
  auto it = std::lower_bound(subsets.begin(), subsets.end(), sorted_subset);
  if (it == subsets.end() || *it != sorted_subset) return -1;
  return static_cast<NodeId>(it - subsets.begin());
}

TokenGraph token_graph(const Graph& g, int k) {
  const int n = g.order();
  if (k < 1 || k > n) throw DomainError("token graph order k must satisfy 1 <= k <= n");
  const long long count = binomial(n, k);
  if (count > kMaxTokenVertices)
    throw DomainError("token graph would have " + std::to_string(count) + " vertices (limit " +
                      std::to_string(kMaxTokenVertices) + "); use a smaller graph or k");
  TokenGraph t;
  t.base = g;
  t.k = k;
  std::vector<NodeId> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    t.subsets.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  GraphBuilder b(static_cast<int>(t.subsets.size()));
  // Neighbors of S: replace one a in S by b not in S with {a, b} an edge.
  std::vector<char> in(n, 0);
  for (std::size_t s = 0; s < t.subsets.size(); ++s) {
    const auto& set = t.subsets[s];
    for (NodeId a : set) in[a] = 1;
    for (int pos = 0; pos < k; ++pos) {
      const NodeId a = set[pos];
      for (NodeId c : g.neighbors(a)) {
        if (in[c]) continue;
        std::vector<NodeId> other(set);
        other[pos] = c;
        std::sort(other.begin(), other.end());
        const NodeId o = t.index_of(other);
        if (o > static_cast<NodeId>(s)) b.add_edge(static_cast<NodeId>(s), o);
      }
    }
    for (NodeId a : set) in[a] = 0;
  }
  t.product = b.build();
  return t;
}

SpectrumToken token_spectrum(const Graph& g, int k, MatrixKind kind, const Quantization& q) {
  TokenGraph t = token_graph(g, k);
  return spectrum_token(t.product, kind, q);
}

PairToken token_projection_entry(const Graph& g, int k, MatrixKind kind, const std::vector<NodeId>& us,
                                 const std::vector<NodeId>& vs, const Quantization& q) {
  if (static_cast<int>(us.size()) != k || static_cast<int>(vs.size()) != k)
    throw DomainError("tuples must have exactly k entries");
  auto as_set = [&](std::vector<NodeId> t) {
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end())
      throw DomainError("repeated vertex in a tuple (tuples are read as k-element sets)");
    for (NodeId x : t)
      if (x < 0 || x >= g.order()) throw DomainError("vertex index out of range");
    return t;
  };
  const auto su = as_set(us), sv = as_set(vs);
  TokenGraph t = token_graph(g, k);
  return pair_token(t.product, kind, t.index_of(su), t.index_of(sv), q);
}

}  // namespace swl
