//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace swl {

using NodeId = int;
using Edge = std::pair<NodeId, NodeId>;

enum class AtomicType : std::uint8_t { Equal = 0, Adjacent = 1, NonAdjacent = 2 };

enum class MatrixKind : std::uint8_t { Adjacency, Degree, Laplacian, NormalizedLaplacian };

// "A", "D", "L", "Lhat".
std::string to_string(MatrixKind kind);
MatrixKind parse_matrix_kind(std::string_view text);

// Dense symmetric real matrix; symmetric by construction in build_matrix.
using SymmetricMatrix = Eigen::MatrixXd;

namespace detail {

// Per-graph memo shared by all copies of a graph. Values are computed at most
// once per key; concurrent first use blocks on the slot mutex.
class Memo {
 public:
  template <typename T>
  std::shared_ptr<const T> get(const std::string& key, const std::function<std::shared_ptr<const T>()>& make) {
    std::shared_ptr<Slot> slot;
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto& s = slots_[key];
      if (!s) s = std::make_shared<Slot>();
      slot = s;
    }
    std::lock_guard<std::mutex> lock(slot->mutex);
    if (!slot->value) slot->value = make();
    return std::static_pointer_cast<const T>(slot->value);
  }

 private:
  struct Slot {
    std::mutex mutex;
    std::shared_ptr<const void> value;
  };
  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Slot>> slots_;
};

}  // namespace detail

class GraphBuilder;

// Simple undirected graph with packed adjacency bit rows. Immutable.
class Graph {
 public:
  Graph();

  int order() const { return n_; }
  std::size_t size() const { return m_; }
  bool adjacent(NodeId u, NodeId v) const {
    return (rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  AtomicType atomic_type(NodeId u, NodeId v) const;
  int degree(NodeId u) const { return degrees_[u]; }
  const std::vector<int>& degrees() const { return degrees_; }
  std::vector<NodeId> neighbors(NodeId u) const;
  std::vector<Edge> edges() const;
  bool has_isolated() const;
  bool is_connected() const;
  // Component label per vertex, labels in order of first vertex.
  std::vector<int> components() const;

  int words_per_row() const { return words_; }
  const std::uint64_t* row(NodeId u) const { return rows_.data() + static_cast<std::size_t>(u) * words_; }

  bool operator==(const Graph& other) const { return n_ == other.n_ && rows_ == other.rows_; }
  bool operator!=(const Graph& other) const { return !(*this == other); }

  detail::Memo& memo() const { return *memo_; }

 private:
  friend class GraphBuilder;
  int n_ = 0;
  int words_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<int> degrees_;
  std::shared_ptr<detail::Memo> memo_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const Graph& g);

  int order() const { return n_; }
  bool has_edge(NodeId u, NodeId v) const;
  void add_edge(NodeId u, NodeId v);
  void remove_edge(NodeId u, NodeId v);
  void toggle_edge(NodeId u, NodeId v);
  Graph build() const;

 private:
  void check(NodeId u, NodeId v) const;
  int n_;
  int words_;
  std::vector<std::uint64_t> rows_;
};

Graph make_graph(int n, const std::vector<Edge>& edges);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph empty_graph(int n);
// Star with n leaves; vertex 0 is the center.
Graph star_graph(int n);

Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// One graph6 string per line; blank lines and lines starting with '#' skipped.
std::vector<Graph> read_corpus(const std::string& path);
std::vector<Graph> parse_corpus(std::string_view text);
void write_corpus(const std::string& path, const std::vector<Graph>& graphs);

SymmetricMatrix build_matrix(const Graph& g, MatrixKind kind);

Graph disjoint_union(const Graph& g, const Graph& h);
// perm[u] is the image of u.
Graph permute(const Graph& g, const std::vector<NodeId>& perm);
std::vector<NodeId> random_permutation(int n, std::uint64_t seed);
Graph random_graph(int n, double p, std::uint64_t seed);
// Uniform random recursive tree plus independent extra edges with probability p.
Graph random_connected_graph(int n, double p, std::uint64_t seed);
Graph induced_subgraph(const Graph& g, const std::vector<NodeId>& vertices);

}  // namespace swl
