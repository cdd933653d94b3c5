//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "swl/algorithm.hpp"
#include "swl/graph.hpp"
#include "swl/intern.hpp"
#include "swl/spectral.hpp"

namespace swl {

enum class Domain { Nodes, Pairs, SpectralPairs };

// Interned colors over one refinement domain for every graph of a run.
// Nodes: index u. Pairs: u * n + v. SpectralPairs: (i * n + u) * n + v where i
// indexes the distinct eigenvalues of the graph in ascending order.
struct ColorState {
  Domain domain = Domain::Nodes;
  std::vector<std::vector<std::uint32_t>> colors;
  int iteration = 0;
  std::uint64_t run_id = 0;
};

// Pooled stable coloring of one graph. Comparable only within one run.
struct Signature {
  std::uint64_t run_id = 0;
  std::uint32_t id = 0;
  bool operator==(const Signature& other) const;
  bool operator!=(const Signature& other) const { return !(*this == other); }
};

struct RunStats {
  int iterations = 0;       // refinement steps across all stages
  std::size_t colors = 0;   // intern table size at the end
  std::size_t collisions = 0;
};

// A joint refinement over a list of graphs sharing one intern table, so colors
// and signatures are comparable across the graphs. Steps are synchronous over
// the whole domain; stability is reached when the partition of the union of
// all domains stops changing.
class Refiner {
 public:
  Refiner(AlgorithmSpec spec, std::vector<Graph> graphs, Quantization q = {});
  ~Refiner();
  Refiner(const Refiner&) = delete;
  Refiner& operator=(const Refiner&) = delete;

  const AlgorithmSpec& spec() const { return spec_; }
  const std::vector<Graph>& graphs() const { return graphs_; }
  std::uint64_t run_id() const { return run_id_; }
  InternTable& table() { return table_; }

  // Main refinement stage of the spec.
  ColorState initial_coloring();
  ColorState refine_once(const ColorState& state);
  // Iterates refine_once until stable. Throws InternalError if the partition
  // ever coarsens or the step count exceeds the total domain size.
  ColorState stabilize(ColorState state);

  // Runs the whole pipeline (main stage to stability, then pooling and any
  // trailing stages) and returns one signature per graph.
  std::vector<Signature> signatures();

  // Available after signatures(): stable node colors (node-domain algorithms,
  // and the final node stage of SPE/BasisNet) and stable pair colors
  // (pair-domain algorithms).
  const std::vector<std::vector<std::uint32_t>>& node_colors() const { return node_colors_; }
  const std::vector<std::vector<std::uint32_t>>& pair_colors() const { return pair_colors_; }
  const RunStats& stats() const { return stats_; }

 private:
  struct Context;
  std::vector<std::uint32_t> step_graph(std::size_t gi, const std::vector<std::uint32_t>& c);
  std::uint32_t intern_multiset(std::uint32_t tag, std::vector<std::uint32_t>& items);

  AlgorithmSpec spec_;
  std::vector<Graph> graphs_;
  Quantization q_;
  std::uint64_t run_id_;
  InternTable table_;
  std::vector<std::unique_ptr<Context>> ctx_;
  std::vector<std::vector<std::uint32_t>> node_colors_;
  std::vector<std::vector<std::uint32_t>> pair_colors_;
  RunStats stats_;
  std::vector<std::uint32_t> buf_;
};

// Stable coloring of a joint run over `graphs`.
struct StableResult {
  std::uint64_t run_id = 0;
  std::vector<Signature> signatures;
  std::vector<std::vector<std::uint32_t>> node_colors;
  std::vector<std::vector<std::uint32_t>> pair_colors;
  RunStats stats;
};

StableResult stable_coloring(const AlgorithmSpec& spec, const std::vector<Graph>& graphs, const Quantization& q = {});

// Fresh joint run over [g, h]; true iff the signatures differ.
bool distinguishes(const AlgorithmSpec& spec, const Graph& g, const Graph& h, const Quantization& q = {});

enum class Relation { Equivalent, Finer, Coarser, Incomparable };
std::string to_string(Relation r);

struct ComparisonReport {
  Relation relation = Relation::Equivalent;
  bool a_refines_b = true;
  bool b_refines_a = true;
  // Graph index pairs (i, j): A gives equal signatures, B different. Non-empty
  // iff A does not refine B.
  std::vector<std::pair<int, int>> a_misses;
  // Same with A and B swapped.
  std::vector<std::pair<int, int>> b_misses;
};

// Signature-partition comparison on a corpus, each spec in one joint run.
ComparisonReport compare_partitions(const AlgorithmSpec& a, const AlgorithmSpec& b, const std::vector<Graph>& corpus,
                                    const Quantization& q = {});
// Same from precomputed signature ids (one per graph, same order).
ComparisonReport compare_signature_ids(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                       std::size_t max_witnesses = 16);

}  // namespace swl
