//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "swl/graph.hpp"
#include "swl/properties.hpp"
#include "swl/refinement.hpp"
#include "swl/spectral.hpp"

namespace swl {

std::string version();

// Plain key=value run configuration. Keys:
//   command, algorithms, corpus, pairs, seed, budget, output, regression,
//   digits, eig_rel_tol, parallelism, min_base_n, max_base_n, max_random_n,
//   max_product_vertices, random_graphs, random_max_n, furer_max_n, timing
// `corpus` and `pairs` are comma-separated lists. A corpus entry is a file
// path or a generator "connected:a-b" / "all:a-b" (isomorphism classes on a..b
// vertices). Environment variables SWL_<KEY> (upper case) override.
struct RunConfig {
  std::string command;
  std::vector<std::string> algorithms;
  std::vector<std::string> corpus;
  std::vector<std::string> pairs;
  std::uint64_t seed = 1;
  std::int64_t budget = 1000;
  std::string output;
  std::string regression;
  Quantization quantization;
  int parallelism = 1;
  int min_base_n = 3;
  int max_base_n = 6;
  int max_random_n = 8;
  int max_product_vertices = 128;
  int random_graphs = 200;
  int random_max_n = 12;
  int furer_max_n = 5;
  bool timing = false;

  // Throws UsageError on unknown keys or malformed values.
  void set(const std::string& key, const std::string& value);
  // Applies the key=value lines of text (or of a file) over current values.
  void update(std::string_view text);
  void update_from_file(const std::string& path);
  static RunConfig parse(std::string_view text);
  static RunConfig load(const std::string& path);
  void apply_env();
  std::string serialize() const;
  // Hex digest over the keys that affect results (not output, parallelism,
  // timing).
  std::string hash() const;
};

// Graphs of every corpus entry, concatenated in order.
std::vector<Graph> load_corpus(const std::vector<std::string>& entries);

// Pair corpus: one "<graph6> <graph6> [key=value ...]" record per line, '#'
// comments.
struct PairRecord {
  Graph g;
  Graph h;
  std::map<std::string, std::string> attrs;
};
std::vector<PairRecord> parse_pair_corpus(std::string_view text);
std::vector<PairRecord> read_pair_corpus(const std::string& path);
std::string format_pair_record(const PairRecord& r);

struct HierarchyCell {
  std::string a;
  std::string b;
  Relation relation = Relation::Equivalent;
  // Witnesses as corpus indices: a_misses are pairs A merges and B separates.
  std::vector<std::pair<int, int>> a_misses;
  std::vector<std::pair<int, int>> b_misses;
};

struct HierarchyReport {
  std::string version;
  std::string config_hash;
  Quantization quantization;
  std::vector<std::string> graphs;  // graph6 of the scanned corpus
  std::vector<std::pair<std::string, std::string>> excluded;  // graph6, reason
  std::vector<std::string> algorithms;
  // Per algorithm: classes of corpus indices with equal signatures, ordered by
  // smallest member.
  std::vector<std::vector<std::vector<int>>> buckets;
  std::vector<double> seconds;
  std::vector<HierarchyCell> cells;  // every ordered pair a < b

  std::string to_json(bool with_timing = false) const;
  std::string to_csv() const;
};

// Joint run of every algorithm over the corpus. Graphs on which some
// algorithm cannot run are excluded and listed.
HierarchyReport cmd_scan(const RunConfig& config);

struct VerifyReport {
  std::vector<PropertyResult> results;
  std::vector<std::string> warnings;
  bool passed() const;
  std::string to_json(bool with_timing = false) const;
  std::string to_text() const;
};

VerifyReport cmd_verify(const RunConfig& config);

struct HuntReport {
  std::vector<PairRecord> witnesses;
  std::int64_t evaluated = 0;
  bool budget_exhausted = false;
  std::size_t appended = 0;  // new lines written to the regression file
  std::string to_text() const;
};

// Searches witnesses for the two algorithms of the config, writes them to
// `output` if set and appends unseen ones to `regression` if set.
HuntReport cmd_hunt(const RunConfig& config);

// JSON detail for one compare call.
std::string compare_json(const AlgorithmSpec& spec, const Graph& g, const Graph& h, const Quantization& q, bool* distinguished);

// CSV of one distance matrix: line u holds d(u, 0), ..., d(u, n-1); infinity
// as "inf", other values with 17 significant digits.
std::string distances_csv(const Graph& g, const std::string& distance_spec);

}  // namespace swl
