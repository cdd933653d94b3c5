//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "swl/algorithm.hpp"
#include "swl/graph.hpp"
#include "swl/spectral.hpp"

namespace swl {

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::string detail;
  double seconds = 0;

  void fail(const std::string& why);
};

// Seeded corpus of connected graphs with n drawn uniformly from [min_n, max_n]
// and extra-edge probability drawn from [0.1, 0.6].
std::vector<Graph> random_connected_corpus(int count, int min_n, int max_n, std::uint64_t seed);

// Signature ids of one joint run per spec, memoized by spec string.
class SignatureCache {
 public:
  SignatureCache(const std::vector<Graph>& corpus, Quantization q) : corpus_(corpus), q_(q) {}
  const std::vector<std::uint32_t>& ids(const AlgorithmSpec& spec);
  const std::vector<Graph>& corpus() const { return corpus_; }
  const Quantization& quantization() const { return q_; }

 private:
  const std::vector<Graph>& corpus_;
  Quantization q_;
  std::map<std::string, std::vector<std::uint32_t>> ids_;
};

// Idempotence, orthogonality, completeness, reconstruction and trace
// residuals of every decomposition are <= eps. Lhat skips graphs with
// isolated vertices.
PropertyResult check_decompositions(const std::vector<Graph>& corpus, const std::vector<MatrixKind>& kinds, double eps,
                                    const Quantization& q = {});

// Per graph, float pair tokens and exact tokens induce the same partition of
// ordered vertex pairs; across graphs, equal exact tokens imply equal float
// tokens.
PropertyResult check_exact_float_agreement(const std::vector<Graph>& corpus, const std::vector<MatrixKind>& kinds,
                                           const Quantization& q = {});

// Equal pair tokens across the corpus imply equal atomic types.
PropertyResult check_atomic_type_encoding(const std::vector<Graph>& corpus, const std::vector<MatrixKind>& kinds,
                                          const Quantization& q = {});

// Pair tokens are symmetric in (u, v) and invariant under relabeling.
PropertyResult check_token_invariance(const std::vector<Graph>& corpus, const std::vector<MatrixKind>& kinds,
                                      std::uint64_t seed, const Quantization& q = {});

// Every distance's second computation path agrees (SPD exactly, others within
// tol); CTD = 2|E| RD on connected graphs.
PropertyResult check_distance_cross_forms(const std::vector<Graph>& corpus, double tol);

// Triangle inequality for SPD, RD and diffusion.
PropertyResult check_triangle_inequality(const std::vector<Graph>& corpus, double tol);

// Grouping ordered pairs by (stable EPWL(Lhat) color of u, of v, Lhat pair
// token), every group is constant in all seven distances (SPD exactly, others
// within tol).
PropertyResult check_distance_determination(const std::vector<Graph>& corpus, double tol, const Quantization& q = {});

// a's signature partition refines b's (or equals it when `equal`).
PropertyResult check_refines(SignatureCache& cache, const AlgorithmSpec& a, const AlgorithmSpec& b, bool equal);

// Every hierarchy direction listed for the refinement engine.
std::vector<PropertyResult> check_hierarchy(SignatureCache& cache);

// Equal stable PSWL pair colors imply equal pair tokens.
PropertyResult check_rattan(const std::vector<Graph>& corpus, const std::vector<MatrixKind>& kinds,
                            const Quantization& q = {});

// Graphs with different cut-vertex counts, cut-edge counts or block counts
// get different EPWL(Lhat) signatures.
PropertyResult check_biconnectivity(SignatureCache& cache);

// Twist parity rule for every connected base with min_n <= n <= max_n and all
// one- and two-edge twist sets; 1-WL never separates G(F) from its single
// twist when the base has minimum degree >= 2.
PropertyResult check_twist_parity(int min_n, int max_n);

// Distinguishes(spec, g, pi g) is false for random relabelings.
PropertyResult check_isomorphism_invariance(const std::vector<Graph>& corpus, const std::vector<AlgorithmSpec>& specs,
                                            std::uint64_t seed, const Quantization& q = {});

struct PairCounts {
  std::size_t pairs = 0;
  std::map<std::string, std::size_t> distinguished;  // by spec string
};

// On a corpus of graph pairs: per-pair EPWL(M) distinguishes whenever 1-WL
// does, and FWL2 whenever EPWL(M) does; counts reported.
PropertyResult check_distinguishing_counts(const std::vector<std::pair<Graph, Graph>>& pairs, PairCounts* counts = nullptr,
                                           const Quantization& q = {});

}  // namespace swl
