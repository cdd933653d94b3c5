//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "swl/graph.hpp"

namespace swl {

// Rounding and eigenvalue-clustering parameters shared by every token builder.
struct Quantization {
  int digits = 6;                // decimals kept in tokens (half-even)
  double eig_rel_tol = 1e-8;     // cluster gap relative to max(1, |M|_inf)
};

// Rounds x to `digits` decimals, returned as an integer scaled by 10^digits.
// Values are first snapped to digits+3 decimals, then rounded half-even, so
// short exact decimals (1/128, 0.5e-6, ...) round identically on every
// platform. -0 becomes 0. Throws NumericError on non-finite input.
std::int64_t quantize(double x, int digits);
// Fixed-width decimal rendering of a quantized value, e.g. "+00000001.500000".
std::string format_quantized(std::int64_t q, int digits);

struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // distinct, ascending
  std::vector<int> multiplicities;
  std::vector<SymmetricMatrix> projections;
  int size() const { return static_cast<int>(eigenvalues.size()); }
};

struct ResidualReport {
  double idempotence = 0;
  double orthogonality = 0;
  double completeness = 0;
  double reconstruction = 0;
  double trace = 0;  // max |trace(P_i) - multiplicity_i|
  double max() const;
  bool pass(double eps) const { return max() <= eps; }
};

SpectralDecomposition decompose(const SymmetricMatrix& m, double eig_rel_tol = 1e-8);
ResidualReport validate_decomposition(const SpectralDecomposition& d, const SymmetricMatrix& m);

// Cached per (graph, kind, tolerance); safe under concurrent first use.
std::shared_ptr<const SpectralDecomposition> decomposition(const Graph& g, MatrixKind kind,
                                                           const Quantization& q = {});

// Quantized view of a decomposition used for tokens.
struct QuantizedSpectrum {
  int n = 0;
  int digits = 6;
  std::vector<std::int64_t> eigenvalues;
  std::vector<int> multiplicities;
  // projections[i][u * n + v]
  std::vector<std::vector<std::int64_t>> projections;
};

std::shared_ptr<const QuantizedSpectrum> quantized_spectrum(const Graph& g, MatrixKind kind,
                                                            const Quantization& q = {});

// Canonical encoding of the multiset {(lambda_i, P_i(u,v))}.
struct PairToken {
  std::string bytes;
  bool operator==(const PairToken& o) const { return bytes == o.bytes; }
  bool operator!=(const PairToken& o) const { return bytes != o.bytes; }
  bool operator<(const PairToken& o) const { return bytes < o.bytes; }
};

// Canonical encoding of the multiset of eigenvalues with multiplicities.
struct SpectrumToken {
  std::string bytes;
  bool operator==(const SpectrumToken& o) const { return bytes == o.bytes; }
  bool operator!=(const SpectrumToken& o) const { return bytes != o.bytes; }
};

PairToken pair_token(const Graph& g, MatrixKind kind, NodeId u, NodeId v, const Quantization& q = {});
PairToken pair_token(const QuantizedSpectrum& s, NodeId u, NodeId v);
SpectrumToken spectrum_token(const Graph& g, MatrixKind kind, const Quantization& q = {});
SpectrumToken spectrum_token(const QuantizedSpectrum& s);

// Sum of the projection components stored in a token (diagnostics/tests).
double token_projection_sum(const PairToken& t);

// {"kind":..., "eigenvalues":[...], "multiplicities":[...], "projections":[[[...]]]}
std::string decomposition_json(const SpectralDecomposition& d, MatrixKind kind);

}  // namespace swl
