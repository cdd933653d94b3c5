//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "swl/graph.hpp"

namespace swl {

// Returns f with f[u] the image in h of vertex u of g, or nothing if the graphs
// are not isomorphic. Individualization-refinement backtracking over jointly
// refined color classes; every returned mapping is verified edge by edge.
// Exponential in the worst case; practical up to a few dozen vertices for
// CFI-type inputs and well beyond that for typical graphs.
std::optional<std::vector<NodeId>> is_isomorphic(const Graph& g, const Graph& h);

// Isomorphism-invariant 64-bit fingerprint (hashed color refinement seeded by
// degrees and triangle counts). Equal graphs up to relabeling give equal values.
std::uint64_t invariant_fingerprint(const Graph& g);

}  // namespace swl
