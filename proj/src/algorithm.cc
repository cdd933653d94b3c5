//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "swl/algorithm.hpp"

#include <cstdlib>

#include "swl/error.hpp"

namespace swl {

namespace {

struct Name {
  Variant variant;
  const char* text;
  bool matrix;
};

constexpr Name kNames[] = {
    {Variant::WL1, "wl1", false},        {Variant::EPWL, "epwl", true},   {Variant::SWL, "swl", false},
    {Variant::PSWL, "pswl", false},      {Variant::GDWL, "gdwl", false},  {Variant::FWL2, "fwl2", false},
    {Variant::IGN2, "ign2", false},      {Variant::SpectralIGN, "sign", true},
    {Variant::SiameseIGN, "siam", true}, {Variant::WeakSpectralIGN, "weak", true},
    {Variant::BasisNet, "basisnet", true}, {Variant::SPE, "spe", true}, {Variant::PEG, "peg", true},
    {Variant::GIRT, "girt", false},
};

int parse_int(std::string_view s, std::string_view context) {
  std::string str(s);
  char* end = nullptr;
  long v = std::strtol(str.c_str(), &end, 10);
  if (str.empty() || end != str.c_str() + str.size() || v < 0 || v > 1000)
    throw UsageError("bad integer '" + str + "' in '" + std::string(context) + "'");
  return static_cast<int>(v);
}

}  // namespace

AlgorithmSpec AlgorithmSpec::parse(std::string_view text) {
  const std::size_t colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  const Name* name = nullptr;
  for (const auto& n : kNames)
    if (head == n.text) name = &n;
  if (!name) throw UsageError("unknown algorithm '" + std::string(head) + "' in spec '" + std::string(text) + "'");
  AlgorithmSpec spec;
  spec.variant = name->variant;
  if (spec.variant == Variant::GDWL) {
    if (rest.empty()) throw UsageError("gdwl needs a distance, e.g. gdwl:spd");
    spec.distance = parse_distance_spec(rest);
    return spec;
  }
  if (spec.variant == Variant::GIRT) {
    if (!rest.empty()) {
      if (rest.substr(0, 2) != "K=") throw UsageError("expected girt:K=<steps>");
      spec.girt_steps = parse_int(rest.substr(2), text);
    }
    return spec;
  }
  if (name->matrix) {
    if (rest.empty()) throw UsageError(std::string(head) + " needs a matrix kind, e.g. " + std::string(head) + ":A");
    const std::size_t c2 = rest.find(':');
    spec.kind = parse_matrix_kind(rest.substr(0, c2));
    if (spec.kind == MatrixKind::Degree) throw UsageError("matrix kind D is not a supported refinement input");
    rest = c2 == std::string_view::npos ? std::string_view{} : rest.substr(c2 + 1);
    if (spec.variant == Variant::BasisNet && !rest.empty()) {
      if (rest.substr(0, 7) != "layers=") throw UsageError("expected basisnet:<M>:layers=<k>");
      spec.layers = parse_int(rest.substr(7), text);
      rest = {};
    }
  }
  if (!rest.empty()) throw UsageError("unexpected parameters in spec '" + std::string(text) + "'");
  return spec;
}

std::string AlgorithmSpec::str() const {
  std::string head;
  for (const auto& n : kNames)
    if (n.variant == variant) head = n.text;
  switch (variant) {
    case Variant::GDWL: return head + ":" + to_string(distance);
    case Variant::GIRT: return head + ":K=" + std::to_string(girt_steps);
    case Variant::BasisNet: return head + ":" + to_string(kind) + ":layers=" + std::to_string(layers);
    default: break;
  }
  return uses_matrix() ? head + ":" + to_string(kind) : head;
}

bool AlgorithmSpec::uses_matrix() const {
  for (const auto& n : kNames)
    if (n.variant == variant) return n.matrix;
  return false;
}

void AlgorithmSpec::validate(const Graph& g) const {
  const bool needs_no_isolated =
      (uses_matrix() && kind == MatrixKind::NormalizedLaplacian) || variant == Variant::GIRT ||
      (variant == Variant::GDWL &&
       (distance.kind == DistanceKind::PRD || distance.kind == DistanceKind::Diffusion));
  if (needs_no_isolated && g.has_isolated())
    throw DomainError("algorithm " + str() + " requires graphs without isolated vertices");
}

std::vector<AlgorithmSpec> parse_spec_list(std::string_view text) {
  std::vector<AlgorithmSpec> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == ';' || text[i] == '\n')) ++i;
    std::size_t j = i;
    // Commas inside a prd weight list belong to the spec.
    while (j < text.size() && text[j] != ' ' && text[j] != ';' && text[j] != '\n') {
      if (text[j] == ',') {
        std::string_view token = text.substr(i, j - i);
        if (token.find("w=") == std::string_view::npos) break;
        if (j + 1 < text.size() && !(text[j + 1] == '-' || text[j + 1] == '.' || (text[j + 1] >= '0' && text[j + 1] <= '9')))
          break;
      }
      ++j;
    }
    if (j > i) out.push_back(AlgorithmSpec::parse(text.substr(i, j - i)));
    i = j;
  }
  return out;
}

}  // namespace swl
