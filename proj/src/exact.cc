//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "swl/exact.hpp"

#include <gmpxx.h>

#include "swl/error.hpp"

namespace swl {

namespace {

using QMatrix = std::vector<mpq_class>;

QMatrix exact_matrix(const Graph& g, MatrixKind kind) {
  const int n = g.order();
  QMatrix m(static_cast<std::size_t>(n) * n, 0);
  auto at = [&](int u, int v) -> mpq_class& { return m[static_cast<std::size_t>(u) * n + v]; };
  switch (kind) {
    case MatrixKind::Adjacency:
      for (auto [u, v] : g.edges()) at(u, v) = at(v, u) = 1;
      break;
    case MatrixKind::Degree:
      for (int u = 0; u < n; ++u) at(u, u) = g.degree(u);
      break;
    case MatrixKind::Laplacian:
      for (int u = 0; u < n; ++u) at(u, u) = g.degree(u);
      for (auto [u, v] : g.edges()) at(u, v) = at(v, u) = -1;
      break;
    case MatrixKind::NormalizedLaplacian:
      if (g.has_isolated()) throw DomainError("normalized Laplacian requires a graph without isolated vertices");
      for (int u = 0; u < n; ++u) at(u, u) = 1;
      for (auto [u, v] : g.edges()) {
        at(u, v) = mpq_class(-1, g.degree(u));
        at(v, u) = mpq_class(-1, g.degree(v));
      }
      break;
  }
  return m;
}

QMatrix multiply(const QMatrix& a, const QMatrix& b, int n) {
  QMatrix c(static_cast<std::size_t>(n) * n, 0);
  mpq_class t;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const mpq_class& aik = a[static_cast<std::size_t>(i) * n + k];
      if (sgn(aik) == 0) continue;
      for (int j = 0; j < n; ++j) {
        const mpq_class& bkj = b[static_cast<std::size_t>(k) * n + j];
        if (sgn(bkj) == 0) continue;
        t = aik * bkj;
        c[static_cast<std::size_t>(i) * n + j] += t;
      }
    }
  return c;
}

// Faddeev-LeVerrier.
std::vector<mpq_class> charpoly(const QMatrix& a, int n) {
  std::vector<mpq_class> c(n + 1, 0);
  c[n] = 1;
  QMatrix mk(static_cast<std::size_t>(n) * n, 0);
  for (int k = 1; k <= n; ++k) {
    QMatrix am = multiply(a, mk, n);
    for (int i = 0; i < n; ++i) am[static_cast<std::size_t>(i) * n + i] += c[n - k + 1];
    mk = std::move(am);
    QMatrix amk = multiply(a, mk, n);
    mpq_class tr = 0;
    for (int i = 0; i < n; ++i) tr += amk[static_cast<std::size_t>(i) * n + i];
    c[n - k] = -tr / k;
  }
  return c;
}

}  // namespace

std::vector<std::string> exact_charpoly(const Graph& g, MatrixKind kind) {
  auto c = charpoly(exact_matrix(g, kind), g.order());
  std::vector<std::string> out;
  for (auto& x : c) out.push_back(x.get_str());
  return out;
}

std::shared_ptr<const std::vector<ExactPairToken>> exact_token_table(const Graph& g, MatrixKind kind) {
  if (kind == MatrixKind::Degree) throw DomainError("exact tokens support A, L and Lhat");
  return g.memo().get<std::vector<ExactPairToken>>("exact:" + to_string(kind), [&] {
    const int n = g.order();
    const QMatrix a = exact_matrix(g, kind);
    std::string prefix = "p";
    for (auto& x : charpoly(a, n)) prefix += x.get_str() + ",";
    prefix += "|";
    auto tokens = std::make_shared<std::vector<ExactPairToken>>(static_cast<std::size_t>(n) * n);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        auto& b = (*tokens)[static_cast<std::size_t>(u) * n + v].bytes;
        b = prefix;
        if (kind == MatrixKind::NormalizedLaplacian)
          b += "d" + std::to_string(g.degree(u)) + "," + std::to_string(g.degree(v)) + "|";
        b += "m";
      }
    QMatrix power(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) power[static_cast<std::size_t>(i) * n + i] = 1;
    for (int k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < power.size(); ++i) (*tokens)[i].bytes += power[i].get_str() + ",";
      if (k + 1 < n) power = multiply(power, a, n);
    }
    return std::shared_ptr<const std::vector<ExactPairToken>>(std::move(tokens));
  });
}

ExactPairToken exact_pair_token(const Graph& g, MatrixKind kind, NodeId u, NodeId v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) throw DomainError("vertex index out of range");
  return (*exact_token_table(g, kind))[static_cast<std::size_t>(u) * g.order() + v];
}

}  // namespace swl
