//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "swl/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "swl/error.hpp"

namespace swl {

std::string to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Adjacency: return "A";
    case MatrixKind::Degree: return "D";
    case MatrixKind::Laplacian: return "L";
    case MatrixKind::NormalizedLaplacian: return "Lhat";
  }
  return "?";
}

MatrixKind parse_matrix_kind(std::string_view text) {
  if (text == "A") return MatrixKind::Adjacency;
  if (text == "D") return MatrixKind::Degree;
  if (text == "L") return MatrixKind::Laplacian;
  if (text == "Lhat") return MatrixKind::NormalizedLaplacian;
  throw UsageError("unknown matrix kind '" + std::string(text) + "' (expected A, D, L or Lhat)");
}

Graph::Graph() : memo_(std::make_shared<detail::Memo>()) {}

AtomicType Graph::atomic_type(NodeId u, NodeId v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw DomainError("vertex index out of range");
  if (u == v) return AtomicType::Equal;
  return adjacent(u, v) ? AtomicType::Adjacent : AtomicType::NonAdjacent;
}

std::vector<NodeId> Graph::neighbors(NodeId u) const {
  std::vector<NodeId> out;
  out.reserve(degrees_[u]);
  const std::uint64_t* r = row(u);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(w * 64 + __builtin_ctzll(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (NodeId v = 0; v < n_; ++v)
    for (NodeId u = 0; u < v; ++u)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

bool Graph::has_isolated() const {
  return std::any_of(degrees_.begin(), degrees_.end(), [](int d) { return d == 0; });
}

std::vector<int> Graph::components() const {
  std::vector<int> label(n_, -1);
  int next = 0;
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < n_; ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId w : neighbors(u))
        if (label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return label;
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  auto c = components();
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

GraphBuilder::GraphBuilder(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw DomainError("negative vertex count");
  rows_.assign(static_cast<std::size_t>(n) * words_, 0);
}

GraphBuilder::GraphBuilder(const Graph& g) : n_(g.n_), words_(g.words_), rows_(g.rows_) {}

void GraphBuilder::check(NodeId u, NodeId v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw DomainError("vertex index out of range");
  if (u == v) throw DomainError("self-loops are not allowed");
}

bool GraphBuilder::has_edge(NodeId u, NodeId v) const {
  check(u, v);
  return (rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
}

void GraphBuilder::add_edge(NodeId u, NodeId v) {
  check(u, v);
  rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  rows_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void GraphBuilder::remove_edge(NodeId u, NodeId v) {
  check(u, v);
  rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  rows_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

void GraphBuilder::toggle_edge(NodeId u, NodeId v) {
  check(u, v);
  rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] ^= std::uint64_t{1} << (v & 63);
  rows_[static_cast<std::size_t>(v) * words_ + (u >> 6)] ^= std::uint64_t{1} << (u & 63);
}

Graph GraphBuilder::build() const {
  Graph g;
  g.n_ = n_;
  g.words_ = words_;
  g.rows_ = rows_;
  g.degrees_.assign(n_, 0);
  std::size_t total = 0;
  for (NodeId u = 0; u < n_; ++u) {
    int d = 0;
    for (int w = 0; w < words_; ++w) d += __builtin_popcountll(rows_[static_cast<std::size_t>(u) * words_ + w]);
    g.degrees_[u] = d;
    total += d;
  }
  g.m_ = total / 2;
  for (NodeId u = 0; u < n_; ++u) {
    if (g.adjacent(u, u)) throw InternalError("adjacency diagonal is not zero");
    for (NodeId v = 0; v < u; ++v)
      if (g.adjacent(u, v) != g.adjacent(v, u)) throw InternalError("adjacency is not symmetric");
  }
  return g;
}

Graph make_graph(int n, const std::vector<Edge>& edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < v; ++u) b.add_edge(u, v);
  return b.build();
}

Graph cycle_graph(int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) b.add_edge(u, (u + 1) % n);
  return b.build();
}

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (int u = 0; u + 1 < n; ++u) b.add_edge(u, u + 1);
  return b.build();
}

Graph empty_graph(int n) { return GraphBuilder(n).build(); }

Graph star_graph(int n) {
  GraphBuilder b(n + 1);
  for (int u = 1; u <= n; ++u) b.add_edge(0, u);
  return b.build();
}

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  std::size_t end = text.size();
  while (end > pos && (text[end - 1] == '\n' || text[end - 1] == '\r')) --end;

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= end) throw ParseError("truncated graph6 string", i);
    int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("byte outside graph6 range 63..126", i);
    return c - 63;
  };

  long long n = 0;
  if (pos >= end) throw ParseError("empty graph6 string", pos);
  if (static_cast<unsigned char>(text[pos]) == 126) {
    if (pos + 1 < end && static_cast<unsigned char>(text[pos + 1]) == 126) {
      for (int i = 0; i < 6; ++i) n = (n << 6) | byte_at(pos + 2 + i);
      pos += 8;
    } else {
      for (int i = 0; i < 3; ++i) n = (n << 6) | byte_at(pos + 1 + i);
      pos += 4;
    }
  } else {
    n = byte_at(pos);
    pos += 1;
  }
  if (n > 100000) throw ParseError("graph too large", pos);

  GraphBuilder b(static_cast<int>(n));
  const long long bits = n * (n - 1) / 2;
  const long long nbytes = (bits + 5) / 6;
  if (static_cast<long long>(end - pos) < nbytes) throw ParseError("truncated bit stream", end);
  if (static_cast<long long>(end - pos) > nbytes) throw ParseError("trailing characters after graph6 string", pos + nbytes);
  long long k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      int byte = byte_at(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(u, v);
    }
  }
  if (bits % 6 != 0) {
    int last = byte_at(pos + nbytes - 1);
    int pad = 6 - static_cast<int>(bits % 6);
    if (last & ((1 << pad) - 1)) throw ParseError("nonzero padding bits", pos + nbytes - 1);
  }
  return b.build();
}

std::string write_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int i = 2; i >= 0; --i) out.push_back(static_cast<char>(((n >> (6 * i)) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int i = 5; i >= 0; --i) out.push_back(static_cast<char>(((n >> (6 * i)) & 63) + 63));
  }
  int acc = 0, nacc = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++nacc == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = nacc = 0;
      }
    }
  }
  if (nacc > 0) out.push_back(static_cast<char>((acc << (6 - nacc)) + 63));
  return out;
}

std::vector<Graph> parse_corpus(std::string_view text) {
  std::vector<Graph> out;
  std::size_t line_no = 0, start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (!line.empty() && line.front() != '#') {
      try {
        out.push_back(parse_graph6(line));
      } catch (const ParseError& e) {
        throw UsageError("corpus line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return out;
}

std::vector<Graph> read_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read corpus file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_corpus(ss.str());
}

void write_corpus(const std::string& path, const std::vector<Graph>& graphs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  for (const auto& g : graphs) out << write_graph6(g) << '\n';
}

SymmetricMatrix build_matrix(const Graph& g, MatrixKind kind) {
  const int n = g.order();
  SymmetricMatrix m = SymmetricMatrix::Zero(n, n);
  switch (kind) {
    case MatrixKind::Adjacency:
      for (auto [u, v] : g.edges()) m(u, v) = m(v, u) = 1.0;
      break;
    case MatrixKind::Degree:
      for (int u = 0; u < n; ++u) m(u, u) = g.degree(u);
      break;
    case MatrixKind::Laplacian:
      for (int u = 0; u < n; ++u) m(u, u) = g.degree(u);
      for (auto [u, v] : g.edges()) m(u, v) = m(v, u) = -1.0;
      break;
    case MatrixKind::NormalizedLaplacian: {
      if (g.has_isolated()) throw DomainError("normalized Laplacian requires a graph without isolated vertices");
      for (int u = 0; u < n; ++u) m(u, u) = 1.0;
      for (auto [u, v] : g.edges()) m(u, v) = m(v, u) = -1.0 / std::sqrt(static_cast<double>(g.degree(u)) * g.degree(v));
      break;
    }
  }
  return m;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  GraphBuilder b(g.order() + h.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(u + g.order(), v + g.order());
  return b.build();
}

Graph permute(const Graph& g, const std::vector<NodeId>& perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw DomainError("permutation size mismatch");
  std::vector<char> seen(perm.size(), 0);
  for (NodeId p : perm) {
    if (p < 0 || p >= g.order() || seen[p]) throw DomainError("not a permutation");
    seen[p] = 1;
  }
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
  return b.build();
}

namespace {

double unit_double(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

std::vector<NodeId> random_permutation(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng() % static_cast<std::uint64_t>(i + 1)]);
  return perm;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  GraphBuilder b(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (unit_double(rng) < p) b.add_edge(u, v);
  return b.build();
}

Graph random_connected_graph(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  GraphBuilder b(n);
  for (int v = 1; v < n; ++v) b.add_edge(static_cast<int>(rng() % static_cast<std::uint64_t>(v)), v);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (unit_double(rng) < p && !b.has_edge(u, v)) b.add_edge(u, v);
  return b.build();
}

Graph induced_subgraph(const Graph& g, const std::vector<NodeId>& vertices) {
  GraphBuilder b(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (g.adjacent(vertices[i], vertices[j])) b.add_edge(static_cast<int>(j), static_cast<int>(i));
  return b.build();
}

}  // namespace swl
