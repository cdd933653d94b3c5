//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "swl/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace swl {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Pair {
  const Graph& g;
  const Graph& h;
  std::vector<std::vector<NodeId>> gn, hn;
};

// Refines the joint coloring of g (cg) and h (ch) to the coarsest equitable
// partition. Returns false if the class sizes of g and h diverge.
bool refine(const Pair& p, std::vector<int>& cg, std::vector<int>& ch) {
  const int n = p.g.order();
  std::size_t classes = 0;
  {
    std::vector<int> all(cg);
    std::sort(all.begin(), all.end());
    classes = std::unique(all.begin(), all.end()) - all.begin();
  }
  std::vector<std::vector<int>> sig(2 * n);
  while (true) {
    for (int side = 0; side < 2; ++side) {
      const auto& col = side == 0 ? cg : ch;
      const auto& nb = side == 0 ? p.gn : p.hn;
      for (int u = 0; u < n; ++u) {
        auto& s = sig[side * n + u];
        s.clear();
        s.push_back(col[u]);
        for (NodeId w : nb[u]) s.push_back(col[w]);
        std::sort(s.begin() + 1, s.end());
      }
    }
    std::map<std::vector<int>, int> ids;
    for (int i = 0; i < 2 * n; ++i) ids.emplace(sig[i], 0);
    int next = 0;
    for (auto& [k, v] : ids) v = next++;
    std::vector<int> count(next, 0);
    for (int u = 0; u < n; ++u) {
      cg[u] = ids[sig[u]];
      ch[u] = ids[sig[n + u]];
      ++count[cg[u]];
      --count[ch[u]];
    }
    for (int c : count)
      if (c != 0) return false;
    std::size_t now = 0;
    {
      std::vector<char> seen(next, 0);
      for (int c : cg)
        if (!seen[c]) seen[c] = 1, ++now;
    }
    if (now == classes) return true;
    classes = now;
  }
}

bool search(const Pair& p, std::vector<int> cg, std::vector<int> ch, std::vector<NodeId>& out) {
  if (!refine(p, cg, ch)) return false;
  const int n = p.g.order();
  int ncol = 0;
  for (int c : cg) ncol = std::max(ncol, c + 1);
  std::vector<int> size(ncol, 0);
  for (int c : cg) ++size[c];
  int target = -1;
  for (int c = 0; c < ncol; ++c)
    if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
  if (target < 0) {
    std::vector<NodeId> inv(ncol, -1);
    for (int v = 0; v < n; ++v) inv[ch[v]] = v;
    out.assign(n, -1);
    for (int u = 0; u < n; ++u) out[u] = inv[cg[u]];
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < u; ++v)
        if (p.g.adjacent(u, v) != p.h.adjacent(out[u], out[v])) return false;
    return true;
  }
  NodeId x = static_cast<NodeId>(std::find(cg.begin(), cg.end(), target) - cg.begin());
  for (NodeId y = 0; y < n; ++y) {
    if (ch[y] != target) continue;
    std::vector<int> ng(cg), nh(ch);
    ng[x] = ncol;
    nh[y] = ncol;
    if (search(p, std::move(ng), std::move(nh), out)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<NodeId>> is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  std::vector<int> dg(g.degrees()), dh(h.degrees());
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return std::nullopt;
  Pair p{g, h, {}, {}};
  for (int u = 0; u < g.order(); ++u) {
    p.gn.push_back(g.neighbors(u));
    p.hn.push_back(h.neighbors(u));
  }
  std::vector<NodeId> out;
  if (!search(p, std::vector<int>(g.order(), 0), std::vector<int>(h.order(), 0), out)) return std::nullopt;
  return out;
}

std::uint64_t invariant_fingerprint(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<NodeId>> nb(n);
  for (int u = 0; u < n; ++u) nb[u] = g.neighbors(u);
  std::vector<std::uint64_t> col(n), next(n);
  for (int u = 0; u < n; ++u) {
    std::uint64_t tri = 0;
    for (std::size_t i = 0; i < nb[u].size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (g.adjacent(nb[u][i], nb[u][j])) ++tri;
    col[u] = mix(mix(static_cast<std::uint64_t>(g.degree(u))) ^ (tri * 0x100000001b3ULL));
  }
  std::vector<std::uint64_t> buf;
  for (int round = 0; round < n; ++round) {
    for (int u = 0; u < n; ++u) {
      buf.clear();
      for (NodeId w : nb[u]) buf.push_back(col[w]);
      std::sort(buf.begin(), buf.end());
      std::uint64_t x = mix(col[u]);
      for (auto b : buf) x = mix(x ^ b);
      next[u] = x;
    }
    col.swap(next);
  }
  std::sort(col.begin(), col.end());
  std::uint64_t x = mix(static_cast<std::uint64_t>(n) * 31 + g.size());
  for (auto c : col) x = mix(x ^ c);
  return x;
}

}  // namespace swl
