//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "swl/distances.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <functional>

#include "swl/error.hpp"
#include "swl/spectral.hpp"

namespace swl {

DistanceSpec DistanceSpec::prd(std::vector<double> w) {
  if (w.empty())
    for (int k = 0; k <= 16; ++k) w.push_back(std::ldexp(1.0, -k));
  return {DistanceKind::PRD, std::move(w), 1.0};
}

namespace {

double parse_double(std::string_view s, std::string_view context) {
  std::string str(s);
  char* end = nullptr;
  double x = std::strtod(str.c_str(), &end);
  if (str.empty() || end != str.c_str() + str.size() || !std::isfinite(x))
    throw UsageError("bad number '" + str + "' in '" + std::string(context) + "'");
  return x;
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

DistanceSpec parse_distance_spec(std::string_view text) {
  std::string_view head = text.substr(0, text.find(':'));
  std::string_view rest = head.size() < text.size() ? text.substr(head.size() + 1) : std::string_view{};
  auto no_params = [&](DistanceSpec s) {
    if (!rest.empty()) throw UsageError("distance '" + std::string(head) + "' takes no parameters");
    return s;
  };
  if (head == "spd") return no_params(DistanceSpec::spd());
  if (head == "rd") return no_params(DistanceSpec::rd());
  if (head == "htd") return no_params(DistanceSpec::htd());
  if (head == "ctd") return no_params(DistanceSpec::ctd());
  if (head == "biharmonic") return no_params(DistanceSpec::biharmonic());
  if (head == "prd") {
    if (rest.empty()) return DistanceSpec::prd();
    if (rest.substr(0, 2) != "w=") throw UsageError("expected prd:w=<g0>,<g1>,...");
    std::vector<double> w;
    std::string_view list = rest.substr(2);
    while (!list.empty()) {
      std::size_t comma = list.find(',');
      w.push_back(parse_double(list.substr(0, comma), text));
      if (comma == std::string_view::npos) break;
      list.remove_prefix(comma + 1);
    }
    if (w.empty()) throw UsageError("prd needs at least one weight");
    return DistanceSpec::prd(std::move(w));
  }
  if (head == "diffusion") {
    if (rest.empty()) return DistanceSpec::diffusion();
    if (rest.substr(0, 2) != "t=") throw UsageError("expected diffusion:t=<time>");
    double t = parse_double(rest.substr(2), text);
    if (t < 0) throw UsageError("diffusion time must be nonnegative");
    return DistanceSpec::diffusion(t);
  }
  throw UsageError("unknown distance '" + std::string(text) + "'");
}

std::string to_string(const DistanceSpec& spec) {
  switch (spec.kind) {
    case DistanceKind::SPD: return "spd";
    case DistanceKind::RD: return "rd";
    case DistanceKind::HTD: return "htd";
    case DistanceKind::CTD: return "ctd";
    case DistanceKind::Biharmonic: return "biharmonic";
    case DistanceKind::Diffusion: return "diffusion:t=" + fmt(spec.tau);
    case DistanceKind::PRD: {
      std::string s = "prd:w=";
      for (std::size_t i = 0; i < spec.weights.size(); ++i) s += (i ? "," : "") + fmt(spec.weights[i]);
      return s;
    }
  }
  return "?";
}

std::vector<DistanceSpec> all_distance_specs() {
  return {DistanceSpec::spd(),       DistanceSpec::rd(),        DistanceSpec::htd(),       DistanceSpec::ctd(),
          DistanceSpec::prd(),       DistanceSpec::diffusion(), DistanceSpec::biharmonic()};
}

SymmetricMatrix pseudo_inverse(const SymmetricMatrix& m, double eig_rel_tol) {
  const int n = static_cast<int>(m.rows());
  SpectralDecomposition d = decompose(m, eig_rel_tol);
  const double norm = n ? m.cwiseAbs().rowwise().sum().maxCoeff() : 0.0;
  const double gap = eig_rel_tol * std::max(1.0, norm);
  SymmetricMatrix out = SymmetricMatrix::Zero(n, n);
  for (int i = 0; i < d.size(); ++i)
    if (std::fabs(d.eigenvalues[i]) > gap) out += d.projections[i] / d.eigenvalues[i];
  return out;
}

namespace {

DistanceMatrix blank(int n, double fill, bool symmetric) {
  DistanceMatrix d;
  d.n = n;
  d.values.assign(static_cast<std::size_t>(n) * n, fill);
  d.symmetric = symmetric;
  return d;
}

// Applies `fn` to each connected component (as an induced subgraph) and
// scatters the results; entries across components stay +infinity.
DistanceMatrix per_component(const Graph& g, bool symmetric, const std::function<DistanceMatrix(const Graph&)>& fn) {
  const int n = g.order();
  DistanceMatrix out = blank(n, kInfinity, symmetric);
  auto label = g.components();
  int count = 0;
  for (int c : label) count = std::max(count, c + 1);
  if (count <= 1) {
    if (n == 0) return out;
    DistanceMatrix d = fn(g);
    d.symmetric = symmetric;
    return d;
  }
  for (int c = 0; c < count; ++c) {
    std::vector<NodeId> verts;
    for (int u = 0; u < n; ++u)
      if (label[u] == c) verts.push_back(u);
    DistanceMatrix d = fn(induced_subgraph(g, verts));
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = 0; j < verts.size(); ++j) out(verts[i], verts[j]) = d(static_cast<int>(i), static_cast<int>(j));
  }
  return out;
}

void require_no_isolated(const Graph& g, const char* what) {
  if (g.has_isolated()) throw DomainError(std::string(what) + " requires a graph without isolated vertices");
}

}  // namespace

DistanceMatrix spd(const Graph& g) {
  const int n = g.order();
  DistanceMatrix d = blank(n, kInfinity, true);
  std::vector<std::vector<NodeId>> nb(n);
  for (int u = 0; u < n; ++u) nb[u] = g.neighbors(u);
  std::deque<NodeId> queue;
  for (int s = 0; s < n; ++s) {
    d(s, s) = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop_front();
      for (NodeId w : nb[u])
        if (std::isinf(d(s, w))) {
          d(s, w) = d(s, u) + 1;
          queue.push_back(w);
        }
    }
  }
  return d;
}

DistanceMatrix spd_min_power(const Graph& g) {
  const int n = g.order();
  DistanceMatrix d = blank(n, kInfinity, true);
  if (n == 0) return d;
  Eigen::MatrixXd ahat = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) ahat(u, v) = ahat(v, u) = 1.0 / std::sqrt(static_cast<double>(g.degree(u)) * g.degree(v));
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (std::isinf(d(u, v)) && power(u, v) > 0) d(u, v) = i;
    power = power * ahat;
  }
  return d;
}

DistanceMatrix resistance(const Graph& g) {
  return per_component(g, true, [](const Graph& c) {
    const int n = c.order();
    SymmetricMatrix lp = pseudo_inverse(build_matrix(c, MatrixKind::Laplacian));
    DistanceMatrix d = blank(n, 0, true);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) d(u, v) = u == v ? 0.0 : lp(u, u) + lp(v, v) - 2 * lp(u, v);
    return d;
  });
}

DistanceMatrix resistance_normalized(const Graph& g) {
  return per_component(g, true, [](const Graph& c) {
    const int n = c.order();
    DistanceMatrix d = blank(n, 0, true);
    if (n == 1) return d;
    SymmetricMatrix lp = pseudo_inverse(build_matrix(c, MatrixKind::NormalizedLaplacian));
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        const double du = c.degree(u), dv = c.degree(v);
        d(u, v) = lp(u, u) / du + lp(v, v) / dv - 2 * lp(u, v) / std::sqrt(du * dv);
      }
    return d;
  });
}

DistanceMatrix hitting_time(const Graph& g) {
  return per_component(g, false, [](const Graph& c) {
    const int n = c.order();
    DistanceMatrix d = blank(n, 0, false);
    if (n == 1) return d;
    SymmetricMatrix lp = pseudo_inverse(build_matrix(c, MatrixKind::Laplacian));
    const double two_m = 2.0 * static_cast<double>(c.size());
    Eigen::VectorXd deg(n);
    for (int u = 0; u < n; ++u) deg(u) = c.degree(u);
    // (L+ D J)(u,v) = sum_w L+(u,w) d_w, independent of v.
    Eigen::VectorXd lpd = lp * deg;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v) d(u, v) = lpd(u) - lpd(v) + two_m * lp(v, v) - two_m * lp(u, v);
    return d;
  });
}

DistanceMatrix hitting_time_recursion(const Graph& g) {
  return per_component(g, false, [](const Graph& c) {
    const int n = c.order();
    DistanceMatrix d = blank(n, 0, false);
    if (n == 1) return d;
    for (int v = 0; v < n; ++v) {
      // Unknowns x_u = M(u,v) for u != v; x_v = 0.
      std::vector<int> idx(n, -1);
      int k = 0;
      for (int u = 0; u < n; ++u)
        if (u != v) idx[u] = k++;
      Eigen::MatrixXd a = Eigen::MatrixXd::Zero(k, k);
      Eigen::VectorXd b = Eigen::VectorXd::Ones(k);
      for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        a(idx[u], idx[u]) += 1.0;
        const double inv = 1.0 / c.degree(u);
        for (NodeId w : c.neighbors(u))
          if (w != v) a(idx[u], idx[w]) -= inv;
      }
      Eigen::VectorXd x = a.fullPivLu().solve(b);
      for (int u = 0; u < n; ++u)
        if (u != v) d(u, v) = x(idx[u]);
    }
    return d;
  });
}

DistanceMatrix commute_time(const Graph& g) {
  DistanceMatrix h = hitting_time(g);
  DistanceMatrix d = blank(g.order(), 0, true);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v) d(u, v) = h(u, v) + h(v, u);
  return d;
}

DistanceMatrix pagerank_distance(const Graph& g, const std::vector<double>& weights) {
  require_no_isolated(g, "PageRank distance");
  const int n = g.order();
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) {
    w(u, v) = 1.0 / g.degree(u);
    w(v, u) = 1.0 / g.degree(v);
  }
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t k = 0; k < weights.size(); ++k) {
    sum += weights[k] * power;
    if (k + 1 < weights.size()) power = power * w;
  }
  DistanceMatrix d = blank(n, 0, false);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) d(u, v) = sum(u, v);
  return d;
}

DistanceMatrix pagerank_spectral(const Graph& g, const std::vector<double>& weights) {
  require_no_isolated(g, "PageRank distance");
  const int n = g.order();
  auto dec = decomposition(g, MatrixKind::NormalizedLaplacian);
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < dec->size(); ++i) {
    const double x = 1.0 - dec->eigenvalues[i];
    double coef = 0, xp = 1;
    for (double gamma : weights) {
      coef += gamma * xp;
      xp *= x;
    }
    sum += coef * dec->projections[i];
  }
  DistanceMatrix d = blank(n, 0, false);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) d(u, v) = sum(u, v) * std::sqrt(static_cast<double>(g.degree(v)) / g.degree(u));
  return d;
}

DistanceMatrix diffusion_distance(const Graph& g, double tau) {
  require_no_isolated(g, "diffusion distance");
  const int n = g.order();
  auto dec = decomposition(g, MatrixKind::NormalizedLaplacian);
  DistanceMatrix d = blank(n, 0, true);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      double s = 0;
      for (int i = 0; i < dec->size(); ++i) {
        const auto& p = dec->projections[i];
        s += std::exp(-2.0 * tau * dec->eigenvalues[i]) * (p(u, u) + p(v, v) - 2 * p(u, v));
      }
      d(u, v) = std::sqrt(std::max(0.0, s));
    }
  return d;
}

DistanceMatrix diffusion_series(const Graph& g, double tau) {
  require_no_isolated(g, "diffusion distance");
  const int n = g.order();
  const Eigen::MatrixXd t = -tau * build_matrix(g, MatrixKind::NormalizedLaplacian);
  // Scaling and squaring keeps the Taylor terms well conditioned.
  int squarings = 0;
  double norm = n ? t.cwiseAbs().rowwise().sum().maxCoeff() : 0.0;
  while (norm > 0.5) {
    norm /= 2;
    ++squarings;
  }
  const Eigen::MatrixXd ts = t / std::ldexp(1.0, squarings);
  Eigen::MatrixXd e = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k < 60; ++k) {
    term = term * ts / k;
    e += term;
    if (term.cwiseAbs().maxCoeff() < 1e-20) break;
  }
  for (int i = 0; i < squarings; ++i) e = e * e;
  DistanceMatrix d = blank(n, 0, true);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) d(u, v) = (e.col(u) - e.col(v)).norm();
  return d;
}

DistanceMatrix biharmonic(const Graph& g) {
  return per_component(g, true, [](const Graph& c) {
    const int n = c.order();
    const SymmetricMatrix l = build_matrix(c, MatrixKind::Laplacian);
    SymmetricMatrix l2 = l * l;
    l2 = 0.5 * (l2 + l2.transpose());
    const SymmetricMatrix p = pseudo_inverse(l2);
    DistanceMatrix d = blank(n, 0, true);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v) d(u, v) = p(u, u) + p(v, v) - 2 * p(u, v);
    return d;
  });
}

DistanceMatrix biharmonic_squared_inverse(const Graph& g) {
  return per_component(g, true, [](const Graph& c) {
    const int n = c.order();
    const SymmetricMatrix lp = pseudo_inverse(build_matrix(c, MatrixKind::Laplacian));
    const SymmetricMatrix p = lp * lp;
    DistanceMatrix d = blank(n, 0, true);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v) d(u, v) = p(u, u) + p(v, v) - 2 * p(u, v);
    return d;
  });
}

std::shared_ptr<const DistanceMatrix> distance_matrix(const Graph& g, const DistanceSpec& spec) {
  return g.memo().get<DistanceMatrix>("dist:" + to_string(spec), [&] {
    DistanceMatrix d;
    switch (spec.kind) {
      case DistanceKind::SPD: d = spd(g); break;
      case DistanceKind::RD: d = resistance(g); break;
      case DistanceKind::HTD: d = hitting_time(g); break;
      case DistanceKind::CTD: d = commute_time(g); break;
      case DistanceKind::PRD: d = pagerank_distance(g, spec.weights); break;
      case DistanceKind::Diffusion: d = diffusion_distance(g, spec.tau); break;
      case DistanceKind::Biharmonic: d = biharmonic(g); break;
    }
    return std::make_shared<const DistanceMatrix>(std::move(d));
  });
}

namespace {

void compare(const DistanceMatrix& a, const DistanceMatrix& b, double tol, CrossReport& r) {
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    const double x = a.values[i], y = b.values[i];
    if (std::isinf(x) || std::isinf(y)) {
      if (std::isinf(x) != std::isinf(y)) ++r.mismatches;
      continue;
    }
    const double diff = std::fabs(x - y);
    r.max_residual = std::max(r.max_residual, diff);
    if (diff > tol) ++r.mismatches;
  }
}

}  // namespace

CrossReport cross_validate(const Graph& g, const DistanceSpec& spec, double tol) {
  CrossReport r;
  switch (spec.kind) {
    case DistanceKind::SPD: compare(spd(g), spd_min_power(g), 0.0, r); break;
    case DistanceKind::RD: compare(resistance(g), resistance_normalized(g), tol, r); break;
    case DistanceKind::HTD: compare(hitting_time(g), hitting_time_recursion(g), tol, r); break;
    case DistanceKind::CTD: {
      DistanceMatrix c = commute_time(g);
      DistanceMatrix h = hitting_time_recursion(g);
      DistanceMatrix sum = c;
      for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v) sum(u, v) = h(u, v) + h(v, u);
      compare(c, sum, tol, r);
      DistanceMatrix rd = resistance(g);
      auto label = g.components();
      std::vector<double> edges(g.order(), 0);
      for (auto [u, v] : g.edges()) edges[label[u]] += 1;
      for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
          if (!std::isinf(rd(u, v))) rd(u, v) *= 2 * edges[label[u]];
      compare(c, rd, tol, r);
      break;
    }
    case DistanceKind::PRD:
      compare(pagerank_distance(g, spec.weights), pagerank_spectral(g, spec.weights), tol, r);
      break;
    case DistanceKind::Diffusion: compare(diffusion_distance(g, spec.tau), diffusion_series(g, spec.tau), tol, r); break;
    case DistanceKind::Biharmonic: compare(biharmonic(g), biharmonic_squared_inverse(g), tol, r); break;
  }
  r.pass = r.mismatches == 0;
  return r;
}

}  // namespace swl
