//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "swl/properties.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <tuple>
#include <unordered_map>

#include "swl/distances.hpp"
#include "swl/error.hpp"
#include "swl/exact.hpp"
#include "swl/furer.hpp"
#include "swl/isomorphism.hpp"
#include "swl/refinement.hpp"
#include "swl/structure.hpp"

namespace swl {

void PropertyResult::fail(const std::string& why) {
  passed = false;
  ++violations;
  if (detail.size() < 600) detail += (detail.empty() ? "" : "; ") + why;
  else if (detail.back() != '.') detail += "; ...";
}

namespace {

PropertyResult named(std::string name) {
  PropertyResult r;
  r.name = std::move(name);
  return r;
}

class Timer {
 public:
  explicit Timer(PropertyResult& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
  ~Timer() { r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  PropertyResult& r_;
  std::chrono::steady_clock::time_point start_;
};

bool kind_applies(const Graph& g, MatrixKind kind) {
  return kind != MatrixKind::NormalizedLaplacian || !g.has_isolated();
}

std::string gname(const std::vector<Graph>& corpus, std::size_t i) { return write_graph6(corpus[i]); }

}  // namespace

std::vector<Graph> random_connected_corpus(int count, int min_n, int max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    const int n = min_n + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - min_n + 1));
    const double p = 0.1 + 0.5 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    out.push_back(random_connected_graph(n, p, rng()));
  }
  return out;
}

const std::vector<std::uint32_t>& SignatureCache::ids(const AlgorithmSpec& spec) {
  const std::string key = spec.str();
  auto it = ids_.find(key);
  if (it != ids_.end()) return it->second;
  std::vector<std::uint32_t> out;
  for (const auto& s : stable_coloring(spec, corpus_, q_).signatures) out.push_back(s.id);
  return ids_.emplace(key, std::move(out)).first->second;
}

PropertyResult check_decompositions(const std::vector<Graph>& corpus, const std::vector<MatrixKind>& kinds, double eps,
                                    const Quantization& q) {
  PropertyResult r = named("spectral decompositions valid");
  Timer t(r);
  double worst = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (MatrixKind kind : kinds) {
      if (!kind_applies(corpus[i], kind)) continue;
      auto d = decomposition(corpus[i], kind, q);
      ResidualReport rep = validate_decomposition(*d, build_matrix(corpus[i], kind));
      worst = std::max(worst, rep.max());
      ++r.checked;
      if (!rep.pass(eps)) r.fail(gname(corpus, i) + "/" + to_string(kind) + " residual " + std::to_string(rep.max()));
    }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max residual %.3g", worst);
  if (r.detail.empty()) r.detail = buf;
  return r;
}

PropertyResult check_exact_float_agreement(const std::vector<Graph>& corpus, const std::vector<MatrixKind>& kinds,
                                           const Quantization& q) {
  PropertyResult r = named("exact and float pair partitions agree");
  Timer t(r);
  for (MatrixKind kind : kinds) {
    std::unordered_map<std::string, std::string> exact_to_float;
    for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
      const Graph& g = corpus[gi];
      if (!kind_applies(g, kind)) continue;
      auto spec = quantized_spectrum(g, kind, q);
      auto exact = exact_token_table(g, kind);
      std::unordered_map<std::string, std::string> f2e, e2f;
      const int n = g.order();
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          const std::string fb = pair_token(*spec, u, v).bytes;
          const std::string& eb = (*exact)[static_cast<std::size_t>(u) * n + v].bytes;
          ++r.checked;
          auto [a, fa] = f2e.emplace(fb, eb);
          auto [b, fb2] = e2f.emplace(eb, fb);
          if ((!fa && a->second != eb) || (!fb2 && b->second != fb)) {
            r.fail(write_graph6(g) + "/" + to_string(kind) + " pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
          }
          auto [c, fc] = exact_to_float.emplace(eb, fb);
          if (!fc && c->second != fb) r.fail("cross-graph exact token maps to two float tokens at " + write_graph6(g));
        }
    }
  }
  return r;
}

PropertyResult check_atomic_type_encoding(const std::vector<Graph>& corpus, const std::vector<MatrixKind>& kinds,
                                          const Quantization& q) {
  PropertyResult r = named("pair tokens determine atomic type");
  Timer t(r);
  for (MatrixKind kind : kinds) {
    std::unordered_map<std::string, AtomicType> seen;
    for (const Graph& g : corpus) {
      if (!kind_applies(g, kind)) continue;
      auto spec = quantized_spectrum(g, kind, q);
      for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v) {
          ++r.checked;
          auto [it, fresh] = seen.emplace(pair_token(*spec, u, v).bytes, g.atomic_type(u, v));
          if (!fresh && it->second != g.atomic_type(u, v)) r.fail(write_graph6(g) + "/" + to_string(kind));
        }
    }
  }
  return r;
}

PropertyResult check_token_invariance(const std::vector<Graph>& corpus, const std::vector<MatrixKind>& kinds,
                                      std::uint64_t seed, const Quantization& q) {
  PropertyResult r = named("pair tokens symmetric and relabeling invariant");
  Timer t(r);
  std::mt19937_64 rng(seed);
  for (const Graph& g : corpus) {
    auto perm = random_permutation(g.order(), rng());
    Graph pg = permute(g, perm);
    for (MatrixKind kind : kinds) {
      if (!kind_applies(g, kind)) continue;
      auto s = quantized_spectrum(g, kind, q);
      auto ps = quantized_spectrum(pg, kind, q);
      for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v) {
          ++r.checked;
          const PairToken a = pair_token(*s, u, v);
          if (a != pair_token(*s, v, u)) r.fail("asymmetric token in " + write_graph6(g));
          if (a != pair_token(*ps, perm[u], perm[v])) r.fail("relabeling changed a token in " + write_graph6(g));
        }
    }
  }
  return r;
}

PropertyResult check_distance_cross_forms(const std::vector<Graph>& corpus, double tol) {
  PropertyResult r = named("distance cross-forms agree");
  Timer t(r);
  double worst = 0;
  for (const Graph& g : corpus)
    for (const DistanceSpec& d : all_distance_specs()) {
      if (g.has_isolated() && (d.kind == DistanceKind::PRD || d.kind == DistanceKind::Diffusion)) continue;
      CrossReport rep = cross_validate(g, d, tol);
      worst = std::max(worst, rep.max_residual);
      ++r.checked;
      if (!rep.pass) r.fail(write_graph6(g) + "/" + to_string(d) + " residual " + std::to_string(rep.max_residual));
    }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max residual %.3g", worst);
  if (r.detail.empty()) r.detail = buf;
  return r;
}

PropertyResult check_triangle_inequality(const std::vector<Graph>& corpus, double tol) {
  PropertyResult r = named("triangle inequality for SPD, RD, diffusion");
  Timer t(r);
  for (const Graph& g : corpus) {
    std::vector<DistanceSpec> specs = {DistanceSpec::spd(), DistanceSpec::rd()};
    if (!g.has_isolated()) specs.push_back(DistanceSpec::diffusion());
    for (const auto& s : specs) {
      auto d = distance_matrix(g, s);
      const int n = g.order();
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) {
            ++r.checked;
            if ((*d)(a, c) > (*d)(a, b) + (*d)(b, c) + tol) r.fail(write_graph6(g) + "/" + to_string(s));
          }
    }
  }
  return r;
}

PropertyResult check_distance_determination(const std::vector<Graph>& corpus, double tol, const Quantization& q) {
  PropertyResult r = named("EPWL(Lhat) colors and Lhat tokens determine all distances");
  Timer t(r);
  std::vector<Graph> usable;
  for (const Graph& g : corpus)
    if (!g.has_isolated()) usable.push_back(g);
  StableResult res = stable_coloring(AlgorithmSpec::parse("epwl:Lhat"), usable, q);
  const auto specs = all_distance_specs();
  std::unordered_map<std::string, std::vector<double>> groups;
  for (std::size_t gi = 0; gi < usable.size(); ++gi) {
    const Graph& g = usable[gi];
    auto s = quantized_spectrum(g, MatrixKind::NormalizedLaplacian, q);
    std::vector<std::shared_ptr<const DistanceMatrix>> dms;
    for (const auto& d : specs) dms.push_back(distance_matrix(g, d));
    for (int u = 0; u < g.order(); ++u)
      for (int v = 0; v < g.order(); ++v) {
        std::string key = std::to_string(res.node_colors[gi][u]) + "/" + std::to_string(res.node_colors[gi][v]) + "/" +
                          pair_token(*s, u, v).bytes;
        std::vector<double> values;
        for (const auto& dm : dms) values.push_back((*dm)(u, v));
        ++r.checked;
        auto [it, fresh] = groups.emplace(std::move(key), values);
        if (fresh) continue;
        for (std::size_t k = 0; k < specs.size(); ++k) {
          const double a = it->second[k], b = values[k];
          const bool same = (std::isinf(a) || std::isinf(b)) ? (a == b)
                            : specs[k].kind == DistanceKind::SPD ? a == b
                                                                 : std::fabs(a - b) <= tol;
          if (!same) r.fail(to_string(specs[k]) + " differs within a group at " + write_graph6(g));
        }
      }
  }
  r.detail += (r.detail.empty() ? "" : "; ") + std::to_string(groups.size()) + " groups";
  return r;
}

PropertyResult check_refines(SignatureCache& cache, const AlgorithmSpec& a, const AlgorithmSpec& b, bool equal) {
  PropertyResult r = named(a.str() + (equal ? " equivalent to " : " refines ") + b.str());
  Timer t(r);
  const auto& ia = cache.ids(a);
  const auto& ib = cache.ids(b);
  ComparisonReport rep = compare_signature_ids(ia, ib, static_cast<std::size_t>(-1));
  r.checked = ia.size();
  const auto& corpus = cache.corpus();
  for (auto [i, j] : rep.a_misses)
    r.fail(b.str() + " separates " + gname(corpus, i) + " and " + gname(corpus, j) + " but " + a.str() + " does not");
  if (equal)
    for (auto [i, j] : rep.b_misses)
      r.fail(a.str() + " separates " + gname(corpus, i) + " and " + gname(corpus, j) + " but " + b.str() + " does not");
  if (r.passed) r.detail = "relation " + to_string(rep.relation);
  return r;
}

std::vector<PropertyResult> check_hierarchy(SignatureCache& cache) {
  std::vector<PropertyResult> out;
  auto spec = [](const std::string& s) { return AlgorithmSpec::parse(s); };
  for (std::string m : {"A", "L", "Lhat"}) {
    out.push_back(check_refines(cache, spec("epwl:" + m), spec("wl1"), false));
    out.push_back(check_refines(cache, spec("pswl"), spec("epwl:" + m), false));
  }
  out.push_back(check_refines(cache, spec("fwl2"), spec("pswl"), false));
  for (const auto& d : all_distance_specs()) {
    AlgorithmSpec g;
    g.variant = Variant::GDWL;
    g.distance = d;
    out.push_back(check_refines(cache, spec("epwl:Lhat"), g, false));
  }
  for (std::string m : {"A", "L", "Lhat"}) {
    out.push_back(check_refines(cache, spec("sign:" + m), spec("epwl:" + m), true));
    out.push_back(check_refines(cache, spec("sign:" + m), spec("weak:" + m), false));
    out.push_back(check_refines(cache, spec("weak:" + m), spec("siam:" + m), false));
    out.push_back(check_refines(cache, spec("weak:" + m), spec("basisnet:" + m + ":layers=1"), false));
    out.push_back(check_refines(cache, spec("spe:" + m), spec("sign:" + m), true));
  }
  out.push_back(check_refines(cache, spec("epwl:Lhat"), spec("peg:Lhat"), false));
  out.push_back(check_refines(cache, spec("epwl:Lhat"), spec("girt:K=16"), false));
  return out;
}

PropertyResult check_rattan(const std::vector<Graph>& corpus, const std::vector<MatrixKind>& kinds, const Quantization& q) {
  PropertyResult r = named("stable PSWL pair colors determine pair tokens");
  Timer t(r);
  StableResult res = stable_coloring(AlgorithmSpec::parse("pswl"), corpus, q);
  for (MatrixKind kind : kinds) {
    std::unordered_map<std::uint32_t, std::string> seen;
    for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
      const Graph& g = corpus[gi];
      if (!kind_applies(g, kind)) continue;
      auto s = quantized_spectrum(g, kind, q);
      const int n = g.order();
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          ++r.checked;
          std::string tok = pair_token(*s, u, v).bytes;
          auto [it, fresh] = seen.emplace(res.pair_colors[gi][static_cast<std::size_t>(u) * n + v], tok);
          if (!fresh && it->second != tok) r.fail(to_string(kind) + " at " + write_graph6(g));
        }
    }
  }
  return r;
}

PropertyResult check_biconnectivity(SignatureCache& cache) {
  PropertyResult r = named("EPWL(Lhat) separates graphs with different biconnectivity");
  Timer t(r);
  const auto& corpus = cache.corpus();
  const auto& ids = cache.ids(AlgorithmSpec::parse("epwl:Lhat"));
  std::unordered_map<std::uint32_t, std::pair<std::size_t, std::tuple<std::size_t, std::size_t, int>>> first;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    BiconnectivityReport b = biconnectivity_report(corpus[i]);
    auto key = std::make_tuple(b.cut_vertices.size(), b.cut_edges.size(), b.biconnected_component_count);
    ++r.checked;
    auto [it, fresh] = first.emplace(ids[i], std::make_pair(i, key));
    if (!fresh && it->second.second != key) r.fail(gname(corpus, it->second.first) + " vs " + gname(corpus, i));
  }
  return r;
}

PropertyResult check_twist_parity(int min_n, int max_n) {
  PropertyResult r = named("twist parity and 1-WL blindness on Fürer pairs");
  Timer t(r);
  const AlgorithmSpec wl1 = AlgorithmSpec::parse("wl1");
  for (int n = std::max(2, min_n); n <= max_n; ++n)
    for (const Graph& base : enumerate_graphs(n, true)) {
      const auto edges = base.edges();
      FurerGraph fg = furer(base);
      try {
        for (std::size_t i = 0; i < edges.size(); ++i) {
          ++r.checked;
          if (parity_check(base, {}, {edges[i]})) r.fail("single twist isomorphic for base " + write_graph6(base));
          for (std::size_t j = i + 1; j < edges.size(); ++j) {
            r.checked += 2;
            if (!parity_check(base, {}, {edges[i], edges[j]})) r.fail("double twist not isomorphic for " + write_graph6(base));
            if (!parity_check(base, {edges[i]}, {edges[j]})) r.fail("two single twists differ for " + write_graph6(base));
          }
        }
      } catch (const InternalError& e) {
        r.fail(std::string(e.what()) + " for base " + write_graph6(base));
      }
      const auto& deg = base.degrees();
      if (*std::min_element(deg.begin(), deg.end()) < 2) continue;
      ++r.checked;
      if (distinguishes(wl1, fg.product, twist(fg, {edges.front()}))) r.fail("1-WL separates the Fürer pair of " + write_graph6(base));
    }
  return r;
}

PropertyResult check_isomorphism_invariance(const std::vector<Graph>& corpus, const std::vector<AlgorithmSpec>& specs,
                                            std::uint64_t seed, const Quantization& q) {
  PropertyResult r = named("refinement signatures invariant under relabeling");
  Timer t(r);
  std::mt19937_64 rng(seed);
  for (const Graph& g : corpus) {
    Graph pg = permute(g, random_permutation(g.order(), rng()));
    for (const auto& s : specs) {
      try {
        s.validate(g);
      } catch (const DomainError&) {
        continue;
      }
      ++r.checked;
      if (distinguishes(s, g, pg, q)) r.fail(s.str() + " separates " + write_graph6(g) + " from a relabeling");
    }
  }
  return r;
}

PropertyResult check_distinguishing_counts(const std::vector<std::pair<Graph, Graph>>& pairs, PairCounts* counts,
                                           const Quantization& q) {
  PropertyResult r = named("EPWL distinguishing count between 1-WL and 2-FWL");
  Timer t(r);
  PairCounts local;
  const std::vector<std::string> names = {"wl1", "epwl:A", "epwl:L", "epwl:Lhat", "fwl2"};
  for (const auto& name : names) local.distinguished[name] = 0;
  for (const auto& [g, h] : pairs) {
    ++local.pairs;
    std::map<std::string, bool> d;
    for (const auto& name : names) {
      AlgorithmSpec s = AlgorithmSpec::parse(name);
      bool valid = true;
      try {
        s.validate(g);
        s.validate(h);
      } catch (const DomainError&) {
        valid = false;
      }
      d[name] = valid && distinguishes(s, g, h, q);
      if (d[name]) ++local.distinguished[name];
    }
    ++r.checked;
    for (std::string m : {"epwl:A", "epwl:L", "epwl:Lhat"}) {
      if (m == "epwl:Lhat" && (g.has_isolated() || h.has_isolated())) continue;
      if (d["wl1"] && !d[m]) r.fail("1-WL separates " + write_graph6(g) + "/" + write_graph6(h) + " but " + m + " does not");
      if (d[m] && !d["fwl2"]) r.fail(m + " separates " + write_graph6(g) + "/" + write_graph6(h) + " but 2-FWL does not");
    }
  }
  for (std::string m : {"epwl:A", "epwl:L", "epwl:Lhat"}) {
    if (local.distinguished[m] < local.distinguished["wl1"] && m != "epwl:Lhat") r.fail(m + " count below 1-WL");
    if (local.distinguished[m] > local.distinguished["fwl2"]) r.fail(m + " count above 2-FWL");
  }
  std::string summary;
  for (const auto& name : names) summary += (summary.empty() ? "" : ", ") + name + "=" + std::to_string(local.distinguished[name]);
  r.detail += (r.detail.empty() ? "" : "; ") + summary + " of " + std::to_string(local.pairs) + " pairs";
  if (counts) *counts = local;
  return r;
}

}  // namespace swl
