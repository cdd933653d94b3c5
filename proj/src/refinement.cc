//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "swl/refinement.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>

#include "swl/error.hpp"

namespace swl {

namespace {

constexpr std::uint32_t kAbsent = 0xFFFFFFFFu;

// Leading word of every interned key; keeps token families disjoint.
enum Tag : std::uint32_t {
  kConst = 1,
  kMark,
  kAtp,
  kPairToken,
  kDistance,
  kSpectralInit,
  kBasisInit,
  kGirtInit,
  kPegLabel,
  kNodeStep,
  kSwlStep,
  kPswlStep,
  kFwlStep,
  kIgnStep,
  kRow,
  kCol,
  kDiag,
  kAll,
  kSpectralPool,
  kSignStep,
  kSiamStep,
  kPairPool,
  kGlobalPool,
  kJointPool,
  kSlicePool,
  kSliceSetPool,
  kBasisPool,
  kSpectralNodePool,
  kGirtOff,
  kGirtDiag,
  kDiagPool,
  kByteString = 0x80000000u,
};

std::atomic<std::uint64_t> g_next_run{1};

void push64(std::vector<std::uint32_t>& buf, std::int64_t x) {
  const auto u = static_cast<std::uint64_t>(x);
  buf.push_back(static_cast<std::uint32_t>(u >> 32));
  buf.push_back(static_cast<std::uint32_t>(u));
}

struct IgnAggregates {
  std::vector<std::uint32_t> row, col;
  std::uint32_t diag = 0, all = 0;
};

}  // namespace

bool Signature::operator==(const Signature& other) const {
  if (run_id != other.run_id) throw UsageError("signatures from different runs are not comparable");
  return id == other.id;
}

struct Refiner::Context {
  int n = 0;
  int m = 0;                             // distinct eigenvalues (spectral domains)
  std::vector<std::uint8_t> atp;         // n*n raw atomic types
  std::vector<std::uint32_t> labels;     // n*n interned edge labels for node steps
  std::vector<std::uint32_t> atp_ids;    // n*n interned atomic types
  std::shared_ptr<const QuantizedSpectrum> spectrum;
};

Refiner::Refiner(AlgorithmSpec spec, std::vector<Graph> graphs, Quantization q)
    : spec_(std::move(spec)), graphs_(std::move(graphs)), q_(q), run_id_(g_next_run++) {
  for (const auto& g : graphs_) spec_.validate(g);
  std::vector<std::uint32_t> key;
  for (const auto& g : graphs_) {
    auto ctx = std::make_unique<Context>();
    const int n = g.order();
    ctx->n = n;
    ctx->atp.resize(static_cast<std::size_t>(n) * n);
    ctx->atp_ids.resize(ctx->atp.size());
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        const auto t = static_cast<std::uint8_t>(u == v ? AtomicType::Equal
                                                        : (g.adjacent(u, v) ? AtomicType::Adjacent : AtomicType::NonAdjacent));
        ctx->atp[static_cast<std::size_t>(u) * n + v] = t;
        key = {kAtp, t};
        ctx->atp_ids[static_cast<std::size_t>(u) * n + v] = table_.intern(key);
      }
    if (spec_.uses_matrix()) {
      ctx->spectrum = quantized_spectrum(g, spec_.kind, q_);
      ctx->m = static_cast<int>(ctx->spectrum->eigenvalues.size());
    }
    ctx_.push_back(std::move(ctx));
  }

  // Edge labels for node-domain steps.
  auto pair_token_id = [&](const Context& c, int u, int v) {
    const auto& s = *c.spectrum;
    std::vector<std::pair<std::int64_t, std::int64_t>> recs;
    for (int i = 0; i < c.m; ++i) recs.emplace_back(s.eigenvalues[i], s.projections[i][static_cast<std::size_t>(u) * c.n + v]);
    std::sort(recs.begin(), recs.end());
    key.assign(1, kPairToken);
    for (auto [l, p] : recs) {
      push64(key, l);
      push64(key, p);
    }
    return table_.intern(key);
  };
  for (std::size_t gi = 0; gi < graphs_.size(); ++gi) {
    Context& c = *ctx_[gi];
    const int n = c.n;
    switch (spec_.variant) {
      case Variant::WL1:
        c.labels = c.atp_ids;
        break;
      case Variant::EPWL:
      case Variant::SPE:
        c.labels.resize(static_cast<std::size_t>(n) * n);
        for (int u = 0; u < n; ++u)
          for (int v = 0; v < n; ++v) c.labels[static_cast<std::size_t>(u) * n + v] = pair_token_id(c, u, v);
        break;
      case Variant::PEG: {
        std::vector<std::uint32_t> tok(static_cast<std::size_t>(n) * n);
        for (int u = 0; u < n; ++u)
          for (int v = 0; v < n; ++v) tok[static_cast<std::size_t>(u) * n + v] = pair_token_id(c, u, v);
        c.labels.resize(tok.size());
        for (int u = 0; u < n; ++u)
          for (int v = 0; v < n; ++v) {
            key = {kPegLabel, tok[static_cast<std::size_t>(u) * n + u], tok[static_cast<std::size_t>(v) * n + v],
                   tok[static_cast<std::size_t>(u) * n + v]};
            c.labels[static_cast<std::size_t>(u) * n + v] = table_.intern(key);
          }
        break;
      }
      case Variant::GDWL: {
        auto d = distance_matrix(graphs_[gi], spec_.distance);
        c.labels.resize(static_cast<std::size_t>(n) * n);
        for (int u = 0; u < n; ++u)
          for (int v = 0; v < n; ++v) {
            const double x = (*d)(u, v);
            key.assign({kDistance, std::isinf(x) ? 1u : 0u});
            push64(key, std::isinf(x) ? 0 : quantize(x, q_.digits));
            c.labels[static_cast<std::size_t>(u) * n + v] = table_.intern(key);
          }
        break;
      }
      default:
        break;
    }
  }
}

Refiner::~Refiner() = default;

std::uint32_t Refiner::intern_multiset(std::uint32_t tag, std::vector<std::uint32_t>& items) {
  std::sort(items.begin(), items.end());
  items.insert(items.begin(), tag);
  return table_.intern(items);
}

ColorState Refiner::initial_coloring() {
  ColorState s;
  s.run_id = run_id_;
  std::vector<std::uint32_t> key;
  switch (spec_.variant) {
    case Variant::WL1:
    case Variant::EPWL:
    case Variant::GDWL:
    case Variant::PEG:
      s.domain = Domain::Nodes;
      break;
    case Variant::SWL:
    case Variant::PSWL:
    case Variant::FWL2:
    case Variant::IGN2:
    case Variant::GIRT:
    case Variant::SPE:
      s.domain = Domain::Pairs;
      break;
    default:
      s.domain = Domain::SpectralPairs;
      break;
  }
  for (std::size_t gi = 0; gi < graphs_.size(); ++gi) {
    const Context& c = *ctx_[gi];
    const int n = c.n;
    const auto nn = static_cast<std::size_t>(n) * n;
    std::vector<std::uint32_t> col;
    switch (spec_.variant) {
      case Variant::WL1:
      case Variant::EPWL:
      case Variant::GDWL:
      case Variant::PEG:
        key = {kConst};
        col.assign(n, table_.intern(key));
        break;
      case Variant::SWL:
      case Variant::PSWL:
        col.resize(nn);
        for (int u = 0; u < n; ++u)
          for (int v = 0; v < n; ++v) {
            key = {kMark, u == v ? 1u : 0u};
            col[static_cast<std::size_t>(u) * n + v] = table_.intern(key);
          }
        break;
      case Variant::FWL2:
      case Variant::IGN2:
        col = c.atp_ids;
        break;
      case Variant::SPE:
        col = c.labels;
        break;
      case Variant::GIRT: {
        const Graph& g = graphs_[gi];
        Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
        for (auto [a, b] : g.edges()) {
          w(a, b) = 1.0 / g.degree(a);
          w(b, a) = 1.0 / g.degree(b);
        }
        std::vector<std::vector<std::uint32_t>> keys(nn, std::vector<std::uint32_t>{kGirtInit});
        Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
        for (int k = 0; k <= spec_.girt_steps; ++k) {
          for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) push64(keys[static_cast<std::size_t>(u) * n + v], quantize(power(u, v), q_.digits));
          if (k < spec_.girt_steps) power = power * w;
        }
        col.resize(nn);
        for (std::size_t i = 0; i < nn; ++i) col[i] = table_.intern(keys[i]);
        break;
      }
      case Variant::SpectralIGN:
      case Variant::SiameseIGN:
      case Variant::WeakSpectralIGN:
      case Variant::BasisNet: {
        const auto& sp = *c.spectrum;
        col.resize(static_cast<std::size_t>(c.m) * nn);
        for (int i = 0; i < c.m; ++i)
          for (std::size_t e = 0; e < nn; ++e) {
            if (spec_.variant == Variant::BasisNet) {
              key = {kBasisInit, static_cast<std::uint32_t>(sp.multiplicities[i])};
            } else {
              key = {kSpectralInit};
              push64(key, sp.eigenvalues[i]);
            }
            push64(key, sp.projections[i][e]);
            col[static_cast<std::size_t>(i) * nn + e] = table_.intern(key);
          }
        break;
      }
    }
    s.colors.push_back(std::move(col));
  }
  return s;
}

namespace {

// Row/column/diagonal/total multisets of an n x n color slice.
IgnAggregates ign_aggregates(Refiner& r, const std::uint32_t* x, int n,
                             const std::function<std::uint32_t(std::uint32_t, std::vector<std::uint32_t>&)>& ms) {
  IgnAggregates a;
  a.row.resize(n);
  a.col.resize(n);
  std::vector<std::uint32_t> items;
  for (int u = 0; u < n; ++u) {
    items.assign(x + static_cast<std::size_t>(u) * n, x + static_cast<std::size_t>(u + 1) * n);
    a.row[u] = ms(kRow, items);
    items.clear();
    for (int w = 0; w < n; ++w) items.push_back(x[static_cast<std::size_t>(w) * n + u]);
    a.col[u] = ms(kCol, items);
  }
  items.clear();
  for (int w = 0; w < n; ++w) items.push_back(x[static_cast<std::size_t>(w) * n + w]);
  a.diag = ms(kDiag, items);
  items.assign(x, x + static_cast<std::size_t>(n) * n);
  a.all = ms(kAll, items);
  (void)r;
  return a;
}

// The fifteen arguments of the 2-IGN update at (u, v).
void push_ign_slots(std::vector<std::uint32_t>& buf, const std::uint32_t* x, int n, int u, int v, const IgnAggregates& a) {
  const auto at = [&](int i, int j) { return x[static_cast<std::size_t>(i) * n + j]; };
  const bool diag = u == v;
  buf.push_back(at(u, v));
  buf.push_back(at(u, u));
  buf.push_back(at(v, v));
  buf.push_back(at(v, u));
  buf.push_back(diag ? at(u, u) : kAbsent);
  buf.push_back(a.row[u]);
  buf.push_back(a.col[u]);
  buf.push_back(a.row[v]);
  buf.push_back(a.col[v]);
  buf.push_back(a.diag);
  buf.push_back(a.all);
  buf.push_back(diag ? a.row[u] : kAbsent);
  buf.push_back(diag ? a.col[u] : kAbsent);
  buf.push_back(diag ? a.diag : kAbsent);
  buf.push_back(diag ? a.all : kAbsent);
}

}  // namespace

std::vector<std::uint32_t> Refiner::step_graph(std::size_t gi, const std::vector<std::uint32_t>& c) {
  const Context& ctx = *ctx_[gi];
  const int n = ctx.n;
  const auto nn = static_cast<std::size_t>(n) * n;
  std::vector<std::uint32_t> out(c.size());
  std::vector<std::uint64_t> packed;
  auto ms = [this](std::uint32_t tag, std::vector<std::uint32_t>& items) { return intern_multiset(tag, items); };
  auto emit_packed = [&](std::vector<std::uint64_t>& p) {
    std::sort(p.begin(), p.end());
    for (auto x : p) {
      buf_.push_back(static_cast<std::uint32_t>(x >> 32));
      buf_.push_back(static_cast<std::uint32_t>(x));
    }
  };

  switch (spec_.variant) {
    case Variant::WL1:
    case Variant::EPWL:
    case Variant::GDWL:
    case Variant::PEG:
      for (int u = 0; u < n; ++u) {
        buf_.assign({kNodeStep, c[u]});
        packed.clear();
        for (int v = 0; v < n; ++v)
          packed.push_back(static_cast<std::uint64_t>(c[v]) << 32 | ctx.labels[static_cast<std::size_t>(u) * n + v]);
        emit_packed(packed);
        out[u] = table_.intern(buf_);
      }
      break;
    case Variant::SWL:
    case Variant::PSWL: {
      const bool ps = spec_.variant == Variant::PSWL;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          buf_.assign({ps ? kPswlStep : kSwlStep, c[static_cast<std::size_t>(u) * n + v]});
          if (ps) buf_.push_back(c[static_cast<std::size_t>(v) * n + v]);
          packed.clear();
          for (int w = 0; w < n; ++w)
            packed.push_back(static_cast<std::uint64_t>(c[static_cast<std::size_t>(u) * n + w]) << 32 |
                             ctx.atp[static_cast<std::size_t>(v) * n + w]);
          emit_packed(packed);
          out[static_cast<std::size_t>(u) * n + v] = table_.intern(buf_);
        }
      break;
    }
    case Variant::FWL2:
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          buf_.assign({kFwlStep, c[static_cast<std::size_t>(u) * n + v]});
          packed.clear();
          for (int w = 0; w < n; ++w)
            packed.push_back(static_cast<std::uint64_t>(c[static_cast<std::size_t>(u) * n + w]) << 32 |
                             c[static_cast<std::size_t>(w) * n + v]);
          emit_packed(packed);
          out[static_cast<std::size_t>(u) * n + v] = table_.intern(buf_);
        }
      break;
    case Variant::IGN2:
    case Variant::SPE: {
      IgnAggregates a = ign_aggregates(*this, c.data(), n, ms);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          buf_.assign(1, kIgnStep);
          push_ign_slots(buf_, c.data(), n, u, v, a);
          out[static_cast<std::size_t>(u) * n + v] = table_.intern(buf_);
        }
      break;
    }
    case Variant::GIRT:
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          if (u != v) {
            buf_.assign({kGirtOff, c[static_cast<std::size_t>(u) * n + v], c[static_cast<std::size_t>(u) * n + u],
                         c[static_cast<std::size_t>(v) * n + v]});
          } else {
            buf_.assign({kGirtDiag, c[static_cast<std::size_t>(u) * n + u]});
            packed.clear();
            for (int w = 0; w < n; ++w)
              packed.push_back(static_cast<std::uint64_t>(c[static_cast<std::size_t>(u) * n + w]) << 32 |
                               c[static_cast<std::size_t>(w) * n + w]);
            emit_packed(packed);
          }
          out[static_cast<std::size_t>(u) * n + v] = table_.intern(buf_);
        }
      break;
    case Variant::SpectralIGN:
    case Variant::SiameseIGN:
    case Variant::WeakSpectralIGN:
    case Variant::BasisNet: {
      const bool sign = spec_.variant == Variant::SpectralIGN;
      std::vector<std::uint32_t> sp_ign;
      if (sign) {
        // T_IGN applied to the eigenvalue-pooled pair coloring.
        std::vector<std::uint32_t> sp(nn), items;
        for (std::size_t e = 0; e < nn; ++e) {
          items.clear();
          for (int i = 0; i < ctx.m; ++i) items.push_back(c[static_cast<std::size_t>(i) * nn + e]);
          sp[e] = intern_multiset(kSpectralPool, items);
        }
        IgnAggregates a = ign_aggregates(*this, sp.data(), n, ms);
        sp_ign.resize(nn);
        for (int u = 0; u < n; ++u)
          for (int v = 0; v < n; ++v) {
            buf_.assign(1, kIgnStep);
            push_ign_slots(buf_, sp.data(), n, u, v, a);
            sp_ign[static_cast<std::size_t>(u) * n + v] = table_.intern(buf_);
          }
      }
      for (int i = 0; i < ctx.m; ++i) {
        const std::uint32_t* slice = c.data() + static_cast<std::size_t>(i) * nn;
        IgnAggregates a = ign_aggregates(*this, slice, n, ms);
        for (int u = 0; u < n; ++u)
          for (int v = 0; v < n; ++v) {
            buf_.assign(1, sign ? kSignStep : kSiamStep);
            push_ign_slots(buf_, slice, n, u, v, a);
            if (sign) buf_.push_back(sp_ign[static_cast<std::size_t>(u) * n + v]);
            out[static_cast<std::size_t>(i) * nn + static_cast<std::size_t>(u) * n + v] = table_.intern(buf_);
          }
      }
      break;
    }
  }
  return out;
}

ColorState Refiner::refine_once(const ColorState& state) {
  if (state.run_id != run_id_) throw UsageError("color state belongs to a different run");
  ColorState next;
  next.domain = state.domain;
  next.run_id = run_id_;
  next.iteration = state.iteration + 1;
  for (std::size_t gi = 0; gi < graphs_.size(); ++gi) next.colors.push_back(step_graph(gi, state.colors[gi]));
  return next;
}

namespace {

std::size_t count_distinct(const std::vector<std::vector<std::uint32_t>>& colors, std::vector<std::uint8_t>& mark,
                           std::size_t table_size) {
  mark.assign(table_size, 0);
  std::size_t count = 0;
  for (const auto& c : colors)
    for (auto x : c)
      if (!mark[x]) {
        mark[x] = 1;
        ++count;
      }
  return count;
}

void check_refines(const std::vector<std::vector<std::uint32_t>>& fine, const std::vector<std::vector<std::uint32_t>>& coarse,
                   std::size_t table_size) {
  std::vector<std::uint32_t> image(table_size, kAbsent);
  for (std::size_t gi = 0; gi < fine.size(); ++gi)
    for (std::size_t e = 0; e < fine[gi].size(); ++e) {
      auto& slot = image[fine[gi][e]];
      if (slot == kAbsent)
        slot = coarse[gi][e];
      else if (slot != coarse[gi][e])
        throw InternalError("refinement step coarsened the partition");
    }
}

std::size_t total_size(const std::vector<std::vector<std::uint32_t>>& colors) {
  std::size_t t = 0;
  for (const auto& c : colors) t += c.size();
  return t;
}

// Generic fixpoint loop used for the main stage and trailing node stages.
template <typename Step>
std::vector<std::vector<std::uint32_t>> fixpoint(std::vector<std::vector<std::uint32_t>> colors, Step step,
                                                 InternTable& table, int& iterations, int max_steps = -1) {
  std::vector<std::uint8_t> mark;
  std::size_t count = count_distinct(colors, mark, table.size());
  const std::size_t cap = total_size(colors) + 1;
  for (std::size_t t = 0;; ++t) {
    if (max_steps >= 0 && static_cast<int>(t) >= max_steps) return colors;
    if (t > cap) throw InternalError("refinement exceeded its iteration cap");
    auto next = step(colors);
    ++iterations;
    check_refines(next, colors, table.size());
    const std::size_t now = count_distinct(next, mark, table.size());
    colors = std::move(next);
    if (now == count && max_steps < 0) return colors;
    count = now;
  }
}

}  // namespace

ColorState Refiner::stabilize(ColorState state) {
  int iterations = 0;
  auto step = [&](const std::vector<std::vector<std::uint32_t>>& c) {
    std::vector<std::vector<std::uint32_t>> out;
    for (std::size_t gi = 0; gi < graphs_.size(); ++gi) out.push_back(step_graph(gi, c[gi]));
    return out;
  };
  state.colors = fixpoint(std::move(state.colors), step, table_, iterations);
  state.iteration += iterations;
  stats_.iterations += iterations;
  return state;
}

std::vector<Signature> Refiner::signatures() {
  ColorState s = stabilize(initial_coloring());
  const std::size_t ng = graphs_.size();
  std::vector<std::uint32_t> items;
  std::vector<std::uint32_t> pooled(ng);
  std::vector<std::uint64_t> packed;

  auto global_pool = [&](const std::vector<std::vector<std::uint32_t>>& nodes) {
    for (std::size_t gi = 0; gi < ng; ++gi) {
      items = nodes[gi];
      pooled[gi] = intern_multiset(kGlobalPool, items);
    }
  };
  auto row_pool = [&](const std::vector<std::uint32_t>& pairs, int n) {
    std::vector<std::uint32_t> nodes(n);
    for (int u = 0; u < n; ++u) {
      items.assign(pairs.begin() + static_cast<std::ptrdiff_t>(u) * n, pairs.begin() + static_cast<std::ptrdiff_t>(u + 1) * n);
      nodes[u] = intern_multiset(kPairPool, items);
    }
    return nodes;
  };
  // One T_WL step with atomic-type labels on node colors.
  auto wl_step = [&](const std::vector<std::vector<std::uint32_t>>& c) {
    std::vector<std::vector<std::uint32_t>> out(ng);
    for (std::size_t gi = 0; gi < ng; ++gi) {
      const Context& ctx = *ctx_[gi];
      const int n = ctx.n;
      out[gi].resize(n);
      for (int u = 0; u < n; ++u) {
        buf_.assign({kNodeStep, c[gi][u]});
        packed.clear();
        for (int v = 0; v < n; ++v)
          packed.push_back(static_cast<std::uint64_t>(c[gi][v]) << 32 | ctx.atp_ids[static_cast<std::size_t>(u) * n + v]);
        std::sort(packed.begin(), packed.end());
        for (auto x : packed) {
          buf_.push_back(static_cast<std::uint32_t>(x >> 32));
          buf_.push_back(static_cast<std::uint32_t>(x));
        }
        out[gi][u] = table_.intern(buf_);
      }
    }
    return out;
  };

  switch (spec_.variant) {
    case Variant::WL1:
    case Variant::EPWL:
    case Variant::GDWL:
    case Variant::PEG:
      node_colors_ = s.colors;
      global_pool(node_colors_);
      break;
    case Variant::SWL:
    case Variant::PSWL: {
      pair_colors_ = s.colors;
      std::vector<std::vector<std::uint32_t>> nodes;
      for (std::size_t gi = 0; gi < ng; ++gi) nodes.push_back(row_pool(s.colors[gi], ctx_[gi]->n));
      node_colors_ = nodes;
      global_pool(nodes);
      break;
    }
    case Variant::FWL2:
    case Variant::IGN2:
      pair_colors_ = s.colors;
      for (std::size_t gi = 0; gi < ng; ++gi) {
        items = s.colors[gi];
        pooled[gi] = intern_multiset(kJointPool, items);
      }
      break;
    case Variant::GIRT: {
      pair_colors_ = s.colors;
      std::vector<std::vector<std::uint32_t>> nodes(ng);
      for (std::size_t gi = 0; gi < ng; ++gi) {
        const int n = ctx_[gi]->n;
        for (int u = 0; u < n; ++u) nodes[gi].push_back(s.colors[gi][static_cast<std::size_t>(u) * n + u]);
      }
      node_colors_ = nodes;
      global_pool(nodes);
      break;
    }
    case Variant::SPE: {
      pair_colors_ = s.colors;
      std::vector<std::vector<std::uint32_t>> nodes;
      for (std::size_t gi = 0; gi < ng; ++gi) nodes.push_back(row_pool(s.colors[gi], ctx_[gi]->n));
      int it = 0;
      node_colors_ = fixpoint(std::move(nodes), wl_step, table_, it);
      stats_.iterations += it;
      global_pool(node_colors_);
      break;
    }
    case Variant::SpectralIGN:
    case Variant::WeakSpectralIGN: {
      const bool sign = spec_.variant == Variant::SpectralIGN;
      std::vector<std::vector<std::uint32_t>> nodes(ng);
      for (std::size_t gi = 0; gi < ng; ++gi) {
        const Context& ctx = *ctx_[gi];
        const auto nn = static_cast<std::size_t>(ctx.n) * ctx.n;
        std::vector<std::uint32_t> pairs(nn);
        for (std::size_t e = 0; e < nn; ++e) {
          items.clear();
          for (int i = 0; i < ctx.m; ++i) items.push_back(s.colors[gi][static_cast<std::size_t>(i) * nn + e]);
          pairs[e] = intern_multiset(kSpectralPool, items);
        }
        if (sign) {
          nodes[gi] = row_pool(pairs, ctx.n);
        } else {
          items = pairs;
          pooled[gi] = intern_multiset(kJointPool, items);
        }
      }
      if (sign) {
        node_colors_ = nodes;
        global_pool(nodes);
      }
      break;
    }
    case Variant::SiameseIGN:
      for (std::size_t gi = 0; gi < ng; ++gi) {
        const Context& ctx = *ctx_[gi];
        const auto nn = static_cast<std::size_t>(ctx.n) * ctx.n;
        std::vector<std::uint32_t> slices(ctx.m);
        for (int i = 0; i < ctx.m; ++i) {
          items.assign(s.colors[gi].begin() + static_cast<std::ptrdiff_t>(i * nn),
                       s.colors[gi].begin() + static_cast<std::ptrdiff_t>((i + 1) * nn));
          slices[i] = intern_multiset(kSlicePool, items);
        }
        pooled[gi] = intern_multiset(kSliceSetPool, slices);
      }
      break;
    case Variant::BasisNet: {
      std::vector<std::vector<std::uint32_t>> nodes(ng);
      for (std::size_t gi = 0; gi < ng; ++gi) {
        const Context& ctx = *ctx_[gi];
        const int n = ctx.n;
        const auto nn = static_cast<std::size_t>(n) * n;
        std::vector<std::vector<std::uint32_t>> per_node(n);
        for (int i = 0; i < ctx.m; ++i) {
          const std::uint32_t* x = s.colors[gi].data() + static_cast<std::size_t>(i) * nn;
          IgnAggregates a = ign_aggregates(*this, x, n, [this](std::uint32_t tag, std::vector<std::uint32_t>& v) {
            return intern_multiset(tag, v);
          });
          for (int u = 0; u < n; ++u) {
            buf_.assign({kBasisPool, x[static_cast<std::size_t>(u) * n + u], a.row[u], a.col[u], a.diag, a.all});
            per_node[u].push_back(table_.intern(buf_));
          }
        }
        nodes[gi].resize(n);
        for (int u = 0; u < n; ++u) nodes[gi][u] = intern_multiset(kSpectralNodePool, per_node[u]);
      }
      int it = 0;
      node_colors_ = fixpoint(std::move(nodes), wl_step, table_, it, spec_.layers);
      stats_.iterations += it;
      global_pool(node_colors_);
      break;
    }
  }
  stats_.colors = table_.size();
  stats_.collisions = table_.collisions();
  std::vector<Signature> out;
  for (auto id : pooled) out.push_back({run_id_, id});
  return out;
}

StableResult stable_coloring(const AlgorithmSpec& spec, const std::vector<Graph>& graphs, const Quantization& q) {
  Refiner r(spec, graphs, q);
  StableResult res;
  res.signatures = r.signatures();
  res.run_id = r.run_id();
  res.node_colors = r.node_colors();
  res.pair_colors = r.pair_colors();
  res.stats = r.stats();
  return res;
}

bool distinguishes(const AlgorithmSpec& spec, const Graph& g, const Graph& h, const Quantization& q) {
  Refiner r(spec, {g, h}, q);
  auto sig = r.signatures();
  return sig[0] != sig[1];
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::Equivalent: return "equivalent";
    case Relation::Finer: return "finer";
    case Relation::Coarser: return "coarser";
    case Relation::Incomparable: return "incomparable";
  }
  return "?";
}

ComparisonReport compare_signature_ids(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                       std::size_t max_witnesses) {
  if (a.size() != b.size()) throw UsageError("signature lists differ in length");
  ComparisonReport rep;
  auto scan = [&](const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y,
                  std::vector<std::pair<int, int>>& misses) {
    std::map<std::uint32_t, int> first;
    bool refines = true;
    for (std::size_t i = 0; i < x.size(); ++i) {
      auto [it, fresh] = first.emplace(x[i], static_cast<int>(i));
      if (!fresh && y[it->second] != y[i]) {
        refines = false;
        if (misses.size() < max_witnesses) misses.emplace_back(it->second, static_cast<int>(i));
      }
    }
    return refines;
  };
  rep.a_refines_b = scan(a, b, rep.a_misses);
  rep.b_refines_a = scan(b, a, rep.b_misses);
  if (rep.a_refines_b && rep.b_refines_a)
    rep.relation = Relation::Equivalent;
  else if (rep.a_refines_b)
    rep.relation = Relation::Finer;
  else if (rep.b_refines_a)
    rep.relation = Relation::Coarser;
  else
    rep.relation = Relation::Incomparable;
  return rep;
}

ComparisonReport compare_partitions(const AlgorithmSpec& a, const AlgorithmSpec& b, const std::vector<Graph>& corpus,
                                    const Quantization& q) {
  if (corpus.empty()) throw UsageError("compare_partitions needs a nonempty corpus");
  auto ids = [&](const AlgorithmSpec& s) {
    std::vector<std::uint32_t> out;
    for (const auto& sig : stable_coloring(s, corpus, q).signatures) out.push_back(sig.id);
    return out;
  };
  return compare_signature_ids(ids(a), ids(b));
}

}  // namespace swl
