//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "swl/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <Eigen/Eigenvalues>

#include "swl/error.hpp"

namespace swl {

namespace {

std::int64_t pow10(int k) {
  std::int64_t p = 1;
  while (k-- > 0) p *= 10;
  return p;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::int64_t quantize(double x, int digits) {
  if (!std::isfinite(x)) throw NumericError("cannot quantize a non-finite value");
  if (digits < 0 || digits > 9) throw UsageError("quantization digits must lie in [0, 9]");
  if (x == 0.0) return 0;
  const long double scaled = static_cast<long double>(x) * static_cast<long double>(pow10(digits + 3));
  if (std::fabs(scaled) > 9.0e18L) throw NumericError("value too large to quantize");
  const std::int64_t s = std::llround(scaled);
  std::int64_t q = floor_div(s, 1000);
  const std::int64_t r = s - q * 1000;
  if (r > 500 || (r == 500 && (q & 1))) ++q;
  return q;
}

std::string format_quantized(std::int64_t q, int digits) {
  const std::int64_t p = pow10(digits);
  const bool neg = q < 0;
  const std::uint64_t a = neg ? static_cast<std::uint64_t>(-(q + 1)) + 1 : static_cast<std::uint64_t>(q);
  char buf[96];
  if (digits > 0)
    std::snprintf(buf, sizeof buf, "%c%08llu.%0*llu", neg ? '-' : '+', static_cast<unsigned long long>(a / p), std::min(digits, 18),
                  static_cast<unsigned long long>(a % p));
  else
    std::snprintf(buf, sizeof buf, "%c%08llu", neg ? '-' : '+', static_cast<unsigned long long>(a));
  return buf;
}

double ResidualReport::max() const {
  return std::max({idempotence, orthogonality, completeness, reconstruction, trace});
}

SpectralDecomposition decompose(const SymmetricMatrix& m, double eig_rel_tol) {
  const int n = static_cast<int>(m.rows());
  SpectralDecomposition d;
  if (n == 0) return d;
  const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  // Retry with diagonal shifts when the QR iteration stalls.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  double shift = 0;
  for (double s : {0.5, -0.37, 0.29}) {
    if (solver.info() == Eigen::Success) break;
    shift = s * std::max(1.0, norm);
    solver.compute(m + shift * Eigen::MatrixXd::Identity(n, n));
  }
  if (solver.info() != Eigen::Success)
    throw NumericError("eigensolver did not converge on a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  const Eigen::VectorXd values = solver.eigenvalues().array() - shift;
  const Eigen::MatrixXd& vectors = solver.eigenvectors();
  const double gap = eig_rel_tol * std::max(1.0, norm);
  int start = 0;
  for (int i = 1; i <= n; ++i) {
    if (i < n && values(i) - values(i - 1) <= gap) continue;
    const int k = i - start;
    Eigen::MatrixXd z = vectors.middleCols(start, k);
    SymmetricMatrix p = z * z.transpose();
    p = 0.5 * (p + p.transpose());
    d.eigenvalues.push_back(values.segment(start, k).mean());
    d.multiplicities.push_back(k);
    d.projections.push_back(std::move(p));
    start = i;
  }
  return d;
}

ResidualReport validate_decomposition(const SpectralDecomposition& d, const SymmetricMatrix& m) {
  const int n = static_cast<int>(m.rows());
  ResidualReport r;
  auto inf = [](const Eigen::MatrixXd& x) { return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff(); };
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd recon = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < d.size(); ++i) {
    const auto& p = d.projections[i];
    r.idempotence = std::max(r.idempotence, inf(p * p - p));
    for (int j = i + 1; j < d.size(); ++j) r.orthogonality = std::max(r.orthogonality, inf(p * d.projections[j]));
    r.trace = std::max(r.trace, std::fabs(p.trace() - d.multiplicities[i]));
    sum += p;
    recon += d.eigenvalues[i] * p;
  }
  r.completeness = inf(sum - Eigen::MatrixXd::Identity(n, n));
  r.reconstruction = inf(recon - m);
  return r;
}

namespace {

std::string cache_key(const char* what, MatrixKind kind, const Quantization& q) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s:%s:%.17g:%d", what, to_string(kind).c_str(), q.eig_rel_tol, q.digits);
  return buf;
}

}  // namespace

std::shared_ptr<const SpectralDecomposition> decomposition(const Graph& g, MatrixKind kind, const Quantization& q) {
  Quantization key = q;
  key.digits = 0;
  return g.memo().get<SpectralDecomposition>(cache_key("eig", kind, key), [&] {
    return std::make_shared<const SpectralDecomposition>(decompose(build_matrix(g, kind), q.eig_rel_tol));
  });
}

std::shared_ptr<const QuantizedSpectrum> quantized_spectrum(const Graph& g, MatrixKind kind, const Quantization& q) {
  return g.memo().get<QuantizedSpectrum>(cache_key("qeig", kind, q), [&] {
    auto d = decomposition(g, kind, q);
    auto s = std::make_shared<QuantizedSpectrum>();
    const int n = g.order();
    s->n = n;
    s->digits = q.digits;
    s->multiplicities = d->multiplicities;
    for (int i = 0; i < d->size(); ++i) {
      s->eigenvalues.push_back(quantize(d->eigenvalues[i], q.digits));
      std::vector<std::int64_t> p(static_cast<std::size_t>(n) * n);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) p[static_cast<std::size_t>(u) * n + v] = quantize(d->projections[i](u, v), q.digits);
      s->projections.push_back(std::move(p));
    }
    return std::shared_ptr<const QuantizedSpectrum>(std::move(s));
  });
}

PairToken pair_token(const QuantizedSpectrum& s, NodeId u, NodeId v) {
  if (u < 0 || v < 0 || u >= s.n || v >= s.n) throw DomainError("vertex index out of range");
  std::vector<std::string> records;
  records.reserve(s.eigenvalues.size());
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i)
    records.push_back(format_quantized(s.eigenvalues[i], s.digits) + ":" +
                      format_quantized(s.projections[i][static_cast<std::size_t>(u) * s.n + v], s.digits) + ";");
  std::sort(records.begin(), records.end());
  PairToken t;
  for (auto& r : records) t.bytes += r;
  return t;
}

PairToken pair_token(const Graph& g, MatrixKind kind, NodeId u, NodeId v, const Quantization& q) {
  return pair_token(*quantized_spectrum(g, kind, q), u, v);
}

SpectrumToken spectrum_token(const QuantizedSpectrum& s) {
  std::vector<std::string> records;
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i)
    records.push_back(format_quantized(s.eigenvalues[i], s.digits) + "x" + std::to_string(s.multiplicities[i]) + ";");
  std::sort(records.begin(), records.end());
  SpectrumToken t;
  for (auto& r : records) t.bytes += r;
  return t;
}

SpectrumToken spectrum_token(const Graph& g, MatrixKind kind, const Quantization& q) {
  return spectrum_token(*quantized_spectrum(g, kind, q));
}

double token_projection_sum(const PairToken& t) {
  double sum = 0;
  std::size_t pos = 0;
  while (pos < t.bytes.size()) {
    std::size_t colon = t.bytes.find(':', pos);
    std::size_t semi = t.bytes.find(';', colon);
    sum += std::stod(t.bytes.substr(colon + 1, semi - colon - 1));
    pos = semi + 1;
  }
  return sum;
}

std::string decomposition_json(const SpectralDecomposition& d, MatrixKind kind) {
  std::string out = "{\"kind\":\"" + to_string(kind) + "\",\"eigenvalues\":[";
  char buf[40];
  auto num = [&](double x) {
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
  };
  for (int i = 0; i < d.size(); ++i) out += (i ? "," : "") + num(d.eigenvalues[i]);
  out += "],\"multiplicities\":[";
  for (int i = 0; i < d.size(); ++i) out += (i ? "," : "") + std::to_string(d.multiplicities[i]);
  out += "],\"projections\":[";
  for (int i = 0; i < d.size(); ++i) {
    const auto& p = d.projections[i];
    out += i ? ",[" : "[";
    for (int r = 0; r < p.rows(); ++r) {
      out += r ? ",[" : "[";
      for (int c = 0; c < p.cols(); ++c) out += (c ? "," : "") + num(p(r, c));
      out += "]";
    }
    out += "]";
  }
  out += "]}";
  return out;
}

}  // namespace swl
