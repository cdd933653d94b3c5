//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "swl/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "swl/distances.hpp"
#include "swl/error.hpp"
#include "swl/furer.hpp"
#include "swl/intern.hpp"
#include "swl/structure.hpp"

#ifndef SWL_VERSION_STRING
#define SWL_VERSION_STRING "0.0.0"
#endif

namespace swl {

using Json = nlohmann::ordered_json;

std::string version() { return SWL_VERSION_STRING; }

namespace {

const char* const kKeys[] = {"command",      "algorithms",  "corpus",       "pairs",        "seed",
                             "budget",       "output",      "regression",   "digits",       "eig_rel_tol",
                             "parallelism",  "min_base_n",  "max_base_n",   "max_random_n", "max_product_vertices",
                             "random_graphs", "random_max_n", "furer_max_n", "timing"};

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!trim(cur).empty()) out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

long long parse_int(const std::string& key, const std::string& value, long long lo, long long hi) {
  char* end = nullptr;
  errno = 0;
  const long long x = std::strtoll(value.c_str(), &end, 10);
  if (value.empty() || *end != '\0' || errno || x < lo || x > hi)
    throw UsageError("config key '" + key + "': expected an integer in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "], got '" + value + "'");
  return x;
}

double parse_double(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const double x = std::strtod(value.c_str(), &end);
  if (value.empty() || *end != '\0' || !(x > 0) || !std::isfinite(x))
    throw UsageError("config key '" + key + "': expected a positive number, got '" + value + "'");
  return x;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::string read_file(const std::string& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError(std::string("cannot read ") + what + " '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<AlgorithmSpec> parse_algorithms(const std::vector<std::string>& texts) {
  std::vector<AlgorithmSpec> out;
  for (const auto& t : texts) {
    try {
      out.push_back(AlgorithmSpec::parse(t));
    } catch (const ParseError& e) {
      throw UsageError("algorithm spec '" + t + "': " + e.what());
    }
  }
  return out;
}

// Distinct-value buckets of signature ids, ordered by smallest member.
std::vector<std::vector<int>> bucketize(const std::vector<std::uint32_t>& ids) {
  std::vector<std::vector<int>> out;
  std::unordered_map<std::uint32_t, std::size_t> where;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    auto [it, fresh] = where.emplace(ids[i], out.size());
    if (fresh) out.emplace_back();
    out[it->second].push_back(static_cast<int>(i));
  }
  return out;
}

template <typename F>
void parallel_for(std::size_t count, int workers, F&& body) {
  workers = std::max(1, std::min<int>(workers, static_cast<int>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&]() {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          body(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

void RunConfig::set(const std::string& key, const std::string& raw) {
  const std::string value = trim(raw);
  if (key == "command") command = value;
  else if (key == "algorithms") {
    algorithms.clear();
    for (const auto& s : parse_spec_list(value)) algorithms.push_back(s.str());
  } else if (key == "corpus") corpus = split_list(value);
  else if (key == "pairs") pairs = split_list(value);
  else if (key == "seed") {
    char* end = nullptr;
    seed = std::strtoull(value.c_str(), &end, 10);
    if (value.empty() || *end != '\0' || value.front() == '-')
      throw UsageError("config key 'seed': expected an unsigned integer, got '" + value + "'");
  } else if (key == "budget") budget = parse_int(key, value, 0, 1LL << 40);
  else if (key == "output") output = value;
  else if (key == "regression") regression = value;
  else if (key == "digits") quantization.digits = static_cast<int>(parse_int(key, value, 0, 9));
  else if (key == "eig_rel_tol") quantization.eig_rel_tol = parse_double(key, value);
  else if (key == "parallelism") parallelism = static_cast<int>(parse_int(key, value, 1, 256));
  else if (key == "min_base_n") min_base_n = static_cast<int>(parse_int(key, value, 2, 9));
  else if (key == "max_base_n") max_base_n = static_cast<int>(parse_int(key, value, 2, 9));
  else if (key == "max_random_n") max_random_n = static_cast<int>(parse_int(key, value, 0, 64));
  else if (key == "max_product_vertices") max_product_vertices = static_cast<int>(parse_int(key, value, 1, 4096));
  else if (key == "random_graphs") random_graphs = static_cast<int>(parse_int(key, value, 0, 100000));
  else if (key == "random_max_n") random_max_n = static_cast<int>(parse_int(key, value, 2, 64));
  else if (key == "furer_max_n") furer_max_n = static_cast<int>(parse_int(key, value, 2, 7));
  else if (key == "timing") {
    if (value == "1" || value == "true") timing = true;
    else if (value == "0" || value == "false") timing = false;
    else throw UsageError("config key 'timing': expected true or false, got '" + value + "'");
  } else {
    throw UsageError("unknown config key '" + key + "'");
  }
}

void RunConfig::update(std::string_view text) {
  std::size_t line_no = 0, start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    const std::string line = trim(text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start));
    ++line_no;
    if (!line.empty() && line.front() != '#') {
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw UsageError("config line " + std::to_string(line_no) + ": expected key=value");
      try {
        set(trim(line.substr(0, eq)), line.substr(eq + 1));
      } catch (const Error& e) {
        throw UsageError("config line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
}

void RunConfig::update_from_file(const std::string& path) { update(read_file(path, "config file")); }

RunConfig RunConfig::parse(std::string_view text) {
  RunConfig c;
  c.update(text);
  return c;
}

RunConfig RunConfig::load(const std::string& path) {
  RunConfig c;
  c.update_from_file(path);
  return c;
}

void RunConfig::apply_env() {
  for (const char* key : kKeys) {
    std::string name = "SWL_";
    for (const char* p = key; *p; ++p) name += static_cast<char>(std::toupper(static_cast<unsigned char>(*p)));
    if (const char* v = std::getenv(name.c_str())) {
      try {
        set(key, v);
      } catch (const Error& e) {
        throw UsageError("environment " + name + ": " + e.what());
      }
    }
  }
}

std::string RunConfig::serialize() const {
  std::ostringstream out;
  out << "command=" << command << '\n'
      << "algorithms=" << join(algorithms, ", ") << '\n'
      << "corpus=" << join(corpus, ",") << '\n'
      << "pairs=" << join(pairs, ",") << '\n'
      << "seed=" << seed << '\n'
      << "budget=" << budget << '\n'
      << "digits=" << quantization.digits << '\n'
      << "eig_rel_tol=" << format_double(quantization.eig_rel_tol) << '\n'
      << "min_base_n=" << min_base_n << '\n'
      << "max_base_n=" << max_base_n << '\n'
      << "max_random_n=" << max_random_n << '\n'
      << "max_product_vertices=" << max_product_vertices << '\n'
      << "random_graphs=" << random_graphs << '\n'
      << "random_max_n=" << random_max_n << '\n'
      << "furer_max_n=" << furer_max_n << '\n'
      << "output=" << output << '\n'
      << "regression=" << regression << '\n'
      << "parallelism=" << parallelism << '\n'
      << "timing=" << (timing ? "true" : "false") << '\n';
  return out.str();
}

std::string RunConfig::hash() const {
  std::string text = serialize();
  // Drop the trailing keys that do not affect results.
  text = text.substr(0, text.find("output="));
  std::vector<std::uint32_t> words;
  for (unsigned char c : text) words.push_back(c);
  const Hash128 h = hash128(words.data(), words.size());
  char buf[40];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(h.hi),
                static_cast<unsigned long long>(h.lo));
  return buf;
}

std::vector<Graph> load_corpus(const std::vector<std::string>& entries) {
  std::vector<Graph> out;
  for (const auto& e : entries) {
    const auto colon = e.find(':');
    const std::string head = colon == std::string::npos ? "" : e.substr(0, colon);
    if (head == "connected" || head == "all") {
      int lo = 0, hi = 0;
      char dash = 0;
      std::istringstream in(e.substr(colon + 1));
      if (!(in >> lo >> dash >> hi) || dash != '-' || lo < 1 || hi < lo || !in.eof())
        throw UsageError("corpus generator '" + e + "': expected " + head + ":<min>-<max>");
      if (hi > 9) throw UsageError("corpus generator '" + e + "': enumeration limited to n <= 9");
      for (auto& g : enumerate_range(lo, hi, head == "connected")) out.push_back(std::move(g));
    } else {
      for (auto& g : read_corpus(e)) out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<PairRecord> parse_pair_corpus(std::string_view text) {
  std::vector<PairRecord> out;
  std::size_t line_no = 0, start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    const std::string line = trim(text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start));
    ++line_no;
    if (!line.empty() && line.front() != '#') {
      std::istringstream in(line);
      std::string g6, h6, field;
      in >> g6 >> h6;
      const std::string where = "pair corpus line " + std::to_string(line_no) + ": ";
      if (h6.empty()) throw UsageError(where + "expected two graph6 strings");
      PairRecord r;
      try {
        r.g = parse_graph6(g6);
        r.h = parse_graph6(h6);
      } catch (const ParseError& e) {
        throw UsageError(where + e.what());
      }
      while (in >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError(where + "expected key=value, got '" + field + "'");
        r.attrs[field.substr(0, eq)] = field.substr(eq + 1);
      }
      out.push_back(std::move(r));
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return out;
}

std::vector<PairRecord> read_pair_corpus(const std::string& path) { return parse_pair_corpus(read_file(path, "pair corpus")); }

std::string format_pair_record(const PairRecord& r) {
  std::string line = write_graph6(r.g) + " " + write_graph6(r.h);
  for (const auto& [k, v] : r.attrs) line += " " + k + "=" + v;
  return line;
}

std::string HierarchyReport::to_json(bool with_timing) const {
  Json j;
  j["version"] = version;
  j["config_hash"] = config_hash;
  j["quantization"] = {{"digits", quantization.digits}, {"eig_rel_tol", quantization.eig_rel_tol}};
  j["graphs"] = graphs;
  Json ex = Json::array();
  for (const auto& [g, why] : excluded) ex.push_back({{"graph", g}, {"reason", why}});
  j["excluded"] = ex;
  Json algs = Json::array();
  for (std::size_t a = 0; a < algorithms.size(); ++a) {
    Json entry = {{"spec", algorithms[a]}, {"classes", buckets[a].size()}, {"buckets", buckets[a]}};
    if (with_timing) entry["seconds"] = seconds[a];
    algs.push_back(entry);
  }
  j["algorithms"] = algs;
  Json cells_json = Json::array();
  for (const auto& c : cells) {
    auto pairs = [&](const std::vector<std::pair<int, int>>& v) {
      Json arr = Json::array();
      for (auto [x, y] : v) arr.push_back({graphs[x], graphs[y]});
      return arr;
    };
    cells_json.push_back({{"a", c.a},
                          {"b", c.b},
                          {"relation", to_string(c.relation)},
                          {"a_merges_b_separates", pairs(c.a_misses)},
                          {"b_merges_a_separates", pairs(c.b_misses)}});
  }
  j["relations"] = cells_json;
  return j.dump(2) + "\n";
}

std::string HierarchyReport::to_csv() const {
  std::string out = "a,b,relation,a_merges_b_separates,b_merges_a_separates,witness_g,witness_h\n";
  for (const auto& c : cells) {
    std::string wg, wh;
    if (!c.a_misses.empty()) wg = graphs[c.a_misses[0].first], wh = graphs[c.a_misses[0].second];
    else if (!c.b_misses.empty()) wg = graphs[c.b_misses[0].first], wh = graphs[c.b_misses[0].second];
    auto quote = [](const std::string& s) {
      if (s.find_first_of(",\"") == std::string::npos) return s;
      std::string q = "\"";
      for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      return q + "\"";
    };
    out += quote(c.a) + "," + quote(c.b) + "," + to_string(c.relation) + "," + std::to_string(c.a_misses.size()) + "," +
           std::to_string(c.b_misses.size()) + "," + quote(wg) + "," + quote(wh) + "\n";
  }
  return out;
}

HierarchyReport cmd_scan(const RunConfig& config) {
  if (config.algorithms.empty()) throw UsageError("scan needs at least one algorithm");
  if (config.corpus.empty()) throw UsageError("scan needs a corpus");
  const auto specs = parse_algorithms(config.algorithms);
  const auto all = load_corpus(config.corpus);

  HierarchyReport rep;
  rep.version = version();
  rep.config_hash = config.hash();
  rep.quantization = config.quantization;
  std::vector<Graph> corpus;
  for (const Graph& g : all) {
    std::string reason;
    for (const auto& s : specs) {
      try {
        s.validate(g);
      } catch (const DomainError& e) {
        reason = s.str() + ": " + e.what();
        break;
      }
    }
    if (reason.empty()) {
      corpus.push_back(g);
      rep.graphs.push_back(write_graph6(g));
    } else {
      rep.excluded.emplace_back(write_graph6(g), reason);
    }
  }
  for (const auto& s : specs) rep.algorithms.push_back(s.str());

  std::vector<std::vector<std::uint32_t>> ids(specs.size());
  rep.seconds.assign(specs.size(), 0.0);
  parallel_for(specs.size(), config.parallelism, [&](std::size_t a) {
    const auto start = std::chrono::steady_clock::now();
    for (const auto& sig : stable_coloring(specs[a], corpus, config.quantization).signatures) ids[a].push_back(sig.id);
    rep.seconds[a] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  });
  for (const auto& v : ids) rep.buckets.push_back(bucketize(v));
  for (std::size_t a = 0; a < specs.size(); ++a)
    for (std::size_t b = a + 1; b < specs.size(); ++b) {
      ComparisonReport cmp = compare_signature_ids(ids[a], ids[b]);
      rep.cells.push_back({rep.algorithms[a], rep.algorithms[b], cmp.relation, cmp.a_misses, cmp.b_misses});
    }

  if (!config.output.empty()) {
    write_file(config.output, rep.to_json(config.timing));
    std::string csv_path = config.output;
    const auto dot = csv_path.rfind('.');
    const auto slash = csv_path.rfind('/');
    if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) csv_path.resize(dot);
    write_file(csv_path + ".csv", rep.to_csv());
  }
  return rep;
}

bool VerifyReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.passed; });
}

std::string VerifyReport::to_json(bool with_timing) const {
  Json j;
  j["passed"] = passed();
  j["warnings"] = warnings;
  Json arr = Json::array();
  for (const auto& r : results) {
    Json e = {{"name", r.name}, {"passed", r.passed}, {"checked", r.checked}, {"violations", r.violations},
              {"detail", r.detail}};
    if (with_timing) e["seconds"] = r.seconds;
    arr.push_back(e);
  }
  j["properties"] = arr;
  return j.dump(2) + "\n";
}

std::string VerifyReport::to_text() const {
  std::string out;
  for (const auto& w : warnings) out += "warning: " + w + "\n";
  for (const auto& r : results) {
    char buf[64];
    std::snprintf(buf, sizeof buf, " (checked %zu, %.2fs)", r.checked, r.seconds);
    out += std::string(r.passed ? "PASS " : "FAIL ") + r.name + buf;
    if (!r.detail.empty()) out += ": " + r.detail;
    out += "\n";
  }
  out += passed() ? "all properties hold\n" : "property violations found\n";
  return out;
}

VerifyReport cmd_verify(const RunConfig& config) {
  VerifyReport rep;
  const Quantization& q = config.quantization;
  const std::vector<std::string> entries = config.corpus.empty() ? std::vector<std::string>{"connected:2-6"} : config.corpus;
  const auto corpus = load_corpus(entries);
  if (corpus.empty()) {
    rep.warnings.push_back("corpus is empty; no property was checked");
    return rep;
  }
  const std::vector<MatrixKind> kinds = {MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::NormalizedLaplacian};
  std::vector<Graph> usable;
  for (const Graph& g : corpus)
    if (!g.has_isolated()) usable.push_back(g);
  if (usable.size() != corpus.size())
    rep.warnings.push_back(std::to_string(corpus.size() - usable.size()) +
                           " graphs with isolated vertices skipped by the refinement suites");

  rep.results.push_back(check_decompositions(corpus, kinds, 1e-8, q));
  rep.results.push_back(check_exact_float_agreement(corpus, {MatrixKind::Adjacency, MatrixKind::Laplacian}, q));
  rep.results.push_back(check_atomic_type_encoding(corpus, kinds, q));
  rep.results.push_back(check_token_invariance(corpus, kinds, config.seed, q));
  const auto random = random_connected_corpus(config.random_graphs, 2, config.random_max_n, config.seed);
  rep.results.push_back(check_distance_cross_forms(random, 1e-8));
  rep.results.push_back(check_triangle_inequality(corpus, 1e-9));
  std::vector<Graph> determination = usable;
  determination.insert(determination.end(), random.begin(), random.end());
  rep.results.push_back(check_distance_determination(determination, 1e-6, q));
  SignatureCache cache(usable, q);
  for (auto& r : check_hierarchy(cache)) rep.results.push_back(std::move(r));
  rep.results.push_back(check_rattan(corpus, kinds, q));
  rep.results.push_back(check_biconnectivity(cache));
  rep.results.push_back(check_twist_parity(2, config.furer_max_n));

  std::vector<AlgorithmSpec> specs = config.algorithms.empty()
                                         ? parse_spec_list("wl1 epwl:A epwl:Lhat pswl fwl2 sign:L siam:L weak:L spe:A "
                                                           "basisnet:A gdwl:rd peg:Lhat girt")
                                         : parse_algorithms(config.algorithms);
  rep.results.push_back(check_isomorphism_invariance(usable, specs, config.seed, q));

  std::vector<std::pair<Graph, Graph>> pairs;
  for (const auto& path : config.pairs)
    for (auto& r : read_pair_corpus(path)) pairs.emplace_back(std::move(r.g), std::move(r.h));
  for (int n = 3; n <= config.furer_max_n; ++n)
    for (const Graph& base : enumerate_graphs(n, true)) {
      const auto& deg = base.degrees();
      if (*std::min_element(deg.begin(), deg.end()) < 2) continue;
      FurerGraph fg = furer(base);
      pairs.emplace_back(fg.product, twist(fg, {base.edges().front()}));
    }
  rep.results.push_back(check_distinguishing_counts(pairs, nullptr, q));
  return rep;
}

std::string HuntReport::to_text() const {
  std::string out;
  for (const auto& w : witnesses) out += format_pair_record(w) + "\n";
  out += "# evaluated " + std::to_string(evaluated) + (budget_exhausted ? " (budget exhausted)" : "") + ", " +
         std::to_string(witnesses.size()) + " witnesses, " + std::to_string(appended) + " appended\n";
  return out;
}

HuntReport cmd_hunt(const RunConfig& config) {
  if (config.algorithms.size() != 2) throw UsageError("hunt needs exactly two algorithms");
  const auto specs = parse_algorithms(config.algorithms);
  SearchOptions opt;
  opt.min_base_n = config.min_base_n;
  opt.max_base_n = config.max_base_n;
  opt.max_random_n = config.max_random_n;
  opt.seed = config.seed;
  opt.budget = config.budget;
  opt.max_product_vertices = config.max_product_vertices;
  SearchResult res = search_counterexamples(specs[0], specs[1], opt);

  HuntReport rep;
  rep.evaluated = res.evaluated;
  rep.budget_exhausted = res.budget_exhausted;
  for (const auto& w : res.witnesses) {
    PairRecord r{w.g, w.h, {}};
    r.attrs["a"] = specs[0].str();
    r.attrs["b"] = specs[1].str();
    r.attrs["a_distinguishes"] = w.a_distinguishes ? "1" : "0";
    r.attrs["b_distinguishes"] = w.b_distinguishes ? "1" : "0";
    r.attrs["source"] = w.source;
    rep.witnesses.push_back(std::move(r));
  }

  if (!config.output.empty()) {
    std::string text = "# witnesses a=" + specs[0].str() + " b=" + specs[1].str() + " seed=" + std::to_string(config.seed) +
                       " budget=" + std::to_string(config.budget) + "\n";
    for (const auto& w : rep.witnesses) text += format_pair_record(w) + "\n";
    write_file(config.output, text);
  }
  if (!config.regression.empty()) {
    std::set<std::string> seen;
    auto key = [](const std::string& g, const std::string& h, const std::string& a, const std::string& b) {
      return std::min(g, h) + " " + std::max(g, h) + " " + a + " " + b;
    };
    std::ifstream probe(config.regression);
    if (probe) {
      probe.close();
      for (const auto& r : read_pair_corpus(config.regression)) {
        auto get = [&](const char* k) {
          auto it = r.attrs.find(k);
          return it == r.attrs.end() ? std::string() : it->second;
        };
        seen.insert(key(write_graph6(r.g), write_graph6(r.h), get("a"), get("b")));
      }
    }
    std::string text;
    for (const auto& w : rep.witnesses)
      if (seen.insert(key(write_graph6(w.g), write_graph6(w.h), w.attrs.at("a"), w.attrs.at("b"))).second) {
        text += format_pair_record(w) + "\n";
        ++rep.appended;
      }
    if (!text.empty()) {
      std::ofstream out(config.regression, std::ios::binary | std::ios::app);
      if (!out) throw IoError("cannot append to '" + config.regression + "'");
      out << text;
    }
  }
  return rep;
}

std::string compare_json(const AlgorithmSpec& spec, const Graph& g, const Graph& h, const Quantization& q, bool* distinguished) {
  spec.validate(g);
  spec.validate(h);
  StableResult res = stable_coloring(spec, {g, h}, q);
  const bool d = res.signatures[0].id != res.signatures[1].id;
  if (distinguished) *distinguished = d;
  Json j = {{"algorithm", spec.str()},
            {"g", write_graph6(g)},
            {"h", write_graph6(h)},
            {"distinguished", d},
            {"signatures", {res.signatures[0].id, res.signatures[1].id}},
            {"iterations", res.stats.iterations},
            {"colors", res.stats.colors},
            {"hash_collisions", res.stats.collisions},
            {"quantization", {{"digits", q.digits}, {"eig_rel_tol", q.eig_rel_tol}}},
            {"version", version()}};
  return j.dump(2) + "\n";
}

std::string distances_csv(const Graph& g, const std::string& distance_spec) {
  DistanceSpec spec;
  try {
    spec = parse_distance_spec(distance_spec);
  } catch (const ParseError& e) {
    throw UsageError("distance spec '" + distance_spec + "': " + e.what());
  }
  auto d = distance_matrix(g, spec);
  std::string out;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) {
      if (v) out += ',';
      const double x = (*d)(u, v);
      out += std::isinf(x) ? std::string("inf") : format_double(x);
    }
    out += '\n';
  }
  return out;
}

}  // namespace swl
