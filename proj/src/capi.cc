//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "spectral_wl/spectral_wl.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "swl/error.hpp"
#include "swl/furer.hpp"
#include "swl/harness.hpp"
#include "swl/highorder.hpp"

struct swl_graph {
  swl::Graph g;
};

struct swl_config {
  swl::RunConfig c;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <typename F>
swl_status guard(F&& body) {
  last_error.clear();
  try {
    body();
    return SWL_OK;
  } catch (const swl::ParseError& e) {
    last_error = e.what();
    return SWL_ERR_PARSE;
  } catch (const swl::DomainError& e) {
    last_error = e.what();
    return SWL_ERR_DOMAIN;
  } catch (const swl::NumericError& e) {
    last_error = e.what();
    return SWL_ERR_NUMERIC;
  } catch (const swl::UsageError& e) {
    last_error = e.what();
    return SWL_ERR_USAGE;
  } catch (const swl::IoError& e) {
    last_error = e.what();
    return SWL_ERR_IO;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SWL_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return SWL_ERR_INTERNAL;
  }
}

swl_status null_arg(const char* name) {
  last_error = std::string("argument '") + name + "' is NULL";
  return SWL_ERR_NULL;
}

}  // namespace

extern "C" {

void swl_string_free(char* s) { std::free(s); }

const char* swl_version(void) {
  static const std::string v = swl::version();
  return v.c_str();
}

const char* swl_last_error(void) { return last_error.c_str(); }

const char* swl_status_name(swl_status status) {
  switch (status) {
    case SWL_OK: return "ok";
    case SWL_ERR_PARSE: return "parse error";
    case SWL_ERR_DOMAIN: return "domain error";
    case SWL_ERR_NUMERIC: return "numeric error";
    case SWL_ERR_USAGE: return "usage error";
    case SWL_ERR_INTERNAL: return "internal error";
    case SWL_ERR_IO: return "i/o error";
    case SWL_ERR_NULL: return "null argument";
  }
  return "unknown status";
}

swl_status swl_graph_from_graph6(const char* text, swl_graph** out) {
  if (!text) return null_arg("text");
  if (!out) return null_arg("out");
  return guard([&] { *out = new swl_graph{swl::parse_graph6(text)}; });
}

swl_status swl_graph_to_graph6(const swl_graph* g, char** out) {
  if (!g) return null_arg("g");
  if (!out) return null_arg("out");
  return guard([&] { *out = dup(swl::write_graph6(g->g)); });
}

void swl_graph_free(swl_graph* g) { delete g; }

int swl_graph_order(const swl_graph* g) { return g ? g->g.order() : -1; }

int swl_graph_size(const swl_graph* g) { return g ? static_cast<int>(g->g.size()) : -1; }

swl_status swl_distinguishes(const char* spec, const swl_graph* g, const swl_graph* h, int digits, double eig_rel_tol,
                             int* distinguished, char** detail_json) {
  if (!spec) return null_arg("spec");
  if (!g) return null_arg("g");
  if (!h) return null_arg("h");
  if (!distinguished) return null_arg("distinguished");
  return guard([&] {
    swl::Quantization q;
    if (digits >= 0) q.digits = digits;
    if (eig_rel_tol > 0) q.eig_rel_tol = eig_rel_tol;
    if (q.digits > 9) throw swl::UsageError("digits must be at most 9");
    bool d = false;
    const std::string json = swl::compare_json(swl::AlgorithmSpec::parse(spec), g->g, h->g, q, &d);
    *distinguished = d ? 1 : 0;
    if (detail_json) *detail_json = dup(json);
  });
}

swl_status swl_distances_csv(const char* distance_spec, const swl_graph* g, char** out) {
  if (!distance_spec) return null_arg("distance_spec");
  if (!g) return null_arg("g");
  if (!out) return null_arg("out");
  return guard([&] { *out = dup(swl::distances_csv(g->g, distance_spec)); });
}

swl_status swl_furer(const swl_graph* base, const char* twist_edges, swl_graph** out) {
  if (!base) return null_arg("base");
  if (!out) return null_arg("out");
  return guard([&] {
    std::vector<swl::Edge> edges;
    if (twist_edges) {
      std::stringstream in(twist_edges);
      std::string item;
      while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        int u = 0, v = 0;
        char dash = 0;
        std::istringstream e(item);
        if (!(e >> u >> dash >> v) || dash != '-' || !e.eof())
          throw swl::UsageError("twist edge '" + item + "': expected u-v");
        edges.emplace_back(u, v);
      }
    }
    swl::FurerGraph fg = swl::furer(base->g);
    *out = new swl_graph{swl::twist(fg, edges)};
  });
}

swl_status swl_token_graph(const swl_graph* g, int k, swl_graph** out) {
  if (!g) return null_arg("g");
  if (!out) return null_arg("out");
  return guard([&] { *out = new swl_graph{swl::token_graph(g->g, k).product}; });
}

swl_status swl_config_new(swl_config** out) {
  if (!out) return null_arg("out");
  return guard([&] { *out = new swl_config{}; });
}

void swl_config_free(swl_config* c) { delete c; }

swl_status swl_config_set(swl_config* c, const char* key, const char* value) {
  if (!c) return null_arg("c");
  if (!key) return null_arg("key");
  if (!value) return null_arg("value");
  return guard([&] { c->c.set(key, value); });
}

swl_status swl_config_load(swl_config* c, const char* path) {
  if (!c) return null_arg("c");
  if (!path) return null_arg("path");
  return guard([&] { c->c.update_from_file(path); });
}

swl_status swl_config_apply_env(swl_config* c) {
  if (!c) return null_arg("c");
  return guard([&] { c->c.apply_env(); });
}

swl_status swl_config_serialize(const swl_config* c, char** out) {
  if (!c) return null_arg("c");
  if (!out) return null_arg("out");
  return guard([&] { *out = dup(c->c.serialize()); });
}

swl_status swl_scan(const swl_config* c, char** json, char** csv) {
  if (!c) return null_arg("c");
  return guard([&] {
    swl::HierarchyReport rep = swl::cmd_scan(c->c);
    if (json) *json = dup(rep.to_json(c->c.timing));
    if (csv) *csv = dup(rep.to_csv());
  });
}

swl_status swl_verify(const swl_config* c, int as_json, int* passed, char** report) {
  if (!c) return null_arg("c");
  if (!passed) return null_arg("passed");
  return guard([&] {
    swl::VerifyReport rep = swl::cmd_verify(c->c);
    *passed = rep.passed() ? 1 : 0;
    if (report) *report = dup(as_json ? rep.to_json(c->c.timing) : rep.to_text());
  });
}

swl_status swl_hunt(const swl_config* c, size_t* found, char** report) {
  if (!c) return null_arg("c");
  return guard([&] {
    swl::HuntReport rep = swl::cmd_hunt(c->c);
    if (found) *found = rep.witnesses.size();
    if (report) *report = dup(rep.to_text());
  });
}

}  // extern "C"
