//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cstdio>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spectral_wl/spectral_wl.h"

namespace {

enum Exit { kOk = 0, kDistinguished = 1, kUsage = 2, kInternal = 3 };

int exit_for(swl_status s) {
  std::fprintf(stderr, "swl: %s: %s\n", swl_status_name(s), swl_last_error());
  return s == SWL_ERR_INTERNAL || s == SWL_ERR_NUMERIC ? kInternal : kUsage;
}

struct GraphPtr {
  swl_graph* p = nullptr;
  ~GraphPtr() { swl_graph_free(p); }
};

struct ConfigPtr {
  swl_config* p = nullptr;
  ~ConfigPtr() { swl_config_free(p); }
};

struct StringPtr {
  char* p = nullptr;
  ~StringPtr() { swl_string_free(p); }
};

void print(const char* s) {
  if (s) std::fputs(s, stdout);
}

// Config layering: defaults, then --config file, then SWL_* environment, then
// explicit flags.
struct ConfigOptions {
  std::string file;
  std::map<std::string, std::string> flags;

  void add(CLI::App* app, const std::string& flag, const std::string& key, const std::string& help) {
    app->add_option_function<std::string>(flag, [this, key](const std::string& v) { flags[key] = v; }, help);
  }

  swl_status build(const std::string& command, ConfigPtr& out) const {
    swl_status s = swl_config_new(&out.p);
    if (s == SWL_OK) s = swl_config_set(out.p, "command", command.c_str());
    if (s == SWL_OK && !file.empty()) s = swl_config_load(out.p, file.c_str());
    if (s == SWL_OK) s = swl_config_apply_env(out.p);
    for (const auto& [k, v] : flags)
      if (s == SWL_OK) s = swl_config_set(out.p, k.c_str(), v.c_str());
    return s;
  }
};

swl_status load_graph(const std::string& text, GraphPtr& g) { return swl_graph_from_graph6(text.c_str(), &g.p); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral-invariant Weisfeiler-Lehman refinement toolkit"};
  app.set_version_flag("--version", swl_version());
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  int code = kOk;

  // compare
  auto* compare = app.add_subcommand("compare", "Exit 1 if the algorithm separates two graphs, 0 otherwise; prints JSON detail");
  std::string alg, g6, h6;
  int digits = -1;
  double eig_tol = 0;
  compare->set_help_flag("--help", "Print this help message and exit");
  compare->add_option("--alg", alg, "Algorithm spec, e.g. epwl:Lhat, gdwl:rd, basisnet:A:layers=1")->required();
  compare->add_option("--g", g6, "First graph (graph6)")->required();
  compare->add_option("--h", h6, "Second graph (graph6)")->required();
  compare->add_option("--digits", digits, "Decimals kept in spectral tokens")->check(CLI::Range(0, 9));
  compare->add_option("--eig-rel-tol", eig_tol, "Relative eigenvalue clustering tolerance")->check(CLI::PositiveNumber);
  compare->callback([&] {
    GraphPtr g, h;
    StringPtr json;
    int distinguished = 0;
    swl_status s = load_graph(g6, g);
    if (s == SWL_OK) s = load_graph(h6, h);
    if (s == SWL_OK) s = swl_distinguishes(alg.c_str(), g.p, h.p, digits, eig_tol, &distinguished, &json.p);
    if (s != SWL_OK) {
      code = exit_for(s);
      return;
    }
    print(json.p);
    code = distinguished ? kDistinguished : kOk;
  });

  // scan
  auto* scan = app.add_subcommand("scan", "Hierarchy report (JSON, plus CSV next to --output) over a corpus");
  ConfigOptions scan_cfg;
  scan->add_option("--config", scan_cfg.file, "key=value config file")->check(CLI::ExistingFile);
  scan_cfg.add(scan, "--algs", "algorithms", "Algorithm specs, comma or space separated");
  scan_cfg.add(scan, "--corpus", "corpus", "Corpus files or generators connected:a-b / all:a-b, comma separated");
  scan_cfg.add(scan, "--output", "output", "JSON report path; CSV written with the .csv extension");
  scan_cfg.add(scan, "--parallelism", "parallelism", "Worker threads across algorithms");
  scan_cfg.add(scan, "--digits", "digits", "Decimals kept in spectral tokens");
  scan_cfg.add(scan, "--eig-rel-tol", "eig_rel_tol", "Relative eigenvalue clustering tolerance");
  scan_cfg.add(scan, "--timing", "timing", "Include timings in JSON (true/false)");
  bool scan_csv = false;
  scan->add_flag("--csv", scan_csv, "Print CSV instead of JSON on stdout");
  scan->callback([&] {
    ConfigPtr cfg;
    StringPtr json, csv;
    swl_status s = scan_cfg.build("scan", cfg);
    if (s == SWL_OK) s = swl_scan(cfg.p, &json.p, &csv.p);
    if (s != SWL_OK) {
      code = exit_for(s);
      return;
    }
    print(scan_csv ? csv.p : json.p);
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Run the property suites; exit 1 on any violation");
  ConfigOptions verify_cfg;
  verify->add_option("--config", verify_cfg.file, "key=value config file")->check(CLI::ExistingFile);
  verify_cfg.add(verify, "--corpus", "corpus", "Corpus files or generators (default connected:2-6)");
  verify_cfg.add(verify, "--pairs", "pairs", "Pair corpus files for the distinguishing-count suite");
  verify_cfg.add(verify, "--algs", "algorithms", "Specs for the relabeling-invariance suite");
  verify_cfg.add(verify, "--seed", "seed", "Seed for random graphs and relabelings");
  verify_cfg.add(verify, "--digits", "digits", "Decimals kept in spectral tokens");
  verify_cfg.add(verify, "--eig-rel-tol", "eig_rel_tol", "Relative eigenvalue clustering tolerance");
  verify_cfg.add(verify, "--random-graphs", "random_graphs", "Random connected graphs for the distance suites");
  verify_cfg.add(verify, "--random-max-n", "random_max_n", "Largest random graph");
  verify_cfg.add(verify, "--furer-max-n", "furer_max_n", "Largest Fürer base for the parity suite");
  verify_cfg.add(verify, "--timing", "timing", "Include timings in JSON (true/false)");
  bool verify_json = false;
  verify->add_flag("--json", verify_json, "Print JSON instead of text");
  verify->callback([&] {
    ConfigPtr cfg;
    StringPtr report;
    int passed = 0;
    swl_status s = verify_cfg.build("verify", cfg);
    if (s == SWL_OK) s = swl_verify(cfg.p, verify_json ? 1 : 0, &passed, &report.p);
    if (s != SWL_OK) {
      code = exit_for(s);
      return;
    }
    print(report.p);
    code = passed ? kOk : kDistinguished;
  });

  // hunt
  auto* hunt = app.add_subcommand("hunt", "Search pairs separated by exactly one of two algorithms");
  ConfigOptions hunt_cfg;
  std::string hunt_a, hunt_b;
  hunt->add_option("--config", hunt_cfg.file, "key=value config file")->check(CLI::ExistingFile);
  hunt->add_option("--a", hunt_a, "First algorithm spec");
  hunt->add_option("--b", hunt_b, "Second algorithm spec");
  hunt_cfg.add(hunt, "--max-base-n", "max_base_n", "Largest enumerated Fürer base");
  hunt_cfg.add(hunt, "--min-base-n", "min_base_n", "Smallest Fürer base");
  hunt_cfg.add(hunt, "--max-random-n", "max_random_n", "Largest random Fürer base");
  hunt_cfg.add(hunt, "--max-product-vertices", "max_product_vertices", "Skip bases with larger Fürer products");
  hunt_cfg.add(hunt, "--budget", "budget", "Candidate pair evaluations");
  hunt_cfg.add(hunt, "--seed", "seed", "Seed for random bases");
  hunt_cfg.add(hunt, "--output", "output", "Witness corpus file (overwritten)");
  hunt_cfg.add(hunt, "--regression", "regression", "Regression corpus to append new witnesses to");
  hunt_cfg.add(hunt, "--digits", "digits", "Decimals kept in spectral tokens");
  hunt->callback([&] {
    ConfigPtr cfg;
    StringPtr report;
    std::size_t found = 0;
    ConfigOptions opts = hunt_cfg;
    if (!hunt_a.empty() || !hunt_b.empty()) {
      if (hunt_a.empty() || hunt_b.empty()) {
        std::fprintf(stderr, "swl: hunt needs both --a and --b\n");
        code = kUsage;
        return;
      }
      opts.flags["algorithms"] = hunt_a + " " + hunt_b;
    }
    swl_status s = opts.build("hunt", cfg);
    if (s == SWL_OK) s = swl_hunt(cfg.p, &found, &report.p);
    if (s != SWL_OK) {
      code = exit_for(s);
      return;
    }
    print(report.p);
  });

  // distances
  auto* distances = app.add_subcommand("distances", "Distance matrix as CSV, 'inf' between components");
  std::string dist_kind, dist_g;
  distances->add_option("--kind", dist_kind, "spd, rd, htd, ctd, prd:w=g0,g1,..., diffusion:t=tau, biharmonic")->required();
  distances->add_option("--g", dist_g, "Graph (graph6)")->required();
  distances->callback([&] {
    GraphPtr g;
    StringPtr csv;
    swl_status s = load_graph(dist_g, g);
    if (s == SWL_OK) s = swl_distances_csv(dist_kind.c_str(), g.p, &csv.p);
    if (s != SWL_OK) {
      code = exit_for(s);
      return;
    }
    print(csv.p);
  });

  // furer
  auto* furer = app.add_subcommand("furer", "Fürer graph of a base graph, optionally twisted; prints graph6");
  std::string base6, twist;
  furer->add_option("--base", base6, "Connected base graph (graph6)")->required();
  furer->add_option("--twist", twist, "Twisted base edges, e.g. 0-1,2-3");
  furer->callback([&] {
    GraphPtr base, out;
    StringPtr g6;
    swl_status s = load_graph(base6, base);
    if (s == SWL_OK) s = swl_furer(base.p, twist.c_str(), &out.p);
    if (s == SWL_OK) s = swl_graph_to_graph6(out.p, &g6.p);
    if (s != SWL_OK) {
      code = exit_for(s);
      return;
    }
    std::printf("%s\n", g6.p);
  });

  // token
  auto* token = app.add_subcommand("token", "k-th token graph; prints graph6");
  int k = 2;
  std::string token_g;
  token->add_option("--k", k, "Subset size")->check(CLI::PositiveNumber);
  token->add_option("--g", token_g, "Graph (graph6)")->required();
  token->callback([&] {
    GraphPtr g, out;
    StringPtr g6;
    swl_status s = load_graph(token_g, g);
    if (s == SWL_OK) s = swl_token_graph(g.p, k, &out.p);
    if (s == SWL_OK) s = swl_graph_to_graph6(out.p, &g6.p);
    if (s != SWL_OK) {
      code = exit_for(s);
      return;
    }
    std::printf("%s\n", g6.p);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  return code;
}
