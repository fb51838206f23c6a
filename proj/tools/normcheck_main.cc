// Copyright 2026 The normcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// normcheck: densities, necessary-condition checks and falsifiers for weak
// norming.
//
// Exit codes: analyze 0 pass / 1 not weakly norming; falsify 0 found /
// 3 none found; verify 0 pass / 1 fail; selftest 0 / 1. Input errors exit 2
// everywhere.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "normcheck/analyzer.h"
#include "normcheck/catalog.h"
#include "normcheck/certificate.h"
#include "normcheck/density.h"
#include "normcheck/error.h"
#include "normcheck/graph_io.h"
#include "normcheck/report.h"
#include "normcheck/selftest.h"

namespace nc = normcheck;

namespace {

constexpr int kInputError = 2;

struct GraphInput {
  std::string name, graph6, edge_list;

  void attach(CLI::App* cmd) {
    auto* group = cmd->add_option_group("graph input");
    group->add_option("--name", name, "catalog name, e.g. C4, K_3_3, torus_6_6, C4+C6");
    group->add_option("--graph6", graph6, "graph in graph6 format");
    group->add_option("--edge-list", edge_list, "file with one 'u v' pair per line");
    group->require_option(1);
  }
};

struct Options {
  std::string format = "text";
  nc::SearchConfig search;
  int q_min = 2, q_max = 3;
  int threads = 0;

  void attach_format(CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "kv"}));
  }
  void attach_search(CLI::App* cmd) {
    cmd->add_option("--seed", search.seed, "search seed");
    cmd->add_option("--restarts", search.restarts, "restarts per falsifier")->check(CLI::PositiveNumber);
    cmd->add_option("--steps", search.steps, "ascent steps per restart")->check(CLI::PositiveNumber);
    cmd->add_option("--q-min", q_min, "fewest kernel blocks")->check(CLI::Range(1, 16));
    cmd->add_option("--q-max", q_max, "most kernel blocks")->check(CLI::Range(1, 16));
    cmd->add_option("--cap", search.value_cap, "largest kernel value")->check(CLI::PositiveNumber);
    cmd->add_option("--work-limit", search.work_limit, "multiply-add budget per falsifier")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--threads", threads, "concurrent restarts (default: NORMCHECK_THREADS or 1)")
        ->check(CLI::PositiveNumber);
  }

  nc::SearchConfig config() const {
    if (q_min > q_max) throw nc::DomainError("--q-min exceeds --q-max");
    nc::SearchConfig c = search;
    c.min_blocks = q_min;
    c.max_blocks = q_max;
    c.threads = threads;
    if (c.threads == 0) {
      c.threads = 1;
      if (const char* env = std::getenv("NORMCHECK_THREADS")) {
        const int t = std::atoi(env);
        if (t > 0) c.threads = t;
      }
    }
    return c;
  }
  bool kv() const { return format == "kv"; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw nc::DomainError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

nc::Graph load_graph(const GraphInput& in) {
  if (!in.name.empty()) return nc::catalog_entry(in.name).graph;
  if (!in.graph6.empty()) return nc::parse_graph6(in.graph6);
  return nc::parse_edge_list(read_file(in.edge_list));
}

nc::StepGraphon load_graphon(const std::string& path) {
  try {
    return nc::parse_graphon(read_file(path));
  } catch (const nc::ParseError& e) {
    throw nc::ParseError(path + ": " + e.what(), e.offset(), e.line());
  }
}

int cmd_analyze(const GraphInput& input, const Options& opts) {
  const nc::Graph g = load_graph(input);
  const nc::NormingReport report = nc::necessary_conditions_pipeline(g, opts.config());
  std::optional<nc::CatalogEntry> entry;
  if (!input.name.empty()) entry = nc::catalog_entry(input.name);
  if (opts.kv()) {
    nc::Records r = nc::report_records(report);
    if (entry) {
      r.add("catalog.name", entry->name);
      r.add("catalog.known_status", nc::to_string(entry->known_status));
      if (!entry->note.empty()) r.add("catalog.note", entry->note);
    }
    std::cout << r.str();
  } else {
    std::cout << nc::report_text(report);
    if (entry) {
      std::cout << "literature: " << nc::to_string(entry->known_status);
      if (!entry->note.empty()) std::cout << " (" << entry->note << ')';
      std::cout << '\n';
    }
  }
  return report.verdict == nc::Verdict::kNotWeaklyNorming ? 1 : 0;
}

struct DensityFlags {
  std::string graphon;
  std::vector<std::string> multilinear;
  bool edge_deleted = false;
  bool brute_force = false;
};

int cmd_density(const GraphInput& input, const DensityFlags& flags, const Options& opts) {
  const nc::Graph g = load_graph(input);
  const nc::DensityMethod method = flags.brute_force ? nc::DensityMethod::kOracle : nc::DensityMethod::kContraction;
  nc::Records r;
  std::vector<double> values;
  if (!flags.multilinear.empty()) {
    if (flags.edge_deleted) throw nc::DomainError("--edge-deleted needs a single graphon, not --multilinear");
    if (static_cast<int>(flags.multilinear.size()) != g.num_edges()) {
      throw nc::DomainError("--multilinear got " + std::to_string(flags.multilinear.size()) +
                            " kernels for a graph with " + std::to_string(g.num_edges()) + " edges");
    }
    std::vector<nc::StepGraphon> kernels;
    for (const auto& path : flags.multilinear) kernels.push_back(load_graphon(path));
    const nc::EdgeAssignment a(g, std::move(kernels));
    values.push_back(flags.brute_force ? nc::brute_force_multilinear(a).value : nc::multilinear_density(a).value);
  } else {
    if (flags.graphon.empty()) throw nc::DomainError("density needs a graphon file or --multilinear");
    const nc::StepGraphon h = load_graphon(flags.graphon);
    if (flags.edge_deleted) {
      if (flags.brute_force) {
        for (int l = 0; l < g.num_edges(); ++l) {
          values.push_back(nc::brute_force_density(nc::delete_edge(g, l), h).value);
        }
      } else {
        values = nc::edge_deleted_densities(g, h);
      }
    } else {
      values.push_back(flags.brute_force ? nc::brute_force_density(g, h).value : nc::density(g, h).value);
    }
  }
  if (opts.kv()) {
    if (flags.edge_deleted) {
      for (std::size_t l = 0; l < values.size(); ++l) r.add("t." + std::to_string(l), values[l]);
    } else {
      r.add("value", values[0]);
    }
    r.add("method", nc::to_string(method));
    std::cout << r.str();
  } else {
    for (std::size_t i = 0; i < values.size(); ++i) std::cout << (i ? " " : "") << nc::format_value(values[i]);
    std::cout << "\nmethod " << nc::to_string(method) << '\n';
  }
  return 0;
}

int cmd_falsify(const GraphInput& input, const std::string& target, const std::string& out_path,
                const Options& opts) {
  const nc::Graph g = load_graph(input);
  const nc::SearchConfig config = opts.config();
  std::optional<nc::Certificate> cert;
  nc::SearchStats stats;
  if (target == "lemma") {
    auto result = nc::falsify_lemma(g, config);
    stats = result.stats;
    if (result.certificate) cert = *result.certificate;
  } else {
    auto result = nc::falsify_holder(g, config);
    stats = result.stats;
    if (result.certificate) cert = *result.certificate;
  }
  nc::Records r;
  r.add("target", target);
  r.add("found", cert.has_value());
  r.add("restarts_run", stats.restarts_run);
  r.add("budget_exhausted", stats.budget_exhausted);
  if (cert) {
    r.add("success_restart", stats.success_restart);
    if (const auto* lemma = std::get_if<nc::LemmaCertificate>(&*cert)) {
      r.add("gap", lemma->gap);
    } else {
      r.add("violation", std::get<nc::HolderCertificate>(*cert).violation);
    }
    const std::string text = nc::format_certificate(*cert);
    if (!out_path.empty()) {
      std::ofstream out(out_path, std::ios::binary);
      if (!(out << text)) throw nc::DomainError("cannot write '" + out_path + "'");
      r.add("certificate", out_path);
    }
    if (opts.kv()) {
      std::cout << r.str();
    } else {
      std::cout << target << " certificate found at restart " << stats.success_restart << ", "
                << (r.find("gap") ? "gap " + *r.find("gap") : "violation " + *r.find("violation")) << '\n';
      if (out_path.empty()) std::cout << text;
      else std::cout << "written to " << out_path << '\n';
    }
    return 0;
  }
  if (opts.kv()) {
    std::cout << r.str();
  } else {
    std::cout << "none found after " << stats.restarts_run << " restarts"
              << (stats.budget_exhausted ? " (work limit reached)" : "")
              << "; this is not evidence that no violation exists\n";
  }
  return 3;
}

int cmd_verify(const std::string& path, bool oracle, double tolerance, const Options& opts) {
  const nc::Certificate cert = nc::parse_certificate(read_file(path));
  const auto mode = oracle ? nc::RecomputeMode::kOracle : nc::RecomputeMode::kAuto;
  const nc::VerifyResult result = nc::verify_certificate(cert, tolerance, mode);
  if (opts.kv()) {
    nc::Records r;
    r.add("passed", result.passed);
    r.add("detail", result.detail);
    std::cout << r.str();
  } else {
    std::cout << (result.passed ? "pass: " : "fail: ") << result.detail << '\n';
  }
  return result.passed ? 0 : 1;
}

int cmd_catalog_list(const Options& opts) {
  nc::Records r;
  for (const auto& name : nc::catalog_names()) {
    const nc::CatalogEntry e = nc::catalog_entry(name);
    if (opts.kv()) {
      r.add(name + ".graph6", nc::to_graph6(e.graph));
      r.add(name + ".known_status", nc::to_string(e.known_status));
    } else {
      std::printf("%-10s %-26s %s\n", name.c_str(), nc::to_string(e.known_status).c_str(), e.note.c_str());
    }
  }
  if (opts.kv()) std::cout << r.str();
  return 0;
}

int cmd_catalog_build(const std::string& name, const Options& opts) {
  const nc::CatalogEntry e = nc::catalog_entry(name);
  if (!opts.kv()) {
    std::cout << nc::to_graph6(e.graph) << '\n';
    return 0;
  }
  nc::Records r;
  r.add("name", e.name);
  r.add("family", e.family);
  r.add("vertices", e.graph.num_vertices());
  r.add("edges", e.graph.num_edges());
  r.add("graph6", nc::to_graph6(e.graph));
  r.add("known_status", nc::to_string(e.known_status));
  if (!e.note.empty()) r.add("note", e.note);
  std::cout << r.str();
  return 0;
}

int cmd_selftest(bool quick, std::uint64_t seed, const Options& opts) {
  const auto suites = nc::run_selftest({quick, seed});
  const nc::Records r = nc::selftest_records(suites);
  std::cout << (opts.kv() ? r.str() : nc::selftest_text(suites));
  return *r.find("selftest.passed") == "true" ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"normcheck: homomorphism densities and necessary conditions for weak norming"};
  app.require_subcommand(1);
  Options opts;

  GraphInput analyze_in;
  auto* analyze = app.add_subcommand("analyze", "run every necessary-condition check");
  analyze_in.attach(analyze);
  opts.attach_format(analyze);
  opts.attach_search(analyze);

  GraphInput density_in;
  DensityFlags dflags;
  auto* dens = app.add_subcommand("density", "homomorphism density t_G(h)");
  density_in.attach(dens);
  dens->add_option("graphon", dflags.graphon, "graphon file");
  dens->add_option("--multilinear", dflags.multilinear, "one graphon file per edge, in edge order");
  dens->add_flag("--edge-deleted", dflags.edge_deleted, "print t_{G-e_l}(h) for every edge");
  dens->add_flag("--brute-force", dflags.brute_force, "enumerate every block map");
  opts.attach_format(dens);

  GraphInput falsify_in;
  std::string target, out_path;
  auto* falsify = app.add_subcommand("falsify", "search for a violation certificate");
  falsify_in.attach(falsify);
  falsify->add_option("--target", target, "lemma or holder")->required()->check(CLI::IsMember({"lemma", "holder"}));
  falsify->add_option("--out", out_path, "certificate file");
  opts.attach_format(falsify);
  opts.attach_search(falsify);

  std::string cert_path;
  bool oracle = false;
  double tolerance = 1e-8;
  auto* verify = app.add_subcommand("verify", "recompute a certificate from scratch");
  verify->add_option("certificate", cert_path, "certificate file")->required();
  verify->add_flag("--oracle", oracle, "force brute-force recomputation");
  verify->add_option("--tolerance", tolerance, "relative tolerance")->check(CLI::PositiveNumber);
  opts.attach_format(verify);

  std::string build_name;
  auto* catalog = app.add_subcommand("catalog", "named graph families");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "list catalog entries");
  auto* build = catalog->add_subcommand("build", "print a catalog graph in graph6");
  build->add_option("name", build_name, "catalog name")->required();
  opts.attach_format(list);
  opts.attach_format(build);

  bool quick = false;
  std::uint64_t selftest_seed = 0;
  auto* selftest = app.add_subcommand("selftest", "seeded property suites");
  selftest->add_flag("--quick", quick, "reduced trial counts");
  selftest->add_option("--seed", selftest_seed, "suite seed");
  opts.attach_format(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_in, opts);
    if (*dens) return cmd_density(density_in, dflags, opts);
    if (*falsify) return cmd_falsify(falsify_in, target, out_path, opts);
    if (*verify) return cmd_verify(cert_path, oracle, tolerance, opts);
    if (*list) return cmd_catalog_list(opts);
    if (*build) return cmd_catalog_build(build_name, opts);
    if (*selftest) return cmd_selftest(quick, selftest_seed, opts);
  } catch (const nc::ParseError& e) {
    std::cerr << "parse error";
    if (e.line() > 0) std::cerr << " at line " << e.line();
    else std::cerr << " at byte " << e.offset();
    std::cerr << ": " << e.what() << '\n';
    return kInputError;
  } catch (const nc::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kInputError;
  } catch (const nc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
