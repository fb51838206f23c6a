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

#include "normcheck/analyzer.h"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <random>
#include <sstream>

#include "normcheck/error.h"

namespace normcheck {

std::string to_string(Verdict v) {
  return v == Verdict::kNotWeaklyNorming ? "NotWeaklyNorming" : "PassesAllNecessaryConditions";
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPassed:
      return "passed";
    case CheckStatus::kFailed:
      return "failed";
    case CheckStatus::kInconclusive:
      return "inconclusive";
    case CheckStatus::kNotRun:
      break;
  }
  return "not_run";
}

namespace {

void require_nonnegative(const StepGraphon& h, const char* what) {
  if (!h.is_nonnegative()) {
    throw DomainError(std::string(what) + ": kernel has negative values; only nonnegative kernels are admissible");
  }
}

bool close(double a, double b, double relative) {
  return std::abs(a - b) <= relative * std::max({1.0, std::abs(a), std::abs(b)});
}

// t_G(h) for each kernel, evaluated once per distinct kernel.
class SelfDensityCache {
 public:
  SelfDensityCache(const Graph& g, const DensityOptions& options) : g_(g), options_(options) {}

  double operator()(const StepGraphon& h) {
    for (const auto& [kernel, value] : entries_) {
      if (kernel == h) return value;
    }
    const double value = density(g_, h, options_).value;
    entries_.emplace_back(h, value);
    return value;
  }

 private:
  const Graph& g_;
  const DensityOptions& options_;
  std::vector<std::pair<StepGraphon, double>> entries_;
};

std::pair<int, int> extremal_edges(const std::vector<double>& t) {
  int lo = 0, hi = 0;
  for (int l = 1; l < static_cast<int>(t.size()); ++l) {
    if (t[l] < t[lo]) lo = l;
    if (t[l] > t[hi]) hi = l;
  }
  return {lo, hi};
}

StepGraphon scaled(const StepGraphon& h, double c) {
  std::vector<double> values = h.values();
  for (double& x : values) x *= c;
  return with_values(h, std::move(values));
}

template <typename Certificate>
struct RestartOutcome {
  std::optional<Certificate> certificate;
  double work = 0.0;
};

// Runs restarts 0..restarts-1 (batches of config.threads run concurrently)
// and merges in index order, so the outcome never depends on the thread
// count: the first successful restart wins and the work limit is applied to
// the cumulative work of restarts in index order.
template <typename Certificate, typename RunOne>
std::pair<std::optional<Certificate>, SearchStats> run_restarts(const SearchConfig& config,
                                                                RunOne&& run_one) {
  SearchStats stats;
  const int threads = std::max(1, config.threads);
  for (int start = 0; start < config.restarts; start += threads) {
    const int end = std::min(config.restarts, start + threads);
    std::vector<RestartOutcome<Certificate>> outcomes(end - start);
    if (end - start == 1) {
      outcomes[0] = run_one(start);
    } else {
      std::vector<std::future<RestartOutcome<Certificate>>> futures;
      for (int r = start; r < end; ++r) {
        futures.push_back(std::async(std::launch::async, [&run_one, r] { return run_one(r); }));
      }
      for (int i = 0; i < end - start; ++i) outcomes[i] = futures[i].get();
    }
    for (int r = start; r < end; ++r) {
      if (stats.work >= config.work_limit) {
        stats.budget_exhausted = true;
        return {std::nullopt, stats};
      }
      auto& outcome = outcomes[r - start];
      stats.work += outcome.work;
      ++stats.restarts_run;
      if (outcome.certificate) {
        stats.success_restart = r;
        return {std::move(outcome.certificate), stats};
      }
    }
  }
  return {std::nullopt, stats};
}

int restart_blocks(const SearchConfig& config, int r) {
  const int lo = std::max(1, config.min_blocks);
  const int span = std::max(1, config.max_blocks - lo + 1);
  return lo + r % span;
}

}  // namespace

HolderCheckResult holder_check(const EdgeAssignment& a, double tolerance, const DensityOptions& options) {
  for (const auto& h : a.kernels()) require_nonnegative(h, "holder_check");
  const Graph& g = a.graph();
  const int k = g.num_edges();
  HolderCheckResult result;
  result.lhs = std::pow(multilinear_density(a, options).value, k);
  SelfDensityCache self(g, options);
  result.rhs = 1.0;
  for (const auto& h : a.kernels()) result.rhs *= self(h);
  result.margin = result.rhs - result.lhs;
  result.holds = result.margin >= -tolerance;
  return result;
}

std::optional<LemmaCertificate> lemma_equality_check(const Graph& g, const StepGraphon& h, double tolerance,
                                                     const DensityOptions& options) {
  require_nonnegative(h, "lemma_equality_check");
  if (g.num_edges() == 0) return std::nullopt;
  const auto t = edge_deleted_densities(g, h, options);
  const auto [lo, hi] = extremal_edges(t);
  if (t[hi] - t[lo] <= tolerance) return std::nullopt;
  return LemmaCertificate{g, h, lo, hi, t[lo], t[hi], t[hi] - t[lo]};
}

LemmaSearchResult falsify_lemma(const Graph& g, const SearchConfig& config) {
  const int k = g.num_edges();
  if (k < 2) return {};

  auto run_one = [&](int r) {
    RestartOutcome<LemmaCertificate> outcome;
    const int q = restart_blocks(config, r);
    const double eval_cost = 3.0 * plan_contraction(g, q).cost_estimate + 1.0;
    StepGraphon h = random_graphon(q, 0.0, 1.0, derive_seed(config.seed, r));

    // Relative gap; invariant under scaling h, so the climb cannot win by
    // inflating values.
    auto relative_gap = [&](const StepGraphon& kernel) {
      outcome.work += eval_cost;
      const auto t = edge_deleted_densities(g, kernel, config.density);
      const auto [lo, hi] = extremal_edges(t);
      return t[hi] > 0.0 ? (t[hi] - t[lo]) / t[hi] : 0.0;
    };
    auto certify = [&](const StepGraphon& kernel) -> std::optional<LemmaCertificate> {
      // Scale so that the largest t_l is 1; t_l is homogeneous of degree k-1.
      const auto t = edge_deleted_densities(g, kernel, config.density);
      const double top = *std::max_element(t.begin(), t.end());
      if (!(top > 0.0)) return std::nullopt;
      const StepGraphon normalized = scaled(kernel, std::pow(top, -1.0 / (k - 1)));
      return lemma_equality_check(g, normalized, config.threshold, config.density);
    };

    // Climb to a local optimum before certifying, so reported gaps are not
    // merely just above the threshold.
    double gap = relative_gap(h);
    double step = 0.25;
    int trials = 0;
    int sweeps = 0;
    while (trials < config.steps && outcome.work < config.work_limit) {
      bool improved = false;
      for (int a = 0; a < q && trials < config.steps; ++a) {
        for (int b = a; b < q && trials < config.steps; ++b) {
          for (double direction : {+1.0, -1.0}) {
            const double x = h.value(a, b);
            const double y = std::clamp(x + direction * step, 0.0, config.value_cap);
            if (y == x) continue;
            std::vector<double> values = h.values();
            values[a * q + b] = values[b * q + a] = y;
            StepGraphon candidate = with_values(h, std::move(values));
            ++trials;
            const double candidate_gap = relative_gap(candidate);
            if (candidate_gap > gap) {
              h = std::move(candidate);
              gap = candidate_gap;
              improved = true;
              break;
            }
          }
        }
      }
      ++sweeps;
      // A gap at rounding level after a full sweep gives nothing to climb.
      if (sweeps == 1 && gap <= 1e-12) break;
      if (!improved) {
        step *= 0.5;
        if (step < 1e-9) break;
      }
    }
    if (gap > config.threshold) outcome.certificate = certify(h);
    return outcome;
  };

  auto [certificate, stats] = run_restarts<LemmaCertificate>(config, run_one);
  return {std::move(certificate), stats};
}

namespace {

StepGraphon halves(double a, double b, double c) { return StepGraphon({0.5, 0.5}, {a, b, b, c}); }

// Structured and random starting points; see falsify_holder.
std::vector<StepGraphon> holder_seed(const Graph& g, const SearchConfig& config, int r) {
  const int k = g.num_edges();
  std::mt19937_64 rng(derive_seed(config.seed, r));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int round = r / 3;
  switch (r % 3) {
    case 0: {
      // 1-padded: one slot carries a two-block pattern.
      const StepGraphon patterns[] = {halves(0, 1, 0), halves(1, 0, 1), halves(1, 1, 0), halves(0, 0, 1)};
      std::vector<StepGraphon> kernels(k, constant_graphon(1.0));
      kernels[round % k] = patterns[(round / k) % 4];
      return kernels;
    }
    case 1: {
      // Perturbed bipartite pattern on every edge.
      std::vector<StepGraphon> kernels;
      for (int l = 0; l < k; ++l) {
        kernels.push_back(halves(0.2 * unit(rng), 1.0 - 0.2 * unit(rng), 0.2 * unit(rng)));
      }
      return kernels;
    }
    default: {
      const int q = restart_blocks(config, round);
      std::vector<StepGraphon> kernels;
      for (int l = 0; l < k; ++l) kernels.push_back(random_graphon(q, 0.0, 1.0, rng()));
      return kernels;
    }
  }
}

}  // namespace

HolderSearchResult falsify_holder(const Graph& g, const SearchConfig& config) {
  const int k = g.num_edges();
  if (k < 2) return {};

  auto run_one = [&](int r) {
    RestartOutcome<HolderCertificate> outcome;
    std::vector<StepGraphon> kernels = common_refinement(holder_seed(g, config, r));
    const int q = kernels.front().blocks();
    const double eval_cost = plan_contraction(g, q).cost_estimate + 1.0;

    double joint = 0.0;
    std::vector<double> self(k);
    auto evaluate_joint = [&](const std::vector<StepGraphon>& ks) {
      outcome.work += eval_cost;
      return multilinear_density(EdgeAssignment(g, ks), config.density).value;
    };
    auto evaluate_self = [&](const StepGraphon& h) {
      outcome.work += eval_cost;
      return density(g, h, config.density).value;
    };
    // k log T - Σ log S_l; +inf when some S_l vanishes while T does not.
    auto objective = [&](double t, const std::vector<double>& s) {
      if (!(t > 0.0)) return -std::numeric_limits<double>::infinity();
      double value = k * std::log(t);
      for (double x : s) {
        if (!(x > 0.0)) return std::numeric_limits<double>::infinity();
        value -= std::log(x);
      }
      return value;
    };
    auto certify = [&]() -> std::optional<HolderCertificate> {
      // Common scale making t_G(h_1..h_k) = 1, so that lhs = 1 and the
      // violation 1 - rhs is a relative quantity.
      const double c = std::pow(joint, -1.0 / k);
      std::vector<StepGraphon> normalized;
      for (const auto& h : kernels) normalized.push_back(scaled(h, c));
      EdgeAssignment assignment(g, std::move(normalized));
      const auto check = holder_check(assignment, 0.0, config.density);
      if (-check.margin <= config.threshold) return std::nullopt;
      return HolderCertificate{std::move(assignment), check.lhs, check.rhs, -check.margin};
    };

    joint = evaluate_joint(kernels);
    {
      SelfDensityCache cache(g, config.density);
      for (int l = 0; l < k; ++l) self[l] = cache(kernels[l]);
      outcome.work += eval_cost;
    }
    double f = objective(joint, self);
    auto violated = [&] { return -std::expm1(-f) > config.threshold; };
    if (violated()) {
      outcome.certificate = certify();
      if (outcome.certificate) return outcome;
    }

    double step = 0.25;
    int trials = 0;
    while (trials < config.steps && outcome.work < config.work_limit) {
      bool improved = false;
      for (int l = 0; l < k && trials < config.steps && outcome.work < config.work_limit; ++l) {
        for (int a = 0; a < q && trials < config.steps; ++a) {
          for (int b = a; b < q && trials < config.steps; ++b) {
            for (double direction : {+1.0, -1.0}) {
              const double x = kernels[l].value(a, b);
              const double y = std::clamp(x + direction * step, 0.0, config.value_cap);
              if (y == x) continue;
              std::vector<double> values = kernels[l].values();
              values[a * q + b] = values[b * q + a] = y;
              std::vector<StepGraphon> candidate = kernels;
              candidate[l] = with_values(kernels[l], std::move(values));
              ++trials;
              const double candidate_joint = evaluate_joint(candidate);
              std::vector<double> candidate_self = self;
              candidate_self[l] = evaluate_self(candidate[l]);
              const double candidate_f = objective(candidate_joint, candidate_self);
              if (candidate_f > f) {
                kernels = std::move(candidate);
                joint = candidate_joint;
                self = std::move(candidate_self);
                f = candidate_f;
                improved = true;
                if (violated()) {
                  outcome.certificate = certify();
                  if (outcome.certificate) return outcome;
                }
                break;
              }
            }
          }
        }
      }
      if (!improved) {
        step *= 0.5;
        if (step < 1e-9) break;
      }
    }
    return outcome;
  };

  auto [certificate, stats] = run_restarts<HolderCertificate>(config, run_one);
  return {std::move(certificate), stats};
}

namespace {

bool use_oracle(const Graph& g, int q, RecomputeMode mode) {
  switch (mode) {
    case RecomputeMode::kOracle:
      return true;  // brute force throws BudgetExceeded when infeasible
    case RecomputeMode::kContraction:
      return false;
    case RecomputeMode::kAuto:
      break;
  }
  return brute_force_feasible(g, q);
}

double recompute(const Graph& g, const StepGraphon& h, RecomputeMode mode) {
  return use_oracle(g, h.blocks(), mode) ? brute_force_density(g, h).value : density(g, h).value;
}

}  // namespace

bool reverify(const LemmaCertificate& c, double relative_tolerance, RecomputeMode mode) {
  if (!c.kernel.is_nonnegative()) return false;
  const int k = c.graph.num_edges();
  if (c.edge_lo < 0 || c.edge_lo >= k || c.edge_hi < 0 || c.edge_hi >= k) return false;
  const double t_lo = recompute(delete_edge(c.graph, c.edge_lo), c.kernel, mode);
  const double t_hi = recompute(delete_edge(c.graph, c.edge_hi), c.kernel, mode);
  return close(t_lo, c.t_lo, relative_tolerance) && close(t_hi, c.t_hi, relative_tolerance) &&
         close(t_hi - t_lo, c.gap, relative_tolerance) && t_hi - t_lo > kViolationThreshold;
}

bool reverify(const HolderCertificate& c, double relative_tolerance, RecomputeMode mode) {
  const EdgeAssignment& a = c.assignment;
  for (const auto& h : a.kernels()) {
    if (!h.is_nonnegative()) return false;
  }
  const Graph& g = a.graph();
  const double joint = use_oracle(g, a.blocks(), mode) ? brute_force_multilinear(a).value
                                                       : multilinear_density(a).value;
  const double lhs = std::pow(joint, g.num_edges());
  double rhs = 1.0;
  for (const auto& h : a.kernels()) rhs *= recompute(g, h, mode);
  return close(lhs, c.lhs, relative_tolerance) && close(rhs, c.rhs, relative_tolerance) &&
         close(lhs - rhs, c.violation, relative_tolerance) && lhs - rhs > kViolationThreshold;
}

NormingReport necessary_conditions_pipeline(const Graph& g, const SearchConfig& config) {
  NormingReport report;
  report.graph = g;
  auto add = [&](std::string name, CheckStatus status, std::string detail) {
    report.checks.push_back({std::move(name), status, std::move(detail)});
  };
  auto fail = [&](std::string reason) {
    report.verdict = Verdict::kNotWeaklyNorming;
    report.reason = std::move(reason);
  };
  const char* kStructuralNames[] = {"components_isomorphic", "bipartite", "biregular", "edge_transitive",
                                    "lemma_search", "holder_search"};
  auto skip_rest = [&] {
    for (std::size_t i = report.checks.size(); i < std::size(kStructuralNames); ++i) {
      add(kStructuralNames[i], CheckStatus::kNotRun, "skipped");
    }
  };

  // Non-singleton components must be pairwise isomorphic.
  report.components = components_isomorphic(g);
  if (!report.components.isomorphic) {
    const auto& first = report.components.components.front().vertices;
    const auto& other = report.components.components[report.components.mismatch].vertices;
    std::ostringstream detail;
    detail << "component of vertex " << first.front() << " (" << first.size() << " vertices) is not isomorphic to "
           << "component of vertex " << other.front() << " (" << other.size() << " vertices)";
    add("components_isomorphic", CheckStatus::kFailed, detail.str());
    fail("non-singleton components are not isomorphic");
    skip_rest();
    return report;
  }
  if (report.components.components.empty()) {
    add("components_isomorphic", CheckStatus::kPassed, "no edges");
    skip_rest();
    report.caveats.push_back("graph has no edges; every condition holds vacuously");
    return report;
  }
  add("components_isomorphic", CheckStatus::kPassed,
      std::to_string(report.components.components.size()) + " isomorphic non-singleton component(s)");
  report.component = induced_subgraph(g, report.components.components.front().vertices);

  auto coloring = two_coloring(g);
  if (auto* cycle = std::get_if<OddCycle>(&coloring)) {
    std::ostringstream detail;
    detail << "odd cycle of length " << cycle->vertices.size() << ":";
    for (int v : cycle->vertices) detail << ' ' << v;
    report.odd_cycle = *cycle;
    add("bipartite", CheckStatus::kFailed, detail.str());
    fail("not bipartite");
    skip_rest();
    return report;
  }
  report.bipartition = std::get<Bipartition>(coloring);
  add("bipartite", CheckStatus::kPassed, "2-coloring found");

  const auto parts = is_bipartite(report.component);
  report.part_degrees = part_degrees(report.component, *parts);
  if (!report.part_degrees) {
    std::ostringstream detail;
    for (const auto* side : {&parts->part_a, &parts->part_b}) {
      std::vector<int> degrees;
      for (int v : *side) degrees.push_back(report.component.degree(v));
      std::sort(degrees.begin(), degrees.end());
      degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
      detail << (side == &parts->part_a ? "part A degrees {" : "; part B degrees {");
      for (std::size_t i = 0; i < degrees.size(); ++i) detail << (i ? "," : "") << degrees[i];
      detail << '}';
    }
    add("biregular", CheckStatus::kFailed, detail.str());
    fail("biregularity fails");
    skip_rest();
    return report;
  }
  const auto [a, b] = *report.part_degrees;
  add("biregular", CheckStatus::kPassed, "part degrees (a,b) = (" + std::to_string(a) + "," + std::to_string(b) + ")");

  report.orbits = edge_orbits(report.component);
  if (report.orbits->size() != 1) {
    add("edge_transitive", CheckStatus::kFailed, std::to_string(report.orbits->size()) + " edge orbits");
    fail("not edge-transitive");
    skip_rest();
    return report;
  }
  add("edge_transitive", CheckStatus::kPassed, a == 1 ? "star (smaller part degree 1)" : "single edge orbit");

  auto lemma = falsify_lemma(report.component, config);
  report.lemma_stats = lemma.stats;
  if (lemma.certificate) {
    report.lemma_certificate = std::move(lemma.certificate);
    report.implementation_flag = true;
    add("lemma_search", CheckStatus::kFailed,
        "gap " + std::to_string(report.lemma_certificate->gap) +
            " on an edge-transitive graph; symmetry forces gap 0, so this indicates an implementation fault");
    fail("edge-deleted densities differ (implementation flag raised)");
    add("holder_search", CheckStatus::kNotRun, "skipped");
    return report;
  }
  add("lemma_search", CheckStatus::kInconclusive,
      "no certificate in " + std::to_string(lemma.stats.restarts_run) + " restart(s)" +
          (lemma.stats.budget_exhausted ? " (work limit reached)" : ""));

  auto holder = falsify_holder(report.component, config);
  report.holder_stats = holder.stats;
  if (holder.certificate) {
    report.holder_certificate = std::move(holder.certificate);
    add("holder_search", CheckStatus::kFailed,
        "violation " + std::to_string(report.holder_certificate->violation) + " found at restart " +
            std::to_string(holder.stats.success_restart));
    fail("Holder inequality violated");
    return report;
  }
  add("holder_search", CheckStatus::kInconclusive,
      "no certificate in " + std::to_string(holder.stats.restarts_run) + " restart(s)" +
          (holder.stats.budget_exhausted ? " (work limit reached)" : ""));

  report.caveats.push_back(
      "passing these necessary conditions does not establish weak norming: the toroidal grids "
      "C_2k x C_2k with k >= 3 are bipartite, regular and edge-transitive, yet are not weakly "
      "norming (Kral', Martins, Pach, Wrochna 2019)");
  report.caveats.push_back(
      "the certificate searches are budgeted; finding no certificate is inconclusive");
  return report;
}

std::optional<TheoremTrace> theorem_trace(const Graph& g, int edge_from, int edge_to) {
  const int k = g.num_edges();
  if (edge_from < 0 || edge_from >= k || edge_to < 0 || edge_to >= k) {
    throw DomainError("theorem_trace: edge index out of range");
  }
  if (!is_connected(g)) throw PreconditionError("theorem_trace: graph is not connected");
  const auto parts = is_bipartite(g);
  if (!parts) throw PreconditionError("theorem_trace: graph is not bipartite");
  const auto degrees = part_degrees(g, *parts);
  if (!degrees) throw PreconditionError("theorem_trace: graph is not biregular");
  if (degrees->first < 2) {
    throw PreconditionError("theorem_trace: smaller part degree a = " + std::to_string(degrees->first) +
                            " < 2 (stars are handled directly)");
  }

  const Graph from = delete_edge(g, edge_from);
  const Graph to = delete_edge(g, edge_to);
  const Edge& e = g.edge(edge_from);
  const Edge& f = g.edge(edge_to);

  std::optional<VertexMapping> pi;
  const Pin straight[] = {{e.u, f.u}, {e.v, f.v}};
  const Pin crossed[] = {{e.u, f.v}, {e.v, f.u}};
  pi = find_isomorphism(from, to, straight);
  if (!pi) pi = find_isomorphism(from, to, crossed);
  if (!pi) pi = find_isomorphism(from, to);
  if (!pi) return std::nullopt;

  TheoremTrace trace;
  trace.edge_from = edge_from;
  trace.edge_to = edge_to;
  trace.pi = std::move(*pi);
  trace.maps_deleted = is_isomorphism(from, to, trace.pi);
  trace.maps_edge = map_edge(trace.pi, e) == f;
  trace.is_automorphism = is_automorphism(g, trace.pi);
  return trace;
}

bool density_fingerprint_equal(const Graph& f, const Graph& g, int trials, std::uint64_t seed,
                               const DensityOptions& options) {
  if (trials < 1) throw DomainError("density_fingerprint_equal: trials must be >= 1");
  for (int i = 0; i < trials; ++i) {
    const StepGraphon h = random_graphon(3, 0.0, 1.0, derive_seed(seed, i));
    if (std::abs(density(f, h, options).value - density(g, h, options).value) > 1e-9) return false;
  }
  return true;
}

}  // namespace normcheck
