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

#include "normcheck/selftest.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>

#include "normcheck/analyzer.h"
#include "normcheck/catalog.h"
#include "normcheck/density.h"
#include "normcheck/graph_io.h"

namespace normcheck {
namespace {

// Random partition and symmetric values on [lo, hi].
StepGraphon random_kernel(std::mt19937_64& rng, int q, double lo, double hi) {
  std::uniform_real_distribution<double> weight(0.2, 1.0), value(lo, hi);
  std::vector<double> w(q);
  for (double& x : w) x = weight(rng);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& x : w) x /= total;
  std::vector<double> v(static_cast<std::size_t>(q) * q);
  for (int a = 0; a < q; ++a) {
    for (int b = a; b < q; ++b) v[a * q + b] = v[b * q + a] = value(rng);
  }
  return StepGraphon(std::move(w), std::move(v));
}

Graph random_small_graph(std::mt19937_64& rng, int min_n, int max_n, int min_edges) {
  std::uniform_int_distribution<int> size(min_n, max_n);
  std::uniform_real_distribution<double> prob(0.2, 0.8);
  for (;;) {
    Graph g = random_graph(size(rng), prob(rng), rng());
    if (g.num_edges() >= min_edges) return g;
  }
}

double relative_error(double got, double want, double floor = 0.0) {
  const double scale = std::max({std::abs(got), std::abs(want), floor});
  return scale == 0.0 ? 0.0 : std::abs(got - want) / scale;
}

std::string label(const Graph& g, std::uint64_t case_seed) {
  return "graph6 " + to_graph6(g) + ", case seed " + std::to_string(case_seed);
}

class Tally {
 public:
  explicit Tally(std::string name) { r_.name = std::move(name); }

  void record(double error, double limit, const std::string& what) {
    r_.max_error = std::max(r_.max_error, error);
    if (!(error <= limit)) {
      ++r_.failures;
      r_.passed = false;
      if (r_.detail.empty()) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "error %.3g > %.3g: ", error, limit);
        r_.detail = buf + what;
      }
    }
  }
  void fail(const std::string& what) { record(INFINITY, 0.0, what); }
  void next_case() { ++r_.cases; }
  SuiteResult done() const { return r_; }

 private:
  SuiteResult r_;
};

std::vector<std::string> edge_transitive_fixtures() {
  return {"C4", "C6", "K_3_3", "Q3", "star_3", "torus_6_6"};
}

}  // namespace

void SuiteResult::absorb(const SuiteResult& other) {
  passed = passed && other.passed;
  cases += other.cases;
  failures += other.failures;
  max_error = std::max(max_error, other.max_error);
  if (detail.empty() && !other.detail.empty()) detail = other.name + ": " + other.detail;
  seconds += other.seconds;
}

SuiteResult check_oracle_equivalence(int cases, std::uint64_t seed) {
  Tally tally("oracle_equivalence");
  for (int i = 0; i < cases; ++i) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i));
    std::mt19937_64 rng(s);
    const Graph g = random_small_graph(rng, 1, 8, 0);
    const StepGraphon h = random_kernel(rng, std::uniform_int_distribution<int>(1, 3)(rng), -1.0, 2.0);
    const double fast = density(g, h).value;
    const double slow = brute_force_density(g, h).value;
    tally.next_case();
    tally.record(relative_error(fast, slow), 1e-10, label(g, s));
  }
  return tally.done();
}

SuiteResult check_catalog_normalization() {
  Tally tally("catalog_normalization");
  const StepGraphon one = constant_graphon(1.0);
  for (const auto& name : catalog_names()) {
    const Graph g = catalog_entry(name).graph;
    tally.next_case();
    tally.record(std::abs(density(g, one).value - 1.0), 1e-12, name);
  }
  return tally.done();
}

SuiteResult check_multilinear_identity(int cases, std::uint64_t seed) {
  Tally tally("multilinear_identity");
  for (int i = 0; i < cases; ++i) {
    const std::uint64_t s = derive_seed(seed ^ 0x6d756c74ULL, static_cast<std::uint64_t>(i));
    std::mt19937_64 rng(s);
    const Graph g = random_small_graph(rng, 1, 8, 0);
    const StepGraphon h = random_kernel(rng, std::uniform_int_distribution<int>(1, 3)(rng), 0.0, 1.0);
    const EdgeAssignment same = EdgeAssignment::uniform(g, h);
    tally.next_case();
    tally.record(relative_error(multilinear_density(same).value, density(g, h).value, 1.0), 1e-12,
                 "contraction, " + label(g, s));
    tally.record(relative_error(brute_force_multilinear(same).value, brute_force_density(g, h).value, 1.0),
                 1e-12, "brute force, " + label(g, s));
  }
  return tally.done();
}

SuiteResult check_edge_deleted_identity(int cases, std::uint64_t seed) {
  Tally tally("edge_deleted_identity");
  for (int i = 0; i < cases; ++i) {
    const std::uint64_t s = derive_seed(seed ^ 0x64656c65ULL, static_cast<std::uint64_t>(i));
    std::mt19937_64 rng(s);
    const Graph g = random_small_graph(rng, 2, 8, 1);
    const StepGraphon h = random_kernel(rng, std::uniform_int_distribution<int>(1, 3)(rng), 0.0, 1.0);
    const auto adjoint = edge_deleted_densities(g, h);
    const auto substituted = edge_deleted_densities_by_substitution(g, h);
    tally.next_case();
    for (int l = 0; l < g.num_edges(); ++l) {
      const Graph deleted = delete_edge(g, l);
      const double want = brute_force_density(deleted, h).value;
      const std::string where = "edge " + std::to_string(l) + ", " + label(g, s);
      tally.record(relative_error(adjoint[l], want), 1e-10, "adjoint, " + where);
      tally.record(relative_error(substituted[l], want), 1e-10, "substitution, " + where);
      tally.record(relative_error(density(deleted, h).value, want), 1e-10, "direct, " + where);
    }
  }
  return tally.done();
}

SuiteResult check_perturbation_expansions(int cases, std::uint64_t seed) {
  Tally tally("perturbation_expansions");
  constexpr double kCoarse = 1e-3, kFine = 1e-4;
  auto order = [](double coarse, double fine) { return std::log10(coarse / fine); };
  for (int i = 0; i < cases; ++i) {
    const std::uint64_t s = derive_seed(seed ^ 0x70657274ULL, static_cast<std::uint64_t>(i));
    std::mt19937_64 rng(s);
    const Graph g = random_small_graph(rng, 4, 8, 3);
    const StepGraphon h = random_kernel(rng, std::uniform_int_distribution<int>(2, 3)(rng), 0.2, 1.0);
    const std::string where = label(g, s);
    tally.next_case();

    const double t0 = density(g, h).value;
    const auto t = edge_deleted_densities(g, h);

    // Uniform shift h + ε.
    const double slope = uniform_direction_derivative(g, h);
    auto f = [&](double eps) { return density(g, shift(h, eps)).value; };
    auto central = [&](double eps) { return (f(eps) - f(-eps)) / (2 * eps); };
    const double sum_t = std::accumulate(t.begin(), t.end(), 0.0);
    tally.record(relative_error(slope, sum_t), 1e-10, "Σ t_l vs adjoint derivative, " + where);
    const double cd_coarse = central(kCoarse), cd_fine = central(kFine);
    // The raw difference carries an O(ε²) bias; Richardson extrapolation
    // over the two step sizes removes it.
    tally.record(relative_error(cd_fine, slope), kFine, "uniform central difference, " + where);
    const double richardson = (100.0 * cd_fine - cd_coarse) / 99.0;
    tally.record(relative_error(richardson, slope), 1e-8, "uniform extrapolated difference, " + where);
    const double cd_order = order(std::abs(cd_coarse - slope), std::abs(cd_fine - slope));
    tally.record(std::abs(cd_order - 2.0), 0.3, "uniform central-difference order, " + where);
    const double rem_order = order(std::abs(f(kCoarse) - t0 - slope * kCoarse),
                                   std::abs(f(kFine) - t0 - slope * kFine));
    tally.record(std::abs(rem_order - 2.0), 0.3, "uniform remainder order, " + where);

    // h + ε on edge l1, h - ε on edge l2.
    const int k = g.num_edges();
    const int l1 = std::uniform_int_distribution<int>(0, k - 1)(rng);
    const int l2 = (l1 + std::uniform_int_distribution<int>(1, k - 1)(rng)) % k;
    const double pair_slope = t[l1] - t[l2];
    auto p = [&](double eps) { return perturbed_pair_density(g, h, eps, l1, l2); };
    const double scale = std::max(t[l1], t[l2]);
    const double pair_cd = (p(kFine) - p(-kFine)) / (2 * kFine);
    tally.record(std::abs(pair_cd - pair_slope) / scale, 1e-6, "pair central difference, " + where);
    const double pair_order =
        order(std::abs(p(kCoarse) - t0 - pair_slope * kCoarse), std::abs(p(kFine) - t0 - pair_slope * kFine));
    tally.record(std::abs(pair_order - 2.0), 0.3, "pair remainder order, " + where);
  }
  return tally.done();
}

SuiteResult check_symmetry(int trials, std::uint64_t seed) {
  Tally tally("symmetry");
  std::uint64_t stream = 0;
  for (const auto& name : edge_transitive_fixtures()) {
    const Graph g = catalog_entry(name).graph;
    if (edge_orbits(g).size() != 1) {
      tally.fail(name + " is not edge-transitive");
      continue;
    }
    for (int i = 0; i < trials; ++i) {
      const std::uint64_t s = derive_seed(seed ^ 0x73796d6dULL, stream++);
      std::mt19937_64 rng(s);
      const StepGraphon h = random_kernel(rng, std::uniform_int_distribution<int>(2, 3)(rng), 0.0, 1.0);
      const auto t = edge_deleted_densities(g, h);
      const auto [lo, hi] = std::minmax_element(t.begin(), t.end());
      tally.next_case();
      tally.record(*hi - *lo, 1e-10, "lemma gap on " + name + ", case seed " + std::to_string(s));
    }
  }
  // Relabeling and the Hölder equality case on small random graphs.
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t s = derive_seed(seed ^ 0x72656c62ULL, static_cast<std::uint64_t>(i));
    std::mt19937_64 rng(s);
    const Graph g = random_small_graph(rng, 2, 8, 1);
    const StepGraphon h = random_kernel(rng, std::uniform_int_distribution<int>(1, 3)(rng), 0.0, 1.0);
    std::vector<int> perm(g.num_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    tally.next_case();
    const double t = density(g, h).value;
    tally.record(relative_error(density(relabel(g, perm), h).value, t), 1e-12, "relabeling, " + label(g, s));
    const HolderCheckResult eq = holder_check(EdgeAssignment::uniform(g, h), 0.0);
    tally.record(std::abs(eq.margin) / std::max(eq.lhs, 1e-300), 1e-12, "Holder equality, " + label(g, s));
  }
  return tally.done();
}

std::vector<SuiteResult> run_selftest(const SelftestConfig& config) {
  using Clock = std::chrono::steady_clock;
  auto timed = [](auto&& fn) {
    const auto start = Clock::now();
    SuiteResult r = fn();
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
  };
  auto merged = [](std::string name, std::initializer_list<SuiteResult> parts) {
    SuiteResult r;
    r.name = std::move(name);
    for (const auto& p : parts) r.absorb(p);
    return r;
  };
  const bool quick = config.quick;
  const std::uint64_t seed = config.seed;
  std::vector<SuiteResult> out;
  out.push_back(timed([&] { return check_oracle_equivalence(quick ? 40 : 200, seed); }));
  out.back().name = "oracle_equivalence";
  out.push_back(merged("normalization", {timed([] { return check_catalog_normalization(); }),
                                         timed([&] { return check_multilinear_identity(quick ? 10 : 50, seed); })}));
  out.push_back(merged("derivative", {timed([&] { return check_edge_deleted_identity(quick ? 10 : 50, seed); }),
                                      timed([&] { return check_perturbation_expansions(quick ? 5 : 20, seed); })}));
  out.push_back(timed([&] { return check_symmetry(quick ? 5 : 50, seed); }));
  return out;
}

Records selftest_records(const std::vector<SuiteResult>& suites) {
  Records r;
  bool all = true;
  for (const auto& s : suites) {
    const std::string p = "suite." + s.name + ".";
    r.add(p + "passed", s.passed);
    r.add(p + "cases", s.cases);
    r.add(p + "failures", s.failures);
    r.add(p + "max_error", s.max_error);
    if (!s.detail.empty()) r.add(p + "detail", s.detail);
    all = all && s.passed;
  }
  r.add("selftest.passed", all);
  return r;
}

std::string selftest_text(const std::vector<SuiteResult>& suites) {
  std::ostringstream out;
  double total = 0.0;
  for (const auto& s : suites) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-4s %-20s %5d cases  max error %-10.3g %7.2f s\n", s.passed ? "ok" : "FAIL",
                  s.name.c_str(), s.cases, s.max_error, s.seconds);
    out << buf;
    if (!s.detail.empty()) out << "     " << s.detail << '\n';
    total += s.seconds;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "total %.2f s\n", total);
  out << buf;
  return out.str();
}

}  // namespace normcheck
