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

// Necessary conditions for weak norming and searches for their violation.
//
// A weakly norming graph G with edges e_1..e_k satisfies
//   * the graph Hölder inequality t_G(h_1,...,h_k)^k <= ∏ t_G(h_l) for all
//     nonnegative kernels;
//   * t_{G-e_1}(h) = ... = t_{G-e_k}(h) for every nonnegative h;
//   * its non-singleton components are isomorphic, it is bipartite, each
//     side of a connected component is degree-regular, and it is
//     edge-transitive.
// Everything here only ever refutes weak norming; passing every check is
// not evidence of it.

#ifndef NORMCHECK_ANALYZER_H_
#define NORMCHECK_ANALYZER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "normcheck/density.h"
#include "normcheck/graph.h"
#include "normcheck/graphon.h"
#include "normcheck/symmetry.h"

namespace normcheck {

// Relative agreement expected between two exact evaluation routes.
inline constexpr double kStructuralTolerance = 1e-10;
// Smallest violation or gap accepted as a certificate.
inline constexpr double kViolationThreshold = 1e-6;

struct HolderCheckResult {
  double lhs = 0.0;  // t_G(h_1,...,h_k)^k
  double rhs = 0.0;  // ∏ t_G(h_l)
  double margin = 0.0;  // rhs - lhs
  bool holds = true;    // margin >= -tolerance
};

// Throws DomainError if any kernel takes a negative value.
HolderCheckResult holder_check(const EdgeAssignment& a, double tolerance,
                               const DensityOptions& options = {});

struct LemmaCertificate {
  Graph graph;
  StepGraphon kernel;
  int edge_lo = -1;  // argmin of t_l (lowest index on ties)
  int edge_hi = -1;  // argmax of t_l
  double t_lo = 0.0;
  double t_hi = 0.0;
  double gap = 0.0;
};

// nullopt iff max_l t_l - min_l t_l <= tolerance. Throws DomainError on a
// signed kernel.
std::optional<LemmaCertificate> lemma_equality_check(const Graph& g, const StepGraphon& h,
                                                     double tolerance,
                                                     const DensityOptions& options = {});

struct HolderCertificate {
  EdgeAssignment assignment;
  double lhs = 0.0;
  double rhs = 0.0;
  double violation = 0.0;  // lhs - rhs
};

struct SearchConfig {
  int restarts = 50;
  int steps = 500;  // coordinate trials per restart
  int min_blocks = 2;
  int max_blocks = 3;
  double value_cap = 4.0;
  std::uint64_t seed = 0;
  double threshold = kViolationThreshold;
  // Estimated multiply-adds the whole search may spend.
  double work_limit = 4e9;
  // Restarts evaluated concurrently; results are merged by restart index.
  int threads = 1;
  DensityOptions density;
};

struct SearchStats {
  int restarts_run = 0;
  int success_restart = -1;
  double work = 0.0;
  bool budget_exhausted = false;  // stopped by work_limit before all restarts
};

struct LemmaSearchResult {
  std::optional<LemmaCertificate> certificate;
  SearchStats stats;
};

struct HolderSearchResult {
  std::optional<HolderCertificate> certificate;
  SearchStats stats;
};

// Multi-restart hill climbing on max_l t_l - min_l t_l over nonnegative
// step kernels with min_blocks..max_blocks blocks.
LemmaSearchResult falsify_lemma(const Graph& g, const SearchConfig& config = {});

// Seeds cycle through 1-padded assignments (one slot carries a two-block
// pattern kernel, all others 1), perturbed bipartite-pattern kernels on
// every edge, and independent random kernels; each is then improved by
// projected coordinate ascent on k·log t_G(h_1..h_k) - Σ log t_G(h_l) with
// values clamped to [0, value_cap].
HolderSearchResult falsify_holder(const Graph& g, const SearchConfig& config = {});

// How reverify() recomputes densities. kAuto uses the brute-force oracle
// when q^n allows it and contraction otherwise; kOracle throws
// BudgetExceeded instead of falling back.
enum class RecomputeMode { kAuto, kOracle, kContraction };

// Recomputes a certificate from scratch. Lemma certificates are re-derived
// through delete_edge, not through the multilinear route that produced
// them. True iff the recomputed values agree with the stored ones within
// `relative_tolerance` and the violation (gap) exceeds kViolationThreshold.
bool reverify(const LemmaCertificate& c, double relative_tolerance = kStructuralTolerance,
              RecomputeMode mode = RecomputeMode::kAuto);
bool reverify(const HolderCertificate& c, double relative_tolerance = kStructuralTolerance,
              RecomputeMode mode = RecomputeMode::kAuto);

enum class Verdict { kNotWeaklyNorming, kPassesAllNecessaryConditions };
std::string to_string(Verdict v);

enum class CheckStatus { kPassed, kFailed, kNotRun, kInconclusive };
std::string to_string(CheckStatus s);

struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::kNotRun;
  std::string detail;
};

struct NormingReport {
  Graph graph;
  // First non-singleton component, on which the connected-case checks run.
  Graph component;
  std::vector<CheckRecord> checks;  // components_isomorphic, bipartite, biregular,
                                    // edge_transitive, lemma_search, holder_search
  ComponentIsomorphism components;
  std::optional<Bipartition> bipartition;
  std::optional<OddCycle> odd_cycle;
  std::optional<std::pair<int, int>> part_degrees;
  std::optional<EdgeOrbitPartition> orbits;
  std::optional<LemmaCertificate> lemma_certificate;
  std::optional<HolderCertificate> holder_certificate;
  SearchStats lemma_stats;
  SearchStats holder_stats;
  Verdict verdict = Verdict::kPassesAllNecessaryConditions;
  std::string reason;
  // Set when the lemma search produced a certificate on a graph that passed
  // the edge-transitivity check, which symmetry rules out.
  bool implementation_flag = false;
  std::vector<std::string> caveats;
};

NormingReport necessary_conditions_pipeline(const Graph& g, const SearchConfig& config = {});

struct TheoremTrace {
  int edge_from = -1;
  int edge_to = -1;
  VertexMapping pi;
  bool maps_deleted = false;  // π is an isomorphism G - e_from -> G - e_to
  bool maps_edge = false;     // π sends e_from onto e_to
  bool is_automorphism = false;

  bool verified() const { return maps_deleted && maps_edge && is_automorphism; }
};

// Requires g connected, bipartite, biregular with smaller part degree >= 2
// (PreconditionError otherwise). nullopt iff G - e_from and G - e_to are not
// isomorphic.
std::optional<TheoremTrace> theorem_trace(const Graph& g, int edge_from, int edge_to);

// One-sided probabilistic stand-in for "equal densities for every kernel":
// compares densities on `trials` seeded random 3-block kernels with values
// in [0,1] and returns true iff all agree within 1e-9.
bool density_fingerprint_equal(const Graph& f, const Graph& g, int trials, std::uint64_t seed,
                               const DensityOptions& options = {});

}  // namespace normcheck

#endif  // NORMCHECK_ANALYZER_H_
