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

// Seeded property checks shared by `normcheck selftest` and the acceptance
// binary. Each check returns a SuiteResult; all cases are derived from the
// seed so repeated runs produce identical results.

#ifndef NORMCHECK_SELFTEST_H_
#define NORMCHECK_SELFTEST_H_

#include <cstdint>
#include <string>
#include <vector>

#include "normcheck/report.h"

namespace normcheck {

struct SuiteResult {
  std::string name;
  bool passed = true;
  int cases = 0;
  int failures = 0;
  double max_error = 0.0;  // worst observed error in the suite's own metric
  std::string detail;      // first failure, if any
  double seconds = 0.0;    // wall time; never written to Records

  void absorb(const SuiteResult& other);
};

// Random G(n, p) with n <= 8 and a random kernel with q <= 3, values in
// [-1, 2]: contraction against brute force, relative 1e-10.
SuiteResult check_oracle_equivalence(int cases, std::uint64_t seed);

// t_G(1) = 1 within 1e-12 for every catalog name.
SuiteResult check_catalog_normalization();

// t_G(h, ..., h) = t_G(h) within 1e-12 on both evaluation routes.
SuiteResult check_multilinear_identity(int cases, std::uint64_t seed);

// t_G(h, ..., 1 at l, ..., h) = t_{G - e_l}(h), relative 1e-10, through the
// adjoint pass and through slot substitution.
SuiteResult check_edge_deleted_identity(int cases, std::uint64_t seed);

// Finite differences at ε = 1e-3 and 1e-4 against Σ_l t_l (uniform shift)
// and t_1 - t_2 (h + ε on one edge, h - ε on another). The central
// difference at 1e-4 must match within 1e-4 relative (1e-8 after Richardson
// extrapolation; the pair expansion is quadratic in ε, so its central
// difference is exact up to rounding and must match within 1e-6), and the
// first-order remainders must shrink with log-log order 2 ± 0.3.
SuiteResult check_perturbation_expansions(int cases, std::uint64_t seed);

// For each edge-transitive catalog fixture and `trials` random nonnegative
// kernels: max_l t_l - min_l t_l <= 1e-10. Also checks relabeling
// invariance of t_G and the Hölder equality case t_G(h,...,h)^k = t_G(h)^k.
SuiteResult check_symmetry(int trials, std::uint64_t seed);

struct SelftestConfig {
  bool quick = false;
  std::uint64_t seed = 0;
};

// Runs the oracle_equivalence, normalization, derivative and symmetry
// suites.
std::vector<SuiteResult> run_selftest(const SelftestConfig& config);

Records selftest_records(const std::vector<SuiteResult>& suites);
std::string selftest_text(const std::vector<SuiteResult>& suites);

}  // namespace normcheck

#endif  // NORMCHECK_SELFTEST_H_
