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

// Homomorphism densities of graphs in step kernels.
//
// For a step kernel with block weights w and values W, the density of G is
// the finite sum over block maps φ: V -> {0..q-1} of
//     ∏_v w[φ(v)] · ∏_{uv ∈ E} W[φ(u)][φ(v)],
// and the multilinear density uses a separate kernel per edge. Two
// evaluators are provided: a brute-force enumeration of all q^n maps (the
// oracle) and bucket elimination along a greedy min-fill order (the fast
// path). Both accumulate with compensated summation.

#ifndef NORMCHECK_DENSITY_H_
#define NORMCHECK_DENSITY_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "normcheck/graph.h"
#include "normcheck/graphon.h"

namespace normcheck {

struct ContractionPlan {
  std::vector<int> order;  // elimination order, a permutation of V
  int induced_width = 0;   // largest neighborhood at elimination time
  double cost_estimate = 0.0;  // predicted multiply-adds
};

// Induced width of `order` recomputed from scratch. Throws DomainError if
// `order` is not a permutation of the vertices.
int induced_width(const Graph& g, std::span<const int> order);

// Greedy min-fill order, ties broken by min degree and then lowest index.
ContractionPlan plan_contraction(const Graph& g, int q);

// A graph with one kernel per edge, all re-expressed on one partition.
class EdgeAssignment {
 public:
  // Throws DomainError if kernels.size() != g.num_edges().
  EdgeAssignment(Graph g, std::vector<StepGraphon> kernels);

  static EdgeAssignment uniform(Graph g, const StepGraphon& h);

  const Graph& graph() const { return graph_; }
  const std::vector<StepGraphon>& kernels() const { return kernels_; }
  const StepGraphon& kernel(int l) const { return kernels_[l]; }
  const std::vector<double>& weights() const { return weights_; }
  int blocks() const { return static_cast<int>(weights_.size()); }

 private:
  Graph graph_;
  std::vector<StepGraphon> kernels_;
  std::vector<double> weights_;
};

enum class DensityMethod { kOracle, kContraction };

std::string to_string(DensityMethod method);

struct DensityValue {
  double value = 0.0;
  DensityMethod method = DensityMethod::kContraction;
  std::optional<ContractionPlan> plan;
};

struct DensityOptions {
  // Largest table (q^(width+1) entries) a contraction may touch.
  std::size_t max_table_entries = std::size_t{1} << 28;
};

// Largest q^n the brute-force evaluator accepts.
inline constexpr double kBruteForceLimit = 1e8;

bool brute_force_feasible(const Graph& g, int q);

// Throw BudgetExceeded when q^n exceeds kBruteForceLimit.
DensityValue brute_force_density(const Graph& g, const StepGraphon& h);
DensityValue brute_force_multilinear(const EdgeAssignment& a);

// Bucket elimination. Isolated vertices are skipped (their weights sum to
// 1). Throws BudgetExceeded, carrying the width, when q^(width+1) exceeds
// options.max_table_entries.
DensityValue density(const Graph& g, const StepGraphon& h, const DensityOptions& options = {});
DensityValue multilinear_density(const EdgeAssignment& a, const DensityOptions& options = {});

// Multilinear density together with its partial derivatives with respect to
// every edge factor: edge_adjoint[l][a*q + b] = ∂t / ∂T_l(a, b), where T_l
// is edge l's kernel read with the lower endpoint's block first. Computed
// with one forward and one reverse sweep.
struct DensityGradient {
  double value = 0.0;
  std::vector<std::vector<double>> edge_adjoint;
};
DensityGradient multilinear_gradient(const EdgeAssignment& a, const DensityOptions& options = {});

// t_l = t_G(h, ..., 1 at slot l, ..., h) = t_{G - e_l}(h) for every edge.
// Uses multilinearity: t_l is the sum of edge l's adjoint table.
std::vector<double> edge_deleted_densities(const Graph& g, const StepGraphon& h,
                                           const DensityOptions& options = {});

// Same values, one multilinear contraction per slot.
std::vector<double> edge_deleted_densities_by_substitution(const Graph& g, const StepGraphon& h,
                                                           const DensityOptions& options = {});

// d/dε t_G(h + ε) at ε = 0, i.e. Σ_l t_l.
double uniform_direction_derivative(const Graph& g, const StepGraphon& h,
                                    const DensityOptions& options = {});

// t_G with h + eps on edge l1, h - eps on edge l2 and h elsewhere. Throws
// DomainError if l1 == l2 or either is out of range.
double perturbed_pair_density(const Graph& g, const StepGraphon& h, double eps, int l1, int l2,
                              const DensityOptions& options = {});

}  // namespace normcheck

#endif  // NORMCHECK_DENSITY_H_
