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

#include "normcheck/density.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "normcheck/error.h"

namespace normcheck {
namespace {

class KahanSum {
 public:
  void add(double x) {
    const double y = x - carry_;
    const double t = sum_ + y;
    carry_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

double ipow(double base, int exp) {
  double r = 1.0;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::size_t table_size(int q, std::size_t arity) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < arity; ++i) size *= static_cast<std::size_t>(q);
  return size;
}

}  // namespace

std::string to_string(DensityMethod method) {
  return method == DensityMethod::kOracle ? "oracle" : "contraction";
}

int induced_width(const Graph& g, std::span<const int> order) {
  const int n = g.num_vertices();
  if (static_cast<int>(order.size()) != n) throw DomainError("elimination order has wrong length");
  std::vector<bool> seen(n, false);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) throw DomainError("elimination order is not a permutation");
    seen[v] = true;
  }
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  std::vector<bool> gone(n, false);
  int width = 0;
  for (int v : order) {
    std::vector<int> nbrs;
    for (int w = 0; w < n; ++w) {
      if (!gone[w] && adj[v][w]) nbrs.push_back(w);
    }
    width = std::max(width, static_cast<int>(nbrs.size()));
    for (int a : nbrs) {
      for (int b : nbrs) {
        if (a != b) adj[a][b] = true;
      }
    }
    gone[v] = true;
  }
  return width;
}

ContractionPlan plan_contraction(const Graph& g, int q) {
  const int n = g.num_vertices();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  std::vector<bool> gone(n, false);

  // Symbolic factor scopes, to count bucket sizes for the cost estimate.
  std::vector<std::vector<int>> scopes;
  for (const Edge& e : g.edges()) scopes.push_back({e.u, e.v});
  std::vector<bool> scope_alive(scopes.size(), true);

  ContractionPlan plan;
  plan.order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    long best_fill = 0;
    int best_degree = 0;
    std::vector<int> best_nbrs;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      std::vector<int> nbrs;
      for (int w = 0; w < n; ++w) {
        if (!gone[w] && adj[v][w]) nbrs.push_back(w);
      }
      long fill = 0;
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
          if (!adj[nbrs[i]][nbrs[j]]) ++fill;
        }
      }
      const int degree = static_cast<int>(nbrs.size());
      if (best == -1 || fill < best_fill || (fill == best_fill && degree < best_degree)) {
        best = v;
        best_fill = fill;
        best_degree = degree;
        best_nbrs = std::move(nbrs);
      }
    }
    plan.order.push_back(best);
    plan.induced_width = std::max(plan.induced_width, best_degree);
    for (int a : best_nbrs) {
      for (int b : best_nbrs) {
        if (a != b) adj[a][b] = true;
      }
    }
    gone[best] = true;

    int bucket = 0;
    for (std::size_t s = 0; s < scopes.size(); ++s) {
      if (scope_alive[s] && std::find(scopes[s].begin(), scopes[s].end(), best) != scopes[s].end()) {
        scope_alive[s] = false;
        ++bucket;
      }
    }
    if (bucket > 0) {
      plan.cost_estimate += ipow(q, best_degree + 1) * bucket;
      scopes.push_back(best_nbrs);
      scope_alive.push_back(true);
    }
  }
  return plan;
}

EdgeAssignment::EdgeAssignment(Graph g, std::vector<StepGraphon> kernels) : graph_(std::move(g)) {
  if (static_cast<int>(kernels.size()) != graph_.num_edges()) {
    throw DomainError("edge assignment has " + std::to_string(kernels.size()) + " kernels for " +
                      std::to_string(graph_.num_edges()) + " edges");
  }
  if (kernels.empty()) {
    weights_ = {1.0};
    return;
  }
  kernels_ = common_refinement(kernels);
  weights_ = kernels_.front().weights();
}

EdgeAssignment EdgeAssignment::uniform(Graph g, const StepGraphon& h) {
  const int k = g.num_edges();
  EdgeAssignment a(std::move(g), std::vector<StepGraphon>(k, h));
  if (k == 0) a.weights_ = h.weights();
  return a;
}

bool brute_force_feasible(const Graph& g, int q) {
  return std::pow(static_cast<double>(q), g.num_vertices()) <= kBruteForceLimit;
}

DensityValue brute_force_multilinear(const EdgeAssignment& a) {
  const Graph& g = a.graph();
  const int n = g.num_vertices();
  const int q = a.blocks();
  if (!brute_force_feasible(g, q)) {
    throw BudgetExceeded("brute force refused: q^n = " + std::to_string(q) + "^" + std::to_string(n) +
                         " exceeds 1e8 (use contraction)");
  }
  const auto& w = a.weights();
  std::vector<int> phi(n, 0);
  KahanSum total;
  while (true) {
    double term = 1.0;
    for (int v = 0; v < n; ++v) term *= w[phi[v]];
    for (int l = 0; l < g.num_edges() && term != 0.0; ++l) {
      term *= a.kernel(l).value(phi[g.edge(l).u], phi[g.edge(l).v]);
    }
    total.add(term);
    int p = n - 1;
    while (p >= 0 && phi[p] == q - 1) phi[p--] = 0;
    if (p < 0) break;
    ++phi[p];
  }
  return {total.value(), DensityMethod::kOracle, std::nullopt};
}

DensityValue brute_force_density(const Graph& g, const StepGraphon& h) {
  return brute_force_multilinear(EdgeAssignment::uniform(g, h));
}

namespace {

// Bucket elimination over a fixed plan, keeping every intermediate table so
// that a reverse sweep can produce adjoints.
class Contraction {
 public:
  Contraction(const EdgeAssignment& a, const DensityOptions& options)
      : q_(a.blocks()), weights_(a.weights()) {
    const Graph& g = a.graph();
    plan_ = plan_contraction(g, q_);
    const double largest = ipow(q_, plan_.induced_width + 1);
    if (largest > static_cast<double>(options.max_table_entries)) {
      throw BudgetExceeded("contraction needs tables of q^(width+1) = " + std::to_string(q_) + "^" +
                               std::to_string(plan_.induced_width + 1) + " entries, over budget " +
                               std::to_string(options.max_table_entries),
                           plan_.induced_width);
    }
    for (int l = 0; l < g.num_edges(); ++l) {
      const Edge& e = g.edge(l);
      factors_.push_back({{e.u, e.v}, a.kernel(l).values()});
    }
    num_edge_factors_ = g.num_edges();
  }

  const ContractionPlan& plan() const { return plan_; }

  double forward() {
    std::vector<bool> alive(factors_.size(), true);
    for (int v : plan_.order) {
      Step step;
      step.vertex = v;
      for (std::size_t f = 0; f < factors_.size(); ++f) {
        if (alive[f] && contains(factors_[f].scope, v)) {
          step.bucket.push_back(static_cast<int>(f));
          alive[f] = false;
        }
      }
      if (step.bucket.empty()) continue;  // isolated vertex
      std::vector<int> scope;
      for (int f : step.bucket) {
        for (int x : factors_[f].scope) {
          if (x != v) scope.push_back(x);
        }
      }
      std::sort(scope.begin(), scope.end());
      scope.erase(std::unique(scope.begin(), scope.end()), scope.end());
      Factor message{scope, std::vector<double>(table_size(q_, scope.size()), 0.0)};
      sweep(step, message.scope, [&](std::size_t out, std::span<const std::size_t> offsets,
                                     std::span<const std::size_t> strides) {
        KahanSum sum;
        for (int x = 0; x < q_; ++x) {
          double term = weights_[x];
          for (std::size_t i = 0; i < step.bucket.size(); ++i) {
            term *= factors_[step.bucket[i]].table[offsets[i] + x * strides[i]];
          }
          sum.add(term);
        }
        message.table[out] = sum.value();
      });
      step.message = static_cast<int>(factors_.size());
      factors_.push_back(std::move(message));
      alive.push_back(true);
      steps_.push_back(std::move(step));
    }
    scalars_.clear();
    double value = 1.0;
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      if (alive[f]) {
        scalars_.push_back(static_cast<int>(f));
        value *= factors_[f].table[0];
      }
    }
    return value;
  }

  // Must follow forward(). Returns adjoints of the edge factors.
  std::vector<std::vector<double>> backward() {
    std::vector<std::vector<double>> adjoint(factors_.size());
    for (std::size_t f = 0; f < factors_.size(); ++f) adjoint[f].assign(factors_[f].table.size(), 0.0);
    for (std::size_t i = 0; i < scalars_.size(); ++i) {
      double others = 1.0;
      for (std::size_t j = 0; j < scalars_.size(); ++j) {
        if (j != i) others *= factors_[scalars_[j]].table[0];
      }
      adjoint[scalars_[i]][0] = others;
    }
    std::vector<double> prefix, suffix;
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
      const Step& step = *it;
      const auto& seed = adjoint[step.message];
      const std::size_t b = step.bucket.size();
      prefix.resize(b + 1);
      suffix.resize(b + 1);
      sweep(step, factors_[step.message].scope,
            [&](std::size_t out, std::span<const std::size_t> offsets, std::span<const std::size_t> strides) {
              const double upstream = seed[out];
              if (upstream == 0.0) return;
              for (int x = 0; x < q_; ++x) {
                prefix[0] = suffix[b] = 1.0;
                for (std::size_t i = 0; i < b; ++i) {
                  prefix[i + 1] = prefix[i] * factors_[step.bucket[i]].table[offsets[i] + x * strides[i]];
                }
                for (std::size_t i = b; i-- > 0;) {
                  suffix[i] = suffix[i + 1] * factors_[step.bucket[i]].table[offsets[i] + x * strides[i]];
                }
                const double scale = upstream * weights_[x];
                for (std::size_t i = 0; i < b; ++i) {
                  adjoint[step.bucket[i]][offsets[i] + x * strides[i]] += scale * prefix[i] * suffix[i + 1];
                }
              }
            });
    }
    adjoint.resize(num_edge_factors_);
    return adjoint;
  }

 private:
  struct Factor {
    std::vector<int> scope;  // ascending; scope[0] is the most significant digit
    std::vector<double> table;
  };
  struct Step {
    int vertex = -1;
    std::vector<int> bucket;
    int message = -1;
  };

  static bool contains(const std::vector<int>& scope, int v) {
    return std::find(scope.begin(), scope.end(), v) != scope.end();
  }

  std::size_t stride_of(const Factor& f, int var) const {
    std::size_t stride = 1;
    for (std::size_t i = f.scope.size(); i-- > 0;) {
      if (f.scope[i] == var) return stride;
      stride *= static_cast<std::size_t>(q_);
    }
    return 0;
  }

  // Calls body(out, offsets, strides) for every assignment of `scope`, where
  // out is the index into a table over `scope`, offsets[i] the matching
  // index into bucket factor i with the eliminated vertex at block 0, and
  // strides[i] that factor's stride for the eliminated vertex.
  template <typename Body>
  void sweep(const Step& step, const std::vector<int>& scope, Body&& body) const {
    const std::size_t b = step.bucket.size();
    const std::size_t r = scope.size();
    std::vector<std::size_t> strides(b);
    std::vector<std::vector<std::size_t>> digit_stride(b, std::vector<std::size_t>(r));
    for (std::size_t i = 0; i < b; ++i) {
      const Factor& f = factors_[step.bucket[i]];
      strides[i] = stride_of(f, step.vertex);
      for (std::size_t p = 0; p < r; ++p) digit_stride[i][p] = stride_of(f, scope[p]);
    }
    std::vector<std::size_t> offsets(b, 0);
    std::vector<int> digits(r, 0);
    const std::size_t total = table_size(q_, r);
    for (std::size_t out = 0; out < total; ++out) {
      body(out, std::span<const std::size_t>(offsets), std::span<const std::size_t>(strides));
      std::size_t p = r;
      while (p-- > 0) {
        if (digits[p] + 1 < q_) {
          ++digits[p];
          for (std::size_t i = 0; i < b; ++i) offsets[i] += digit_stride[i][p];
          break;
        }
        for (std::size_t i = 0; i < b; ++i) offsets[i] -= static_cast<std::size_t>(q_ - 1) * digit_stride[i][p];
        digits[p] = 0;
      }
    }
  }

  int q_;
  std::vector<double> weights_;
  ContractionPlan plan_;
  std::vector<Factor> factors_;
  std::size_t num_edge_factors_ = 0;
  std::vector<Step> steps_;
  std::vector<int> scalars_;
};

}  // namespace

DensityValue multilinear_density(const EdgeAssignment& a, const DensityOptions& options) {
  Contraction contraction(a, options);
  const double value = contraction.forward();
  return {value, DensityMethod::kContraction, contraction.plan()};
}

DensityValue density(const Graph& g, const StepGraphon& h, const DensityOptions& options) {
  return multilinear_density(EdgeAssignment::uniform(g, h), options);
}

DensityGradient multilinear_gradient(const EdgeAssignment& a, const DensityOptions& options) {
  Contraction contraction(a, options);
  DensityGradient gradient;
  gradient.value = contraction.forward();
  gradient.edge_adjoint = contraction.backward();
  return gradient;
}

std::vector<double> edge_deleted_densities(const Graph& g, const StepGraphon& h,
                                           const DensityOptions& options) {
  const auto gradient = multilinear_gradient(EdgeAssignment::uniform(g, h), options);
  std::vector<double> t(g.num_edges());
  for (int l = 0; l < g.num_edges(); ++l) {
    KahanSum sum;
    for (double x : gradient.edge_adjoint[l]) sum.add(x);
    t[l] = sum.value();
  }
  return t;
}

std::vector<double> edge_deleted_densities_by_substitution(const Graph& g, const StepGraphon& h,
                                                           const DensityOptions& options) {
  const StepGraphon one = constant_graphon(1.0);
  std::vector<double> t(g.num_edges());
  for (int l = 0; l < g.num_edges(); ++l) {
    std::vector<StepGraphon> kernels(g.num_edges(), h);
    kernels[l] = one;
    t[l] = multilinear_density(EdgeAssignment(g, std::move(kernels)), options).value;
  }
  return t;
}

double uniform_direction_derivative(const Graph& g, const StepGraphon& h, const DensityOptions& options) {
  KahanSum sum;
  for (double t : edge_deleted_densities(g, h, options)) sum.add(t);
  return sum.value();
}

double perturbed_pair_density(const Graph& g, const StepGraphon& h, double eps, int l1, int l2,
                              const DensityOptions& options) {
  const int k = g.num_edges();
  if (l1 < 0 || l1 >= k || l2 < 0 || l2 >= k) throw DomainError("perturbed_pair_density: edge index out of range");
  if (l1 == l2) throw DomainError("perturbed_pair_density: the two perturbed edges must differ");
  std::vector<StepGraphon> kernels(k, h);
  kernels[l1] = shift(h, eps);
  kernels[l2] = shift(h, -eps);
  return multilinear_density(EdgeAssignment(g, std::move(kernels)), options).value;
}

}  // namespace normcheck
