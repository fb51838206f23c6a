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

// Step kernels on [0,1]^2: a partition of [0,1] into q blocks of positive
// measure and a symmetric q x q matrix of block values. Signed values are
// allowed; nonnegative kernels are the ones the norming inequalities speak
// about.

#ifndef NORMCHECK_GRAPHON_H_
#define NORMCHECK_GRAPHON_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace normcheck {

class StepGraphon {
 public:
  static constexpr double kWeightTolerance = 1e-12;

  StepGraphon() : StepGraphon({1.0}, {1.0}) {}

  // `values` is row-major q x q. Throws DomainError unless every weight is
  // positive, the weights sum to 1 within kWeightTolerance, the matrix is
  // exactly symmetric and every entry is finite.
  StepGraphon(std::vector<double> weights, std::vector<double> values);

  int blocks() const { return static_cast<int>(weights_.size()); }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& values() const { return values_; }
  double value(int a, int b) const { return values_[static_cast<std::size_t>(a) * blocks() + b]; }

  double min_value() const;
  double max_value() const;
  bool is_nonnegative() const { return min_value() >= 0.0; }

  bool operator==(const StepGraphon&) const = default;

 private:
  std::vector<double> weights_;
  std::vector<double> values_;
};

struct SeparationCertificate {
  double delta = 0.0;
};

StepGraphon constant_graphon(double c);

// h + eps·1.
StepGraphon shift(const StepGraphon& h, double eps);

// delta = min entry, present iff that is > 0.
std::optional<SeparationCertificate> separation_from_zero(const StepGraphon& h);

StepGraphon pointwise_abs(const StepGraphon& h);

// Same partition, value matrix replaced (symmetry and finiteness checked).
StepGraphon with_values(const StepGraphon& h, std::vector<double> values);

// Re-expresses every input on the union of all cut points (cuts closer than
// kCutMergeTolerance are merged). Each output is the same function as its
// input.
inline constexpr double kCutMergeTolerance = 1e-12;
std::vector<StepGraphon> common_refinement(std::span<const StepGraphon> hs);

// ∫∫ |h1 - h2| computed on the common refinement.
double l1_distance(const StepGraphon& h1, const StepGraphon& h2);

// Equal weights 1/q; upper-triangle values i.i.d. uniform on [lo, hi] from a
// mt19937_64 seeded with `seed`. Throws DomainError if q < 1 or lo > hi.
StepGraphon random_graphon(int q, double lo, double hi, std::uint64_t seed);

// splitmix64 of (seed, stream); independent seeds for numbered sub-streams.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// Text format:
//   q
//   w_1 ... w_q
//   row_1
//   ...
//   row_q
// whitespace separated, '#' starts a comment. The parser accepts matrices
// symmetric within 1e-9 and replaces each pair by its average.
StepGraphon parse_graphon(std::string_view text);
std::string format_graphon(const StepGraphon& h);

}  // namespace normcheck

#endif  // NORMCHECK_GRAPHON_H_
