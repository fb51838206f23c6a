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

#include "normcheck/graphon.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>

#include "normcheck/error.h"

namespace normcheck {

StepGraphon::StepGraphon(std::vector<double> weights, std::vector<double> values)
    : weights_(std::move(weights)), values_(std::move(values)) {
  const std::size_t q = weights_.size();
  if (q == 0) throw DomainError("graphon needs at least one block");
  if (values_.size() != q * q) {
    throw DomainError("graphon value matrix has " + std::to_string(values_.size()) +
                      " entries, expected " + std::to_string(q * q));
  }
  double total = 0.0;
  for (double w : weights_) {
    if (!(w > 0.0) || !std::isfinite(w)) throw DomainError("graphon block weights must be positive");
    total += w;
  }
  if (std::abs(total - 1.0) > kWeightTolerance) {
    throw DomainError("graphon block weights sum to " + std::to_string(total) + ", not 1");
  }
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      const double x = values_[a * q + b];
      if (!std::isfinite(x)) throw DomainError("graphon values must be finite");
      if (x != values_[b * q + a]) throw DomainError("graphon value matrix is not symmetric");
    }
  }
}

double StepGraphon::min_value() const { return *std::min_element(values_.begin(), values_.end()); }
double StepGraphon::max_value() const { return *std::max_element(values_.begin(), values_.end()); }

StepGraphon constant_graphon(double c) {
  if (!std::isfinite(c)) throw DomainError("constant graphon value must be finite");
  return StepGraphon({1.0}, {c});
}

StepGraphon shift(const StepGraphon& h, double eps) {
  std::vector<double> values = h.values();
  for (double& x : values) x += eps;
  return StepGraphon(h.weights(), std::move(values));
}

std::optional<SeparationCertificate> separation_from_zero(const StepGraphon& h) {
  const double m = h.min_value();
  if (m > 0.0) return SeparationCertificate{m};
  return std::nullopt;
}

StepGraphon pointwise_abs(const StepGraphon& h) {
  std::vector<double> values = h.values();
  for (double& x : values) x = std::abs(x);
  return StepGraphon(h.weights(), std::move(values));
}

StepGraphon with_values(const StepGraphon& h, std::vector<double> values) {
  return StepGraphon(h.weights(), std::move(values));
}

namespace {

std::vector<double> cumulative_cuts(const StepGraphon& h) {
  std::vector<double> cuts;
  cuts.reserve(h.blocks() + 1);
  double acc = 0.0;
  cuts.push_back(0.0);
  for (double w : h.weights()) cuts.push_back(acc += w);
  cuts.back() = 1.0;
  return cuts;
}

}  // namespace

std::vector<StepGraphon> common_refinement(std::span<const StepGraphon> hs) {
  if (hs.empty()) throw DomainError("common_refinement needs at least one graphon");
  const bool all_same = std::all_of(hs.begin(), hs.end(), [&](const StepGraphon& h) {
    return h.weights() == hs.front().weights();
  });
  if (all_same) return {hs.begin(), hs.end()};

  std::vector<double> cuts;
  for (const auto& h : hs) {
    auto c = cumulative_cuts(h);
    cuts.insert(cuts.end(), c.begin(), c.end());
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> merged = {0.0};
  for (double c : cuts) {
    if (c - merged.back() > kCutMergeTolerance) merged.push_back(c);
  }
  merged.back() = 1.0;

  const std::size_t q = merged.size() - 1;
  std::vector<double> weights(q);
  for (std::size_t i = 0; i < q; ++i) weights[i] = merged[i + 1] - merged[i];

  std::vector<StepGraphon> out;
  out.reserve(hs.size());
  for (const auto& h : hs) {
    const auto own = cumulative_cuts(h);
    // Old block containing the midpoint of each new block.
    std::vector<int> block(q);
    for (std::size_t i = 0; i < q; ++i) {
      const double mid = 0.5 * (merged[i] + merged[i + 1]);
      const auto it = std::upper_bound(own.begin(), own.end(), mid);
      block[i] = std::clamp(static_cast<int>(it - own.begin()) - 1, 0, h.blocks() - 1);
    }
    std::vector<double> values(q * q);
    for (std::size_t a = 0; a < q; ++a) {
      for (std::size_t b = 0; b < q; ++b) values[a * q + b] = h.value(block[a], block[b]);
    }
    out.emplace_back(weights, std::move(values));
  }
  return out;
}

double l1_distance(const StepGraphon& h1, const StepGraphon& h2) {
  const StepGraphon pair[] = {h1, h2};
  const auto refined = common_refinement(pair);
  const auto& w = refined[0].weights();
  const int q = refined[0].blocks();
  double total = 0.0;
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      total += w[a] * w[b] * std::abs(refined[0].value(a, b) - refined[1].value(a, b));
    }
  }
  return total;
}

StepGraphon random_graphon(int q, double lo, double hi, std::uint64_t seed) {
  if (q < 1) throw DomainError("random_graphon: block count must be >= 1");
  if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("random_graphon: invalid value range");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> values(static_cast<std::size_t>(q) * q);
  for (int a = 0; a < q; ++a) {
    for (int b = a; b < q; ++b) {
      const double x = lo == hi ? lo : dist(rng);
      values[a * q + b] = values[b * q + a] = x;
    }
  }
  std::vector<double> weights(q, 1.0 / q);
  return StepGraphon(std::move(weights), std::move(values));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

StepGraphon parse_graphon(std::string_view text) {
  struct Token {
    std::string text;
    std::size_t line;
    std::size_t offset;
  };
  std::vector<Token> tokens;
  std::size_t line = 1;
  for (std::size_t i = 0; i < text.size();) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == '\n') {
      ++line, ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else {
      const std::size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#') ++i;
      tokens.push_back({std::string(text.substr(start, i - start)), line, start});
    }
  }
  std::size_t next = 0;
  auto number = [&](const char* what) {
    if (next >= tokens.size()) {
      throw ParseError(std::string("graphon: unexpected end of input, expected ") + what, text.size(), line);
    }
    const Token& t = tokens[next++];
    char* end = nullptr;
    const double x = std::strtod(t.text.c_str(), &end);
    if (end != t.text.c_str() + t.text.size() || !std::isfinite(x)) {
      throw ParseError("graphon line " + std::to_string(t.line) + ": bad " + what + " '" + t.text + "'",
                       t.offset, t.line);
    }
    return x;
  };
  const double qd = number("block count");
  if (qd < 1 || qd != std::floor(qd) || qd > 4096) {
    throw ParseError("graphon: block count must be a positive integer", tokens[0].offset, tokens[0].line);
  }
  const std::size_t q = static_cast<std::size_t>(qd);
  std::vector<double> weights(q), values(q * q);
  for (auto& w : weights) w = number("weight");
  for (auto& v : values) v = number("value");
  if (next != tokens.size()) {
    throw ParseError("graphon line " + std::to_string(tokens[next].line) + ": trailing token '" +
                         tokens[next].text + "'",
                     tokens[next].offset, tokens[next].line);
  }
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = a + 1; b < q; ++b) {
      const double x = values[a * q + b], y = values[b * q + a];
      if (std::abs(x - y) > 1e-9) {
        throw ParseError("graphon: value matrix not symmetric at (" + std::to_string(a) + "," +
                             std::to_string(b) + ")",
                         0);
      }
      values[a * q + b] = values[b * q + a] = 0.5 * (x + y);
    }
  }
  try {
    return StepGraphon(std::move(weights), std::move(values));
  } catch (const DomainError& e) {
    throw ParseError(std::string("graphon: ") + e.what(), 0);
  }
}

std::string format_graphon(const StepGraphon& h) {
  std::ostringstream out;
  char buf[32];
  const int q = h.blocks();
  out << q << '\n';
  for (int a = 0; a < q; ++a) {
    std::snprintf(buf, sizeof buf, "%.17g", h.weights()[a]);
    out << (a ? " " : "") << buf;
  }
  out << '\n';
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      std::snprintf(buf, sizeof buf, "%.17g", h.value(a, b));
      out << (b ? " " : "") << buf;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace normcheck
