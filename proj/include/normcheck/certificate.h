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

// Plain-text certificate files, meant to be checkable by an independent
// implementation:
//
//   # normcheck certificate
//   kind holder | lemma
//   vertices <n>
//   edge <u> <v>             (one line per edge, in index order)
//   graph6 <string>          (informational; edge order comes from the edge lines)
//   lhs / rhs / violation    (holder) or edge_lo / edge_hi / t_lo / t_hi / gap (lemma)
//   kernel <slot>            followed by a graphon in the graphon text format
//   end_kernel
//
// A holder certificate carries one kernel block per edge; a lemma
// certificate carries a single block with slot 0. Numbers are written with
// 17 significant digits so that files round-trip exactly.

#ifndef NORMCHECK_CERTIFICATE_H_
#define NORMCHECK_CERTIFICATE_H_

#include <string>
#include <string_view>
#include <variant>

#include "normcheck/analyzer.h"

namespace normcheck {

using Certificate = std::variant<LemmaCertificate, HolderCertificate>;

std::string format_certificate(const Certificate& c);

// Throws ParseError on malformed input.
Certificate parse_certificate(std::string_view text);

struct VerifyResult {
  bool passed = false;
  std::string detail;
};

// Recomputes every claimed quantity (see reverify) and compares within
// `relative_tolerance`.
VerifyResult verify_certificate(const Certificate& c, double relative_tolerance = 1e-8,
                                RecomputeMode mode = RecomputeMode::kAuto);

}  // namespace normcheck

#endif  // NORMCHECK_CERTIFICATE_H_
