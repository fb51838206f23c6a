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

// Named graph families.
//
// Names: P<n> path, C<n> cycle, K<n> complete graph, K_<a>_<b> complete
// bipartite, star_<n> (= K_1_n), Q<d> hypercube, torus_<m>_<n> (C_m □ C_n),
// E<n> edgeless. "A+B" is the disjoint union of A and B.

#ifndef NORMCHECK_CATALOG_H_
#define NORMCHECK_CATALOG_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "normcheck/graph.h"

namespace normcheck {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);
Graph hypercube(int d);
Graph torus_graph(int m, int n);
Graph edgeless_graph(int n);

// Erdős–Rényi G(n, p): each pair {i<j}, in lexicographic order, is an edge
// with probability p, drawn from a mt19937_64 seeded with `seed`.
Graph random_graph(int n, double p, std::uint64_t seed);

// Literature annotation. Never consulted by any verdict.
enum class KnownStatus { kKnownWeaklyNorming, kKnownNotWeaklyNorming, kUnknown };

std::string to_string(KnownStatus status);

struct CatalogEntry {
  std::string name;
  std::string family;
  std::vector<int> parameters;
  KnownStatus known_status = KnownStatus::kUnknown;
  std::string note;  // source of the annotation
  Graph graph;
};

// Throws DomainError for unknown or malformed names.
CatalogEntry catalog_entry(std::string_view name);

// The fixed list printed by `catalog list`.
std::vector<std::string> catalog_names();

}  // namespace normcheck

#endif  // NORMCHECK_CATALOG_H_
