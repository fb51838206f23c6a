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

// Isomorphisms, automorphisms and edge orbits of small graphs.
//
// All searches share one engine: the two graphs are color-refined jointly
// (initial color = degree, or a private color for pinned vertices), then a
// backtracking search extends a partial map one vertex at a time. The next
// source vertex is the one with the most already-mapped neighbors, ties
// broken by the smallest color class and then the lowest index; candidates
// are tried in increasing index order. Results are therefore deterministic.

#ifndef NORMCHECK_SYMMETRY_H_
#define NORMCHECK_SYMMETRY_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "normcheck/graph.h"

namespace normcheck {

// image[v] is the vertex that v is sent to.
struct VertexMapping {
  std::vector<int> image;

  bool operator==(const VertexMapping&) const = default;
};

VertexMapping identity_mapping(int n);
// (a ∘ b)(v) = a(b(v)).
VertexMapping compose(const VertexMapping& a, const VertexMapping& b);
VertexMapping inverse(const VertexMapping& a);
Edge map_edge(const VertexMapping& pi, const Edge& e);

// Checks {pi(u),pi(v)} ∈ E(g) ⇔ {u,v} ∈ E(f) over all vertex pairs, and that
// pi is a bijection.
bool is_isomorphism(const Graph& f, const Graph& g, const VertexMapping& pi);
bool is_automorphism(const Graph& g, const VertexMapping& pi);

// A source -> target vertex pair forced on the search.
using Pin = std::pair<int, int>;

// Visits isomorphisms f -> g compatible with `pins` in search order until
// `visit` returns false. Returns the number visited.
std::size_t for_each_isomorphism(const Graph& f, const Graph& g, std::span<const Pin> pins,
                                 const std::function<bool(const VertexMapping&)>& visit);

std::optional<VertexMapping> find_isomorphism(const Graph& f, const Graph& g,
                                              std::span<const Pin> pins = {});

// Automorphism of g sending edge `from` onto edge `to` (either orientation).
std::optional<VertexMapping> find_edge_automorphism(const Graph& g, int from, int to);

struct AutomorphismOptions {
  std::size_t max_order = 10'000'000;
};

// The whole automorphism group, identity first. Throws GroupTooLarge once
// more than options.max_order elements have been found.
std::vector<VertexMapping> automorphism_group(const Graph& g, AutomorphismOptions options = {});

class EdgeOrbitPartition {
 public:
  EdgeOrbitPartition() = default;
  EdgeOrbitPartition(int num_vertices, int num_edges);

  // Orbits in order of their smallest edge; each orbit is ascending and its
  // first element is the representative.
  const std::vector<std::vector<int>>& orbits() const { return orbits_; }
  int orbit_of(int l) const { return orbit_of_[l]; }
  std::size_t size() const { return orbits_.size(); }

  // An automorphism taking edge `from` onto edge `to`; both must lie in one
  // orbit. Composed through the orbit representative.
  VertexMapping witness(int from, int to) const;

  // Used while building.
  void add_orbit(int l);
  void add_to_orbit(int orbit, int l, VertexMapping from_representative);

 private:
  int num_vertices_ = 0;
  std::vector<std::vector<int>> orbits_;
  std::vector<int> orbit_of_;
  // from_representative_[l] sends the representative of l's orbit onto l.
  std::vector<VertexMapping> from_representative_;
};

EdgeOrbitPartition edge_orbits(const Graph& g);

// Edgeless graphs count as edge-transitive.
bool is_edge_transitive(const Graph& g);

struct ComponentIsomorphism {
  bool isomorphic = true;
  // Non-singleton components, in order of their smallest vertex.
  std::vector<Component> components;
  // witnesses[i].image[r] is the vertex of components[i] matched with the
  // r-th vertex of components[0]; present only when isomorphic.
  std::vector<VertexMapping> witnesses;
  // First component that is not isomorphic to components[0], or -1.
  int mismatch = -1;
};

ComponentIsomorphism components_isomorphic(const Graph& g);

}  // namespace normcheck

#endif  // NORMCHECK_SYMMETRY_H_
