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

// Finite simple undirected graphs with a stable edge indexing, plus the
// structural queries used by the norming checks: connected components,
// 2-colorings and part degrees.

#ifndef NORMCHECK_GRAPH_H_
#define NORMCHECK_GRAPH_H_

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace normcheck {

// An unordered vertex pair, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

// Immutable simple graph on vertices 0..n-1. Edge l (0-based) is the l-th
// pair handed to the constructor; that index is stable for the lifetime of
// the value and is what every per-edge API refers to.
class Graph {
 public:
  Graph() = default;

  // Throws DomainError on self-loops, duplicate pairs or endpoints outside
  // [0, n). Pairs may be given in either orientation.
  Graph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int l) const { return edges_[l]; }

  bool has_edge(int u, int v) const;
  // Index of edge {u,v}, or -1.
  int edge_index(int u, int v) const;

  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  std::vector<int> degree_sequence() const;

  // Exact equality of vertex count and indexed edge list.
  bool operator==(const Graph& other) const {
    return num_vertices_ == other.num_vertices_ && edges_ == other.edges_;
  }

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  // Dense n*n lookup of edge indices (-1 when absent).
  std::vector<int> index_;
};

// Returns g without edge l; the remaining edges keep their relative order.
// Throws DomainError if l is out of range.
Graph delete_edge(const Graph& g, int l);

// Returns g with edge {u,v} appended as the last index.
Graph add_edge(const Graph& g, Edge e);

// Renames vertex v to perm[v]; edge indices are preserved.
Graph relabel(const Graph& g, std::span<const int> perm);

// Vertices of f come first, then those of g shifted by f.num_vertices().
Graph disjoint_union(const Graph& f, const Graph& g);

// Subgraph induced by `vertices`, relabeled to 0..|vertices|-1 in the given
// order. Edges are ordered by their index in g.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

struct Component {
  std::vector<int> vertices;  // ascending
  bool singleton = false;
};

// Maximal connected vertex sets, ordered by their smallest vertex.
std::vector<Component> connected_components(const Graph& g);

bool is_connected(const Graph& g);

struct Bipartition {
  std::vector<int> part_a;  // ascending
  std::vector<int> part_b;  // ascending
  std::optional<int> degree_a;
  std::optional<int> degree_b;
};

// A closed walk of odd length: vertices w0, w1, ..., w_{m-1} with every
// consecutive pair (and w_{m-1}, w0) adjacent, m odd.
struct OddCycle {
  std::vector<int> vertices;
};

// 2-colors every component, placing its smallest vertex in part A. When a
// component has an odd cycle, a certificate cycle is returned instead.
std::variant<Bipartition, OddCycle> two_coloring(const Graph& g);

std::optional<Bipartition> is_bipartite(const Graph& g);

// True iff `cycle` is an odd closed walk in g.
bool verify_odd_cycle(const Graph& g, const OddCycle& cycle);

// Common degrees (a, b) of the two parts with a <= b, or nullopt when some
// part is not degree-regular. An empty part never has a common degree.
std::optional<std::pair<int, int>> part_degrees(const Graph& g,
                                                const Bipartition& parts);

std::string describe(const Graph& g);

}  // namespace normcheck

#endif  // NORMCHECK_GRAPH_H_
