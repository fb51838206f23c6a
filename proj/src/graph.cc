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

#include "normcheck/graph.h"

#include <algorithm>
#include <deque>
#include <sstream>

#include "normcheck/error.h"

namespace normcheck {

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices),
      edges_(std::move(edges)),
      adjacency_(num_vertices < 0 ? 0 : num_vertices) {
  if (num_vertices < 0) throw DomainError("negative vertex count");
  index_.assign(static_cast<std::size_t>(num_vertices) * num_vertices, -1);
  for (std::size_t l = 0; l < edges_.size(); ++l) {
    Edge& e = edges_[l];
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= num_vertices) {
      throw DomainError("edge " + std::to_string(l) + " has an endpoint outside [0, " +
                        std::to_string(num_vertices) + ")");
    }
    if (e.u == e.v) {
      throw DomainError("edge " + std::to_string(l) + " is a self-loop at vertex " +
                        std::to_string(e.u));
    }
    int& slot = index_[static_cast<std::size_t>(e.u) * num_vertices + e.v];
    if (slot != -1) {
      throw DomainError("duplicate edge {" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + "}");
    }
    slot = static_cast<int>(l);
    index_[static_cast<std::size_t>(e.v) * num_vertices + e.u] = static_cast<int>(l);
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const { return edge_index(u, v) != -1; }

int Graph::edge_index(int u, int v) const {
  if (u < 0 || v < 0 || u >= num_vertices_ || v >= num_vertices_) return -1;
  return index_[static_cast<std::size_t>(u) * num_vertices_ + v];
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> degrees(num_vertices_);
  for (int v = 0; v < num_vertices_; ++v) degrees[v] = degree(v);
  return degrees;
}

Graph delete_edge(const Graph& g, int l) {
  if (l < 0 || l >= g.num_edges()) {
    throw DomainError("edge index " + std::to_string(l) + " out of range [0, " +
                      std::to_string(g.num_edges()) + ")");
  }
  std::vector<Edge> edges = g.edges();
  edges.erase(edges.begin() + l);
  return Graph(g.num_vertices(), std::move(edges));
}

Graph add_edge(const Graph& g, Edge e) {
  std::vector<Edge> edges = g.edges();
  edges.push_back(e);
  return Graph(g.num_vertices(), std::move(edges));
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.num_vertices()) {
    throw DomainError("relabel: permutation size does not match vertex count");
  }
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Graph(g.num_vertices(), std::move(edges));
}

Graph disjoint_union(const Graph& f, const Graph& g) {
  std::vector<Edge> edges = f.edges();
  const int shift = f.num_vertices();
  for (const Edge& e : g.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(f.num_vertices() + g.num_vertices(), std::move(edges));
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<int> position(g.num_vertices(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) position[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (position[e.u] >= 0 && position[e.v] >= 0) {
      edges.push_back({position[e.u], position[e.v]});
    }
  }
  return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

std::vector<Component> connected_components(const Graph& g) {
  std::vector<Component> components;
  std::vector<bool> seen(g.num_vertices(), false);
  for (int root = 0; root < g.num_vertices(); ++root) {
    if (seen[root]) continue;
    Component c;
    std::vector<int> stack = {root};
    seen[root] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      c.vertices.push_back(v);
      for (int w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    c.singleton = c.vertices.size() == 1;
    components.push_back(std::move(c));
  }
  return components;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

namespace {

std::optional<int> common_degree(const Graph& g, const std::vector<int>& part) {
  if (part.empty()) return std::nullopt;
  const int d = g.degree(part.front());
  for (int v : part) {
    if (g.degree(v) != d) return std::nullopt;
  }
  return d;
}

}  // namespace

std::variant<Bipartition, OddCycle> two_coloring(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
  for (int root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::deque<int> queue = {root};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          parent[w] = v;
          depth[w] = depth[v] + 1;
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          // Same color means equal depth parity; the two tree paths up to the
          // lowest common ancestor plus {v,w} close an odd cycle.
          std::vector<int> up_v, up_w;
          int a = v, b = w;
          while (depth[a] > depth[b]) up_v.push_back(a), a = parent[a];
          while (depth[b] > depth[a]) up_w.push_back(b), b = parent[b];
          while (a != b) {
            up_v.push_back(a), a = parent[a];
            up_w.push_back(b), b = parent[b];
          }
          OddCycle cycle;
          cycle.vertices = up_v;
          cycle.vertices.push_back(a);
          cycle.vertices.insert(cycle.vertices.end(), up_w.rbegin(), up_w.rend());
          return cycle;
        }
      }
    }
  }
  Bipartition parts;
  for (int v = 0; v < n; ++v) (color[v] == 0 ? parts.part_a : parts.part_b).push_back(v);
  parts.degree_a = common_degree(g, parts.part_a);
  parts.degree_b = common_degree(g, parts.part_b);
  return parts;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  auto result = two_coloring(g);
  if (auto* parts = std::get_if<Bipartition>(&result)) return std::move(*parts);
  return std::nullopt;
}

bool verify_odd_cycle(const Graph& g, const OddCycle& cycle) {
  const auto& w = cycle.vertices;
  if (w.size() % 2 == 0) return false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!g.has_edge(w[i], w[(i + 1) % w.size()])) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> part_degrees(const Graph& g, const Bipartition& parts) {
  const auto a = common_degree(g, parts.part_a);
  const auto b = common_degree(g, parts.part_b);
  if (!a || !b) return std::nullopt;
  return std::make_pair(std::min(*a, *b), std::max(*a, *b));
}

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.num_vertices() << " k=" << g.num_edges() << " edges=[";
  for (int l = 0; l < g.num_edges(); ++l) {
    if (l) out << ' ';
    out << g.edge(l).u << '-' << g.edge(l).v;
  }
  out << ']';
  return out.str();
}

}  // namespace normcheck
