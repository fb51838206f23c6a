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

#include "normcheck/symmetry.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "normcheck/error.h"

namespace normcheck {

VertexMapping identity_mapping(int n) {
  VertexMapping pi;
  pi.image.resize(n);
  std::iota(pi.image.begin(), pi.image.end(), 0);
  return pi;
}

VertexMapping compose(const VertexMapping& a, const VertexMapping& b) {
  VertexMapping out;
  out.image.resize(b.image.size());
  for (std::size_t v = 0; v < b.image.size(); ++v) out.image[v] = a.image[b.image[v]];
  return out;
}

VertexMapping inverse(const VertexMapping& a) {
  VertexMapping out;
  out.image.resize(a.image.size());
  for (std::size_t v = 0; v < a.image.size(); ++v) out.image[a.image[v]] = static_cast<int>(v);
  return out;
}

Edge map_edge(const VertexMapping& pi, const Edge& e) {
  const int a = pi.image[e.u], b = pi.image[e.v];
  return a < b ? Edge{a, b} : Edge{b, a};
}

bool is_isomorphism(const Graph& f, const Graph& g, const VertexMapping& pi) {
  const int n = f.num_vertices();
  if (g.num_vertices() != n || static_cast<int>(pi.image.size()) != n) return false;
  std::vector<bool> hit(n, false);
  for (int v : pi.image) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (f.has_edge(u, v) != g.has_edge(pi.image[u], pi.image[v])) return false;
    }
  }
  return true;
}

bool is_automorphism(const Graph& g, const VertexMapping& pi) { return is_isomorphism(g, g, pi); }

namespace {

class MappingSearch {
 public:
  MappingSearch(const Graph& f, const Graph& g, std::span<const Pin> pins)
      : f_(f), g_(g), n_(f.num_vertices()) {
    feasible_ = n_ == g.num_vertices() && f.num_edges() == g.num_edges();
    if (!feasible_) return;
    pin_of_f_.assign(n_, -1);
    pin_of_g_.assign(n_, -1);
    for (std::size_t i = 0; i < pins.size(); ++i) {
      const auto [s, t] = pins[i];
      if (s < 0 || s >= n_ || t < 0 || t >= n_ || pin_of_f_[s] != -1 || pin_of_g_[t] != -1) {
        feasible_ = false;
        return;
      }
      pin_of_f_[s] = pin_of_g_[t] = static_cast<int>(i);
    }
    pins_.assign(pins.begin(), pins.end());
    feasible_ = refine();
  }

  std::size_t run(const std::function<bool(const VertexMapping&)>& visit) {
    if (!feasible_) return 0;
    map_.image.assign(n_, -1);
    used_.assign(n_, false);
    mapped_nbrs_f_.assign(n_, 0);
    used_nbrs_g_.assign(n_, 0);
    visit_ = &visit;
    visited_ = 0;
    stop_ = false;
    for (const auto& [s, t] : pins_) {
      if (colors_f_[s] != colors_g_[t] || !consistent(s, t)) return 0;
      assign(s, t);
    }
    extend(static_cast<int>(pins_.size()));
    return visited_;
  }

 private:
  // Joint color refinement. Returns false when the color histograms of the
  // two graphs differ, which rules out every isomorphism.
  bool refine() {
    colors_f_.assign(n_, 0);
    colors_g_.assign(n_, 0);
    {
      std::map<std::pair<int, int>, int> ids;
      auto initial = [&](const Graph& h, const std::vector<int>& pin_of, std::vector<int>& out) {
        for (int v = 0; v < n_; ++v) {
          auto key = std::make_pair(h.degree(v), pin_of[v]);
          auto [it, _] = ids.emplace(key, static_cast<int>(ids.size()));
          out[v] = it->second;
        }
      };
      initial(f_, pin_of_f_, colors_f_);
      initial(g_, pin_of_g_, colors_g_);
      // ids are assigned in encounter order; canonicalize through the sorted map.
      std::vector<int> rank(ids.size());
      int r = 0;
      for (const auto& [key, id] : ids) rank[id] = r++;
      for (int& c : colors_f_) c = rank[c];
      for (int& c : colors_g_) c = rank[c];
    }
    std::size_t classes = 0;
    for (int round = 0; round <= n_; ++round) {
      std::map<std::vector<int>, int> ids;
      auto signature = [&](const Graph& h, const std::vector<int>& colors, int v) {
        std::vector<int> sig;
        sig.reserve(h.degree(v) + 1);
        sig.push_back(colors[v]);
        for (int w : h.neighbors(v)) sig.push_back(colors[w]);
        std::sort(sig.begin() + 1, sig.end());
        return sig;
      };
      std::vector<std::vector<int>> sig_f(n_), sig_g(n_);
      for (int v = 0; v < n_; ++v) {
        sig_f[v] = signature(f_, colors_f_, v);
        sig_g[v] = signature(g_, colors_g_, v);
        ids.emplace(sig_f[v], 0);
        ids.emplace(sig_g[v], 0);
      }
      int next = 0;
      for (auto& [sig, id] : ids) id = next++;
      for (int v = 0; v < n_; ++v) {
        colors_f_[v] = ids[sig_f[v]];
        colors_g_[v] = ids[sig_g[v]];
      }
      if (ids.size() == classes) break;
      classes = ids.size();
    }
    std::vector<int> hist_f(classes, 0), hist_g(classes, 0);
    for (int v = 0; v < n_; ++v) {
      ++hist_f[colors_f_[v]];
      ++hist_g[colors_g_[v]];
    }
    class_size_ = hist_f;
    return hist_f == hist_g;
  }

  bool consistent(int v, int w) const {
    if (used_[w]) return false;
    if (mapped_nbrs_f_[v] != used_nbrs_g_[w]) return false;
    for (int x : f_.neighbors(v)) {
      const int y = map_.image[x];
      if (y != -1 && !g_.has_edge(w, y)) return false;
    }
    return true;
  }

  void assign(int v, int w) {
    map_.image[v] = w;
    used_[w] = true;
    for (int x : f_.neighbors(v)) ++mapped_nbrs_f_[x];
    for (int y : g_.neighbors(w)) ++used_nbrs_g_[y];
  }

  void unassign(int v, int w) {
    map_.image[v] = -1;
    used_[w] = false;
    for (int x : f_.neighbors(v)) --mapped_nbrs_f_[x];
    for (int y : g_.neighbors(w)) --used_nbrs_g_[y];
  }

  int choose() const {
    int best = -1;
    for (int v = 0; v < n_; ++v) {
      if (map_.image[v] != -1) continue;
      if (best == -1 || mapped_nbrs_f_[v] > mapped_nbrs_f_[best] ||
          (mapped_nbrs_f_[v] == mapped_nbrs_f_[best] &&
           class_size_[colors_f_[v]] < class_size_[colors_f_[best]])) {
        best = v;
      }
    }
    return best;
  }

  void extend(int depth) {
    if (stop_) return;
    if (depth == n_) {
      ++visited_;
      if (!(*visit_)(map_)) stop_ = true;
      return;
    }
    const int v = choose();
    for (int w = 0; w < n_ && !stop_; ++w) {
      if (colors_g_[w] != colors_f_[v] || !consistent(v, w)) continue;
      assign(v, w);
      extend(depth + 1);
      unassign(v, w);
    }
  }

  const Graph& f_;
  const Graph& g_;
  const int n_;
  bool feasible_ = false;
  std::vector<Pin> pins_;
  std::vector<int> pin_of_f_, pin_of_g_;
  std::vector<int> colors_f_, colors_g_, class_size_;

  VertexMapping map_;
  std::vector<bool> used_;
  std::vector<int> mapped_nbrs_f_, used_nbrs_g_;
  const std::function<bool(const VertexMapping&)>* visit_ = nullptr;
  std::size_t visited_ = 0;
  bool stop_ = false;
};

}  // namespace

std::size_t for_each_isomorphism(const Graph& f, const Graph& g, std::span<const Pin> pins,
                                 const std::function<bool(const VertexMapping&)>& visit) {
  MappingSearch search(f, g, pins);
  return search.run(visit);
}

std::optional<VertexMapping> find_isomorphism(const Graph& f, const Graph& g,
                                              std::span<const Pin> pins) {
  std::optional<VertexMapping> found;
  for_each_isomorphism(f, g, pins, [&](const VertexMapping& pi) {
    found = pi;
    return false;
  });
  return found;
}

std::optional<VertexMapping> find_edge_automorphism(const Graph& g, int from, int to) {
  const Edge& a = g.edge(from);
  const Edge& b = g.edge(to);
  const Pin straight[] = {{a.u, b.u}, {a.v, b.v}};
  if (auto pi = find_isomorphism(g, g, straight)) return pi;
  const Pin crossed[] = {{a.u, b.v}, {a.v, b.u}};
  return find_isomorphism(g, g, crossed);
}

std::vector<VertexMapping> automorphism_group(const Graph& g, AutomorphismOptions options) {
  std::vector<VertexMapping> group;
  bool overflow = false;
  for_each_isomorphism(g, g, {}, [&](const VertexMapping& pi) {
    if (group.size() >= options.max_order) {
      overflow = true;
      return false;
    }
    group.push_back(pi);
    return true;
  });
  if (overflow) {
    throw GroupTooLarge("automorphism group order exceeds cap " + std::to_string(options.max_order));
  }
  // The identity is always found, but not necessarily first.
  auto id = std::find(group.begin(), group.end(), identity_mapping(g.num_vertices()));
  std::rotate(group.begin(), id, id + 1);
  return group;
}

EdgeOrbitPartition::EdgeOrbitPartition(int num_vertices, int num_edges)
    : num_vertices_(num_vertices), orbit_of_(num_edges, -1), from_representative_(num_edges) {}

void EdgeOrbitPartition::add_orbit(int l) {
  orbit_of_[l] = static_cast<int>(orbits_.size());
  orbits_.push_back({l});
  from_representative_[l] = identity_mapping(num_vertices_);
}

void EdgeOrbitPartition::add_to_orbit(int orbit, int l, VertexMapping from_representative) {
  orbit_of_[l] = orbit;
  orbits_[orbit].push_back(l);
  from_representative_[l] = std::move(from_representative);
}

VertexMapping EdgeOrbitPartition::witness(int from, int to) const {
  if (orbit_of_.at(from) != orbit_of_.at(to)) {
    throw DomainError("edges " + std::to_string(from) + " and " + std::to_string(to) +
                      " lie in different orbits");
  }
  return compose(from_representative_[to], inverse(from_representative_[from]));
}

EdgeOrbitPartition edge_orbits(const Graph& g) {
  EdgeOrbitPartition partition(g.num_vertices(), g.num_edges());
  for (int l = 0; l < g.num_edges(); ++l) {
    bool placed = false;
    for (std::size_t o = 0; o < partition.size() && !placed; ++o) {
      const int rep = partition.orbits()[o].front();
      if (auto pi = find_edge_automorphism(g, rep, l)) {
        partition.add_to_orbit(static_cast<int>(o), l, std::move(*pi));
        placed = true;
      }
    }
    if (!placed) partition.add_orbit(l);
  }
  return partition;
}

bool is_edge_transitive(const Graph& g) { return edge_orbits(g).size() <= 1; }

ComponentIsomorphism components_isomorphic(const Graph& g) {
  ComponentIsomorphism result;
  for (auto& c : connected_components(g)) {
    if (!c.singleton) result.components.push_back(std::move(c));
  }
  if (result.components.empty()) return result;
  const auto& first = result.components.front().vertices;
  const Graph base = induced_subgraph(g, first);
  for (std::size_t i = 0; i < result.components.size(); ++i) {
    const auto& verts = result.components[i].vertices;
    auto pi = find_isomorphism(base, induced_subgraph(g, verts));
    if (!pi) {
      result.isomorphic = false;
      result.mismatch = static_cast<int>(i);
      result.witnesses.clear();
      return result;
    }
    for (int& v : pi->image) v = verts[v];
    result.witnesses.push_back(std::move(*pi));
  }
  return result;
}

}  // namespace normcheck
