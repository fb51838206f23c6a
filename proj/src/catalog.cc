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

#include "normcheck/catalog.h"

#include <charconv>
#include <random>
#include <regex>

#include "normcheck/error.h"

namespace normcheck {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

constexpr const char* kHatami = "Hatami 2010";
constexpr const char* kKral = "Kral', Martins, Pach, Wrochna 2019";
constexpr const char* kBipartite = "not bipartite; weakly norming graphs are bipartite (Hatami 2010; Lovasz 2012)";
constexpr const char* kDegrees =
    "connected bipartite with unequal degrees inside a part (Hatami 2010)";

}  // namespace

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete bipartite graph needs a, b >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
  }
  return Graph(a + b, std::move(edges));
}

Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

Graph hypercube(int d) {
  require(d >= 1 && d <= 16, "hypercube dimension must be in [1, 16]");
  const int n = 1 << d;
  std::vector<Edge> edges;
  for (int x = 0; x < n; ++x) {
    for (int b = 0; b < d; ++b) {
      const int y = x ^ (1 << b);
      if (x < y) edges.push_back({x, y});
    }
  }
  return Graph(n, std::move(edges));
}

Graph torus_graph(int m, int n) {
  require(m >= 3 && n >= 3, "torus needs both cycle lengths >= 3");
  auto id = [n](int i, int j) { return i * n + j; };
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      edges.push_back({id(i, j), id(i, (j + 1) % n)});
      edges.push_back({id(i, j), id((i + 1) % m, j)});
    }
  }
  return Graph(m * n, std::move(edges));
}

Graph edgeless_graph(int n) {
  require(n >= 0, "edgeless graph needs n >= 0");
  return Graph(n, {});
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  require(n >= 0, "random graph needs n >= 0");
  require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

std::string to_string(KnownStatus status) {
  switch (status) {
    case KnownStatus::kKnownWeaklyNorming:
      return "known_weakly_norming";
    case KnownStatus::kKnownNotWeaklyNorming:
      return "known_not_weakly_norming";
    case KnownStatus::kUnknown:
      break;
  }
  return "unknown";
}

namespace {

CatalogEntry single_entry(const std::string& name) {
  static const std::regex pattern(R"((P|C|K|Q|E|star_|K_(\d+)_|torus_(\d+)_)(\d+))");
  std::smatch m;
  if (!std::regex_match(name, m, pattern)) {
    throw DomainError("unknown catalog name '" + name + "'");
  }
  auto num = [&](const std::string& s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || v > 100000) throw DomainError("bad parameter in '" + name + "'");
    return v;
  };
  const std::string prefix = m[1].str();
  const int last = num(m[4].str());
  CatalogEntry e;
  e.name = name;
  using enum KnownStatus;
  if (prefix == "P") {
    e.family = "path";
    e.parameters = {last};
    e.graph = path_graph(last);
    if (last == 2 || last == 3) {
      e.known_status = kKnownWeaklyNorming;
      e.note = std::string("star; complete bipartite graphs are weakly norming (") + kHatami + ")";
    } else if (last >= 4) {
      e.known_status = kKnownNotWeaklyNorming;
      e.note = kDegrees;
    }
  } else if (prefix == "C") {
    e.family = "cycle";
    e.parameters = {last};
    e.graph = cycle_graph(last);
    if (last % 2 == 0) {
      e.known_status = kKnownWeaklyNorming;
      e.note = std::string("even cycles are norming (") + kHatami + ")";
    } else {
      e.known_status = kKnownNotWeaklyNorming;
      e.note = kBipartite;
    }
  } else if (prefix == "K") {
    e.family = "complete";
    e.parameters = {last};
    e.graph = complete_graph(last);
    if (last == 2) {
      e.known_status = kKnownWeaklyNorming;
      e.note = "single edge: t(|h|) is the L1 norm";
    } else if (last >= 3) {
      e.known_status = kKnownNotWeaklyNorming;
      e.note = kBipartite;
    }
  } else if (prefix == "Q") {
    e.family = "hypercube";
    e.parameters = {last};
    e.graph = hypercube(last);
    e.known_status = kKnownWeaklyNorming;
    e.note = std::string("hypercubes are weakly norming (") + kHatami + ")";
  } else if (prefix == "E") {
    e.family = "edgeless";
    e.parameters = {last};
    e.graph = edgeless_graph(last);
  } else if (prefix == "star_") {
    e.family = "star";
    e.parameters = {last};
    e.graph = star_graph(last);
    e.known_status = kKnownWeaklyNorming;
    e.note = std::string("complete bipartite graphs are weakly norming (") + kHatami + ")";
  } else if (m[2].matched) {
    const int a = num(m[2].str());
    e.family = "complete_bipartite";
    e.parameters = {a, last};
    e.graph = complete_bipartite(a, last);
    e.known_status = kKnownWeaklyNorming;
    e.note = std::string("complete bipartite graphs are weakly norming (") + kHatami + ")";
  } else {
    const int rows = num(m[3].str());
    e.family = "torus";
    e.parameters = {rows, last};
    e.graph = torus_graph(rows, last);
    if (rows % 2 == 1 || last % 2 == 1) {
      e.known_status = kKnownNotWeaklyNorming;
      e.note = kBipartite;
    } else if (rows == last && rows >= 6) {
      e.known_status = kKnownNotWeaklyNorming;
      e.note = std::string("toroidal grids C_2k x C_2k with k >= 3 are not weakly norming (") + kKral + ")";
    } else if (rows == 4 && last == 4) {
      e.known_status = kKnownWeaklyNorming;
      e.note = std::string("C4 x C4 is the hypercube Q4 (") + kHatami + ")";
    }
  }
  return e;
}

}  // namespace

CatalogEntry catalog_entry(std::string_view name) {
  const std::string text(name);
  const auto plus = text.find('+');
  if (plus == std::string::npos) return single_entry(text);
  CatalogEntry left = single_entry(text.substr(0, plus));
  CatalogEntry right = catalog_entry(text.substr(plus + 1));
  CatalogEntry e;
  e.name = text;
  e.family = "disjoint_union";
  e.graph = disjoint_union(left.graph, right.graph);
  e.note = "disjoint union; no literature annotation";
  return e;
}

std::vector<std::string> catalog_names() {
  return {"P4",    "C4",    "C5",    "C6",     "K2",     "K3",     "K4",     "K_2_2",
          "K_2_3", "K_3_3", "Q3",    "star_1", "star_2", "star_3", "star_4", "torus_4_4",
          "torus_6_6"};
}

}  // namespace normcheck
