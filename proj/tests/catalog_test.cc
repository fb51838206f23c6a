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

#include <algorithm>

#include <gtest/gtest.h>

#include "normcheck/error.h"
#include "normcheck/graph_io.h"

namespace normcheck {
namespace {

TEST(CatalogTest, Families) {
  const Graph c6 = catalog_entry("C6").graph;
  EXPECT_EQ(c6.num_vertices(), 6);
  EXPECT_EQ(c6.num_edges(), 6);
  for (int d : c6.degree_sequence()) EXPECT_EQ(d, 2);

  const Graph torus = catalog_entry("torus_6_6").graph;
  EXPECT_EQ(torus.num_vertices(), 36);
  EXPECT_EQ(torus.num_edges(), 72);
  for (int d : torus.degree_sequence()) EXPECT_EQ(d, 4);

  const Graph q3 = catalog_entry("Q3").graph;
  EXPECT_EQ(q3.num_vertices(), 8);
  EXPECT_EQ(q3.num_edges(), 12);

  EXPECT_EQ(catalog_entry("K_2_3").graph, complete_bipartite(2, 3));
  EXPECT_EQ(catalog_entry("star_3").graph, complete_bipartite(1, 3));
  EXPECT_EQ(catalog_entry("P4").graph, path_graph(4));
  EXPECT_EQ(catalog_entry("E3").graph.num_edges(), 0);
  EXPECT_EQ(catalog_entry("C4+C6").graph.num_vertices(), 10);
  EXPECT_EQ(catalog_entry("K_3_3").parameters, (std::vector<int>{3, 3}));
}

TEST(CatalogTest, TorusIsCartesianProduct) {
  const Graph t = torus_graph(3, 4);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 4; ++j) {
      EXPECT_TRUE(t.has_edge(i * 4 + j, i * 4 + (j + 1) % 4));
      EXPECT_TRUE(t.has_edge(i * 4 + j, ((i + 1) % 3) * 4 + j));
    }
  }
  EXPECT_EQ(t.num_edges(), 24);
}

TEST(CatalogTest, AnnotationsCarrySources) {
  const auto torus = catalog_entry("torus_6_6");
  EXPECT_EQ(torus.known_status, KnownStatus::kKnownNotWeaklyNorming);
  EXPECT_NE(torus.note.find("2019"), std::string::npos);
  EXPECT_EQ(catalog_entry("C4").known_status, KnownStatus::kKnownWeaklyNorming);
  EXPECT_EQ(catalog_entry("K3").known_status, KnownStatus::kKnownNotWeaklyNorming);
  EXPECT_EQ(to_string(KnownStatus::kUnknown), "unknown");
  for (const auto& name : catalog_names()) {
    const auto e = catalog_entry(name);
    if (e.known_status != KnownStatus::kUnknown) EXPECT_FALSE(e.note.empty()) << name;
  }
}

TEST(CatalogTest, RejectsUnknownNames) {
  EXPECT_THROW(catalog_entry("Z9"), DomainError);
  EXPECT_THROW(catalog_entry("C2"), DomainError);
  EXPECT_THROW(catalog_entry("torus_6"), DomainError);
  EXPECT_THROW(catalog_entry(""), DomainError);
}

TEST(CatalogTest, RandomGraphIsSeeded) {
  EXPECT_EQ(random_graph(8, 0.5, 3), random_graph(8, 0.5, 3));
  EXPECT_EQ(random_graph(8, 0.0, 3).num_edges(), 0);
  EXPECT_EQ(random_graph(8, 1.0, 3), complete_graph(8));
  EXPECT_THROW(random_graph(3, 1.5, 0), DomainError);
}

}  // namespace
}  // namespace normcheck
