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

#include "normcheck/graph_io.h"

#include <random>

#include <gtest/gtest.h>

#include "normcheck/catalog.h"
#include "normcheck/error.h"

namespace normcheck {
namespace {

TEST(Graph6Test, DecodesCompleteGraph) {
  const Graph g = parse_graph6("C~");
  EXPECT_EQ(g, complete_graph(4));
}

// 'A' + one data bit: '?' (0) is the empty pair, '_' (100000) is K2.
TEST(Graph6Test, DecodesPairs) {
  const Graph empty = parse_graph6("A?");
  EXPECT_EQ(empty.num_vertices(), 2);
  EXPECT_EQ(empty.num_edges(), 0);
  EXPECT_EQ(parse_graph6("A_"), complete_graph(2));
  EXPECT_EQ(to_graph6(Graph(2, {})), "A?");
}

// Bits of the upper triangle in column order (0,1),(0,2),(1,2),(0,3),(1,3),(2,3):
// "Cr" = 63+3 | 'r' = 114 = 63+51 = 110011 sets (0,1),(0,2),(1,3),(2,3), the
// 4-cycle 0-1-3-2. The path 0-1-2-3 is "Ch".
TEST(Graph6Test, DecodesHandChecked) {
  const Graph cr = parse_graph6("Cr");
  EXPECT_EQ(cr, Graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(parse_graph6("Ch"), path_graph(4));
  EXPECT_EQ(to_graph6(path_graph(4)), "Ch");
}

TEST(Graph6Test, HeaderAndNewlineAccepted) {
  EXPECT_EQ(parse_graph6(">>graph6<<C~\n"), complete_graph(4));
}

TEST(Graph6Test, RoundTripsRandomAndLargeGraphs) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = random_graph(static_cast<int>(seed % 17), 0.4, seed);
    EXPECT_EQ(parse_graph6(to_graph6(g)), g);
  }
  // n >= 63 takes the 4-byte size header.
  const Graph big = random_graph(70, 0.1, 3);
  const std::string text = to_graph6(big);
  EXPECT_EQ(text[0], '~');
  EXPECT_EQ(parse_graph6(text), big);
  // The torus lists its edges out of lexicographic order; compare edge sets.
  const Graph torus = torus_graph(6, 6);
  const Graph back = parse_graph6(to_graph6(torus));
  ASSERT_EQ(back.num_edges(), torus.num_edges());
  for (const Edge& e : torus.edges()) EXPECT_TRUE(back.has_edge(e.u, e.v));
}

TEST(Graph6Test, MalformedInputReportsOffset) {
  try {
    parse_graph6("C\x7f");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 1u);
  }
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("C"), ParseError);     // truncated bit vector
  EXPECT_THROW(parse_graph6("C~~"), ParseError);   // trailing bytes
  EXPECT_THROW(parse_graph6("A`"), ParseError);    // nonzero padding
  EXPECT_THROW(parse_graph6(":Cdv"), ParseError);  // sparse6
}

TEST(EdgeListTest, ParsesCommentsAndVertexCount) {
  const Graph g = parse_edge_list("# square\nn 5\n0 1\n1 2\n2 3 # closing soon\n3 0\n");
  EXPECT_EQ(g.num_vertices(), 5);
  EXPECT_EQ(g.num_edges(), 4);
  EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
}

TEST(EdgeListTest, ErrorsCarryLineNumbers) {
  try {
    parse_edge_list("0 1\n1 x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_edge_list("0 0\n"), ParseError);
  EXPECT_THROW(parse_edge_list("n 2\n0 5\n"), ParseError);
}

}  // namespace
}  // namespace normcheck
