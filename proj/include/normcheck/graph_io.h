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

#ifndef NORMCHECK_GRAPH_IO_H_
#define NORMCHECK_GRAPH_IO_H_

#include <string>
#include <string_view>

#include "normcheck/graph.h"

namespace normcheck {

// Decodes one graph6 line (an optional ">>graph6<<" header and a trailing
// newline are accepted). Edges are indexed in lexicographic (i, j) order
// with i < j. Throws ParseError carrying the offending byte offset.
Graph parse_graph6(std::string_view text);

// Encodes without header or newline.
std::string to_graph6(const Graph& g);

// Edge-list text: one "u v" pair per line, '#' starts a comment. An
// optional "n <count>" line fixes the vertex count (otherwise max index+1).
// Edge indices follow line order. Throws ParseError with the line number.
Graph parse_edge_list(std::string_view text);

std::string to_edge_list(const Graph& g);

}  // namespace normcheck

#endif  // NORMCHECK_GRAPH_IO_H_
