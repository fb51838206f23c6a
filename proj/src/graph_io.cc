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

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <vector>

#include "normcheck/error.h"

namespace normcheck {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kBias = 63;

// Six-bit value of the byte at `pos`, validating the printable range.
int sextet(std::string_view text, std::size_t pos, std::size_t base) {
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > 126) {
    throw ParseError("graph6: byte " + std::to_string(c) + " outside [63,126] at offset " +
                         std::to_string(base + pos),
                     base + pos);
  }
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kGraph6Header)) {
    text.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input", base);
  if (text.front() == ':' || text.front() == '&') {
    throw ParseError("graph6: sparse6/digraph6 input is not supported", base);
  }

  // N(n): 1, 4 or 8 bytes.
  std::size_t pos = 0;
  std::int64_t n = 0;
  if (text[0] != 126) {
    n = sextet(text, 0, base);
    pos = 1;
  } else {
    const bool wide = text.size() > 1 && text[1] == 126;
    const std::size_t start = wide ? 2 : 1;
    const std::size_t count = wide ? 6 : 3;
    if (text.size() < start + count) {
      throw ParseError("graph6: truncated vertex-count header", base + text.size());
    }
    for (std::size_t i = 0; i < count; ++i) n = (n << 6) | sextet(text, start + i, base);
    pos = start + count;
  }
  if (n > 100000) throw ParseError("graph6: vertex count " + std::to_string(n) + " too large", base);

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  const std::size_t have = text.size() - pos;
  if (have < need) {
    throw ParseError("graph6: truncated adjacency bit vector (expected " + std::to_string(need) +
                         " bytes, found " + std::to_string(have) + ")",
                     base + text.size());
  }
  if (have > need) {
    throw ParseError("graph6: trailing bytes after adjacency bit vector", base + pos + need);
  }

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int word = sextet(text, pos + bit / 6, base);
      if ((word >> (5 - bit % 6)) & 1) edges.push_back({i, j});
    }
  }
  for (std::size_t b = bit; b < need * 6; ++b) {
    const int word = sextet(text, pos + b / 6, base);
    if ((word >> (5 - b % 6)) & 1) {
      throw ParseError("graph6: nonzero padding bit", base + pos + b / 6);
    }
  }
  std::sort(edges.begin(), edges.end());
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
  const std::int64_t n = g.num_vertices();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int word = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      word = (word << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + kBias));
        word = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + kBias));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  int declared_n = -1;
  int max_vertex = -1;
  std::size_t line_no = 0;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    ++line_no;
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    std::string first;
    if (in >> first) {
      auto fail = [&](const std::string& why) {
        throw ParseError("edge list line " + std::to_string(line_no) + ": " + why, line_start, line_no);
      };
      auto to_int = [&](const std::string& token) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
          fail("expected a nonnegative integer, got '" + token + "'");
        }
        return value;
      };
      std::string second, extra;
      if (!(in >> second)) fail("expected two fields");
      if (in >> extra) fail("unexpected trailing field '" + extra + "'");
      if (first == "n") {
        if (declared_n != -1) fail("duplicate vertex-count line");
        declared_n = to_int(second);
      } else {
        Edge e{to_int(first), to_int(second)};
        if (e.u == e.v) fail("self-loop");
        max_vertex = std::max({max_vertex, e.u, e.v});
        edges.push_back(e);
      }
    }
    line_start = line_end + 1;
  }
  int n = declared_n >= 0 ? declared_n : max_vertex + 1;
  if (max_vertex >= n) {
    throw ParseError("edge list: vertex " + std::to_string(max_vertex) + " exceeds declared count " +
                         std::to_string(n),
                     0);
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const DomainError& e) {
    throw ParseError(std::string("edge list: ") + e.what(), 0);
  }
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.num_vertices() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace normcheck
