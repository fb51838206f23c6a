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

#include "normcheck/certificate.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>

#include "normcheck/error.h"
#include "normcheck/graph_io.h"

namespace normcheck {
namespace {

std::string number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "vertices " << g.num_vertices() << '\n';
  for (const Edge& e : g.edges()) out << "edge " << e.u << ' ' << e.v << '\n';
  out << "graph6 " << to_graph6(g) << '\n';
}

void write_kernel(std::ostream& out, int slot, const StepGraphon& h) {
  out << "kernel " << slot << '\n' << format_graphon(h) << "end_kernel\n";
}

}  // namespace

std::string format_certificate(const Certificate& c) {
  std::ostringstream out;
  out << "# normcheck certificate\n";
  if (const auto* lemma = std::get_if<LemmaCertificate>(&c)) {
    out << "kind lemma\n";
    write_graph(out, lemma->graph);
    out << "edge_lo " << lemma->edge_lo << '\n'
        << "edge_hi " << lemma->edge_hi << '\n'
        << "t_lo " << number(lemma->t_lo) << '\n'
        << "t_hi " << number(lemma->t_hi) << '\n'
        << "gap " << number(lemma->gap) << '\n';
    write_kernel(out, 0, lemma->kernel);
  } else {
    const auto& holder = std::get<HolderCertificate>(c);
    out << "kind holder\n";
    write_graph(out, holder.assignment.graph());
    out << "lhs " << number(holder.lhs) << '\n'
        << "rhs " << number(holder.rhs) << '\n'
        << "violation " << number(holder.violation) << '\n';
    for (int l = 0; l < holder.assignment.graph().num_edges(); ++l) {
      write_kernel(out, l, holder.assignment.kernel(l));
    }
  }
  return out.str();
}

Certificate parse_certificate(std::string_view text) {
  std::map<std::string, std::string> fields;
  std::vector<Edge> edges;
  std::map<int, StepGraphon> kernels;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto next_line = [&](std::string& line) {
    if (pos >= text.size()) return false;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    line = std::string(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    return true;
  };
  auto fail = [&](const std::string& why) {
    throw ParseError("certificate line " + std::to_string(line_no) + ": " + why, pos, line_no);
  };
  auto to_int = [&](const std::string& s) {
    char* end = nullptr;
    const long v = std::strtol(s.c_str(), &end, 10);
    if (s.empty() || *end != '\0') fail("expected an integer, got '" + s + "'");
    return static_cast<int>(v);
  };
  auto to_double = [&](const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || *end != '\0' || !std::isfinite(v)) fail("expected a number, got '" + s + "'");
    return v;
  };

  std::string line;
  while (next_line(line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream in(line);
    std::string key;
    if (!(in >> key)) continue;
    if (key == "edge") {
      std::string u, v;
      if (!(in >> u >> v)) fail("edge needs two endpoints");
      edges.push_back({to_int(u), to_int(v)});
    } else if (key == "kernel") {
      std::string slot;
      if (!(in >> slot)) fail("kernel needs a slot index");
      const int index = to_int(slot);
      const std::size_t start_line = line_no;
      std::string body, inner;
      bool closed = false;
      while (next_line(inner)) {
        if (inner.rfind("end_kernel", 0) == 0) {
          closed = true;
          break;
        }
        body += inner + '\n';
      }
      if (!closed) {
        line_no = start_line;
        fail("kernel block is not closed by end_kernel");
      }
      if (kernels.count(index)) fail("duplicate kernel slot " + slot);
      try {
        kernels.emplace(index, parse_graphon(body));
      } catch (const ParseError& e) {
        throw ParseError("certificate kernel " + slot + " (from line " + std::to_string(start_line) +
                             "): " + e.what(),
                         pos, start_line);
      }
    } else {
      std::string value;
      if (!(in >> value)) fail("missing value for '" + key + "'");
      if (fields.count(key)) fail("duplicate field '" + key + "'");
      fields[key] = value;
    }
  }

  auto field = [&](const std::string& key) -> const std::string& {
    auto it = fields.find(key);
    if (it == fields.end()) throw ParseError("certificate: missing field '" + key + "'", text.size(), line_no);
    return it->second;
  };
  Graph g;
  try {
    g = Graph(to_int(field("vertices")), edges);
  } catch (const DomainError& e) {
    throw ParseError(std::string("certificate: invalid graph: ") + e.what(), 0);
  }
  const std::string& kind = field("kind");
  if (kind == "lemma") {
    if (kernels.size() != 1 || !kernels.count(0)) {
      throw ParseError("certificate: lemma certificate needs exactly one kernel with slot 0", 0);
    }
    LemmaCertificate c{g,
                       kernels.at(0),
                       to_int(field("edge_lo")),
                       to_int(field("edge_hi")),
                       to_double(field("t_lo")),
                       to_double(field("t_hi")),
                       to_double(field("gap"))};
    for (int l : {c.edge_lo, c.edge_hi}) {
      if (l < 0 || l >= g.num_edges()) {
        throw ParseError("certificate: edge index " + std::to_string(l) + " out of range", 0);
      }
    }
    return c;
  }
  if (kind == "holder") {
    std::vector<StepGraphon> ks;
    for (int l = 0; l < g.num_edges(); ++l) {
      auto it = kernels.find(l);
      if (it == kernels.end()) {
        throw ParseError("certificate: missing kernel for edge " + std::to_string(l), 0);
      }
      ks.push_back(it->second);
    }
    if (static_cast<int>(kernels.size()) != g.num_edges()) {
      throw ParseError("certificate: kernel slots do not match the edge count", 0);
    }
    try {
      return HolderCertificate{EdgeAssignment(g, std::move(ks)), to_double(field("lhs")),
                               to_double(field("rhs")), to_double(field("violation"))};
    } catch (const DomainError& e) {
      throw ParseError(std::string("certificate: ") + e.what(), 0);
    }
  }
  throw ParseError("certificate: unknown kind '" + kind + "'", 0);
}

VerifyResult verify_certificate(const Certificate& c, double relative_tolerance, RecomputeMode mode) {
  VerifyResult result;
  if (const auto* lemma = std::get_if<LemmaCertificate>(&c)) {
    result.passed = reverify(*lemma, relative_tolerance, mode);
    result.detail = "lemma gap " + number(lemma->gap) + " between edges " + std::to_string(lemma->edge_lo) +
                    " and " + std::to_string(lemma->edge_hi);
  } else {
    const auto& holder = std::get<HolderCertificate>(c);
    result.passed = reverify(holder, relative_tolerance, mode);
    result.detail = "holder violation " + number(holder.violation) + " (lhs " + number(holder.lhs) +
                    ", rhs " + number(holder.rhs) + ")";
  }
  return result;
}

}  // namespace normcheck
