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

#include "normcheck/report.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <set>
#include <sstream>

#include "normcheck/error.h"
#include "normcheck/graph_io.h"

namespace normcheck {

namespace {

bool valid_key(std::string_view key) {
  return !key.empty() && std::all_of(key.begin(), key.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
  });
}

std::string one_line(std::string value) {
  std::replace(value.begin(), value.end(), '\n', ' ');
  std::replace(value.begin(), value.end(), '\r', ' ');
  return value;
}

std::string join(const std::vector<int>& xs, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

std::string format_value(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

void Records::add(std::string key, std::string value) {
  if (!valid_key(key)) throw DomainError("invalid record key '" + key + "'");
  if (find(key)) throw DomainError("duplicate record key '" + key + "'");
  entries_.emplace_back(std::move(key), one_line(std::move(value)));
}

void Records::add(std::string key, double value) { add(std::move(key), format_value(value)); }
void Records::add(std::string key, int value) { add(std::move(key), std::to_string(value)); }
void Records::add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }

const std::string* Records::find(std::string_view key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string Records::str() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += k + '=' + v + '\n';
  return out;
}

Records parse_records(std::string_view text) {
  Records records;
  std::size_t line_no = 0, pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (!line.empty()) {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw ParseError("record line " + std::to_string(line_no) + " has no '='", pos, line_no);
      }
      try {
        records.add(std::string(line.substr(0, eq)), std::string(line.substr(eq + 1)));
      } catch (const DomainError& e) {
        throw ParseError("record line " + std::to_string(line_no) + ": " + e.what(), pos, line_no);
      }
    }
    pos = end + 1;
  }
  return records;
}

Records report_records(const NormingReport& report) {
  Records r;
  r.add("graph.vertices", report.graph.num_vertices());
  r.add("graph.edges", report.graph.num_edges());
  r.add("graph.graph6", to_graph6(report.graph));
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const auto& c = report.checks[i];
    const std::string p = "check." + std::to_string(i) + ".";
    r.add(p + "name", c.name);
    r.add(p + "status", to_string(c.status));
    r.add(p + "detail", c.detail);
  }
  if (report.components.components.size() > 0) {
    r.add("components.nonsingleton", static_cast<int>(report.components.components.size()));
    r.add("component.graph6", to_graph6(report.component));
  }
  if (report.odd_cycle) r.add("odd_cycle", join(report.odd_cycle->vertices));
  if (report.part_degrees) {
    r.add("degree.a", report.part_degrees->first);
    r.add("degree.b", report.part_degrees->second);
  }
  if (report.orbits) {
    r.add("orbits.count", static_cast<int>(report.orbits->size()));
    for (std::size_t o = 0; o < report.orbits->size(); ++o) {
      r.add("orbits." + std::to_string(o), join(report.orbits->orbits()[o]));
    }
  }
  if (report.lemma_certificate) {
    const auto& c = *report.lemma_certificate;
    r.add("lemma.edge_lo", c.edge_lo);
    r.add("lemma.edge_hi", c.edge_hi);
    r.add("lemma.t_lo", c.t_lo);
    r.add("lemma.t_hi", c.t_hi);
    r.add("lemma.gap", c.gap);
  }
  if (report.holder_certificate) {
    const auto& c = *report.holder_certificate;
    r.add("holder.lhs", c.lhs);
    r.add("holder.rhs", c.rhs);
    r.add("holder.violation", c.violation);
  }
  for (const auto* stats : {&report.lemma_stats, &report.holder_stats}) {
    const std::string p = stats == &report.lemma_stats ? "lemma_search." : "holder_search.";
    r.add(p + "restarts_run", stats->restarts_run);
    r.add(p + "budget_exhausted", stats->budget_exhausted);
  }
  r.add("implementation_flag", report.implementation_flag);
  r.add("verdict", to_string(report.verdict));
  r.add("reason", report.reason);
  for (std::size_t i = 0; i < report.caveats.size(); ++i) {
    r.add("caveat." + std::to_string(i), report.caveats[i]);
  }
  return r;
}

std::string report_text(const NormingReport& report) {
  std::ostringstream out;
  out << "graph: " << report.graph.num_vertices() << " vertices, " << report.graph.num_edges()
      << " edges (graph6 " << to_graph6(report.graph) << ")\n";
  for (const auto& c : report.checks) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "  %-22s %-13s", c.name.c_str(), to_string(c.status).c_str());
    out << buf << c.detail << '\n';
  }
  if (report.orbits && report.orbits->size() > 1) {
    out << "edge orbits:";
    for (const auto& orbit : report.orbits->orbits()) out << " {" << join(orbit) << '}';
    out << '\n';
  }
  if (report.lemma_certificate) {
    const auto& c = *report.lemma_certificate;
    out << "lemma certificate: t_" << c.edge_lo << " = " << format_value(c.t_lo) << ", t_" << c.edge_hi
        << " = " << format_value(c.t_hi) << ", gap " << format_value(c.gap) << '\n';
  }
  if (report.holder_certificate) {
    const auto& c = *report.holder_certificate;
    out << "Holder certificate: lhs " << format_value(c.lhs) << " > rhs " << format_value(c.rhs)
        << " (violation " << format_value(c.violation) << ")\n";
  }
  if (report.implementation_flag) out << "IMPLEMENTATION FLAG: certificate contradicts edge-transitivity\n";
  out << "verdict: " << to_string(report.verdict);
  if (!report.reason.empty()) out << " (" << report.reason << ')';
  out << '\n';
  for (const auto& caveat : report.caveats) out << "note: " << caveat << '\n';
  return out.str();
}

}  // namespace normcheck
