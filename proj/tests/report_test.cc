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

#include <gtest/gtest.h>

#include "normcheck/catalog.h"
#include "normcheck/error.h"

namespace normcheck {
namespace {

SearchConfig small_budget() {
  SearchConfig c;
  c.restarts = 6;
  c.steps = 60;
  return c;
}

TEST(RecordsTest, RejectsBadKeys) {
  Records r;
  r.add("a.b", 1);
  EXPECT_THROW(r.add("a.b", 2), DomainError);
  EXPECT_THROW(r.add("has space", 2), DomainError);
  EXPECT_THROW(r.add("", 2), DomainError);
  r.add("multi", std::string("line\nbreak"));
  EXPECT_EQ(*r.find("multi"), "line break");
  EXPECT_EQ(format_value(0.1), "0.1");
  EXPECT_EQ(format_value(1.0 / 3.0), "0.333333333333333");
}

TEST(RecordsTest, ParseErrors) {
  EXPECT_THROW(parse_records("novalue\n"), ParseError);
  EXPECT_THROW(parse_records("a=1\na=2\n"), ParseError);
  EXPECT_THROW(parse_records("=1\n"), ParseError);
  EXPECT_EQ(parse_records("a=1\n\nb=x=y\n").entries().size(), 2u);
  EXPECT_EQ(*parse_records("b=x=y\n").find("b"), "x=y");
}

TEST(ReportTest, RoundTripsEveryCatalogReport) {
  for (const auto& name : catalog_names()) {
    if (name == "torus_6_6") continue;  // covered by the acceptance binary
    const auto report = necessary_conditions_pipeline(catalog_entry(name).graph, small_budget());
    const Records r = report_records(report);
    const Records back = parse_records(r.str());
    EXPECT_EQ(back.entries(), r.entries()) << name;
    EXPECT_EQ(*back.find("verdict"), to_string(report.verdict));
    EXPECT_FALSE(report_text(report).empty());
  }
}

TEST(ReportTest, CertificateFieldsAppear) {
  const auto k3 = report_records(necessary_conditions_pipeline(complete_graph(3), small_budget()));
  EXPECT_EQ(*k3.find("verdict"), "NotWeaklyNorming");
  EXPECT_EQ(*k3.find("reason"), "not bipartite");
  EXPECT_TRUE(k3.find("odd_cycle"));
  const auto p4 = report_records(necessary_conditions_pipeline(path_graph(4), small_budget()));
  EXPECT_EQ(*p4.find("reason"), "biregularity fails");
  const auto c4 = report_records(necessary_conditions_pipeline(cycle_graph(4), small_budget()));
  EXPECT_EQ(*c4.find("orbits.count"), "1");
  EXPECT_EQ(*c4.find("implementation_flag"), "false");
  EXPECT_TRUE(c4.find("caveat.0"));
}

}  // namespace
}  // namespace normcheck
