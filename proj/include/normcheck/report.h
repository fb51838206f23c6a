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

// Human-readable and key=value renderings of analysis results.

#ifndef NORMCHECK_REPORT_H_
#define NORMCHECK_REPORT_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "normcheck/analyzer.h"

namespace normcheck {

// Ordered key=value records. Keys are unique within one document.
class Records {
 public:
  void add(std::string key, std::string value);
  void add(std::string key, double value);
  void add(std::string key, int value);
  void add(std::string key, bool value);

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  // Value for `key`, or nullptr.
  const std::string* find(std::string_view key) const;

  // One "key=value\n" line per entry.
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

// Inverse of Records::str(). Blank lines are ignored; throws ParseError on a
// line without '=', an empty or malformed key, or a repeated key.
Records parse_records(std::string_view text);

// Doubles are rendered with 15 significant digits.
std::string format_value(double x);

Records report_records(const NormingReport& report);
std::string report_text(const NormingReport& report);

}  // namespace normcheck

#endif  // NORMCHECK_REPORT_H_
