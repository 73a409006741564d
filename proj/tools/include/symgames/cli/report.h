// Copyright 2026 The symgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef SYMGAMES_CLI_REPORT_H_
#define SYMGAMES_CLI_REPORT_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "symgames/cli/io.h"

namespace symgames::cli {

enum ExitCode : int { kSuccess = 0, kBoundViolated = 1, kInputError = 2 };

// `value` is the claimed bound and `measured` the observed quantity; both are
// JSON numbers, or "p/q" strings when compared exactly.
struct BoundEntry {
  std::string name;
  std::string paper_anchor;
  Json value;
  Json measured;
  bool satisfied = false;
};

// measured ≤ value.
BoundEntry UpperBound(std::string name, std::string anchor, double value,
                      double measured);
BoundEntry ExactUpperBound(std::string name, std::string anchor,
                           const Rational& value, const Rational& measured);
BoundEntry ExactEquality(std::string name, std::string anchor,
                         const Rational& value, const Rational& measured);

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  // Folds an argument or a file's bytes into the input hash.
  void HashArgument(std::string_view argument);
  void HashFile(const std::filesystem::path& path);

  void Add(BoundEntry entry) { bounds_.push_back(std::move(entry)); }
  const std::vector<BoundEntry>& bounds() const { return bounds_; }
  bool AllSatisfied() const;

  // Hex SHA-256 of everything hashed so far, in order.
  std::string InputsHash() const;
  Json ToJson(int exit_code) const;

 private:
  std::string command_;
  std::string hashed_;
  std::vector<BoundEntry> bounds_;
};

std::string Sha256Hex(std::string_view bytes);

}  // namespace symgames::cli

#endif  // SYMGAMES_CLI_REPORT_H_
