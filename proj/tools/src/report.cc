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


#include "symgames/cli/report.h"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cstdio>

namespace symgames::cli {

std::string Sha256Hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length,
                 EVP_sha256(), nullptr) != 1) {
    throw NumericError("SHA-256 failed");
  }
  std::string hex;
  hex.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

BoundEntry UpperBound(std::string name, std::string anchor, double value,
                      double measured) {
  return {std::move(name), std::move(anchor), value, measured,
          measured <= value};
}

BoundEntry ExactUpperBound(std::string name, std::string anchor,
                           const Rational& value, const Rational& measured) {
  return {std::move(name), std::move(anchor), RationalToJson(value),
          RationalToJson(measured), measured <= value};
}

BoundEntry ExactEquality(std::string name, std::string anchor,
                         const Rational& value, const Rational& measured) {
  return {std::move(name), std::move(anchor), RationalToJson(value),
          RationalToJson(measured), measured == value};
}

void Report::HashArgument(std::string_view argument) {
  // Length prefixes keep ("ab", "c") and ("a", "bc") apart.
  hashed_ += std::to_string(argument.size()) + ":";
  hashed_ += argument;
}

void Report::HashFile(const std::filesystem::path& path) {
  HashArgument(ReadText(path));
}

bool Report::AllSatisfied() const {
  return std::all_of(bounds_.begin(), bounds_.end(),
                     [](const BoundEntry& b) { return b.satisfied; });
}

std::string Report::InputsHash() const { return Sha256Hex(hashed_); }

Json Report::ToJson(int exit_code) const {
  Json bounds = Json::array();
  for (const auto& b : bounds_) {
    bounds.push_back({{"name", b.name},
                      {"paper_anchor", b.paper_anchor},
                      {"value", b.value},
                      {"measured", b.measured},
                      {"satisfied", b.satisfied}});
  }
  return {{"command", command_},
          {"inputs_hash", InputsHash()},
          {"bounds", bounds},
          {"exit_code", exit_code}};
}

}  // namespace symgames::cli
