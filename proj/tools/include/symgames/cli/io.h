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


#ifndef SYMGAMES_CLI_IO_H_
#define SYMGAMES_CLI_IO_H_

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "symgames/game.h"
#include "symgames/graph.h"
#include "symgames/minmax.h"

namespace symgames::cli {

using Json = nlohmann::json;

// Malformed input file. Maps to exit code 2.
class FormatError : public Error {
 public:
  using Error::Error;
};

std::string ReadText(const std::filesystem::path& path);
void WriteText(const std::filesystem::path& path, std::string_view text);

// Rationals travel as "p/q" strings. Decimal strings are read exactly;
// JSON numbers are read as the exact value of the double.
Json RationalToJson(const Rational& value);
Rational RationalFromJson(const Json& value);
Json MatrixToJson(const RationalMatrix& m);
RationalMatrix MatrixFromJson(const Json& value);

// Game files:
//   {"players": 2, "action_counts": [2, 2], "orientation": ["max", "max"],
//    "payoff": {"polymatrix": [{"i": 0, "j": 1, "matrix": [["1", "0"], ...]}]}
//    "team_partition": [[0], [1]]}
// or "payoff": {"tensor": [[...player 0, flat...], [...player 1...]]} with
// player 0 as the slowest index. Two-player polymatrix files without a team
// partition are read back as bimatrix games.
Json GameToJson(const Game& game);
std::unique_ptr<Game> GameFromJson(const Json& json);
std::unique_ptr<Game> ReadGame(const std::filesystem::path& path);
void WriteGame(const std::filesystem::path& path, const Game& game);

// A bare {"matrix": [[...]]} file, or the row payoffs of a bimatrix game.
RationalMatrix ReadMatrix(const std::filesystem::path& path);
BimatrixGame ReadBimatrix(const std::filesystem::path& path);

// Profile files: {"strategies": [[...], ...]}.
Json ProfileToJson(const ExactProfile& profile);
Json ProfileToJson(const MixedProfile& profile);
ExactProfile ExactProfileFromJson(const Json& json);
MixedProfile ProfileFromJson(const Json& json);
MixedProfile ReadProfile(const std::filesystem::path& path);
ExactProfile ReadExactProfile(const std::filesystem::path& path);

// Edge lists: header "n <count>", then one 1-indexed "i j" pair per line.
// Blank lines and lines starting with '#' are skipped.
Graph GraphFromText(std::string_view text);
std::string GraphToText(const Graph& graph);
Graph ReadGraph(const std::filesystem::path& path);

// Min-max problem files:
//   {"qx": M, "qy": M, "m": M, "domain": {"type": "simplex"}
//    | {"type": "joint", "width": w}, "smoothness": L?, "lipschitz": G?}
Json ProblemToJson(const QuadraticMinMaxProblem& problem);
QuadraticMinMaxProblem ProblemFromJson(const Json& json);
QuadraticMinMaxProblem ReadProblem(const std::filesystem::path& path);

}  // namespace symgames::cli

#endif  // SYMGAMES_CLI_IO_H_
