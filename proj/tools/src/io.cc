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


#include "symgames/cli/io.h"

#include <fstream>
#include <sstream>

namespace symgames::cli {
namespace {

const Json& Field(const Json& json, const char* name) {
  if (!json.is_object() || !json.contains(name)) {
    throw FormatError(std::string("missing field '") + name + "'");
  }
  return json.at(name);
}

int IntField(const Json& json, const char* name) {
  const Json& v = Field(json, name);
  if (!v.is_number_integer()) {
    throw FormatError(std::string("field '") + name + "' must be an integer");
  }
  return v.get<int>();
}

Json PartitionToJson(const TeamPartition& teams) {
  return Json::array({teams.first, teams.second});
}

TeamPartition PartitionFromJson(const Json& json) {
  if (!json.is_array() || json.size() != 2) {
    throw FormatError("team_partition must hold exactly two teams");
  }
  return {json[0].get<std::vector<int>>(), json[1].get<std::vector<int>>()};
}

std::vector<Orientation> OrientationsFromJson(const Json& json, int players) {
  if (!json.is_array() || static_cast<int>(json.size()) != players) {
    throw FormatError("orientation needs one entry per player");
  }
  std::vector<Orientation> out;
  for (const auto& o : json) out.push_back(ParseOrientation(o.get<std::string>()));
  return out;
}

Json StrategyToJson(std::span<const Rational> probs) {
  Json row = Json::array();
  for (const auto& p : probs) row.push_back(RationalToJson(p));
  return row;
}

}  // namespace

std::string ReadText(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteText(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path.string() + "'");
  out << text;
}

Json RationalToJson(const Rational& value) { return FormatRational(value); }

Rational RationalFromJson(const Json& value) {
  if (value.is_string()) return ParseRational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long>());
  if (value.is_number()) return ExactFromDouble(value.get<double>());
  throw FormatError("expected a rational, got " + value.dump());
}

Json MatrixToJson(const RationalMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) rows.push_back(StrategyToJson(m.row(i)));
  return rows;
}

RationalMatrix MatrixFromJson(const Json& value) {
  if (!value.is_array() || value.empty() || !value[0].is_array()) {
    throw FormatError("a matrix must be a non-empty array of rows");
  }
  RationalMatrix m(static_cast<int>(value.size()),
                   static_cast<int>(value[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (!value[i].is_array() || static_cast<int>(value[i].size()) != m.cols()) {
      throw FormatError("ragged matrix");
    }
    for (int j = 0; j < m.cols(); ++j) m(i, j) = RationalFromJson(value[i][j]);
  }
  return m;
}

Json GameToJson(const Game& game) {
  Json json;
  json["players"] = game.num_players();
  json["action_counts"] = game.action_counts();
  Json orientation = Json::array();
  for (auto o : game.orientations()) orientation.push_back(OrientationName(o));
  json["orientation"] = orientation;
  Json terms = Json::array();
  if (const auto* bimatrix = dynamic_cast<const BimatrixGame*>(&game)) {
    terms.push_back({{"i", 0}, {"j", 1},
                     {"matrix", MatrixToJson(bimatrix->row_payoffs())}});
    terms.push_back(
        {{"i", 1}, {"j", 0},
         {"matrix", MatrixToJson(bimatrix->col_payoffs().Transposed())}});
    json["payoff"] = {{"polymatrix", terms}};
  } else if (const auto* poly = dynamic_cast<const PolymatrixGame*>(&game)) {
    for (const auto& t : poly->terms()) {
      terms.push_back({{"i", t.row_player},
                       {"j", t.col_player},
                       {"matrix", MatrixToJson(t.matrix)}});
    }
    json["payoff"] = {{"polymatrix", terms}};
  } else if (const auto* normal = dynamic_cast<const NormalFormGame*>(&game)) {
    Json tensor = Json::array();
    for (int p = 0; p < game.num_players(); ++p) {
      tensor.push_back(StrategyToJson(normal->payoffs(p)));
    }
    json["payoff"] = {{"tensor", tensor}};
  } else {
    throw InvalidArgument("unsupported game representation");
  }
  if (game.team_partition()) {
    json["team_partition"] = PartitionToJson(*game.team_partition());
  }
  return json;
}

std::unique_ptr<Game> GameFromJson(const Json& json) {
  try {
    const int players = IntField(json, "players");
    if (players < 1) throw FormatError("a game needs at least one player");
    auto counts = Field(json, "action_counts").get<std::vector<int>>();
    if (static_cast<int>(counts.size()) != players) {
      throw FormatError("action_counts needs one entry per player");
    }
    auto orientations = OrientationsFromJson(Field(json, "orientation"), players);
    std::optional<TeamPartition> teams;
    if (json.contains("team_partition") && !json["team_partition"].is_null()) {
      teams = PartitionFromJson(json["team_partition"]);
    }
    const Json& payoff = Field(json, "payoff");
    if (payoff.contains("tensor")) {
      std::vector<std::vector<Rational>> tensors;
      for (const auto& flat : payoff["tensor"]) {
        std::vector<Rational> values;
        for (const auto& v : flat) values.push_back(RationalFromJson(v));
        tensors.push_back(std::move(values));
      }
      return std::make_unique<NormalFormGame>(
          std::move(counts), std::move(orientations), std::move(tensors),
          std::move(teams));
    }
    std::vector<PairwiseTerm> terms;
    for (const auto& t : Field(payoff, "polymatrix")) {
      terms.push_back({IntField(t, "i"), IntField(t, "j"),
                       MatrixFromJson(Field(t, "matrix"))});
    }
    if (players == 2 && !teams) {
      RationalMatrix row(counts[0], counts[1]);
      RationalMatrix col(counts[0], counts[1]);
      for (const auto& t : terms) {
        if (t.row_player == 0 && t.col_player == 1) {
          row = row + t.matrix;
        } else if (t.row_player == 1 && t.col_player == 0) {
          col = col + t.matrix.Transposed();
        } else {
          throw FormatError("two-player terms must pair players 0 and 1");
        }
      }
      return std::make_unique<BimatrixGame>(std::move(row), std::move(col),
                                            std::move(orientations));
    }
    return std::make_unique<PolymatrixGame>(std::move(counts),
                                            std::move(orientations),
                                            std::move(terms), std::move(teams));
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed game: ") + e.what());
  }
}

std::unique_ptr<Game> ReadGame(const std::filesystem::path& path) {
  try {
    return GameFromJson(Json::parse(ReadText(path)));
  } catch (const Json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void WriteGame(const std::filesystem::path& path, const Game& game) {
  WriteText(path, GameToJson(game).dump(2) + "\n");
}

RationalMatrix ReadMatrix(const std::filesystem::path& path) {
  Json json;
  try {
    json = Json::parse(ReadText(path));
  } catch (const Json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
  if (json.contains("matrix")) return MatrixFromJson(json["matrix"]);
  auto game = GameFromJson(json);
  const auto* bimatrix = dynamic_cast<const BimatrixGame*>(game.get());
  if (bimatrix == nullptr) {
    throw FormatError(path.string() + ": expected a matrix or bimatrix game");
  }
  return bimatrix->row_payoffs();
}

BimatrixGame ReadBimatrix(const std::filesystem::path& path) {
  Json json;
  try {
    json = Json::parse(ReadText(path));
  } catch (const Json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
  if (json.contains("matrix")) {
    return BimatrixGame::Symmetric(MatrixFromJson(json["matrix"]));
  }
  auto game = GameFromJson(json);
  const auto* bimatrix = dynamic_cast<const BimatrixGame*>(game.get());
  if (bimatrix == nullptr) throw FormatError(path.string() + ": not bimatrix");
  return *bimatrix;
}

Json ProfileToJson(const ExactProfile& profile) {
  Json strategies = Json::array();
  for (const auto& s : profile) strategies.push_back(StrategyToJson(s.probs()));
  return {{"strategies", strategies}};
}

Json ProfileToJson(const MixedProfile& profile) {
  Json strategies = Json::array();
  for (const auto& s : profile) strategies.push_back(s.values());
  return {{"strategies", strategies}};
}

ExactProfile ExactProfileFromJson(const Json& json) {
  try {
    ExactProfile profile;
    for (const auto& s : Field(json, "strategies")) {
      std::vector<Rational> probs;
      for (const auto& v : s) probs.push_back(RationalFromJson(v));
      profile.emplace_back(std::move(probs));
    }
    return profile;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed profile: ") + e.what());
  }
}

MixedProfile ProfileFromJson(const Json& json) {
  try {
    MixedProfile profile;
    for (const auto& s : Field(json, "strategies")) {
      std::vector<double> probs;
      for (const auto& v : s) probs.push_back(ToDouble(RationalFromJson(v)));
      profile.emplace_back(std::move(probs));
    }
    return profile;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed profile: ") + e.what());
  }
}

MixedProfile ReadProfile(const std::filesystem::path& path) {
  try {
    return ProfileFromJson(Json::parse(ReadText(path)));
  } catch (const Json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

ExactProfile ReadExactProfile(const std::filesystem::path& path) {
  try {
    return ExactProfileFromJson(Json::parse(ReadText(path)));
  } catch (const Json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

Graph GraphFromText(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Graph> graph;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    const std::string where = "graph line " + std::to_string(line_number);
    if (!graph) {
      std::string tag;
      int n = 0;
      if (!(fields >> tag >> n) || tag != "n" || n < 1) {
        throw FormatError(where + ": expected header 'n <count>'");
      }
      graph.emplace(n);
      continue;
    }
    int i = 0, j = 0;
    std::string rest;
    if (!(fields >> i >> j) || (fields >> rest)) {
      throw FormatError(where + ": expected 'i j'");
    }
    const int n = graph->num_vertices();
    if (i < 1 || j < 1 || i > n || j > n || i == j) {
      throw FormatError(where + ": edge out of range");
    }
    graph->AddEdge(i - 1, j - 1);
  }
  if (!graph) throw FormatError("empty graph file");
  return *graph;
}

std::string GraphToText(const Graph& graph) {
  std::string out = "n " + std::to_string(graph.num_vertices()) + "\n";
  for (const auto& [i, j] : graph.edges()) {
    out += std::to_string(i + 1) + " " + std::to_string(j + 1) + "\n";
  }
  return out;
}

Graph ReadGraph(const std::filesystem::path& path) {
  return GraphFromText(ReadText(path));
}

Json ProblemToJson(const QuadraticMinMaxProblem& problem) {
  Json json;
  json["qx"] = MatrixToJson(problem.qx());
  json["qy"] = MatrixToJson(problem.qy());
  json["m"] = MatrixToJson(problem.coupling());
  if (const auto* joint = std::get_if<JointDomain>(&problem.domain())) {
    json["domain"] = {{"type", "joint"}, {"width", joint->width()}};
  } else {
    json["domain"] = {{"type", "simplex"}};
  }
  json["smoothness"] = problem.smoothness();
  json["lipschitz"] = problem.lipschitz();
  return json;
}

QuadraticMinMaxProblem ProblemFromJson(const Json& json) {
  try {
    RationalMatrix qx = MatrixFromJson(Field(json, "qx"));
    RationalMatrix qy = MatrixFromJson(Field(json, "qy"));
    RationalMatrix m = MatrixFromJson(Field(json, "m"));
    const Json& domain_json = Field(json, "domain");
    const auto type = Field(domain_json, "type").get<std::string>();
    MinMaxDomain domain;
    if (type == "simplex") {
      domain = SimplexProduct{qx.rows(), qy.rows()};
    } else if (type == "joint") {
      if (qx.rows() != qy.rows()) {
        throw FormatError("joint domain needs equal dimensions");
      }
      domain = JointDomain(qx.rows(), Field(domain_json, "width").get<double>());
    } else {
      throw FormatError("unknown domain type '" + type + "'");
    }
    std::optional<double> smoothness, lipschitz;
    if (json.contains("smoothness")) smoothness = json["smoothness"].get<double>();
    if (json.contains("lipschitz")) lipschitz = json["lipschitz"].get<double>();
    return QuadraticMinMaxProblem(std::move(qx), std::move(qy), std::move(m),
                                  std::move(domain), smoothness, lipschitz);
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed problem: ") + e.what());
  }
}

QuadraticMinMaxProblem ReadProblem(const std::filesystem::path& path) {
  try {
    return ProblemFromJson(Json::parse(ReadText(path)));
  } catch (const Json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace symgames::cli
