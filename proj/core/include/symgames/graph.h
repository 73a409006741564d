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

#ifndef SYMGAMES_GRAPH_H_
#define SYMGAMES_GRAPH_H_

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace symgames {

// Undirected simple graph on vertices 0..n-1.
class Graph {
 public:
  explicit Graph(int num_vertices);
  Graph(int num_vertices, std::span<const std::pair<int, int>> edges);

  static Graph Complete(int n);
  // Erdős–Rényi G(n, p).
  static Graph Random(int n, double edge_probability, std::mt19937_64& rng);

  int num_vertices() const { return n_; }
  int num_edges() const;
  bool adjacent(int i, int j) const { return adjacency_[i][j] != 0; }
  void AddEdge(int i, int j);
  // Edges (i, j) with i < j in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  bool IsClique(std::span<const int> vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_;
  std::vector<std::vector<char>> adjacency_;
};

}  // namespace symgames

#endif  // SYMGAMES_GRAPH_H_
