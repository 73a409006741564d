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

#include "symgames/graph.h"

#include <string>

#include "symgames/errors.h"

namespace symgames {

Graph::Graph(int num_vertices) : n_(num_vertices) {
  if (num_vertices <= 0) throw InvalidArgument("graph needs at least one vertex");
  adjacency_.assign(n_, std::vector<char>(n_, 0));
}

Graph::Graph(int num_vertices, std::span<const std::pair<int, int>> edges)
    : Graph(num_vertices) {
  for (const auto& [i, j] : edges) AddEdge(i, j);
}

Graph Graph::Complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.AddEdge(i, j);
  }
  return g;
}

Graph Graph::Random(int n, double edge_probability, std::mt19937_64& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(edge_probability);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) g.AddEdge(i, j);
    }
  }
  return g;
}

int Graph::num_edges() const {
  int count = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) count += adjacency_[i][j];
  }
  return count;
}

void Graph::AddEdge(int i, int j) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) {
    throw InvalidArgument("edge (" + std::to_string(i) + "," +
                          std::to_string(j) + ") out of range");
  }
  if (i == j) throw InvalidArgument("self-loops are not allowed");
  adjacency_[i][j] = adjacency_[j][i] = 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (adjacency_[i][j]) out.emplace_back(i, j);
    }
  }
  return out;
}

bool Graph::IsClique(std::span<const int> vertices) const {
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    const int i = vertices[a];
    if (i < 0 || i >= n_) return false;
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      const int j = vertices[b];
      if (j < 0 || j >= n_ || i == j || !adjacency_[i][j]) return false;
    }
  }
  return true;
}

}  // namespace symgames
