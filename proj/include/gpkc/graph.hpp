// Copyright 2026 The gpkc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GPKC_GRAPH_HPP_
#define GPKC_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gpkc/error.hpp"

namespace gpkc {

using Vertex = int;

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge &) const = default;
};

/// Simple undirected graph on the dense vertex set 0..vertex_count-1.
///
/// The edge list is kept sorted and deduplicated, so two graphs with the same
/// vertex count and edge set compare equal. Values are immutable once built;
/// neighbor lists are precomputed (sorted) for O(deg) traversal and
/// O(log deg) adjacency queries.
class Graph {
 public:
  Graph() = default;

  /// Throws DomainError on a loop or an out-of-range endpoint. Duplicate
  /// pairs (in either orientation) are merged.
  Graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> pairs);
  Graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> pairs)
      : Graph(vertex_count, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size())) {}

  int vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex a, Vertex b) const;

  /// True when every vertex has degree d.
  bool is_regular(int d) const;

  bool operator==(const Graph &other) const {
    return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Vertex> adjacency_;
};

/// Builds a canonical Graph; see the Graph constructor for error behavior.
Graph new_graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> pairs);

/// Proper 2-coloring with values in {0, 1}.
struct Bipartition {
  std::vector<int> color;
};

/// A 2-coloring where the least vertex of each component gets color 0, or
/// nullopt when the graph has an odd cycle.
std::optional<Bipartition> bipartition(const Graph &g);

/// Vertex sets of the connected components, each sorted, ordered by least vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph &g);

bool is_connected(const Graph &g);

/// Length of a shortest cycle, nullopt for forests.
std::optional<int> girth(const Graph &g);

/// Relabels g so that vertex x becomes image[x]; image must be a bijection.
Graph relabel(const Graph &g, std::span<const Vertex> image);

}  // namespace gpkc

#endif  // GPKC_GRAPH_HPP_
