// Copyright 2026 The gpkc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GPKC_SEARCH_HPP_
#define GPKC_SEARCH_HPP_

#include <optional>
#include <string>
#include <vector>

#include "gpkc/graph.hpp"
#include "gpkc/permutation.hpp"

namespace gpkc {

/// Exhaustive search is exact but exponential in the worst case, so every
/// entry point refuses graphs above a configurable size.
struct SearchOptions {
  int max_vertices = 120;
};

/// Thrown when a graph exceeds SearchOptions::max_vertices.
class SearchBoundError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Ordered partition of the vertex set into cells.
struct VertexPartition {
  std::vector<std::vector<Vertex>> cells;

  bool operator==(const VertexPartition &) const = default;
};

VertexPartition unit_partition(int vertex_count);

/// Coarsest equitable refinement: afterwards every vertex of a cell has the
/// same number of neighbors in each cell. A cell splits into pieces ordered
/// by decreasing neighbor count, in place of the original cell; vertices
/// within a cell are listed in increasing order. Idempotent. Throws
/// DomainError if p is not a partition of g's vertices.
VertexPartition refine(const Graph &g, const VertexPartition &p);

/// The full automorphism group as explicit permutations, sorted
/// lexicographically (the identity comes first).
std::vector<Permutation> automorphisms(const Graph &g, const SearchOptions &options = {});

/// The automorphisms that are Kronecker involutions; empty unless g is
/// connected and bipartite.
std::vector<Permutation> kronecker_involutions(const Graph &g, const SearchOptions &options = {});

struct CanonicalLabeling {
  /// Vertex x of the input becomes vertex labeling(x) of the canonical graph.
  Permutation labeling;
  Graph canonical_graph;
  /// graph6 of canonical_graph.
  std::string form;
};

/// Exact canonical labeling by individualization and refinement: among all
/// leaves of the search tree, picks the one with the smallest refinement
/// trace and then the smallest relabeled edge list.
CanonicalLabeling canonical_labeling(const Graph &g, const SearchOptions &options = {});

/// Equal for two graphs exactly when they are isomorphic.
std::string canonical_form(const Graph &g, const SearchOptions &options = {});

bool is_isomorphic(const Graph &g, const Graph &h, const SearchOptions &options = {});

/// A bijection phi with phi(g) = h, if one exists.
std::optional<Permutation> find_isomorphism(const Graph &g, const Graph &h, const SearchOptions &options = {});

/// One quotient per isomorphism class over all Kronecker involutions, in
/// order of first occurrence in kronecker_involutions().
std::vector<Graph> quotients_up_to_iso(const Graph &g, const SearchOptions &options = {});

}  // namespace gpkc

#endif  // GPKC_SEARCH_HPP_
