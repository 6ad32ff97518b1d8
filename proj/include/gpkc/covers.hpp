// Copyright 2026 The gpkc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GPKC_COVERS_HPP_
#define GPKC_COVERS_HPP_

#include <string_view>

#include "gpkc/graph.hpp"
#include "gpkc/permutation.hpp"

namespace gpkc {

/// Bipartite double cover G x K2. Vertex v of g lifts to v (v') and
/// v + |V(g)| (v''); each edge uv lifts to u'v'' and u''v'.
Graph kronecker_cover(const Graph &g);

/// The involution v' <-> v'' on kronecker_cover of a graph with
/// base_vertex_count vertices.
Permutation natural_swap(int base_vertex_count);

/// First clause of the Kronecker-involution definition that fails, in the
/// order they are checked.
enum class KroneckerCheck {
  kOk,
  kSizeMismatch,
  kNotConnected,
  kNotBipartite,
  kNotAutomorphism,
  kNotInvolution,
  kHasFixedVertex,
  kNotColorReversing,
  kFixesEdge,
};

std::string_view describe(KroneckerCheck check);

KroneckerCheck check_kronecker_involution(const Graph &g, const Permutation &p);

/// True iff g is connected and bipartite and p is a fixed-point-free,
/// color-reversing involutive automorphism that maps no vertex to a neighbor.
/// Never throws.
inline bool is_kronecker_involution(const Graph &g, const Permutation &p) {
  return check_kronecker_involution(g, p) == KroneckerCheck::kOk;
}

/// Contracts each orbit {x, p(x)} to one vertex. Orbits are numbered by
/// increasing minimum element. Throws DomainError naming the failed clause
/// when p is not a Kronecker involution of g.
Graph quotient(const Graph &g, const Permutation &p);

}  // namespace gpkc

#endif  // GPKC_COVERS_HPP_
