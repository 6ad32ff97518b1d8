// Copyright 2026 The gpkc Authors
// SPDX-License-Identifier: Apache-2.0

#include "gpkc/covers.hpp"

#include <string>

namespace gpkc {

Graph kronecker_cover(const Graph &g) {
  const int n = g.vertex_count();
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(2 * g.edge_count());
  for (const Edge &e : g.edges()) {
    pairs.emplace_back(e.u, e.v + n);
    pairs.emplace_back(e.u + n, e.v);
  }
  return Graph(2 * n, pairs);
}

Permutation natural_swap(int base_vertex_count) {
  std::vector<Vertex> image(2 * base_vertex_count);
  for (int v = 0; v < base_vertex_count; ++v) {
    image[v] = v + base_vertex_count;
    image[v + base_vertex_count] = v;
  }
  return Permutation(std::move(image));
}

std::string_view describe(KroneckerCheck check) {
  switch (check) {
    case KroneckerCheck::kOk: return "ok";
    case KroneckerCheck::kSizeMismatch: return "permutation size does not match the graph";
    case KroneckerCheck::kNotConnected: return "graph is not connected";
    case KroneckerCheck::kNotBipartite: return "graph is not bipartite";
    case KroneckerCheck::kNotAutomorphism: return "permutation is not an automorphism";
    case KroneckerCheck::kNotInvolution: return "permutation is not an involution";
    case KroneckerCheck::kHasFixedVertex: return "permutation fixes a vertex";
    case KroneckerCheck::kNotColorReversing: return "permutation is not color-reversing";
    case KroneckerCheck::kFixesEdge: return "permutation maps a vertex to a neighbor";
  }
  return "unknown";
}

KroneckerCheck check_kronecker_involution(const Graph &g, const Permutation &p) {
  if (p.size() != g.vertex_count()) return KroneckerCheck::kSizeMismatch;
  if (!is_connected(g)) return KroneckerCheck::kNotConnected;
  const auto bip = bipartition(g);
  if (!bip) return KroneckerCheck::kNotBipartite;
  if (!is_automorphism(g, p)) return KroneckerCheck::kNotAutomorphism;
  const InvolutionProfile profile = involution_profile(g, *bip, p);
  if (!profile.is_involution) return KroneckerCheck::kNotInvolution;
  if (profile.fixed_vertices > 0) return KroneckerCheck::kHasFixedVertex;
  if (!profile.color_reversing) return KroneckerCheck::kNotColorReversing;
  // For an involution, x -> neighbor is the same as fixing the edge {x, p(x)}.
  if (profile.fixed_edges > 0) return KroneckerCheck::kFixesEdge;
  return KroneckerCheck::kOk;
}

Graph quotient(const Graph &g, const Permutation &p) {
  if (const KroneckerCheck check = check_kronecker_involution(g, p); check != KroneckerCheck::kOk) {
    throw DomainError("quotient: " + std::string(describe(check)));
  }
  const int n = g.vertex_count();
  std::vector<Vertex> rank(n, -1);
  int next = 0;
  for (Vertex x = 0; x < n; ++x) {
    if (rank[x] == -1) rank[x] = rank[p(x)] = next++;
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(g.edge_count());
  for (const Edge &e : g.edges()) pairs.emplace_back(rank[e.u], rank[e.v]);
  return Graph(next, pairs);
}

}  // namespace gpkc
