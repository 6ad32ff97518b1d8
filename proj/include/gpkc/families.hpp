// Copyright 2026 The gpkc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GPKC_FAMILIES_HPP_
#define GPKC_FAMILIES_HPP_

#include <compare>
#include <string>
#include <vector>

#include "gpkc/graph.hpp"

namespace gpkc {

/// Parameters of a generalized Petersen graph: n >= 3 and 1 <= k with 2k < n.
class GpParams {
 public:
  /// Throws DomainError naming the violated bound.
  GpParams(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }

  auto operator<=>(const GpParams &) const = default;

 private:
  int n_;
  int k_;
};

/// Fixed GP labeling used everywhere: u_i -> i, v_i -> n + i (indices mod n).
inline Vertex outer_vertex(int n, long long i) { return static_cast<Vertex>(((i % n) + n) % n); }
inline Vertex inner_vertex(int n, long long i) { return n + outer_vertex(n, i); }

/// "u0".."u{n-1}", "v0".."v{n-1}" in vertex order.
std::vector<std::string> gp_labels(const GpParams &p);

/// GP(n,k) on 2n vertices: outer rim u_i u_{i+1}, inner rims v_i v_{i+k},
/// spokes u_i v_i.
Graph gp(const GpParams &p);

struct EdgeClasses {
  std::vector<Edge> outer;
  std::vector<Edge> inner;
  std::vector<Edge> spokes;
};

/// The three edge orbits of the dihedral action, each of size n.
EdgeClasses edge_classes(const GpParams &p);

/// Cyclic jump sequence: vertex i on the Hamilton cycle 0..n-1 also joins
/// i + jumps[i] (mod n). Jumps are stored as residues in [0, n).
struct LcfSpec {
  int n = 0;
  std::vector<int> jumps;

  LcfSpec() = default;
  /// Reduces every jump mod n. Throws DomainError when n < 3 or the jump
  /// count differs from n.
  LcfSpec(int n, const std::vector<long long> &jumps);

  /// "[6,10,2,...]" with residues.
  std::string to_string() const;

  bool operator==(const LcfSpec &) const = default;
};

/// Materializes an LCF spec as a cubic graph. Throws DomainError for a zero
/// jump, a jump of +-1 (parallel to a cycle edge) or when the chords do not
/// pair up (jumps[i + jumps[i]] != -jumps[i]).
Graph lcf(const LcfSpec &spec);

/// Jumps n/2 + i(k-1) mod n. Requires even n. Not validated; see lcf().
LcfSpec c_plus(const GpParams &p);
/// Jumps n/2 - i(k+1) mod n. Requires even n. Not validated; see lcf().
LcfSpec c_minus(const GpParams &p);

/// The 10-vertex cubic graph obtained from the prism K3 x P3 by deleting the
/// edges of the middle triangle and joining a new apex to the three middle
/// vertices. Layer-major labels: (t, layer) -> 3*layer + t, apex -> 9.
Graph h_graph();

/// The Desargues graph drawn from C6 x P3: delete the middle hexagon, add
/// two apices, one joined to the even and one to the odd middle vertices.
/// Labels: (t, layer) -> 6*layer + t for t in Z6, apices 18 (even) and 19 (odd).
Graph desargues_prism_drawing();

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
/// Cycle 0..n-1 plus antipodal chords; n even.
Graph mobius_ladder(int n);

}  // namespace gpkc

#endif  // GPKC_FAMILIES_HPP_
