// Copyright 2026 The gpkc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GPKC_PERMUTATION_HPP_
#define GPKC_PERMUTATION_HPP_

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gpkc/graph.hpp"

namespace gpkc {

/// Bijection on 0..size-1, stored as its image vector. Ordered
/// lexicographically by image.
class Permutation {
 public:
  Permutation() = default;
  /// Throws DomainError unless image is a bijection on 0..size-1.
  explicit Permutation(std::vector<Vertex> image);

  static Permutation identity(int size);

  int size() const { return static_cast<int>(image_.size()); }
  Vertex operator()(Vertex x) const { return image_[x]; }
  std::span<const Vertex> image() const { return image_; }
  bool is_identity() const;

  auto operator<=>(const Permutation &) const = default;

 private:
  std::vector<Vertex> image_;
};

/// p after q: compose(p, q)(x) = p(q(x)). Throws on size mismatch.
Permutation compose(const Permutation &p, const Permutation &q);
inline Permutation operator*(const Permutation &p, const Permutation &q) { return compose(p, q); }
Permutation inverse(const Permutation &p);
/// p^m for any integer m (negative powers use the inverse).
Permutation power(const Permutation &p, long long m);

/// Disjoint cycles, fixed points omitted: "(0 5)(1 6)".
std::string cycle_notation(const Permutation &p);

/// How gamma squares for the pair (n, k).
enum class GammaKind {
  kNone,           // k^2 is neither 1 nor -1 mod n; gamma is not an automorphism
  kSquareIsOne,    // k^2 = 1 (mod n): gamma^2 = id
  kSquareIsBeta,   // k^2 = -1 (mod n): gamma^2 = beta
};
GammaKind gamma_kind(int n, int k);

/// The rotation u_i -> u_{i+1}, v_i -> v_{i+1} on the 2n GP-labeled vertices.
Permutation alpha(int n);
/// The reflection u_i -> u_{-i}, v_i -> v_{-i}.
Permutation beta(int n);
/// The rim swap u_i -> v_{ki}, v_i -> u_{ki}. Throws DomainError unless
/// k^2 = +-1 (mod n).
Permutation gamma(int n, int k);

/// Extra automorphism of GP(10,3) that neither fixes nor swaps the rims.
/// It comes from the C6 x P3 drawing of the Desargues graph: rotate the
/// hexagonal layers by half a turn and swap the two apices, then translate
/// drawing labels to GP labels.
Permutation delta_10_3();

/// Word alpha^a beta^b gamma^c with a mod n, b and c in {0, 1}.
struct CanonicalTriple {
  int a = 0;
  int b = 0;
  int c = 0;

  auto operator<=>(const CanonicalTriple &) const = default;
};

enum class Letter { kAlpha, kAlphaInverse, kBeta, kGamma, kGammaInverse };

/// Parses ASCII words: a, A (alpha inverse), b, g, G (gamma inverse), each
/// optionally followed by ^m with a signed integer m. Spaces and '*' are
/// separators. "g a^3" is gamma * alpha^3. Throws DomainError on junk.
std::vector<Letter> parse_word(std::string_view text);

/// Reduces a word (read as a right-to-left product, like compose) to its
/// unique triple. Throws DomainError if gamma occurs but k^2 != +-1 (mod n).
CanonicalTriple normalize_word(int n, int k, std::span<const Letter> word);

/// Multiplies the generator permutations of a word directly.
Permutation evaluate_word(int n, int k, std::span<const Letter> word);

/// alpha^a * beta^b * gamma^c as a permutation of the GP(n,k) vertices.
Permutation from_triple(int n, int k, const CanonicalTriple &t);

/// "α⁶γ", "α¹²βγ", "1" for the identity; with ascii: "a^6*g", "a^12*b*g", "id".
std::string render_triple(const CanonicalTriple &t, bool ascii = false);

/// True iff p maps every edge of g to an edge. Throws on size mismatch.
bool is_automorphism(const Graph &g, const Permutation &p);

struct InvolutionProfile {
  bool is_involution = false;
  int fixed_vertices = 0;
  /// Edges {x, y} with p(x) = y and p(y) = x.
  int fixed_edges = 0;
  bool color_reversing = false;
};

/// The facts that decide Kronecker-involution status of an automorphism of
/// a bipartite graph. Throws DomainError if p is not an automorphism of g or
/// the coloring does not fit g.
InvolutionProfile involution_profile(const Graph &g, const Bipartition &bip, const Permutation &p);

}  // namespace gpkc

#endif  // GPKC_PERMUTATION_HPP_
