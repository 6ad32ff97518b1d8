// Copyright 2026 The gpkc Authors
// SPDX-License-Identifier: Apache-2.0

#include "gpkc/permutation.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <sstream>

#include "gpkc/families.hpp"

namespace gpkc {
namespace {

long long mod(long long a, long long n) { return ((a % n) + n) % n; }

void require_same_size(const Permutation &p, const Permutation &q) {
  if (p.size() != q.size()) {
    throw DomainError("permutation size mismatch: " + std::to_string(p.size()) + " vs " + std::to_string(q.size()));
  }
}

// Builds the permutation of GP(n,.) vertices induced by index maps on the
// two rims: u_i -> (to_inner_u ? v : u)_{fu(i)}, and likewise for v_i.
template <class F, class G>
Permutation rim_map(int n, bool u_to_inner, F fu, bool v_to_inner, G fv) {
  std::vector<Vertex> image(2 * n);
  for (int i = 0; i < n; ++i) {
    image[outer_vertex(n, i)] = u_to_inner ? inner_vertex(n, fu(i)) : outer_vertex(n, fu(i));
    image[inner_vertex(n, i)] = v_to_inner ? inner_vertex(n, fv(i)) : outer_vertex(n, fv(i));
  }
  return Permutation(std::move(image));
}

std::string superscript(int value) {
  static constexpr std::array<const char *, 10> kDigits = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  for (char c : std::to_string(value)) out += kDigits[c - '0'];
  return out;
}

// Drawing label -> GP(10,3) label. The drawing uses (t, layer) -> 6*layer + t
// and apices 18, 19 (see desargues_prism_drawing). Found once by the search
// oracle; the unit tests re-check that it is an isomorphism.
constexpr std::array<Vertex, 20> kDesarguesDrawingToGp = {
    0, 1, 2, 12, 19, 9, 10, 11, 3, 15, 16, 8, 17, 14, 4, 5, 6, 7, 13, 18,
};

}  // namespace

Permutation::Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (Vertex x : image_) {
    if (x < 0 || x >= size() || hit[x]) throw DomainError("not a permutation");
    hit[x] = true;
  }
}

Permutation Permutation::identity(int size) {
  std::vector<Vertex> image(size);
  for (int i = 0; i < size; ++i) image[i] = i;
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

Permutation compose(const Permutation &p, const Permutation &q) {
  require_same_size(p, q);
  std::vector<Vertex> image(p.size());
  for (int x = 0; x < p.size(); ++x) image[x] = p(q(x));
  return Permutation(std::move(image));
}

Permutation inverse(const Permutation &p) {
  std::vector<Vertex> image(p.size());
  for (int x = 0; x < p.size(); ++x) image[p(x)] = x;
  return Permutation(std::move(image));
}

Permutation power(const Permutation &p, long long m) {
  Permutation base = m < 0 ? inverse(p) : p;
  unsigned long long e = m < 0 ? -static_cast<unsigned long long>(m) : static_cast<unsigned long long>(m);
  Permutation result = Permutation::identity(p.size());
  while (e) {
    if (e & 1) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

std::string cycle_notation(const Permutation &p) {
  std::ostringstream out;
  std::vector<bool> seen(p.size(), false);
  for (int s = 0; s < p.size(); ++s) {
    if (seen[s] || p(s) == s) continue;
    out << '(';
    for (int x = s; !seen[x]; x = p(x)) {
      seen[x] = true;
      out << (x == s ? "" : " ") << x;
    }
    out << ')';
  }
  const std::string text = out.str();
  return text.empty() ? "()" : text;
}

GammaKind gamma_kind(int n, int k) {
  if (n < 3) return GammaKind::kNone;
  const long long sq = mod(static_cast<long long>(k) * k, n);
  if (sq == 1) return GammaKind::kSquareIsOne;
  if (sq == n - 1) return GammaKind::kSquareIsBeta;
  return GammaKind::kNone;
}

Permutation alpha(int n) {
  auto next = [](int i) { return i + 1; };
  return rim_map(n, false, next, true, next);
}

Permutation beta(int n) {
  auto negate = [](int i) { return -i; };
  return rim_map(n, false, negate, true, negate);
}

Permutation gamma(int n, int k) {
  if (gamma_kind(n, k) == GammaKind::kNone) {
    throw DomainError("gamma(" + std::to_string(n) + "," + std::to_string(k) +
                      ") is not an automorphism: k^2 is not +-1 mod n");
  }
  auto scale = [k](int i) { return static_cast<long long>(k) * i; };
  return rim_map(n, true, scale, false, scale);
}

Permutation delta_10_3() {
  // Half turn of the hexagonal layers plus the apex swap, in drawing labels.
  std::vector<Vertex> in_drawing(20);
  for (int layer = 0; layer < 3; ++layer) {
    for (int t = 0; t < 6; ++t) in_drawing[6 * layer + t] = 6 * layer + (t + 3) % 6;
  }
  in_drawing[18] = 19;
  in_drawing[19] = 18;

  std::vector<Vertex> image(20);
  for (int x = 0; x < 20; ++x) image[kDesarguesDrawingToGp[x]] = kDesarguesDrawingToGp[in_drawing[x]];
  return Permutation(std::move(image));
}

std::vector<Letter> parse_word(std::string_view text) {
  std::vector<Letter> word;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i++];
    if (c == ' ' || c == '*') continue;
    Letter forward, backward;
    switch (c) {
      case 'a': forward = Letter::kAlpha; backward = Letter::kAlphaInverse; break;
      case 'A': forward = Letter::kAlphaInverse; backward = Letter::kAlpha; break;
      case 'b': forward = backward = Letter::kBeta; break;
      case 'g': forward = Letter::kGamma; backward = Letter::kGammaInverse; break;
      case 'G': forward = Letter::kGammaInverse; backward = Letter::kGamma; break;
      default: throw DomainError(std::string("unknown generator '") + c + "'");
    }
    long long exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      const char *first = text.data() + i;
      auto [end, ec] = std::from_chars(first, text.data() + text.size(), exponent);
      if (ec != std::errc() || end == first) throw DomainError("malformed exponent in word");
      i += end - first;
    }
    const Letter letter = exponent < 0 ? backward : forward;
    for (long long r = 0; r < (exponent < 0 ? -exponent : exponent); ++r) word.push_back(letter);
  }
  return word;
}

CanonicalTriple normalize_word(int n, int k, std::span<const Letter> word) {
  if (n < 3) throw DomainError("normalize_word requires n >= 3");
  const GammaKind kind = gamma_kind(n, k);
  const long long kk = mod(k, n);
  long long a = 0;
  int b = 0, c = 0;

  // Right-multiplies the running alpha^a beta^b gamma^c by one generator.
  auto times_alpha = [&](long long e) {
    if (c) e *= kk;  // gamma alpha^e = alpha^{ke} gamma
    if (b) e = -e;   // beta alpha^e = alpha^{-e} beta
    a = mod(a + e, n);
  };
  auto times_gamma = [&] {
    if (kind == GammaKind::kNone) {
      throw DomainError("gamma is not an automorphism of GP(" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
    if (++c == 2) {
      c = 0;
      if (kind == GammaKind::kSquareIsBeta) b ^= 1;  // gamma^2 = beta commutes with beta
    }
  };

  for (Letter letter : word) {
    switch (letter) {
      case Letter::kAlpha: times_alpha(1); break;
      case Letter::kAlphaInverse: times_alpha(-1); break;
      case Letter::kBeta: b ^= 1; break;
      case Letter::kGamma: times_gamma(); break;
      case Letter::kGammaInverse:
        times_gamma();
        if (kind == GammaKind::kSquareIsBeta) {
          times_gamma();
          times_gamma();
        }
        break;
    }
  }
  return {static_cast<int>(a), b, c};
}

Permutation evaluate_word(int n, int k, std::span<const Letter> word) {
  Permutation result = Permutation::identity(2 * n);
  for (Letter letter : word) {
    switch (letter) {
      case Letter::kAlpha: result = result * alpha(n); break;
      case Letter::kAlphaInverse: result = result * inverse(alpha(n)); break;
      case Letter::kBeta: result = result * beta(n); break;
      case Letter::kGamma: result = result * gamma(n, k); break;
      case Letter::kGammaInverse: result = result * inverse(gamma(n, k)); break;
    }
  }
  return result;
}

Permutation from_triple(int n, int k, const CanonicalTriple &t) {
  Permutation result = power(alpha(n), t.a);
  if (t.b) result = result * beta(n);
  if (t.c) result = result * gamma(n, k);
  return result;
}

std::string render_triple(const CanonicalTriple &t, bool ascii) {
  std::string out;
  auto part = [&](const std::string &unicode, const std::string &plain) {
    if (ascii && !out.empty()) out += '*';
    out += ascii ? plain : unicode;
  };
  if (t.a != 0) part(t.a == 1 ? "α" : "α" + superscript(t.a), t.a == 1 ? "a" : "a^" + std::to_string(t.a));
  if (t.b) part("β", "b");
  if (t.c) part("γ", "g");
  if (out.empty()) out = ascii ? "id" : "1";
  return out;
}

bool is_automorphism(const Graph &g, const Permutation &p) {
  if (p.size() != g.vertex_count()) {
    throw DomainError("permutation of size " + std::to_string(p.size()) + " applied to graph on " +
                      std::to_string(g.vertex_count()) + " vertices");
  }
  for (const Edge &e : g.edges()) {
    if (!g.has_edge(p(e.u), p(e.v))) return false;
  }
  return true;
}

InvolutionProfile involution_profile(const Graph &g, const Bipartition &bip, const Permutation &p) {
  if (!is_automorphism(g, p)) throw DomainError("involution_profile: not an automorphism");
  if (static_cast<int>(bip.color.size()) != g.vertex_count()) throw DomainError("involution_profile: coloring size");
  InvolutionProfile profile;
  profile.is_involution = true;
  profile.color_reversing = true;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (p(p(x)) != x) profile.is_involution = false;
    if (p(x) == x) ++profile.fixed_vertices;
    if (bip.color[p(x)] == bip.color[x]) profile.color_reversing = false;
  }
  for (const Edge &e : g.edges()) {
    if (p(e.u) == e.v && p(e.v) == e.u) ++profile.fixed_edges;
  }
  return profile;
}

}  // namespace gpkc
