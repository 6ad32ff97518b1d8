// Copyright 2026 The gpkc Authors
// SPDX-License-Identifier: Apache-2.0

#include "gpkc/families.hpp"

#include <sstream>

namespace gpkc {
namespace {

using PairList = std::vector<std::pair<Vertex, Vertex>>;

int mod(long long a, int n) { return static_cast<int>(((a % n) + n) % n); }

void require_even(const GpParams &p, const char *what) {
  if (p.n() % 2 != 0) {
    throw DomainError(std::string(what) + " requires even n, got n=" + std::to_string(p.n()));
  }
}

}  // namespace

GpParams::GpParams(int n, int k) : n_(n), k_(k) {
  if (n < 3) throw DomainError("GP(n,k) requires n >= 3, got n=" + std::to_string(n));
  if (k < 1) throw DomainError("GP(n,k) requires k >= 1, got k=" + std::to_string(k));
  if (2 * k >= n) {
    throw DomainError("GP(n,k) requires k < n/2, got n=" + std::to_string(n) + ", k=" + std::to_string(k));
  }
}

std::vector<std::string> gp_labels(const GpParams &p) {
  std::vector<std::string> labels;
  labels.reserve(2 * p.n());
  for (int i = 0; i < p.n(); ++i) labels.push_back("u" + std::to_string(i));
  for (int i = 0; i < p.n(); ++i) labels.push_back("v" + std::to_string(i));
  return labels;
}

EdgeClasses edge_classes(const GpParams &p) {
  const int n = p.n();
  auto edge = [](Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; };
  EdgeClasses classes;
  for (int i = 0; i < n; ++i) {
    classes.outer.push_back(edge(outer_vertex(n, i), outer_vertex(n, i + 1)));
    classes.inner.push_back(edge(inner_vertex(n, i), inner_vertex(n, i + p.k())));
    classes.spokes.push_back(edge(outer_vertex(n, i), inner_vertex(n, i)));
  }
  return classes;
}

Graph gp(const GpParams &p) {
  PairList pairs;
  const EdgeClasses classes = edge_classes(p);
  for (const auto *part : {&classes.outer, &classes.inner, &classes.spokes}) {
    for (const Edge &e : *part) pairs.emplace_back(e.u, e.v);
  }
  return Graph(2 * p.n(), pairs);
}

LcfSpec::LcfSpec(int n_, const std::vector<long long> &raw) : n(n_) {
  if (n < 3) throw DomainError("LCF spec requires n >= 3");
  if (static_cast<int>(raw.size()) != n) {
    throw DomainError("LCF spec needs " + std::to_string(n) + " jumps, got " + std::to_string(raw.size()));
  }
  jumps.reserve(n);
  for (long long j : raw) jumps.push_back(mod(j, n));
}

std::string LcfSpec::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < jumps.size(); ++i) out << (i ? "," : "") << jumps[i];
  out << ']';
  return out.str();
}

Graph lcf(const LcfSpec &spec) {
  const int n = spec.n;
  if (n < 3 || static_cast<int>(spec.jumps.size()) != n) throw DomainError("lcf: malformed spec");
  PairList pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  for (int i = 0; i < n; ++i) {
    const int f = mod(spec.jumps[i], n);
    if (f == 0) throw DomainError("lcf: zero jump at position " + std::to_string(i));
    if (f == 1 || f == n - 1) throw DomainError("lcf: jump +-1 at position " + std::to_string(i));
    const int partner = (i + f) % n;
    if (mod(spec.jumps[partner], n) != mod(-f, n)) {
      throw DomainError("lcf: chords do not pair up at position " + std::to_string(i));
    }
    pairs.emplace_back(i, partner);
  }
  return Graph(n, pairs);
}

LcfSpec c_plus(const GpParams &p) {
  require_even(p, "C+(n,k)");
  std::vector<long long> jumps(p.n());
  for (int i = 0; i < p.n(); ++i) jumps[i] = p.n() / 2 + static_cast<long long>(i) * (p.k() - 1);
  return LcfSpec(p.n(), jumps);
}

LcfSpec c_minus(const GpParams &p) {
  require_even(p, "C-(n,k)");
  std::vector<long long> jumps(p.n());
  for (int i = 0; i < p.n(); ++i) jumps[i] = p.n() / 2 - static_cast<long long>(i) * (p.k() + 1);
  return LcfSpec(p.n(), jumps);
}

Graph h_graph() {
  auto at = [](int t, int layer) { return 3 * layer + (t % 3); };
  PairList pairs;
  for (int t = 0; t < 3; ++t) {
    pairs.emplace_back(at(t, 0), at(t + 1, 0));
    pairs.emplace_back(at(t, 2), at(t + 1, 2));
    pairs.emplace_back(at(t, 0), at(t, 1));
    pairs.emplace_back(at(t, 1), at(t, 2));
    pairs.emplace_back(at(t, 1), 9);
  }
  return Graph(10, pairs);
}

Graph desargues_prism_drawing() {
  auto at = [](int t, int layer) { return 6 * layer + (t % 6); };
  PairList pairs;
  for (int t = 0; t < 6; ++t) {
    pairs.emplace_back(at(t, 0), at(t + 1, 0));
    pairs.emplace_back(at(t, 2), at(t + 1, 2));
    pairs.emplace_back(at(t, 0), at(t, 1));
    pairs.emplace_back(at(t, 1), at(t, 2));
    pairs.emplace_back(at(t, 1), t % 2 == 0 ? 18 : 19);
  }
  return Graph(20, pairs);
}

Graph cycle_graph(int n) {
  PairList pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  return Graph(n, pairs);
}

Graph path_graph(int n) {
  PairList pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Graph(n, pairs);
}

Graph complete_graph(int n) {
  PairList pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return Graph(n, pairs);
}

Graph star_graph(int leaves) {
  PairList pairs;
  for (int i = 1; i <= leaves; ++i) pairs.emplace_back(0, i);
  return Graph(leaves + 1, pairs);
}

Graph mobius_ladder(int n) {
  if (n < 4 || n % 2 != 0) throw DomainError("mobius_ladder requires even n >= 4");
  return lcf(LcfSpec(n, std::vector<long long>(n, n / 2)));
}

}  // namespace gpkc
