// Copyright 2026 The gpkc Authors
// SPDX-License-Identifier: Apache-2.0

#include "gpkc/graph6.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace gpkc {
namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void append_size(std::string &out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

int sextet(char c) {
  if (c < 63 || c > 126) throw DomainError("graph6: byte out of range");
  return c - kBias;
}

}  // namespace

std::string encode_graph6(const Graph &g) {
  const int n = g.vertex_count();
  if (n > kGraph6MaxVertices) throw DomainError("graph6: too many vertices");
  std::string out;
  append_size(out, n);

  const std::int64_t bits = static_cast<std::int64_t>(n) * (n - 1) / 2;
  std::vector<std::uint8_t> packed((bits + 5) / 6, 0);
  for (const Edge &e : g.edges()) {
    // Column-major upper triangle: pair (i, j), i < j, sits at j(j-1)/2 + i.
    const std::int64_t pos = static_cast<std::int64_t>(e.v) * (e.v - 1) / 2 + e.u;
    packed[pos / 6] |= static_cast<std::uint8_t>(1u << (5 - pos % 6));
  }
  for (std::uint8_t chunk : packed) out.push_back(static_cast<char>(chunk + kBias));
  return out;
}

Graph decode_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw DomainError("graph6: empty input");

  std::size_t at = 0;
  int n = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    at = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') throw DomainError("graph6: 8-byte size header not supported");
    if (text.size() < 4) throw DomainError("graph6: truncated size header");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(text[i]);
    if (n <= 62) throw DomainError("graph6: non-minimal size header");
    at = 4;
  }

  const std::int64_t bits = static_cast<std::int64_t>(n) * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  const std::size_t have = text.size() - at;
  if (have < need) throw DomainError("graph6: truncated adjacency field");
  if (have > need) throw DomainError("graph6: trailing bytes after adjacency field");

  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::int64_t pos = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++pos) {
      const int chunk = sextet(text[at + pos / 6]);
      if (chunk & (1 << (5 - pos % 6))) pairs.emplace_back(i, j);
    }
  }
  if (pos % 6 != 0) {
    const int chunk = sextet(text[at + pos / 6]);
    const int padding_mask = (1 << (6 - pos % 6)) - 1;
    if (chunk & padding_mask) throw DomainError("graph6: nonzero padding bits");
  }
  return Graph(n, pairs);
}

}  // namespace gpkc
