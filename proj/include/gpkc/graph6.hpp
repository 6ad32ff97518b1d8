// Copyright 2026 The gpkc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GPKC_GRAPH6_HPP_
#define GPKC_GRAPH6_HPP_

#include <string>
#include <string_view>

#include "gpkc/graph.hpp"

namespace gpkc {

/// Largest vertex count accepted by the graph6 encoder (the 8-byte header form
/// is not produced).
inline constexpr int kGraph6MaxVertices = 258047;

/// Standard graph6 encoding: size header N(n) followed by the upper triangle
/// of the adjacency matrix, column by column (x(0,1), x(0,2), x(1,2), ...),
/// packed six bits per byte with an offset of 63. No header line, no newline.
std::string encode_graph6(const Graph &g);

/// Inverse of encode_graph6. Accepts an optional ">>graph6<<" prefix.
/// Throws DomainError on a malformed header, a truncated or over-long bit
/// field, nonzero padding bits, or bytes outside the printable range 63..126.
Graph decode_graph6(std::string_view text);

}  // namespace gpkc

#endif  // GPKC_GRAPH6_HPP_
