// Copyright 2026 The gpkc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GPKC_DOT_HPP_
#define GPKC_DOT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "gpkc/graph.hpp"

namespace gpkc {

/// Graphviz `graph` block: one node statement per vertex, then one
/// `a -- b;` line per edge in sorted edge order. Labels, when given, must
/// have one entry per vertex.
std::string to_dot(const Graph &g, const std::optional<std::vector<std::string>> &labels = std::nullopt,
                   const std::string &name = "G");

}  // namespace gpkc

#endif  // GPKC_DOT_HPP_
