// Copyright 2026 The gpkc Authors
// SPDX-License-Identifier: Apache-2.0

#include "gpkc/dot.hpp"

#include <sstream>

namespace gpkc {
namespace {

std::string quoted(const std::string &s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string to_dot(const Graph &g, const std::optional<std::vector<std::string>> &labels, const std::string &name) {
  if (labels && static_cast<int>(labels->size()) != g.vertex_count()) {
    throw DomainError("to_dot: expected " + std::to_string(g.vertex_count()) + " labels, got " +
                      std::to_string(labels->size()));
  }
  std::ostringstream out;
  out << "graph " << quoted(name) << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (labels) out << " [label=" << quoted((*labels)[v]) << "]";
    out << ";\n";
  }
  for (const Edge &e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace gpkc
