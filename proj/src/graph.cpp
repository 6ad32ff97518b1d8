// Copyright 2026 The gpkc Authors
// SPDX-License-Identifier: Apache-2.0

#include "gpkc/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace gpkc {

Graph::Graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> pairs) : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw DomainError("negative vertex count");
  edges_.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count) {
      throw DomainError("edge endpoint out of range: (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    if (a == b) throw DomainError("loop at vertex " + std::to_string(a));
    edges_.push_back(a < b ? Edge{a, b} : Edge{b, a});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  offsets_.assign(vertex_count + 1, 0);
  for (const Edge &e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (int i = 0; i < vertex_count; ++i) offsets_[i + 1] += offsets_[i];
  adjacency_.resize(2 * edges_.size());
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge &e : edges_) {
    adjacency_[fill[e.u]++] = e.v;
    adjacency_[fill[e.v]++] = e.u;
  }
  // has_edge relies on sorted neighbor lists.
  for (int i = 0; i < vertex_count; ++i) {
    std::sort(adjacency_.begin() + offsets_[i], adjacency_.begin() + offsets_[i + 1]);
  }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= vertex_count_ || b >= vertex_count_) return false;
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

bool Graph::is_regular(int d) const {
  for (Vertex v = 0; v < vertex_count_; ++v) {
    if (degree(v) != d) return false;
  }
  return true;
}

Graph new_graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> pairs) {
  return Graph(vertex_count, pairs);
}

std::optional<Bipartition> bipartition(const Graph &g) {
  const int n = g.vertex_count();
  Bipartition bip{std::vector<int>(n, -1)};
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (bip.color[s] != -1) continue;
    bip.color[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (bip.color[y] == -1) {
          bip.color[y] = 1 - bip.color[x];
          queue.push_back(y);
        } else if (bip.color[y] == bip.color[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return bip;
}

std::vector<std::vector<Vertex>> connected_components(const Graph &g) {
  const int n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> components;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

bool is_connected(const Graph &g) { return connected_components(g).size() <= 1; }

std::optional<int> girth(const Graph &g) {
  const int n = g.vertex_count();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n), parent(n);
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    queue.assign(1, root);
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      // No cycle through root can be shorter than what we already have.
      if (2 * dist[x] >= best) break;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] == -1) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

Graph relabel(const Graph &g, std::span<const Vertex> image) {
  if (static_cast<int>(image.size()) != g.vertex_count()) throw DomainError("relabel: size mismatch");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(g.edge_count());
  for (const Edge &e : g.edges()) pairs.emplace_back(image[e.u], image[e.v]);
  return Graph(g.vertex_count(), pairs);
}

}  // namespace gpkc
