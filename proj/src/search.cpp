// Copyright 2026 The gpkc Authors
// SPDX-License-Identifier: Apache-2.0

#include "gpkc/search.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gpkc/covers.hpp"
#include "gpkc/graph6.hpp"

namespace gpkc {
namespace {

void check_bound(const Graph &g, const SearchOptions &options) {
  if (g.vertex_count() > options.max_vertices) {
    throw SearchBoundError("search oracle: " + std::to_string(g.vertex_count()) + " vertices exceeds the bound of " +
                           std::to_string(options.max_vertices));
  }
}

// Ordered partition stored as one array of vertices; a cell is a contiguous
// range identified by its start position.
struct Partition {
  std::vector<Vertex> lab;
  std::vector<int> pos;         // position of each vertex in lab
  std::vector<int> cell_of;     // start of the cell containing each vertex
  std::vector<int> cell_end;    // exclusive end, valid at cell starts
  int cell_count = 0;

  bool discrete() const { return cell_count == static_cast<int>(lab.size()); }
};

Partition make_partition(int n, const VertexPartition &p) {
  Partition part;
  part.lab.reserve(n);
  part.pos.assign(n, -1);
  part.cell_of.assign(n, -1);
  part.cell_end.assign(n + 1, 0);
  for (const auto &cell : p.cells) {
    if (cell.empty()) throw DomainError("refine: empty cell");
    const int start = static_cast<int>(part.lab.size());
    for (Vertex v : cell) {
      if (v < 0 || v >= n || part.pos[v] != -1) throw DomainError("refine: cells do not partition the vertex set");
      part.pos[v] = static_cast<int>(part.lab.size());
      part.cell_of[v] = start;
      part.lab.push_back(v);
    }
    part.cell_end[start] = static_cast<int>(part.lab.size());
    ++part.cell_count;
  }
  if (static_cast<int>(part.lab.size()) != n) throw DomainError("refine: cells do not partition the vertex set");
  return part;
}

VertexPartition to_public(const Partition &part) {
  VertexPartition out;
  for (int s = 0; s < static_cast<int>(part.lab.size()); s = part.cell_end[s]) {
    std::vector<Vertex> cell(part.lab.begin() + s, part.lab.begin() + part.cell_end[s]);
    std::sort(cell.begin(), cell.end());
    out.cells.push_back(std::move(cell));
  }
  return out;
}

class Refiner {
 public:
  explicit Refiner(const Graph &g)
      : g_(g), count_(g.vertex_count(), 0), queued_(g.vertex_count() + 1, false) {}

  // Refines to the coarsest equitable partition finer than part, starting
  // from the given splitter cells. Appends an isomorphism-invariant record
  // of every split to trace.
  void run(Partition &part, std::vector<int> splitters, std::vector<int> &trace) {
    queue_.clear();
    std::fill(queued_.begin(), queued_.end(), false);
    for (int s : splitters) push(s);
    std::vector<Vertex> splitter;
    std::vector<Vertex> touched;
    std::vector<int> touched_cells;
    std::vector<Vertex> cell;
    std::size_t head = 0;
    while (head < queue_.size() && !part.discrete()) {
      const int w = queue_[head++];
      queued_[w] = false;
      splitter.assign(part.lab.begin() + w, part.lab.begin() + part.cell_end[w]);
      trace.push_back(-1);
      trace.push_back(w);
      trace.push_back(static_cast<int>(splitter.size()));

      touched.clear();
      for (Vertex x : splitter) {
        for (Vertex y : g_.neighbors(x)) {
          if (count_[y]++ == 0) touched.push_back(y);
        }
      }
      touched_cells.clear();
      for (Vertex y : touched) touched_cells.push_back(part.cell_of[y]);
      std::sort(touched_cells.begin(), touched_cells.end());
      touched_cells.erase(std::unique(touched_cells.begin(), touched_cells.end()), touched_cells.end());

      for (int c : touched_cells) split(part, c, cell, trace);
      for (Vertex y : touched) count_[y] = 0;
    }
  }

 private:
  void push(int start) {
    if (!queued_[start]) {
      queued_[start] = true;
      queue_.push_back(start);
    }
  }

  void split(Partition &part, int c, std::vector<Vertex> &cell, std::vector<int> &trace) {
    const int e = part.cell_end[c];
    cell.assign(part.lab.begin() + c, part.lab.begin() + e);
    std::sort(cell.begin(), cell.end(), [this](Vertex a, Vertex b) {
      return count_[a] != count_[b] ? count_[a] > count_[b] : a < b;
    });
    trace.push_back(c);
    std::vector<std::pair<int, int>> pieces;  // (start, end)
    int piece_start = c;
    for (int i = c; i < e; ++i) {
      const Vertex v = cell[i - c];
      part.lab[i] = v;
      part.pos[v] = i;
      if (i > c && count_[v] != count_[cell[i - c - 1]]) {
        pieces.emplace_back(piece_start, i);
        piece_start = i;
      }
    }
    pieces.emplace_back(piece_start, e);
    for (auto [s, t] : pieces) {
      trace.push_back(count_[part.lab[s]]);
      trace.push_back(t - s);
    }
    if (pieces.size() == 1) return;

    for (auto [s, t] : pieces) {
      part.cell_end[s] = t;
      for (int i = s; i < t; ++i) part.cell_of[part.lab[i]] = s;
    }
    part.cell_count += static_cast<int>(pieces.size()) - 1;

    if (queued_[c]) {
      for (std::size_t i = 1; i < pieces.size(); ++i) push(pieces[i].first);
      return;
    }
    std::size_t largest = 0;
    for (std::size_t i = 1; i < pieces.size(); ++i) {
      if (pieces[i].second - pieces[i].first > pieces[largest].second - pieces[largest].first) largest = i;
    }
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (i != largest) push(pieces[i].first);
    }
  }

  const Graph &g_;
  std::vector<int> count_;
  std::vector<bool> queued_;
  std::vector<int> queue_;
};

// Root of the search tree: the equitable refinement of the unit partition.
Partition root_node(const Graph &g, Refiner &refiner, std::vector<int> &trace) {
  Partition part = make_partition(g.vertex_count(), unit_partition(g.vertex_count()));
  if (g.vertex_count() > 0) refiner.run(part, {0}, trace);
  return part;
}

// First smallest non-singleton cell, as (start, end).
std::pair<int, int> target_cell(const Partition &part) {
  std::pair<int, int> best{-1, -1};
  for (int s = 0; s < static_cast<int>(part.lab.size()); s = part.cell_end[s]) {
    const int size = part.cell_end[s] - s;
    if (size > 1 && (best.first < 0 || size < best.second - best.first)) best = {s, part.cell_end[s]};
  }
  return best;
}

Partition individualize(const Graph &g, const Partition &parent, Vertex v, Refiner &refiner,
                        std::vector<int> &trace) {
  Partition part = parent;
  const int s = part.cell_of[v];
  const int e = part.cell_end[s];
  const int p = part.pos[v];
  std::swap(part.lab[s], part.lab[p]);
  part.pos[part.lab[p]] = p;
  part.pos[v] = s;
  part.cell_end[s] = s + 1;
  part.cell_end[s + 1] = e;
  for (int i = s + 1; i < e; ++i) part.cell_of[part.lab[i]] = s + 1;
  ++part.cell_count;
  (void)g;
  refiner.run(part, {s}, trace);
  return part;
}

std::vector<Vertex> sorted_cell(const Partition &part, std::pair<int, int> cell) {
  std::vector<Vertex> out(part.lab.begin() + cell.first, part.lab.begin() + cell.second);
  std::sort(out.begin(), out.end());
  return out;
}

// Automorphism enumeration against a fixed reference path: every
// automorphism carries the reference path to a path with identical traces,
// and the leaf of that path determines it.
class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const Graph &g) : g_(g), refiner_(g) {}

  std::vector<Permutation> run() {
    const int n = g_.vertex_count();
    if (n == 0) return {Permutation::identity(0)};
    std::vector<int> trace;
    Partition node = root_node(g_, refiner_, trace);
    ref_traces_.push_back(trace);
    Partition root = node;
    while (!node.discrete()) {
      const auto cell = target_cell(node);
      ref_targets_.push_back(cell);
      trace.clear();
      node = individualize(g_, node, sorted_cell(node, cell).front(), refiner_, trace);
      ref_traces_.push_back(trace);
    }
    ref_lab_ = node.lab;
    descend(root, 0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void descend(const Partition &node, std::size_t level) {
    if (node.discrete()) {
      std::vector<Vertex> image(node.lab.size());
      for (std::size_t i = 0; i < image.size(); ++i) image[ref_lab_[i]] = node.lab[i];
      Permutation p(std::move(image));
      if (is_automorphism(g_, p)) found_.push_back(std::move(p));
      return;
    }
    const auto cell = ref_targets_[level];
    std::vector<int> trace;
    for (Vertex v : sorted_cell(node, cell)) {
      trace.clear();
      Partition child = individualize(g_, node, v, refiner_, trace);
      if (trace != ref_traces_[level + 1]) continue;
      descend(child, level + 1);
    }
  }

  const Graph &g_;
  Refiner refiner_;
  std::vector<std::vector<int>> ref_traces_;
  std::vector<std::pair<int, int>> ref_targets_;
  std::vector<Vertex> ref_lab_;
  std::vector<Permutation> found_;
};

using TracePath = std::vector<std::vector<int>>;

struct Leaf {
  TracePath traces;
  std::vector<Edge> edges;
  std::vector<Vertex> lab;
};

std::vector<Edge> relabeled_edges(const Graph &g, const std::vector<Vertex> &lab) {
  std::vector<int> pos(lab.size());
  for (std::size_t i = 0; i < lab.size(); ++i) pos[lab[i]] = static_cast<int>(i);
  std::vector<Edge> out;
  out.reserve(g.edge_count());
  for (const Edge &e : g.edges()) out.push_back({std::min(pos[e.u], pos[e.v]), std::max(pos[e.u], pos[e.v])});
  std::sort(out.begin(), out.end());
  return out;
}

// Canonical leaf search with trace pruning and pruning by the orbits of
// automorphisms discovered along the way.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph &g) : g_(g), refiner_(g) {}

  Leaf run() {
    std::vector<int> trace;
    Partition root = root_node(g_, refiner_, trace);
    TracePath path{trace};
    std::vector<Vertex> fixed;
    descend(root, path, fixed);
    return *best_;
  }

 private:
  // -1: path is better than best so far, 0: equal prefix, 1: worse.
  int compare_to_best(const TracePath &path) const {
    if (!best_) return -1;
    const std::size_t m = std::min(path.size(), best_->traces.size());
    for (std::size_t i = 0; i < m; ++i) {
      if (path[i] < best_->traces[i]) return -1;
      if (best_->traces[i] < path[i]) return 1;
    }
    return 0;
  }

  void record_automorphism(const std::vector<Vertex> &from, const std::vector<Vertex> &to) {
    std::vector<Vertex> image(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) image[from[i]] = to[i];
    Permutation p(std::move(image));
    if (!p.is_identity()) generators_.push_back(std::move(p));
  }

  void on_leaf(const Partition &node, const TracePath &path) {
    std::vector<Edge> edges = relabeled_edges(g_, node.lab);
    if (!first_) {
      first_ = Leaf{path, edges, node.lab};
      best_ = first_;
      return;
    }
    if (path == first_->traces && edges == first_->edges) {
      record_automorphism(first_->lab, node.lab);
      return;
    }
    const int cmp = compare_to_best(path);
    if (cmp == 0 && edges == best_->edges) {
      record_automorphism(best_->lab, node.lab);
      return;
    }
    if (cmp < 0 || (cmp == 0 && edges < best_->edges)) best_ = Leaf{path, std::move(edges), node.lab};
  }

  // Orbit representative of v under the generators that fix every
  // individualized vertex on the current path.
  std::vector<int> orbits(const std::vector<Vertex> &fixed) const {
    std::vector<int> parent(g_.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Permutation &p : generators_) {
      bool fixes = true;
      for (Vertex f : fixed) fixes = fixes && p(f) == f;
      if (!fixes) continue;
      for (int x = 0; x < g_.vertex_count(); ++x) {
        const int a = find(x), b = find(p(x));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int x = 0; x < g_.vertex_count(); ++x) parent[x] = find(x);
    return parent;
  }

  void descend(const Partition &node, TracePath &path, std::vector<Vertex> &fixed) {
    if (compare_to_best(path) > 0) return;
    if (node.discrete()) {
      on_leaf(node, path);
      return;
    }
    const auto cell = target_cell(node);
    std::vector<Vertex> explored;
    std::vector<int> trace;
    for (Vertex v : sorted_cell(node, cell)) {
      if (!explored.empty()) {
        const std::vector<int> orbit = orbits(fixed);
        bool redundant = false;
        for (Vertex w : explored) redundant = redundant || orbit[w] == orbit[v];
        if (redundant) continue;
      }
      trace.clear();
      Partition child = individualize(g_, node, v, refiner_, trace);
      path.push_back(trace);
      fixed.push_back(v);
      descend(child, path, fixed);
      fixed.pop_back();
      path.pop_back();
      explored.push_back(v);
    }
  }

  const Graph &g_;
  Refiner refiner_;
  std::optional<Leaf> first_;
  std::optional<Leaf> best_;
  std::vector<Permutation> generators_;
};

// Cheap isomorphism invariants checked before any search.
bool same_invariants(const Graph &g, const Graph &h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  auto degrees = [](const Graph &x) {
    std::vector<int> d(x.vertex_count());
    for (Vertex v = 0; v < x.vertex_count(); ++v) d[v] = x.degree(v);
    std::sort(d.begin(), d.end());
    return d;
  };
  return degrees(g) == degrees(h);
}

}  // namespace

VertexPartition unit_partition(int vertex_count) {
  VertexPartition p;
  if (vertex_count <= 0) return p;
  p.cells.emplace_back(vertex_count);
  std::iota(p.cells.front().begin(), p.cells.front().end(), 0);
  return p;
}

VertexPartition refine(const Graph &g, const VertexPartition &p) {
  Partition part = make_partition(g.vertex_count(), p);
  std::vector<int> starts;
  for (int s = 0; s < g.vertex_count(); s = part.cell_end[s]) starts.push_back(s);
  Refiner refiner(g);
  std::vector<int> trace;
  refiner.run(part, starts, trace);
  return to_public(part);
}

std::vector<Permutation> automorphisms(const Graph &g, const SearchOptions &options) {
  check_bound(g, options);
  return AutomorphismSearch(g).run();
}

std::vector<Permutation> kronecker_involutions(const Graph &g, const SearchOptions &options) {
  check_bound(g, options);
  if (g.vertex_count() == 0 || !is_connected(g) || !bipartition(g)) return {};
  std::vector<Permutation> out;
  for (Permutation &p : automorphisms(g, options)) {
    if (is_kronecker_involution(g, p)) out.push_back(std::move(p));
  }
  return out;
}

CanonicalLabeling canonical_labeling(const Graph &g, const SearchOptions &options) {
  check_bound(g, options);
  const int n = g.vertex_count();
  if (n == 0) return {Permutation::identity(0), g, encode_graph6(g)};
  const Leaf leaf = CanonicalSearch(g).run();
  std::vector<Vertex> image(n);
  for (int i = 0; i < n; ++i) image[leaf.lab[i]] = i;
  Graph canonical = relabel(g, image);
  std::string form = encode_graph6(canonical);
  return {Permutation(std::move(image)), std::move(canonical), std::move(form)};
}

std::string canonical_form(const Graph &g, const SearchOptions &options) {
  return canonical_labeling(g, options).form;
}

bool is_isomorphic(const Graph &g, const Graph &h, const SearchOptions &options) {
  check_bound(g, options);
  check_bound(h, options);
  if (!same_invariants(g, h)) return false;
  return canonical_form(g, options) == canonical_form(h, options);
}

std::optional<Permutation> find_isomorphism(const Graph &g, const Graph &h, const SearchOptions &options) {
  check_bound(g, options);
  check_bound(h, options);
  if (!same_invariants(g, h)) return std::nullopt;
  const CanonicalLabeling cg = canonical_labeling(g, options);
  const CanonicalLabeling ch = canonical_labeling(h, options);
  if (cg.form != ch.form) return std::nullopt;
  return compose(inverse(ch.labeling), cg.labeling);
}

std::vector<Graph> quotients_up_to_iso(const Graph &g, const SearchOptions &options) {
  std::vector<Graph> out;
  std::vector<std::string> forms;
  for (const Permutation &p : kronecker_involutions(g, options)) {
    Graph q = quotient(g, p);
    std::string form = canonical_form(q, options);
    if (std::find(forms.begin(), forms.end(), form) != forms.end()) continue;
    forms.push_back(std::move(form));
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace gpkc
