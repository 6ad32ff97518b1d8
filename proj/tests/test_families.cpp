// Copyright 2026 The gpkc Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <set>

#include "gpkc/covers.hpp"
#include "gpkc/dot.hpp"
#include "gpkc/families.hpp"
#include "gpkc/search.hpp"
#include "support/naive.hpp"

using namespace gpkc;

namespace {

int line_count_containing(const std::string &text, const std::string &needle) {
  int count = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    const std::string line = text.substr(start, end - start);
    if (line.find(needle) != std::string::npos) ++count;
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return count;
}

}  // namespace

TEST_SUITE("dot") {
  TEST_CASE("edge and node lines") {
    CHECK(line_count_containing(to_dot(complete_graph(2)), "--") == 1);
    const GpParams p(4, 1);
    const std::string text = to_dot(gp(p), gp_labels(p));
    CHECK(line_count_containing(text, "[label=") == 8);
    CHECK(line_count_containing(text, "--") == 12);
    CHECK(text.find("label=\"u0\"") != std::string::npos);
    CHECK(text.find("label=\"v3\"") != std::string::npos);
  }

  TEST_CASE("empty graph") { CHECK(to_dot(Graph(0, {})) == "graph \"G\" {\n}\n"); }

  TEST_CASE("label count mismatch") {
    CHECK_THROWS_AS(to_dot(complete_graph(3), std::vector<std::string>{"a"}), DomainError);
  }

  TEST_CASE("deterministic") {
    const Graph g = gp(GpParams(7, 2));
    CHECK(to_dot(g) == to_dot(g));
    CHECK(to_dot(path_graph(2), std::nullopt, "p") == "graph \"p\" {\n  0;\n  1;\n  0 -- 1;\n}\n");
  }
}

TEST_SUITE("families") {
  TEST_CASE("GpParams validation") {
    CHECK_THROWS_AS(GpParams(4, 2), DomainError);
    CHECK_THROWS_AS(GpParams(2, 1), DomainError);
    CHECK_THROWS_AS(GpParams(7, 0), DomainError);
    CHECK_THROWS_AS(GpParams(7, 4), DomainError);
    CHECK_NOTHROW(GpParams(7, 3));
  }

  TEST_CASE("gp structure") {
    for (int n = 3; n <= 30; ++n) {
      for (int k = 1; 2 * k < n; ++k) {
        const Graph g = gp(GpParams(n, k));
        CHECK(g.vertex_count() == 2 * n);
        CHECK(g.edge_count() == static_cast<std::size_t>(3 * n));
        CHECK(g.is_regular(3));
      }
    }
    const Graph petersen = gp(GpParams(5, 2));
    CHECK(petersen.vertex_count() == 10);
    CHECK(girth(petersen) == 5);
  }

  TEST_CASE("labeling") {
    const Graph g = gp(GpParams(7, 2));
    CHECK(g.has_edge(outer_vertex(7, 0), outer_vertex(7, 1)));
    CHECK(g.has_edge(outer_vertex(7, 6), outer_vertex(7, 0)));
    CHECK(g.has_edge(inner_vertex(7, 0), inner_vertex(7, 2)));
    CHECK(g.has_edge(inner_vertex(7, 6), inner_vertex(7, 1)));
    CHECK(g.has_edge(3, 10));
    CHECK(inner_vertex(7, -1) == 13);
    const auto labels = gp_labels(GpParams(3, 1));
    CHECK(labels == std::vector<std::string>{"u0", "u1", "u2", "v0", "v1", "v2"});
  }

  TEST_CASE("edge classes partition the edges") {
    for (int n = 3; n <= 24; ++n) {
      for (int k = 1; 2 * k < n; ++k) {
        const GpParams p(n, k);
        const EdgeClasses c = edge_classes(p);
        CHECK(c.outer.size() == static_cast<std::size_t>(n));
        CHECK(c.inner.size() == static_cast<std::size_t>(n));
        CHECK(c.spokes.size() == static_cast<std::size_t>(n));
        std::set<Edge> all(c.outer.begin(), c.outer.end());
        all.insert(c.inner.begin(), c.inner.end());
        all.insert(c.spokes.begin(), c.spokes.end());
        const Graph g = gp(p);
        CHECK(all == std::set<Edge>(g.edges().begin(), g.edges().end()));
      }
    }
  }

  TEST_CASE("inner rim cycles") {
    auto inner_graph = [](const GpParams &p) {
      const EdgeClasses c = edge_classes(p);
      std::vector<std::pair<Vertex, Vertex>> pairs;
      for (const Edge &e : c.inner) pairs.emplace_back(e.u - p.n(), e.v - p.n());
      return Graph(p.n(), pairs);
    };
    const Graph two_triangles = inner_graph(GpParams(6, 2));
    CHECK(connected_components(two_triangles).size() == 2);
    CHECK(girth(two_triangles) == 3);
    CHECK(inner_graph(GpParams(5, 2)) == Graph(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}}));
  }

  TEST_CASE("lcf examples") {
    CHECK(lcf(LcfSpec(4, {2, 2, 2, 2})) == complete_graph(4));
    const Graph m8 = lcf(LcfSpec(8, std::vector<long long>(8, 4)));
    CHECK(m8 == mobius_ladder(8));
    CHECK(m8.is_regular(3));
    CHECK(m8.edge_count() == 12);
    CHECK_THROWS_AS(lcf(LcfSpec(6, {3, 1, 3, 1, 3, 1})), DomainError);
    CHECK_THROWS_AS(lcf(LcfSpec(6, {3, 3, 3, 3, 3, 0})), DomainError);
    CHECK_THROWS_AS(lcf(LcfSpec(6, {2, 2, 2, 2, 2, 2})), DomainError);  // matching violation
    CHECK_THROWS_AS(LcfSpec(6, {3, 3}), DomainError);
    CHECK_THROWS_AS(LcfSpec(2, {1, 1}), DomainError);
    CHECK(LcfSpec(6, {-3, 9, 3, 3, 3, 3}).jumps == std::vector<int>(6, 3));
    CHECK(LcfSpec(4, {2, 2, 2, 2}).to_string() == "[2,2,2,2]");
  }

  TEST_CASE("c_plus and c_minus") {
    CHECK(c_plus(GpParams(4, 1)).jumps == std::vector<int>{2, 2, 2, 2});
    CHECK(lcf(c_plus(GpParams(4, 1))) == complete_graph(4));
    CHECK(c_plus(GpParams(12, 5)).jumps == std::vector<int>{6, 10, 2, 6, 10, 2, 6, 10, 2, 6, 10, 2});
    const LcfSpec minus = c_minus(GpParams(8, 3));
    CHECK(minus.jumps == std::vector<int>{4, 0, 4, 0, 4, 0, 4, 0});
    CHECK_THROWS_AS(lcf(minus), DomainError);
    CHECK_THROWS_AS(c_plus(GpParams(7, 2)), DomainError);
    CHECK_THROWS_AS(c_minus(GpParams(9, 2)), DomainError);
    CHECK(c_minus(GpParams(24, 7)).jumps.front() == 12);
    CHECK(c_minus(GpParams(24, 7)).jumps[1] == 4);
  }

  TEST_CASE("c_plus(n,1) is the Moebius ladder for n = 0 mod 4") {
    for (int n = 4; n <= 40; n += 4) CHECK(lcf(c_plus(GpParams(n, 1))) == mobius_ladder(n));
  }

  TEST_CASE("lcf output is cubic") {
    for (int n = 4; n <= 40; n += 4) {
      for (int k = 1; 2 * k < n; k += 2) {
        const LcfSpec spec = c_plus(GpParams(n, k));
        Graph g;
        try {
          g = lcf(spec);
        } catch (const DomainError &) {
          continue;
        }
        CHECK(g.vertex_count() == n);
        CHECK(g.is_regular(3));
        CHECK(g.edge_count() == static_cast<std::size_t>(3 * n / 2));
      }
    }
  }

  TEST_CASE("graph H") {
    const Graph h = h_graph();
    CHECK(h.vertex_count() == 10);
    CHECK(h.edge_count() == 15);
    CHECK(h.is_regular(3));
    CHECK(is_isomorphic(kronecker_cover(h), gp(GpParams(10, 3))));
    CHECK(testing::naive_isomorphic(kronecker_cover(h), gp(GpParams(10, 3))));
    CHECK_FALSE(is_isomorphic(h, gp(GpParams(5, 2))));
    CHECK_FALSE(testing::naive_isomorphic(h, gp(GpParams(5, 2))));
  }

  TEST_CASE("prism drawing of the Desargues graph") {
    const Graph d = desargues_prism_drawing();
    CHECK(d.vertex_count() == 20);
    CHECK(d.is_regular(3));
    CHECK(testing::naive_isomorphic(d, gp(GpParams(10, 3))));
  }

  TEST_CASE("small graphs") {
    CHECK(star_graph(3).degree(0) == 3);
    CHECK(cycle_graph(5).is_regular(2));
    CHECK(path_graph(1).edge_count() == 0);
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK_THROWS_AS(mobius_ladder(7), DomainError);
    CHECK(is_isomorphic(mobius_ladder(6), Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}})) ==
          false);
    CHECK(is_isomorphic(mobius_ladder(6), Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}})));
  }
}
