// Copyright 2026 The gpkc Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "gpkc/families.hpp"
#include "gpkc/graph6.hpp"
#include "support/naive.hpp"

using namespace gpkc;

// Reference strings produced by an independent graph6 writer.
TEST_SUITE("graph6") {
  TEST_CASE("known encodings") {
    CHECK(encode_graph6(complete_graph(4)) == "C~");
    CHECK(encode_graph6(Graph(1, {})) == "@");
    CHECK(encode_graph6(Graph(0, {})) == "?");
    CHECK(encode_graph6(cycle_graph(4)) == "Cl");
    CHECK(encode_graph6(gp(GpParams(5, 2))) == "IheA@GUAo");
  }

  TEST_CASE("long header form") {
    const std::string p64 =
        "~?@?hCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G???????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????_?????????G?????????@";
    CHECK(encode_graph6(path_graph(64)) == p64);
    CHECK(decode_graph6(p64) == path_graph(64));
    const Graph big = path_graph(200);
    CHECK(decode_graph6(encode_graph6(big)) == big);
  }

  TEST_CASE("decode accepts the optional prefix") {
    CHECK(decode_graph6(">>graph6<<C~") == complete_graph(4));
  }

  TEST_CASE("decode errors") {
    CHECK_THROWS_AS(decode_graph6(""), DomainError);
    CHECK_THROWS_AS(decode_graph6("C"), DomainError);      // truncated field
    CHECK_THROWS_AS(decode_graph6("C~~"), DomainError);    // trailing bytes
    CHECK_THROWS_AS(decode_graph6("C\x7f"), DomainError);  // byte out of range
    CHECK_THROWS_AS(decode_graph6("A@"), DomainError);     // nonzero padding
    CHECK_THROWS_AS(decode_graph6("~?"), DomainError);     // truncated header
    CHECK_THROWS_AS(decode_graph6("~???"), DomainError);   // non-minimal header
    CHECK_THROWS_AS(decode_graph6("~~??????"), DomainError);
  }

  TEST_CASE("round trip on random graphs") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
      const Graph g = testing::random_graph(rng, trial % 70, 0.2);
      CHECK(decode_graph6(encode_graph6(g)) == g);
    }
  }
}
