// Copyright 2026 The gpkc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GPKC_TESTS_TABLE1_HPP_
#define GPKC_TESTS_TABLE1_HPP_

#include <string>
#include <vector>

#include "gpkc/census.hpp"

namespace gpkc::testing {

/// Minimal RFC 4180 reader: quoted fields, doubled quotes, LF or CRLF.
std::vector<std::vector<std::string>> parse_csv(const std::string &text);

std::string read_file(const std::string &path);

/// One row of the published table of small covers.
struct PublishedRow {
  int n = 0;
  int k = 0;
  std::string case_code;   // a1, a2, b1, b2 or exceptional
  std::string involution;  // ASCII words joined by ';' (D for Delta)
  std::string quotient;    // descriptors joined by ';'
};

std::vector<PublishedRow> read_published_table(const std::string &path);

/// Builds a graph from "GP(n,k)", "C+(n,k)", "C-(n,k)", "H" or "g6:...".
Graph graph_from_descriptor(const std::string &descriptor);

/// Permutation of GP(n,k) from an ASCII word or "D".
Permutation involution_from_word(int n, int k, const std::string &word);

struct ComparisonLine {
  bool passed = false;
  std::string text;
};

/// Compares an oracle census (ASCII words) against the published rows:
/// case, quotient up to isomorphism, and an involution from the stated
/// family, with the single allowed deviation at (8,3). Census cover rows
/// missing from the table must be isomorphic to a listed graph.
std::vector<ComparisonLine> compare_with_published(const std::vector<PublishedRow> &published,
                                                   const std::vector<CensusRow> &census_rows);

}  // namespace gpkc::testing

#endif  // GPKC_TESTS_TABLE1_HPP_
