// Copyright 2026 The gpkc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GPKC_CENSUS_HPP_
#define GPKC_CENSUS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "gpkc/classifier.hpp"
#include "gpkc/search.hpp"

namespace gpkc {

struct CensusOptions {
  bool with_oracle = false;
  /// Include rows for non-bipartite GP(n,k).
  bool verbose = false;
  /// Render involutions as "a^6*g" instead of "α⁶γ".
  bool ascii = false;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  SearchOptions search;
};

struct CensusRow {
  int n = 0;
  int k = 0;
  CaseTag tag = CaseTag::kNoCover;
  /// Quotient descriptors joined by ';': "GP(9,3)", "C+(12,5)", "H",
  /// "g6:<graph6>" when the oracle decides, "none" without a cover.
  std::string quotient;
  /// Involution words joined by ';', "none" without a cover.
  std::string involution;
  /// Absent when the oracle was not run.
  std::optional<bool> oracle_cover;
  std::optional<int> oracle_classes;
  std::optional<bool> agree;
  std::string notes;

  bool operator==(const CensusRow &) const = default;
};

/// One row per (n,k) with n_min <= n <= n_max, 1 <= k < n/2, ordered by n
/// then k. Rows are computed on worker threads and merged by key, so the
/// result does not depend on scheduling. Throws SearchBoundError when the
/// oracle is requested for graphs above the search bound.
std::vector<CensusRow> census(int n_min, int n_max, const CensusOptions &options = {});

/// Computes a single row; census() is this applied to every key.
CensusRow census_row(const GpParams &p, const CensusOptions &options = {});

/// Header line "n,k,case,involution,quotient,oracle_cover,oracle_classes,agree,notes"
/// followed by one line per row; fields quoted when they contain a comma,
/// quote or line break.
std::string to_csv(const std::vector<CensusRow> &rows);
/// Array of objects with the CSV column names as keys; oracle fields are
/// null when the oracle was not run.
std::string to_json(const std::vector<CensusRow> &rows);

/// Search-backed description of GP(n,k) when the closed form defers.
struct OracleVerdict {
  std::vector<Permutation> involutions;
  /// Canonical graph6 of each quotient class, in order of first occurrence.
  std::vector<std::string> quotient_forms;
};

OracleVerdict oracle_verdict(const GpParams &p, const SearchOptions &options = {});

/// Evidence about GP(8,3) explaining why the listed cover (involution
/// alpha^4 beta gamma, quotient C-(8,3)) does not exist.
std::string exceptional_8_3_note(bool ascii = false, const SearchOptions &options = {});

struct VerifyCheck {
  std::string name;
  bool passed = false;
  /// graph6 payloads and values reproducing a failure; empty on success.
  std::string evidence;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  /// Documented deviations that do not count as failures.
  std::vector<std::string> warnings;

  bool all_passed() const;
  std::size_t failures() const;
};

/// Cross-checks the classifier against the oracle for every (n,k) with
/// 3 <= n <= n_max: cover existence, number of quotient classes, quotient
/// isomorphism types, the classifier's involutions, and the round trip
/// KC(quotient) = GP(n,k). Also checks the exceptional and Cayley cases.
/// Failures are data; only bound violations throw. Requires n_max <= 60.
VerifyReport verify(int n_max, const CensusOptions &options = {});

/// Plain-text rendering: one "PASS name" / "FAIL name: evidence" line per
/// check, then "WARN ..." lines and a summary.
std::string render(const VerifyReport &report);

}  // namespace gpkc

#endif  // GPKC_CENSUS_HPP_
