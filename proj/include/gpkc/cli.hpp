// Copyright 2026 The gpkc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GPKC_CLI_HPP_
#define GPKC_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace gpkc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs the gpkc command line. args excludes the program name. Machine
/// readable output goes to out, diagnostics and usage to err. The optional
/// environment variable GPKC_MAX_VERTICES overrides the search bound.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace gpkc

#endif  // GPKC_CLI_HPP_
