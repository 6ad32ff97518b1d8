// Copyright 2026 The gpkc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GPKC_ERROR_HPP_
#define GPKC_ERROR_HPP_

#include <stdexcept>

namespace gpkc {

/// Raised when an input violates a documented precondition (bad parameters,
/// malformed encodings, invalid permutations). The CLI maps it to exit code 1.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace gpkc

#endif  // GPKC_ERROR_HPP_
