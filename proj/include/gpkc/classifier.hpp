// Copyright 2026 The gpkc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GPKC_CLASSIFIER_HPP_
#define GPKC_CLASSIFIER_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gpkc/families.hpp"
#include "gpkc/permutation.hpp"

namespace gpkc {

/// Largest e with 2^e | i. Throws DomainError for i <= 0.
int two_adic(long long i);

/// (k^2 - 1) / n when n divides k^2 - 1.
std::optional<long long> q_value(long long n, long long k);

/// n / gcd(n, k+1): smallest shift a making alpha^a gamma an involution.
long long a_min(long long n, long long k);
/// n / gcd(n, n-k+1): same for alpha^a beta gamma.
long long a_min_prime(long long n, long long k);

/// alpha^a gamma (plain, acting as i -> ki + a on rim indices) or
/// alpha^a beta gamma (reflected, i -> a - ki).
enum class RimSwitch { kPlain, kReflected };

/// Decides by index arithmetic alone whether the rim-switching map with
/// shift a is a Kronecker involution of GP(n,k): n even, k odd, k^2 = 1,
/// the map is an involution, a is even and no spoke is fixed.
bool rim_switch_is_kronecker(long long n, long long k, long long a, RimSwitch type);

struct NecessaryConditions {
  bool c1 = false;  // the shift 2a does not give a Kronecker involution
  bool c2 = false;  // a is an odd multiple of the minimal shift
  bool c3 = false;  // the minimal shift is even
  bool c4 = false;  // Q is even
  bool c5 = false;  // k = 1 (plain) or k = 3 (reflected) mod 4

  bool all() const { return c1 && c2 && c3 && c4 && c5; }
};

/// Evaluates the five necessary conditions for shift a. Throws DomainError
/// unless k^2 = 1 (mod n).
NecessaryConditions necessary_conditions(long long n, long long k, long long a, RimSwitch type);

enum class CaseTag { kNotBipartite, kNoCover, kA1, kA2, kB1, kB2, kExceptional10_3, kExceptional8_3 };

/// "NotBipartite", "NoCover", "A1", ..., "Exceptional_10_3", "Exceptional_8_3".
std::string_view tag_name(CaseTag tag);

/// The graph H (see h_graph()).
struct NamedH {
  bool operator==(const NamedH &) const = default;
};
/// Placeholder the classifier uses when it defers to the search oracle.
struct OracleDetermined {
  bool operator==(const OracleDetermined &) const = default;
};

/// C+(n,k) or C-(n,k).
struct LcfQuotient {
  enum class Sign { kPlus, kMinus };
  Sign sign;
  GpParams source;
  LcfSpec spec;

  bool operator==(const LcfQuotient &) const = default;
};

using QuotientDescriptor = std::variant<GpParams, LcfQuotient, NamedH, OracleDetermined>;

/// "GP(9,4)", "C+(12,5)", "C-(24,7)", "H", "oracle".
std::string describe(const QuotientDescriptor &q);
/// Builds the described graph; throws DomainError for OracleDetermined.
Graph materialize(const QuotientDescriptor &q);

/// The extra Desargues symmetry (see delta_10_3()).
struct DeltaMarker {
  bool operator==(const DeltaMarker &) const = default;
};

using InvolutionDescriptor = std::variant<CanonicalTriple, DeltaMarker, OracleDetermined>;

/// Word notation ("α⁶γ", "Δ") or its ASCII fallback ("a^6*g", "D").
std::string render(const InvolutionDescriptor &w, bool ascii = false);
/// Permutation of GP(n,k); throws DomainError for OracleDetermined.
Permutation materialize(const GpParams &p, const InvolutionDescriptor &w);

enum class CoverClaim { kYes, kNo, kDeferred };

struct Classification {
  GpParams params;
  CaseTag tag;
  CoverClaim cover;
  /// One descriptor per quotient isomorphism class.
  std::vector<QuotientDescriptor> quotients;
  /// Canonical involution for each quotient, same order.
  std::vector<InvolutionDescriptor> involutions;
};

/// Closed-form decision of whether GP(n,k) is a Kronecker cover and of what.
Classification classify(const GpParams &p);

/// One-line rendering, e.g. "B1: quotient C+(12,5), involution α⁶γ".
std::string summary(const Classification &c, bool ascii = false);

/// All Kronecker involutions alpha^a gamma (B1) or alpha^a beta gamma (B2):
/// a = s * minimal shift for odd s, ascending in a. Throws DomainError when
/// GP(n,k) is not in case B1 or B2.
std::vector<CanonicalTriple> involution_family(const GpParams &p);

/// Quotient by the family member with shift a as a jump sequence on the
/// outer rim: i(k-1) + a (B1) or a - i(k+1) (B2). Throws DomainError when a
/// is not a family shift.
LcfSpec quotient_lcf(const GpParams &p, long long a);

struct SymmetryClass {
  bool symmetric = false;
  bool vertex_transitive = false;
  bool cayley = false;
};

/// The seven arc-transitive pairs (4,1), (5,2), (8,3), (10,2), (10,3), (12,5), (24,5).
bool is_symmetric_pair(int n, int k);

SymmetryClass symmetry_class(const GpParams &p);

}  // namespace gpkc

#endif  // GPKC_CLASSIFIER_HPP_
