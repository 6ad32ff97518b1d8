// Copyright 2026 The gpkc Authors
// SPDX-License-Identifier: Apache-2.0

#include "gpkc/classifier.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

namespace gpkc {
namespace {

long long mod(long long a, long long n) { return ((a % n) + n) % n; }

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string params_text(const GpParams &p) {
  return "(" + std::to_string(p.n()) + "," + std::to_string(p.k()) + ")";
}

}  // namespace

int two_adic(long long i) {
  if (i <= 0) throw DomainError("two_adic requires a positive integer");
  int e = 0;
  while (i % 2 == 0) {
    i /= 2;
    ++e;
  }
  return e;
}

std::optional<long long> q_value(long long n, long long k) {
  const long long numerator = k * k - 1;
  if (n <= 0 || numerator % n != 0) return std::nullopt;
  return numerator / n;
}

long long a_min(long long n, long long k) { return n / std::gcd(n, k + 1); }

long long a_min_prime(long long n, long long k) { return n / std::gcd(n, n - k + 1); }

bool rim_switch_is_kronecker(long long n, long long k, long long a, RimSwitch type) {
  if (n % 2 != 0 || k % 2 == 0) return false;
  if (mod(k * k, n) != 1) return false;
  a = mod(a, n);
  if (a % 2 != 0) return false;
  if (type == RimSwitch::kPlain) {
    // i -> ki + a squares to the identity iff (k+1)a = 0; it fixes spoke i
    // iff (k-1)i + a = 0 has a solution.
    if (mod((k + 1) * a, n) != 0) return false;
    return a % std::gcd(mod(k - 1, n), n) != 0;
  }
  if (mod((1 - k) * a, n) != 0) return false;
  return a % std::gcd(mod(k + 1, n), n) != 0;
}

NecessaryConditions necessary_conditions(long long n, long long k, long long a, RimSwitch type) {
  const auto q = q_value(n, k);
  if (!q) throw DomainError("necessary_conditions requires k^2 = 1 (mod n)");
  a = mod(a, n);
  const long long shift = type == RimSwitch::kPlain ? a_min(n, k) : a_min_prime(n, k);
  NecessaryConditions c;
  c.c1 = !rim_switch_is_kronecker(n, k, 2 * a, type);
  c.c2 = a % shift == 0 && (a / shift) % 2 == 1;
  c.c3 = shift % 2 == 0;
  c.c4 = *q % 2 == 0;
  c.c5 = mod(k, 4) == (type == RimSwitch::kPlain ? 1 : 3);
  return c;
}

std::string_view tag_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::kNotBipartite: return "NotBipartite";
    case CaseTag::kNoCover: return "NoCover";
    case CaseTag::kA1: return "A1";
    case CaseTag::kA2: return "A2";
    case CaseTag::kB1: return "B1";
    case CaseTag::kB2: return "B2";
    case CaseTag::kExceptional10_3: return "Exceptional_10_3";
    case CaseTag::kExceptional8_3: return "Exceptional_8_3";
  }
  return "?";
}

std::string describe(const QuotientDescriptor &q) {
  return std::visit(Overloaded{
                        [](const GpParams &p) { return "GP" + params_text(p); },
                        [](const LcfQuotient &c) {
                          return std::string(c.sign == LcfQuotient::Sign::kPlus ? "C+" : "C-") +
                                 params_text(c.source);
                        },
                        [](const NamedH &) { return std::string("H"); },
                        [](const OracleDetermined &) { return std::string("oracle"); },
                    },
                    q);
}

Graph materialize(const QuotientDescriptor &q) {
  return std::visit(Overloaded{
                        [](const GpParams &p) { return gp(p); },
                        [](const LcfQuotient &c) { return lcf(c.spec); },
                        [](const NamedH &) { return h_graph(); },
                        [](const OracleDetermined &) -> Graph {
                          throw DomainError("quotient is determined by search, not by formula");
                        },
                    },
                    q);
}

std::string render(const InvolutionDescriptor &w, bool ascii) {
  return std::visit(Overloaded{
                        [ascii](const CanonicalTriple &t) { return render_triple(t, ascii); },
                        [ascii](const DeltaMarker &) { return std::string(ascii ? "D" : "Δ"); },
                        [](const OracleDetermined &) { return std::string("oracle"); },
                    },
                    w);
}

Permutation materialize(const GpParams &p, const InvolutionDescriptor &w) {
  return std::visit(Overloaded{
                        [&p](const CanonicalTriple &t) { return from_triple(p.n(), p.k(), t); },
                        [&p](const DeltaMarker &) {
                          if (p != GpParams(10, 3)) throw DomainError("Δ is only defined on GP(10,3)");
                          return delta_10_3();
                        },
                        [](const OracleDetermined &) -> Permutation {
                          throw DomainError("involution is determined by search, not by formula");
                        },
                    },
                    w);
}

Classification classify(const GpParams &p) {
  const long long n = p.n(), k = p.k();
  Classification c{p, CaseTag::kNoCover, CoverClaim::kNo, {}, {}};

  if (n % 2 != 0 || k % 2 == 0) {
    c.tag = CaseTag::kNotBipartite;
    return c;
  }
  if (n == 10 && k == 3) {
    c.tag = CaseTag::kExceptional10_3;
    c.cover = CoverClaim::kYes;
    c.quotients = {GpParams(5, 2), NamedH{}};
    c.involutions = {CanonicalTriple{5, 0, 0}, DeltaMarker{}};
    return c;
  }
  if (n == 8 && k == 3) {
    c.tag = CaseTag::kExceptional8_3;
    c.cover = CoverClaim::kDeferred;
    c.quotients = {OracleDetermined{}};
    c.involutions = {OracleDetermined{}};
    return c;
  }
  const int half = static_cast<int>(n / 2);
  if (n % 4 == 2) {
    c.cover = CoverClaim::kYes;
    if (4 * k < n) {
      c.tag = CaseTag::kA1;
      c.quotients = {GpParams(half, static_cast<int>(k))};
    } else {
      c.tag = CaseTag::kA2;
      c.quotients = {GpParams(half, static_cast<int>(half - k))};
    }
    c.involutions = {CanonicalTriple{half, 0, 0}};
    return c;
  }

  // n = 0 (mod 4), k odd. Both forms of the divisibility condition are
  // evaluated; they must agree.
  const bool halves_divisible = ((k * k - 1) / 2) % n == 0;
  const auto q = q_value(n, k);
  const bool q_even = q && *q % 2 == 0;
  if (halves_divisible != q_even) {
    throw std::logic_error("case b conditions disagree for GP" + params_text(p));
  }
  if (!halves_divisible) return c;

  c.cover = CoverClaim::kYes;
  if (k % 4 == 1) {
    c.tag = CaseTag::kB1;
    c.quotients = {LcfQuotient{LcfQuotient::Sign::kPlus, p, c_plus(p)}};
    c.involutions = {CanonicalTriple{half, 0, 1}};
  } else {
    c.tag = CaseTag::kB2;
    c.quotients = {LcfQuotient{LcfQuotient::Sign::kMinus, p, c_minus(p)}};
    c.involutions = {CanonicalTriple{half, 1, 1}};
  }
  return c;
}

std::string summary(const Classification &c, bool ascii) {
  std::string out(tag_name(c.tag));
  if (c.cover == CoverClaim::kNo) return out + ": not a Kronecker cover";
  if (c.cover == CoverClaim::kDeferred) return out + ": cover existence determined by search";
  auto join = [](const std::vector<std::string> &parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
    return s;
  };
  std::vector<std::string> quotients, involutions;
  for (const auto &q : c.quotients) quotients.push_back(describe(q));
  for (const auto &w : c.involutions) involutions.push_back(render(w, ascii));
  const bool many = quotients.size() > 1;
  return out + (many ? ": quotients " : ": quotient ") + join(quotients) + (many ? ", involutions " : ", involution ") +
         join(involutions);
}

std::vector<CanonicalTriple> involution_family(const GpParams &p) {
  const Classification c = classify(p);
  if (c.tag != CaseTag::kB1 && c.tag != CaseTag::kB2) {
    throw DomainError("involution_family: GP" + params_text(p) + " is in case " + std::string(tag_name(c.tag)) +
                      ", not B1 or B2");
  }
  const bool plain = c.tag == CaseTag::kB1;
  const long long shift = plain ? a_min(p.n(), p.k()) : a_min_prime(p.n(), p.k());
  std::vector<CanonicalTriple> family;
  for (long long a = shift; a < p.n(); a += 2 * shift) {
    family.push_back({static_cast<int>(a), plain ? 0 : 1, 1});
  }
  return family;
}

LcfSpec quotient_lcf(const GpParams &p, long long a) {
  const auto family = involution_family(p);
  a = mod(a, p.n());
  bool member = false;
  for (const auto &t : family) member = member || t.a == a;
  if (!member) {
    throw DomainError("quotient_lcf: a=" + std::to_string(a) + " is not a Kronecker shift of GP" + params_text(p));
  }
  const bool plain = family.front().b == 0;
  std::vector<long long> jumps(p.n());
  for (long long i = 0; i < p.n(); ++i) jumps[i] = plain ? i * p.k() + a - i : a - i * p.k() - i;
  return LcfSpec(p.n(), jumps);
}

bool is_symmetric_pair(int n, int k) {
  static constexpr std::array<std::pair<int, int>, 7> kPairs = {
      {{4, 1}, {5, 2}, {8, 3}, {10, 2}, {10, 3}, {12, 5}, {24, 5}}};
  for (auto [pn, pk] : kPairs) {
    if (pn == n && pk == k) return true;
  }
  return false;
}

SymmetryClass symmetry_class(const GpParams &p) {
  const GammaKind kind = gamma_kind(p.n(), p.k());
  SymmetryClass s;
  s.symmetric = is_symmetric_pair(p.n(), p.k());
  s.vertex_transitive = kind != GammaKind::kNone || (p.n() == 10 && p.k() == 2);
  s.cayley = kind == GammaKind::kSquareIsOne;
  return s;
}

}  // namespace gpkc
