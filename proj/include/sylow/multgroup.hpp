#pragma once

// Structure of the unit group (Z/nZ)^x from the factorization of n.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "sylow/arith.hpp"
#include "sylow/partition.hpp"

namespace sylow {

struct PrimePower {
  u64 p;
  unsigned e;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes; empty for n = 1.
struct Factorization {
  std::vector<PrimePower> pairs;

  u64 value() const;
  unsigned exponent_of(u64 p) const;
  /// Throws std::invalid_argument unless primes are prime, increasing, exponents >= 1.
  void validate() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Trial division; intended for small n and for p - 1 style side computations.
Factorization factor(u64 n);

u64 euler_phi(const Factorization& f);

/// Partition alpha with Sylow q-subgroup of Z_n^x isomorphic to Z_{q^alpha}.
using GroupSignature = Partition;

/// Signature from the factorization: nu_q(p-1) for each p != q with q | p-1,
/// plus k-1 when q^k || n with k >= 2.  Throws for even or composite q.
GroupSignature sylow_signature(u64 q, const Factorization& f);

inline constexpr u64 kDefaultOracleCap = 1'000'000;

/// Element-order census: N_i = #{x in Z_n^x : x^{q^i} = 1} = q^{a_1+...+a_i},
/// iterated until N_i stabilizes; returns conjugate(a).  Theta(n) work per level.
GroupSignature sylow_signature_oracle(u64 q, u64 n, u64 cap = kDefaultOracleCap);

/// Invariant factors d_1 | d_2 | ... | d_l of a product of cyclic groups of
/// prime-power order.  Throws on an entry that is not a prime power >= 2.
std::vector<u64> invariant_factors(std::span<const u64> primary);

/// Orders of the primary cyclic factors of Z_n^x, built from the explicit
/// shapes of Z_{2^r}^x and Z_{p^r}^x.  Sorted ascending.
std::vector<u64> primary_decomposition(const Factorization& f);

/// 2^4 does not divide n, p^3 does not divide n for odd p, and p-1 is
/// squarefree for every p | n.
bool is_maximally_noncyclic(const Factorization& f, const std::function<bool(u64)>& squarefree);

/// Trial-division squarefree test.
bool is_squarefree_trial(u64 m);

}  // namespace sylow
