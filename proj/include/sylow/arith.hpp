#pragma once

// Small integer helpers shared by every module.

#include <cstdint>
#include <stdexcept>

namespace sylow {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

inline u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Floor of the square root, exact for all 64-bit inputs.
u64 isqrt(u64 n);

/// Deterministic primality for 64-bit integers (Miller-Rabin with a fixed base set).
bool is_prime(u64 n);

/// Exponent of the prime q in x.  Throws std::invalid_argument when x == 0.
unsigned nu(u64 q, u64 x);

inline void require_odd_prime(u64 q) {
  if (q == 2) throw std::invalid_argument("q = 2 is excluded; q must be an odd prime");
  if (!is_prime(q)) throw std::invalid_argument("q must be an odd prime");
}

}  // namespace sylow
