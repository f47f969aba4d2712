#include "sylow/reference.hpp"

#include <functional>
#include <stdexcept>

namespace sylow::reference {

std::vector<u32> smallest_prime_factors(u64 limit) {
  std::vector<u32> spf(limit + 1, 0);
  for (u64 i = 2; i <= limit; ++i) {
    if (spf[i] != 0) continue;
    for (u64 j = i; j <= limit; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<u32>(i);
    }
  }
  return spf;
}

Factorization factor_with(std::span<const u32> spf, u64 n) {
  Factorization f;
  while (n > 1) {
    const u64 p = spf[n];
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.pairs.push_back({p, e});
  }
  return f;
}

CensusTable census_sylow(u64 q, u64 x) {
  require_odd_prime(q);
  const auto spf = smallest_prime_factors(x);
  CensusTable table(x, q);
  for (u64 n = 1; n <= x; ++n) {
    const Factorization f = factor_with(spf, n);
    table.add(CensusKey{nu(q, n), sylow_signature(q, f)}, 1);
  }
  return table;
}

u64 census_mnc(u64 x) {
  const auto spf = smallest_prime_factors(x);
  const SquarefreeTable sqf = squarefree_sieve(x);
  const std::function<bool(u64)> squarefree = std::cref(sqf);
  u64 count = 0;
  for (u64 n = 1; n <= x; ++n) {
    if (is_maximally_noncyclic(factor_with(spf, n), squarefree)) ++count;
  }
  return count;
}

SquarefreePrimeCount prime_pminus1_squarefree_count(u64 x) {
  SquarefreePrimeCount out{0, 0};
  for (u32 p : primes_up_to(x)) {
    ++out.primes;
    if (is_squarefree_trial(p - 1)) ++out.squarefree_shifted;
  }
  return out;
}

double mertens_sum(u64 q, unsigned alpha, u64 x) {
  require_odd_prime(q);
  if (alpha < 1) throw std::invalid_argument("mertens_sum: alpha must be >= 1");
  double s = 0.0;
  for (u32 p : primes_up_to(x)) {
    if (p > 2 && nu(q, p - 1) == alpha) s += 1.0 / p;
  }
  return s;
}

}  // namespace sylow::reference
