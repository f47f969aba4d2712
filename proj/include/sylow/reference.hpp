#pragma once

// Serial reference kernels.  Each factors n one at a time from a
// smallest-prime-factor table and applies the per-n definitions directly;
// they exist to cross-check the segmented parallel kernels in census.hpp.

#include "sylow/census.hpp"

namespace sylow::reference {

/// Smallest-prime-factor table for 0..limit (entries 0 and 1 are 0).
std::vector<u32> smallest_prime_factors(u64 limit);

Factorization factor_with(std::span<const u32> spf, u64 n);

CensusTable census_sylow(u64 q, u64 x);
u64 census_mnc(u64 x);
SquarefreePrimeCount prime_pminus1_squarefree_count(u64 x);
double mertens_sum(u64 q, unsigned alpha, u64 x);

}  // namespace sylow::reference
