#pragma once

#include <omp.h>

#include <algorithm>

namespace sylow {

template <class Acc, class Body>
std::vector<Acc> prime_chunk_partials(u64 limit, Body body, int threads) {
  if (limit < 2) return {};
  const u64 chunks = (limit - 2) / kPrimeChunk + 1;
  std::vector<Acc> out(chunks);
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
  for (u64 c = 0; c < chunks; ++c) {
    const u64 lo = 2 + c * kPrimeChunk;
    const u64 hi = std::min(limit, lo + kPrimeChunk - 1);
    body(lo, hi, out[c]);
  }
  return out;
}

}  // namespace sylow
