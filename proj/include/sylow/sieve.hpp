#pragma once

// Prime enumeration, squarefree bitmaps and the segmented factorization stream.
//
// Parallel prime passes split [2, limit] into fixed-width chunks that do not
// depend on the worker count, and callers reduce chunk results in chunk
// order, so floating-point reductions are bit-identical for any thread count.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "sylow/arith.hpp"
#include "sylow/multgroup.hpp"

namespace sylow {

/// All primes <= limit (plain Eratosthenes; intended for limit <= ~10^8).
std::vector<u32> primes_up_to(u64 limit);

/// Calls fn(p) for every prime lo <= p <= hi in increasing order.  base must
/// contain every prime <= isqrt(hi).
void for_each_prime(u64 lo, u64 hi, std::span<const u32> base, const std::function<void(u64)>& fn);

inline constexpr u64 kPrimeChunk = u64{1} << 23;

/// Splits [2, limit] into kPrimeChunk-wide pieces and computes one
/// accumulator per piece in parallel: body(lo, hi, acc) fills acc for primes
/// in [lo, hi].  The returned vector is in increasing chunk order.
template <class Acc, class Body>
std::vector<Acc> prime_chunk_partials(u64 limit, Body body, int threads = 0);

/// Bitmap over the window [lo, hi]; bit m set iff m is squarefree.  0 is not squarefree.
class SquarefreeTable {
 public:
  SquarefreeTable() = default;
  SquarefreeTable(u64 lo, u64 hi, std::span<const u32> base);

  u64 lo() const { return lo_; }
  u64 hi() const { return hi_; }
  bool covers(u64 m) const { return m >= lo_ && m <= hi_; }
  /// Throws std::out_of_range outside the window.
  bool is_squarefree(u64 m) const;
  bool operator()(u64 m) const { return is_squarefree(m); }

 private:
  u64 lo_ = 1;
  u64 hi_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Squarefree flags for 1..limit.
SquarefreeTable squarefree_sieve(u64 limit);

inline constexpr u64 kDefaultSegmentSize = u64{1} << 22;

/// Streams (n, factorization of n) for n = 1..limit in increasing order,
/// sieving segment_size integers at a time.
void sieve_factorizations(u64 limit, u64 segment_size,
                          const std::function<void(u64, const Factorization&)>& fn);

}  // namespace sylow

#include "sylow/detail/sieve_impl.hpp"
