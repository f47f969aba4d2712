#include "sylow/sieve.hpp"

#include <algorithm>
#include <stdexcept>

namespace sylow {

std::vector<u32> primes_up_to(u64 limit) {
  std::vector<u32> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<u32>(i));
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

void for_each_prime(u64 lo, u64 hi, std::span<const u32> base, const std::function<void(u64)>& fn) {
  if (hi < 2 || lo > hi) return;
  lo = std::max<u64>(lo, 2);
  if (lo == 2) {
    fn(2);
    lo = 3;
  }
  if (lo > hi) return;

  // Odd-only window: slot i represents the odd number first + 2i.
  constexpr u64 kBlock = u64{1} << 18;
  std::vector<unsigned char> composite(kBlock);
  u64 first = lo | 1;
  while (first <= hi) {
    const u64 last = std::min(hi | 1, first + 2 * (kBlock - 1));
    const u64 slots = (last - first) / 2 + 1;
    std::fill(composite.begin(), composite.begin() + static_cast<std::ptrdiff_t>(slots), 0);
    for (u32 p32 : base) {
      const u64 p = p32;
      if (p == 2) continue;
      if (p * p > last) break;
      u64 start = std::max(p * p, (first + p - 1) / p * p);
      if ((start & 1) == 0) start += p;
      for (u64 m = start; m <= last; m += 2 * p) composite[(m - first) / 2] = 1;
    }
    for (u64 i = 0; i < slots; ++i) {
      const u64 m = first + 2 * i;
      if (m > hi) break;
      if (!composite[i] && m >= 3) fn(m);
    }
    first = last + 2;
  }
}

SquarefreeTable::SquarefreeTable(u64 lo, u64 hi, std::span<const u32> base) : lo_(lo), hi_(hi) {
  if (hi < lo) {
    hi_ = lo_ - 1;
    return;
  }
  const u64 width = hi - lo + 1;
  bits_.assign((width + 63) / 64, ~std::uint64_t{0});
  if (lo == 0) bits_[0] &= ~std::uint64_t{1};
  for (u32 p32 : base) {
    const u64 sq = static_cast<u64>(p32) * p32;
    if (sq > hi) break;
    u64 m = (lo + sq - 1) / sq * sq;
    if (m == 0) m = sq;
    for (; m <= hi; m += sq) {
      const u64 i = m - lo;
      bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
  }
}

bool SquarefreeTable::is_squarefree(u64 m) const {
  if (!covers(m)) throw std::out_of_range("SquarefreeTable: value outside the sieved window");
  const u64 i = m - lo_;
  return (bits_[i >> 6] >> (i & 63)) & 1;
}

SquarefreeTable squarefree_sieve(u64 limit) {
  const auto base = primes_up_to(isqrt(limit));
  return SquarefreeTable(1, limit, base);
}

void sieve_factorizations(u64 limit, u64 segment_size,
                          const std::function<void(u64, const Factorization&)>& fn) {
  if (limit < 1) throw std::invalid_argument("sieve_factorizations: limit must be >= 1");
  if (segment_size < 2) throw std::invalid_argument("sieve_factorizations: segment_size must be >= 2");
  const auto base = primes_up_to(isqrt(limit));

  std::vector<u64> cofactor(segment_size);
  std::vector<Factorization> facts(segment_size);
  for (u64 lo = 1; lo <= limit; lo += segment_size) {
    const u64 hi = std::min(limit, lo + segment_size - 1);
    const u64 width = hi - lo + 1;
    for (u64 i = 0; i < width; ++i) {
      cofactor[i] = lo + i;
      facts[i].pairs.clear();
    }
    for (u32 p32 : base) {
      const u64 p = p32;
      if (p * p > hi) break;
      for (u64 m = (lo + p - 1) / p * p; m <= hi; m += p) {
        const u64 i = m - lo;
        unsigned e = 0;
        while (cofactor[i] % p == 0) {
          cofactor[i] /= p;
          ++e;
        }
        facts[i].pairs.push_back({p, e});
      }
    }
    for (u64 i = 0; i < width; ++i) {
      if (cofactor[i] > 1) facts[i].pairs.push_back({cofactor[i], 1});
      fn(lo + i, facts[i]);
    }
  }
}

}  // namespace sylow
