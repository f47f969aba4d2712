#pragma once

// Exact histograms of Sylow q-subgroup signatures of Z_n^x over n <= x, the
// maximally-non-cyclic count, and prime sums used by the empirical checks.
//
// The kernels here sieve independent segments under OpenMP.  Integer
// histograms merge by addition, and floating sums are reduced in a fixed
// chunk order, so every result is independent of the number of threads.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sylow/arith.hpp"
#include "sylow/partition.hpp"
#include "sylow/sieve.hpp"

namespace sylow {

inline constexpr u64 kMaxCensusLimit = 1'000'000'000;

struct CensusConfig {
  u64 x = 1;
  u64 q = 3;
  u64 segment_size = kDefaultSegmentSize;
  u64 oracle_cap = kDefaultOracleCap;
  int threads = 0;  ///< 0 = OpenMP default

  /// Throws std::invalid_argument on x outside [1, 10^9], q not an odd prime, or segment_size < 2.
  void validate() const;
};

struct CensusKey {
  unsigned k = 0;            ///< nu_q(n)
  Partition signature;       ///< alpha with G_q(n) = Z_{q^alpha}
  friend auto operator<=>(const CensusKey&, const CensusKey&) = default;
  friend bool operator==(const CensusKey&, const CensusKey&) = default;
};

class CensusTable {
 public:
  CensusTable() = default;
  CensusTable(u64 x, u64 q) : x_(x), q_(q) {}

  u64 x() const { return x_; }
  u64 q() const { return q_; }
  const std::map<CensusKey, u64>& counts() const { return counts_; }

  void add(const CensusKey& key, u64 count);
  /// Pointwise sum; the result keeps the larger x.  Throws on mismatched q.
  CensusTable& operator+=(const CensusTable& other);

  /// D(H, x) = sum_k D_k(H, x).
  u64 count_D(const Partition& h) const;
  /// D_k(H, x).
  u64 count_Dk(unsigned k, const Partition& h) const;
  u64 total() const;

  friend bool operator==(const CensusTable&, const CensusTable&) = default;

 private:
  u64 x_ = 0;
  u64 q_ = 0;
  std::map<CensusKey, u64> counts_;
};

CensusTable census_sylow(const CensusConfig& cfg);

/// One table per limit in xs (strictly increasing, each <= 10^9) from a
/// single sieve pass; cfg.x is ignored.
std::vector<CensusTable> census_sylow_at(const CensusConfig& cfg, std::span<const u64> xs);

/// #{n <= x : Z_n^x maximally non-cyclic}.
u64 census_mnc(u64 x, u64 segment_size = kDefaultSegmentSize, int threads = 0);
std::vector<u64> census_mnc_at(std::span<const u64> xs, u64 segment_size = kDefaultSegmentSize,
                               int threads = 0);

struct SquarefreePrimeCount {
  u64 squarefree_shifted;  ///< #{p <= x : p-1 squarefree}
  u64 primes;              ///< pi(x)
  friend bool operator==(const SquarefreePrimeCount&, const SquarefreePrimeCount&) = default;
};

SquarefreePrimeCount prime_pminus1_squarefree_count(u64 x, int threads = 0);

/// sum of 1/p over primes p <= x with nu_q(p-1) = alpha, compensated.
double mertens_sum(u64 q, unsigned alpha, u64 x, int threads = 0);

/// CSV: header "x,q,k,signature,count", rows sorted by (k, signature).
std::string to_csv(const CensusTable& table);
/// JSON array of row objects with the CSV fields.
std::string to_json(const CensusTable& table);

}  // namespace sylow
