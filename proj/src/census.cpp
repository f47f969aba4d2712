#include "sylow/census.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "sylow/summation.hpp"

namespace sylow {

void CensusConfig::validate() const {
  if (x < 1 || x > kMaxCensusLimit) throw std::invalid_argument("census limit x must be in [1, 10^9]");
  require_odd_prime(q);
  if (segment_size < 2) throw std::invalid_argument("segment_size must be at least 2");
}

void CensusTable::add(const CensusKey& key, u64 count) {
  if (count != 0) counts_[key] += count;
}

CensusTable& CensusTable::operator+=(const CensusTable& other) {
  if (q_ == 0) q_ = other.q_;
  if (other.q_ != 0 && other.q_ != q_) throw std::invalid_argument("cannot merge census tables for different q");
  x_ = std::max(x_, other.x_);
  for (const auto& [key, c] : other.counts_) counts_[key] += c;
  return *this;
}

u64 CensusTable::count_D(const Partition& h) const {
  u64 total = 0;
  for (const auto& [key, c] : counts_) {
    if (key.signature == h) total += c;
  }
  return total;
}

u64 CensusTable::count_Dk(unsigned k, const Partition& h) const {
  auto it = counts_.find(CensusKey{k, h});
  return it == counts_.end() ? 0 : it->second;
}

u64 CensusTable::total() const {
  u64 t = 0;
  for (const auto& [key, c] : counts_) t += c;
  return t;
}

namespace {

// A signature is packed as 3-bit multiplicities of the part values 1..19,
// with nu_q(n) in the top bits.  For n <= 10^9 and odd q every part value is
// at most 18 and every multiplicity at most 6.
constexpr unsigned kFieldBits = 3;
constexpr unsigned kMaxPartValue = 19;
constexpr unsigned kValuationShift = kFieldBits * kMaxPartValue;

inline u64 part_field(unsigned v) { return u64{1} << (kFieldBits * (v - 1)); }

inline unsigned nu_fast(u64 q, u64 m) {
  unsigned v = 0;
  while (m % q == 0) {
    m /= q;
    ++v;
  }
  return v;
}

CensusKey decode_key(u64 key) {
  CensusKey out;
  out.k = static_cast<unsigned>(key >> kValuationShift);
  std::vector<int> parts;
  for (unsigned v = 1; v <= kMaxPartValue; ++v) {
    const unsigned mult = (key >> (kFieldBits * (v - 1))) & ((1u << kFieldBits) - 1);
    parts.insert(parts.end(), mult, static_cast<int>(v));
  }
  out.signature = Partition(std::move(parts));
  return out;
}

struct Piece {
  u64 lo;  // inclusive
  u64 hi;  // exclusive
  std::size_t tag;
};

std::vector<Piece> split_pieces(std::span<const u64> xs, u64 segment_size) {
  std::vector<Piece> pieces;
  u64 prev = 1;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0 && xs[i] <= xs[i - 1]) throw std::invalid_argument("census limits must be strictly increasing");
    if (xs[i] < 1 || xs[i] > kMaxCensusLimit) throw std::invalid_argument("census limit x must be in [1, 10^9]");
    for (u64 lo = prev; lo <= xs[i]; lo += segment_size) {
      pieces.push_back({lo, std::min(xs[i] + 1, lo + segment_size), i});
    }
    prev = xs[i] + 1;
  }
  return pieces;
}

using Histogram = std::unordered_map<u64, u64>;

struct SylowWorkspace {
  explicit SylowWorkspace(u64 size) : prod(size), code(size), val(size) {}
  std::vector<u32> prod;
  std::vector<u64> code;
  std::vector<unsigned char> val;
};

void sylow_segment(const Piece& seg, u64 q, std::span<const u32> base, std::span<const unsigned char> base_nu,
                   SylowWorkspace& ws, Histogram& hist) {
  const u64 lo = seg.lo;
  const u64 hi = seg.hi;
  const u64 width = hi - lo;
  const u64 last = hi - 1;
  std::fill_n(ws.prod.begin(), width, 1u);
  std::fill_n(ws.code.begin(), width, 0);
  std::fill_n(ws.val.begin(), width, 0);

  for (std::size_t j = 0; j < base.size(); ++j) {
    const u64 p = base[j];
    if (p * p > last) break;
    const u64 field = base_nu[j] != 0 ? part_field(base_nu[j]) : 0;
    const bool is_q = p == q;
    for (u64 m = (lo + p - 1) / p * p; m < hi; m += p) {
      const u64 i = m - lo;
      ws.prod[i] *= static_cast<u32>(p);
      ws.code[i] += field;
      if (is_q) ws.val[i] = 1;
    }
    for (u64 pk = p * p; pk <= last; pk *= p) {
      for (u64 m = (lo + pk - 1) / pk * pk; m < hi; m += pk) {
        const u64 i = m - lo;
        ws.prod[i] *= static_cast<u32>(p);
        if (is_q) ++ws.val[i];
      }
    }
  }

  for (u64 i = 0; i < width; ++i) {
    const u64 n = lo + i;
    u64 code = ws.code[i];
    unsigned k = ws.val[i];
    const u64 cof = n / ws.prod[i];
    if (cof > 1) {
      if (cof == q) {
        k = 1;
      } else {
        const unsigned v = nu_fast(q, cof - 1);
        if (v != 0) code += part_field(v);
      }
    }
    if (k >= 2) code += part_field(k - 1);
    ++hist[code | (static_cast<u64>(k) << kValuationShift)];
  }
}

int resolve_threads(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

}  // namespace

std::vector<CensusTable> census_sylow_at(const CensusConfig& cfg, std::span<const u64> xs) {
  CensusConfig probe = cfg;
  probe.x = 1;
  probe.validate();
  if (xs.empty()) return {};
  const std::vector<Piece> pieces = split_pieces(xs, cfg.segment_size);
  const auto base = primes_up_to(isqrt(xs.back()));
  std::vector<unsigned char> base_nu(base.size());
  for (std::size_t j = 0; j < base.size(); ++j) {
    base_nu[j] = base[j] == cfg.q ? 0 : static_cast<unsigned char>(nu_fast(cfg.q, base[j] - 1));
  }

  std::vector<Histogram> piece_hist(pieces.size());
  const u64 workspace = std::min<u64>(cfg.segment_size, xs.back());
#pragma omp parallel num_threads(resolve_threads(cfg.threads))
  {
    SylowWorkspace ws(workspace);
#pragma omp for schedule(dynamic, 1)
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      sylow_segment(pieces[i], cfg.q, base, base_nu, ws, piece_hist[i]);
    }
  }

  std::vector<CensusTable> tables;
  tables.reserve(xs.size());
  std::map<u64, u64> running;
  std::size_t next = 0;
  for (std::size_t t = 0; t < xs.size(); ++t) {
    for (; next < pieces.size() && pieces[next].tag == t; ++next) {
      for (const auto& [key, c] : piece_hist[next]) running[key] += c;
    }
    CensusTable table(xs[t], cfg.q);
    for (const auto& [key, c] : running) table.add(decode_key(key), c);
    tables.push_back(std::move(table));
  }
  return tables;
}

CensusTable census_sylow(const CensusConfig& cfg) {
  cfg.validate();
  const u64 xs[] = {cfg.x};
  return std::move(census_sylow_at(cfg, xs).front());
}

namespace {

struct MncWorkspace {
  explicit MncWorkspace(u64 size) : prod(size), ok(size) {}
  std::vector<u32> prod;
  std::vector<unsigned char> ok;
};

u64 mnc_segment(const Piece& seg, std::span<const u32> base, std::span<const unsigned char> base_bad,
                const SquarefreeTable& sqf, MncWorkspace& ws) {
  const u64 lo = seg.lo;
  const u64 hi = seg.hi;
  const u64 width = hi - lo;
  const u64 last = hi - 1;
  std::fill_n(ws.prod.begin(), width, 1u);
  std::fill_n(ws.ok.begin(), width, 1);

  for (std::size_t j = 0; j < base.size(); ++j) {
    const u64 p = base[j];
    if (p * p > last) break;
    const unsigned char keep = base_bad[j] ? 0 : 1;
    for (u64 m = (lo + p - 1) / p * p; m < hi; m += p) {
      const u64 i = m - lo;
      ws.prod[i] *= static_cast<u32>(p);
      ws.ok[i] &= keep;
    }
    // Exponent cap: 3 for p = 2, 2 for odd p.
    const unsigned max_exp = p == 2 ? 3 : 2;
    unsigned e = 2;
    for (u64 pk = p * p; pk <= last; pk *= p, ++e) {
      const bool fatal = e > max_exp;
      for (u64 m = (lo + pk - 1) / pk * pk; m < hi; m += pk) {
        const u64 i = m - lo;
        if (fatal) {
          ws.ok[i] = 0;
        } else {
          ws.prod[i] *= static_cast<u32>(p);
        }
      }
      if (fatal) break;
    }
  }

  // The one possible prime factor above sqrt(n) can be anywhere below n, so
  // its p - 1 is looked up in the table for the whole range.
  u64 count = 0;
  for (u64 i = 0; i < width; ++i) {
    if (!ws.ok[i]) continue;
    const u64 cof = (lo + i) / ws.prod[i];
    if (cof > 1 && !sqf.is_squarefree(cof - 1)) continue;
    ++count;
  }
  return count;
}

}  // namespace

std::vector<u64> census_mnc_at(std::span<const u64> xs, u64 segment_size, int threads) {
  if (segment_size < 2) throw std::invalid_argument("segment_size must be at least 2");
  if (xs.empty()) return {};
  const std::vector<Piece> pieces = split_pieces(xs, segment_size);
  const auto base = primes_up_to(isqrt(xs.back()));
  std::vector<unsigned char> base_bad(base.size());
  for (std::size_t j = 0; j < base.size(); ++j) base_bad[j] = is_squarefree_trial(base[j] - 1) ? 0 : 1;

  const SquarefreeTable sqf(1, xs.back(), base);

  std::vector<u64> piece_count(pieces.size());
  const u64 workspace = std::min<u64>(segment_size, xs.back());
#pragma omp parallel num_threads(resolve_threads(threads))
  {
    MncWorkspace ws(workspace);
#pragma omp for schedule(dynamic, 1)
    for (std::size_t i = 0; i < pieces.size(); ++i) piece_count[i] = mnc_segment(pieces[i], base, base_bad, sqf, ws);
  }

  std::vector<u64> out(xs.size(), 0);
  for (std::size_t i = 0; i < pieces.size(); ++i) out[pieces[i].tag] += piece_count[i];
  for (std::size_t t = 1; t < out.size(); ++t) out[t] += out[t - 1];
  return out;
}

u64 census_mnc(u64 x, u64 segment_size, int threads) {
  const u64 xs[] = {x};
  return census_mnc_at(xs, segment_size, threads).front();
}

SquarefreePrimeCount prime_pminus1_squarefree_count(u64 x, int threads) {
  if (x < 2) throw std::invalid_argument("prime_pminus1_squarefree_count: x must be >= 2");
  const auto base = primes_up_to(isqrt(x));
  auto partials = prime_chunk_partials<SquarefreePrimeCount>(
      x,
      [&](u64 lo, u64 hi, SquarefreePrimeCount& acc) {
        const SquarefreeTable sqf(lo - 1, hi - 1, base);
        for_each_prime(lo, hi, base, [&](u64 p) {
          ++acc.primes;
          if (sqf.is_squarefree(p - 1)) ++acc.squarefree_shifted;
        });
      },
      threads);
  SquarefreePrimeCount total{0, 0};
  for (const auto& c : partials) {
    total.primes += c.primes;
    total.squarefree_shifted += c.squarefree_shifted;
  }
  return total;
}

double mertens_sum(u64 q, unsigned alpha, u64 x, int threads) {
  require_odd_prime(q);
  if (alpha < 1) throw std::invalid_argument("mertens_sum: alpha must be >= 1");
  if (x < 2) return 0.0;
  // Primes with q^alpha | p-1 satisfy p > q^alpha.
  u64 qa = 1;
  for (unsigned i = 0; i < alpha; ++i) {
    if (qa > x / q) return 0.0;
    qa *= q;
  }
  const auto base = primes_up_to(isqrt(x));
  auto partials = prime_chunk_partials<CompensatedSum>(
      x,
      [&](u64 lo, u64 hi, CompensatedSum& acc) {
        for_each_prime(lo, hi, base, [&](u64 p) {
          const u64 m = p - 1;
          if (m % qa == 0 && (m / qa) % q != 0) acc.add(1.0 / static_cast<double>(p));
        });
      },
      threads);
  CompensatedSum total;
  for (const auto& s : partials) total.merge(s);
  return total.value();
}

std::string to_csv(const CensusTable& table) {
  std::ostringstream out;
  out << "x,q,k,signature,count\n";
  for (const auto& [key, c] : table.counts()) {
    out << table.x() << ',' << table.q() << ',' << key.k << ",\"" << to_string(key.signature) << "\"," << c
        << '\n';
  }
  return out.str();
}

std::string to_json(const CensusTable& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& [key, c] : table.counts()) {
    rows.push_back({{"x", table.x()},
                    {"q", table.q()},
                    {"k", key.k},
                    {"signature", to_string(key.signature)},
                    {"count", c}});
  }
  return rows.dump(2) + "\n";
}

}  // namespace sylow
