#include "sylow/multgroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace sylow {

u64 Factorization::value() const {
  u64 n = 1;
  for (const auto& [p, e] : pairs) {
    for (unsigned i = 0; i < e; ++i) n *= p;
  }
  return n;
}

unsigned Factorization::exponent_of(u64 p) const {
  for (const auto& pp : pairs) {
    if (pp.p == p) return pp.e;
  }
  return 0;
}

void Factorization::validate() const {
  u64 prev = 1;
  for (const auto& [p, e] : pairs) {
    if (!is_prime(p)) throw std::invalid_argument("factorization contains a non-prime");
    if (p <= prev) throw std::invalid_argument("factorization primes must be strictly increasing");
    if (e == 0) throw std::invalid_argument("factorization exponents must be positive");
    prev = p;
  }
}

Factorization factor(u64 n) {
  if (n == 0) throw std::invalid_argument("factor: n must be positive");
  Factorization f;
  auto take = [&](u64 p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e != 0) f.pairs.push_back({p, e});
  };
  take(2);
  for (u64 p = 3; p * p <= n; p += 2) take(p);
  if (n > 1) f.pairs.push_back({n, 1});
  return f;
}

u64 euler_phi(const Factorization& f) {
  u64 phi = 1;
  for (const auto& [p, e] : f.pairs) {
    phi *= p - 1;
    for (unsigned i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

GroupSignature sylow_signature(u64 q, const Factorization& f) {
  require_odd_prime(q);
  std::vector<int> parts;
  for (const auto& [p, e] : f.pairs) {
    if (p == q) {
      if (e >= 2) parts.push_back(static_cast<int>(e) - 1);
      continue;
    }
    const unsigned v = nu(q, p - 1);
    if (v >= 1) parts.push_back(static_cast<int>(v));
  }
  return Partition(std::move(parts));
}

GroupSignature sylow_signature_oracle(u64 q, u64 n, u64 cap) {
  require_odd_prime(q);
  if (n == 0) throw std::invalid_argument("oracle: n must be positive");
  if (n > cap) throw std::invalid_argument("oracle: n exceeds the configured cap");
  if (n >= (u64{1} << 32)) throw std::invalid_argument("oracle: n must be below 2^32");
  if (n == 1) return {};

  // Units mod n, found without reference to the factorization of n.
  std::vector<u64> power;
  power.reserve(n);
  for (u64 x = 1; x < n; ++x) {
    if (gcd(x, n) == 1) power.push_back(x);
  }

  // cap keeps n < 2^32, so products of residues fit in 64 bits.
  auto pow_q = [q, n](u64 y) {
    u64 r = 1;
    u64 b = y;
    for (u64 e = q; e != 0; e >>= 1) {
      if (e & 1) r = r * b % n;
      b = b * b % n;
    }
    return r;
  };

  std::vector<int> conj;
  u64 prev_count = 1;
  for (;;) {
    u64 count = 0;
    for (u64& y : power) {
      y = pow_q(y);
      if (y == 1) ++count;
    }
    if (count == prev_count) break;
    u64 ratio = count / prev_count;
    int step = 0;
    while (ratio % q == 0) {
      ratio /= q;
      ++step;
    }
    if (ratio != 1 || count % prev_count != 0) {
      throw std::logic_error("oracle: q-torsion count is not a power of q");
    }
    conj.push_back(step);
    prev_count = count;
  }
  return conjugate(Partition(std::move(conj)));
}

std::vector<u64> invariant_factors(std::span<const u64> primary) {
  std::map<u64, std::vector<u64>> by_prime;
  for (u64 m : primary) {
    if (m < 2) throw std::invalid_argument("invariant_factors: entries must be prime powers >= 2");
    const Factorization f = factor(m);
    if (f.pairs.size() != 1) throw std::invalid_argument("invariant_factors: entry is not a prime power");
    by_prime[f.pairs[0].p].push_back(m);
  }
  std::size_t len = 0;
  for (auto& [p, powers] : by_prime) {
    std::sort(powers.begin(), powers.end(), std::greater<>());
    len = std::max(len, powers.size());
  }
  // d_len is the product of the largest power of each prime, d_{len-1} the
  // next largest, and so on.
  std::vector<u64> d(len, 1);
  for (const auto& [p, powers] : by_prime) {
    for (std::size_t i = 0; i < powers.size(); ++i) d[len - 1 - i] *= powers[i];
  }
  return d;
}

std::vector<u64> primary_decomposition(const Factorization& f) {
  std::vector<u64> out;
  auto push_cyclic = [&](u64 order) {
    for (const auto& [p, e] : factor(order).pairs) {
      u64 pe = 1;
      for (unsigned i = 0; i < e; ++i) pe *= p;
      out.push_back(pe);
    }
  };
  for (const auto& [p, r] : f.pairs) {
    if (p == 2) {
      if (r == 2) out.push_back(2);
      if (r == 3) out.insert(out.end(), {2, 2});
      if (r >= 4) {
        out.push_back(2);
        out.push_back(u64{1} << (r - 2));
      }
      continue;
    }
    if (r >= 2) {
      u64 pr = 1;
      for (unsigned i = 1; i < r; ++i) pr *= p;
      out.push_back(pr);
    }
    if (p > 2) push_cyclic(p - 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_maximally_noncyclic(const Factorization& f, const std::function<bool(u64)>& squarefree) {
  for (const auto& [p, e] : f.pairs) {
    if (p == 2 && e >= 4) return false;
    if (p != 2 && e >= 3) return false;
    if (!squarefree(p - 1)) return false;
  }
  return true;
}

bool is_squarefree_trial(u64 m) {
  if (m == 0) return false;
  for (const auto& pp : factor(m).pairs) {
    if (pp.e >= 2) return false;
  }
  return true;
}

}  // namespace sylow
