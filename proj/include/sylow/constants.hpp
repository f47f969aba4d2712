#pragma once

// Leading constants of the counting functions: B_q, K(Z_{q^alpha}), Artin's
// constant xi and the maximally-non-cyclic constant A, with the Dirichlet
// L-values and the series H_gamma they depend on.
//
// Euler products are summed in log space over primes in fixed chunks and
// reduced in chunk order (see sieve.hpp), so values do not depend on the
// thread count.

#include <complex>
#include <cstdint>
#include <vector>

#include "sylow/arith.hpp"
#include "sylow/partition.hpp"
#include "sylow/precision.hpp"
#include "sylow/sieve.hpp"

namespace sylow {

/// Smallest g >= 2 of multiplicative order q-1 modulo the odd prime q.
u64 primitive_root(u64 q);

/// Least k >= 1 with p^k = 1 (mod q).  Throws std::invalid_argument when q | p.
u64 mult_order(u64 p, u64 q);

/// The character of index j mod the odd prime q: chi(g^k) = exp(2 pi i j k / (q-1)).
class DirichletCharacter {
 public:
  DirichletCharacter(u64 q, u64 index);

  u64 modulus() const { return q_; }
  u64 index() const { return j_; }
  u64 generator() const { return g_; }
  bool is_principal() const { return j_ == 0; }
  DirichletCharacter conjugate() const { return DirichletCharacter(q_, (q_ - 1 - j_) % (q_ - 1)); }

  /// chi(a); zero when q | a.
  std::complex<double> operator()(u64 a) const;
  /// Discrete log of a (mod q) to base generator(); a must be a unit.
  u64 log_of(u64 a) const { return dlog_[a % q_]; }

 private:
  u64 q_;
  u64 j_;
  u64 g_;
  std::vector<u64> dlog_;
};

/// Every nonprincipal character mod q, indices 1..q-2.
std::vector<DirichletCharacter> nonprincipal_characters(u64 q);

/// L(1, chi) = -(1/q) sum_{a=1}^{q-1} chi(a) psi(a/q).  Throws for the principal character.
ComplexPrecisionValue l_one(const DirichletCharacter& chi);

inline constexpr u64 kDefaultBqCutoff = 10'000'000;

struct BqFactors {
  PrecisionValue gamma_factor;   ///< 1/Gamma(1 - 1/(q-1))
  PrecisionValue local_q;        ///< (1 - 1/q)^{1 - 1/(q-1)}
  PrecisionValue euler_product;  ///< prod_{p <= P, p != q, p != 1 mod q} (1 - p^{-k_p})^{-1/k_p}, tail in err
  PrecisionValue l_factor;       ///< prod_{chi != chi_0} L(1,chi)^{-1/(q-1)}
  PrecisionValue total;
};

/// B_q with every factor exposed.  Requires P >= 100; rejects q = 2.
BqFactors b_q_factors(u64 q, u64 cutoff, int threads = 0);
PrecisionValue b_q(u64 q, u64 cutoff, int threads = 0);

/// K(Z_{q^alpha}) = B_q C(alpha) E_q(alpha).
PrecisionValue k_constant(u64 q, const Partition& alpha, u64 cutoff = kDefaultBqCutoff, int threads = 0);

/// prod_{p <= P} (1 - 1/(p(p-1))) without any tail allowance.
double artin_xi_partial(u64 cutoff, int threads = 0);

/// Artin's constant with the tail |sum_{p>P} log(1 - 1/(p(p-1)))| <= 2/P folded into err.  P >= 100.
PrecisionValue artin_xi(u64 cutoff, int threads = 0);

/// 15/(14 Gamma(xi)) prod_{p <= P} (1 + (p+1) mu^2(p-1)/p^2)(1 - 1/p)^xi for a given xi.
double constant_A_partial(u64 cutoff, double xi, const SquarefreeTable& sqfree, int threads = 0);

/// A at cutoff P (>= 100); sqfree must cover 1..P.  The err combines a
/// rigorous rounding/xi-propagation bound with a heuristic tail estimate
/// equal to the larger of the changes over the last two decades of cutoff.
PrecisionValue constant_A(u64 cutoff, const SquarefreeTable& sqfree, int threads = 0);

/// H_gamma(z) = -sum_{n>=1} gamma/(n-gamma) z^n for 0 <= z < 1, gamma > 0 non-integer.
double h_gamma(double gamma, double z);

}  // namespace sylow
