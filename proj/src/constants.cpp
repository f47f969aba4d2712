#include "sylow/constants.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sylow/multgroup.hpp"
#include "sylow/special.hpp"
#include "sylow/summation.hpp"

namespace sylow {

u64 mult_order(u64 p, u64 q) {
  if (q < 2) throw std::invalid_argument("mult_order: modulus must be >= 2");
  const u64 r = p % q;
  if (gcd(r, q) != 1) throw std::invalid_argument("mult_order: p must be a unit mod q");
  u64 k = 1;
  for (u64 y = r; y != 1 % q; y = mulmod(y, r, q)) ++k;
  return k;
}

u64 primitive_root(u64 q) {
  require_odd_prime(q);
  const Factorization f = factor(q - 1);
  for (u64 g = 2; g < q; ++g) {
    bool generates = true;
    for (const auto& pp : f.pairs) {
      if (powmod(g, (q - 1) / pp.p, q) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return g;
  }
  throw std::logic_error("primitive_root: no generator found");
}

DirichletCharacter::DirichletCharacter(u64 q, u64 index) : q_(q), j_(index), g_(0) {
  require_odd_prime(q);
  if (index >= q - 1) throw std::invalid_argument("character index must be in 0..q-2");
  g_ = primitive_root(q);
  dlog_.assign(q, 0);
  u64 y = 1;
  for (u64 k = 0; k < q - 1; ++k) {
    dlog_[y] = k;
    y = mulmod(y, g_, q);
  }
}

std::complex<double> DirichletCharacter::operator()(u64 a) const {
  const u64 r = a % q_;
  if (r == 0) return {0.0, 0.0};
  const u64 phase = (j_ * dlog_[r]) % (q_ - 1);
  const long double angle = 2.0L * std::numbers::pi_v<long double> * phase / (q_ - 1);
  return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

std::vector<DirichletCharacter> nonprincipal_characters(u64 q) {
  std::vector<DirichletCharacter> out;
  for (u64 j = 1; j + 1 < q; ++j) out.emplace_back(q, j);
  return out;
}

ComplexPrecisionValue l_one(const DirichletCharacter& chi) {
  if (chi.is_principal()) throw std::invalid_argument("l_one: L(s, chi_0) has a pole at s = 1");
  const u64 q = chi.modulus();
  long double re = 0.0L;
  long double im = 0.0L;
  long double err = 0.0L;
  long double mag = 0.0L;
  for (u64 a = 1; a < q; ++a) {
    long double e = 0.0L;
    const long double psi = digamma_ext(static_cast<long double>(a) / q, &e);
    const u64 phase = (chi.index() * chi.log_of(a)) % (q - 1);
    const long double angle = 2.0L * std::numbers::pi_v<long double> * phase / (q - 1);
    re += std::cos(angle) * psi;
    im += std::sin(angle) * psi;
    err += e;
    mag += std::fabs(psi);
  }
  const long double scale = -1.0L / q;
  std::complex<double> value(static_cast<double>(re * scale), static_cast<double>(im * scale));
  const double bound = static_cast<double>((err + 8 * mag * LDBL_EPSILON) / q) + std::abs(value) * 0x1p-52;
  return {value, bound};
}

namespace {

void require_cutoff(u64 cutoff) {
  if (cutoff < 100) throw std::invalid_argument("Euler-product cutoff must be at least 100");
}

PrecisionValue from_log(const CompensatedSum& s, double rel_tail) {
  const double v = std::exp(s.value());
  return {v, v * (rel_tail + 1e-15)};
}

}  // namespace

BqFactors b_q_factors(u64 q, u64 cutoff, int threads) {
  require_odd_prime(q);
  require_cutoff(cutoff);
  BqFactors out;
  const double beta = 1.0 / static_cast<double>(q - 1);

  const PrecisionValue g = gamma_real(1.0 - beta);
  out.gamma_factor = {1.0 / g.value, g.err / (g.value * g.value) + 0x1p-52 / g.value};

  const long double local = std::pow(1.0L - 1.0L / q, 1.0L - 1.0L / (q - 1));
  out.local_q = {static_cast<double>(local), static_cast<double>(local) * 0x1p-52};

  std::vector<u64> order(q, 0);
  for (u64 r = 1; r < q; ++r) order[r] = mult_order(r, q);
  const auto base = primes_up_to(isqrt(cutoff));
  const auto partials = prime_chunk_partials<CompensatedSum>(
      cutoff,
      [&](u64 lo, u64 hi, CompensatedSum& acc) {
        for_each_prime(lo, hi, base, [&](u64 p) {
          const u64 r = p % q;
          if (r == 0 || r == 1) return;
          const double k = static_cast<double>(order[r]);
          acc.add(-std::log1p(-std::pow(static_cast<double>(p), -k)) / k);
        });
      },
      threads);
  CompensatedSum log_euler;
  for (const auto& s : partials) log_euler.merge(s);
  // Every omitted prime has k_p >= 2, so the log tail is at most sum_{n>P} n^-2 <= 1/P.
  out.euler_product = from_log(log_euler, std::expm1(1.0 / static_cast<double>(cutoff)));

  std::complex<double> log_l(0.0, 0.0);
  double rel = 0.0;
  for (const auto& chi : nonprincipal_characters(q)) {
    const ComplexPrecisionValue l = l_one(chi);
    log_l += std::log(l.value);
    rel += l.err / std::abs(l.value);
  }
  const double lf = std::exp(-log_l.real() * beta);
  out.l_factor = {lf, lf * (rel * beta + 1e-15)};

  out.total = out.gamma_factor * out.local_q * out.euler_product * out.l_factor;
  return out;
}

PrecisionValue b_q(u64 q, u64 cutoff, int threads) { return b_q_factors(q, cutoff, threads).total; }

PrecisionValue k_constant(u64 q, const Partition& alpha, u64 cutoff, int threads) {
  const Rational ce = c_alpha(alpha) * e_q_alpha(q, alpha);
  return scaled(b_q(q, cutoff, threads), ce.convert_to<double>());
}

namespace {

CompensatedSum artin_log(u64 cutoff, int threads) {
  const auto base = primes_up_to(isqrt(cutoff));
  const auto partials = prime_chunk_partials<CompensatedSum>(
      cutoff,
      [&](u64 lo, u64 hi, CompensatedSum& acc) {
        for_each_prime(lo, hi, base, [&](u64 p) {
          const double pd = static_cast<double>(p);
          acc.add(std::log1p(-1.0 / (pd * (pd - 1.0))));
        });
      },
      threads);
  CompensatedSum total;
  for (const auto& s : partials) total.merge(s);
  return total;
}

struct ALogSums {
  CompensatedSum combined;  // sum of log local factors
  CompensatedSum mertens;   // sum of log(1 - 1/p)
  void merge(const ALogSums& o) {
    combined.merge(o.combined);
    mertens.merge(o.mertens);
  }
};

ALogSums a_log_sums(u64 cutoff, double xi, const SquarefreeTable& sqfree, int threads) {
  ALogSums total;
  if (cutoff < 2) return total;
  if (!sqfree.covers(1) || !sqfree.covers(cutoff - 1)) {
    throw std::invalid_argument("constant_A: squarefree table must cover 1..P");
  }
  const auto base = primes_up_to(isqrt(cutoff));
  const auto partials = prime_chunk_partials<ALogSums>(
      cutoff,
      [&](u64 lo, u64 hi, ALogSums& acc) {
        for_each_prime(lo, hi, base, [&](u64 p) {
          const double pd = static_cast<double>(p);
          const double m = std::log1p(-1.0 / pd);
          double t = xi * m;
          if (sqfree.is_squarefree(p - 1)) t += std::log1p((pd + 1.0) / (pd * pd));
          acc.combined.add(t);
          acc.mertens.add(m);
        });
      },
      threads);
  for (const auto& s : partials) total.merge(s);
  return total;
}

}  // namespace

double artin_xi_partial(u64 cutoff, int threads) { return std::exp(artin_log(cutoff, threads).value()); }

PrecisionValue artin_xi(u64 cutoff, int threads) {
  require_cutoff(cutoff);
  const double v = artin_xi_partial(cutoff, threads);
  // Omitted factors are < 1: the true value lies in [v e^{-2/P}, v].
  return {v, -v * std::expm1(-2.0 / static_cast<double>(cutoff)) + v * 1e-15};
}

double constant_A_partial(u64 cutoff, double xi, const SquarefreeTable& sqfree, int threads) {
  const PrecisionValue g = gamma_real(xi);
  const double prefactor = 15.0 / (14.0 * g.value);
  return prefactor * std::exp(a_log_sums(cutoff, xi, sqfree, threads).combined.value());
}

PrecisionValue constant_A(u64 cutoff, const SquarefreeTable& sqfree, int threads) {
  require_cutoff(cutoff);
  const PrecisionValue xi = artin_xi(cutoff, threads);
  const PrecisionValue g = gamma_real(xi.value);
  const double prefactor = 15.0 / (14.0 * g.value);

  const ALogSums sums = a_log_sums(cutoff, xi.value, sqfree, threads);
  const double value = prefactor * std::exp(sums.combined.value());
  const double a10 = constant_A_partial(cutoff / 10, xi.value, sqfree, threads);
  const double a100 = constant_A_partial(cutoff / 100, xi.value, sqfree, threads);
  const double heuristic = std::max(std::fabs(value - a10), std::fabs(a10 - a100));

  // d log A / d xi = -psi(xi) + sum_{p<=P} log(1 - 1/p).
  const double dlog_dxi = -digamma(xi.value).value + sums.mertens.value();
  const double rigorous = value * (std::fabs(dlog_dxi) * xi.err + g.err / g.value + 1e-14);
  return {value, rigorous + heuristic, heuristic};
}

double h_gamma(double gamma, double z) {
  if (!(gamma > 0) || !std::isfinite(gamma) || gamma == std::floor(gamma)) {
    throw std::domain_error("h_gamma: gamma must be a positive non-integer");
  }
  if (!(z >= 0.0 && z < 1.0)) throw std::domain_error("h_gamma: z must lie in [0, 1)");
  if (z == 0.0) return 0.0;
  const double stop = 1e-14 * (1.0 - z);
  CompensatedSum sum;
  double zn = 1.0;
  for (std::uint64_t n = 1;; ++n) {
    zn *= z;
    sum.add(gamma / (static_cast<double>(n) - gamma) * zn);
    const double next = gamma / (static_cast<double>(n + 1) - gamma) * zn * z;
    if (static_cast<double>(n + 1) > gamma && std::fabs(next) < stop) break;
  }
  return -sum.value();
}

}  // namespace sylow
