#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "sylow/constants.hpp"
#include "sylow/special.hpp"

using namespace sylow;

namespace {

const double kPi = std::numbers::pi;
const double kL3 = kPi / (3.0 * std::sqrt(3.0));

// Partial sums of sum chi(n)/n averaged over one full period past N.
std::complex<long double> dirichlet_series(const DirichletCharacter& chi, u64 n_max) {
  const u64 q = chi.modulus();
  std::complex<long double> s = 0;
  std::complex<long double> avg = 0;
  for (u64 n = 1; n <= n_max + q; ++n) {
    const std::complex<double> c = chi(n);
    s += std::complex<long double>(c.real(), c.imag()) / static_cast<long double>(n);
    if (n > n_max) avg += s;
  }
  return avg / static_cast<long double>(q);
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("primitive roots and orders") {
  CHECK(primitive_root(3) == 2);
  CHECK(primitive_root(7) == 3);
  CHECK(primitive_root(5) == 2);
  CHECK(primitive_root(23) == 5);
  CHECK(mult_order(2, 7) == 3);
  CHECK(mult_order(3, 5) == 4);
  CHECK(mult_order(11, 5) == 1);
  CHECK_THROWS_AS(mult_order(10, 5), std::invalid_argument);
}

TEST_CASE("character orthogonality and multiplicativity for q <= 100") {
  for (u64 q = 3; q <= 100; ++q) {
    if (!is_prime(q)) continue;
    const auto chars = nonprincipal_characters(q);
    REQUIRE(chars.size() == q - 2);
    for (const auto& chi : chars) {
      std::complex<double> s = 0;
      for (u64 a = 1; a < q; ++a) s += chi(a);
      REQUIRE(std::abs(s) < 1e-13);
      CHECK(chi(q) == std::complex<double>(0, 0));
      CHECK(std::abs(chi(chi.generator() * chi.generator()) - chi(chi.generator()) * chi(chi.generator())) < 1e-13);
      CHECK(std::abs(std::pow(chi(2), static_cast<double>(q - 1)) - 1.0) < 1e-10);
    }
  }
  CHECK_THROWS_AS(DirichletCharacter(7, 6), std::invalid_argument);
  CHECK_THROWS_AS(DirichletCharacter(2, 0), std::invalid_argument);
}

TEST_CASE("L(1, chi) closed forms and pairing") {
  const auto l3 = l_one(DirichletCharacter(3, 1));
  CHECK(std::abs(l3.value - std::complex<double>(kL3, 0)) < 1e-10);
  CHECK(l3.err <= 1e-12);
  CHECK_THROWS_AS(l_one(DirichletCharacter(5, 0)), std::invalid_argument);
  for (u64 q : {5, 7, 11, 13, 101}) {
    std::complex<double> product = 1;
    for (const auto& chi : nonprincipal_characters(q)) {
      const auto a = l_one(chi);
      const auto b = l_one(chi.conjugate());
      CHECK(std::abs(b.value - std::conj(a.value)) < 1e-12);
      product *= a.value;
    }
    CHECK(std::abs(product.imag()) < 1e-12);
    CHECK(product.real() > 0);
  }
}

TEST_CASE("L(1, chi) against the Dirichlet series with 10^7 terms") {
  for (u64 q : {3, 5, 7}) {
    for (const auto& chi : nonprincipal_characters(q)) {
      const std::complex<long double> s = dirichlet_series(chi, 10'000'000);
      const auto l = l_one(chi);
      CHECK(std::abs(std::complex<double>(double(s.real()), double(s.imag())) - l.value) < 1e-6);
    }
  }
}

TEST_CASE("Gamma and digamma against Boost.Math") {
  CHECK(gamma_real(1.0).value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_real(0.5).value == doctest::Approx(std::sqrt(kPi)).epsilon(1e-14));
  CHECK(digamma(1.0).value == doctest::Approx(-0.57721566490153286).epsilon(1e-14));
  for (double x = 0.01; x < 30.0; x *= 1.37) {
    const auto g = gamma_real(x);
    const auto p = digamma(x);
    REQUIRE(rel(g.value, boost::math::tgamma(x)) < 1e-12);
    REQUIRE(g.err >= 0.0);
    REQUIRE(std::abs(p.value - boost::math::digamma(x)) <= 1e-12 * std::max(1.0, std::abs(p.value)));
  }
  for (double x : {0.125, 1.0 / 3, 0.5, 2.0 / 3, 0.875, 1.0}) {
    REQUIRE(rel(digamma(x).value, boost::math::digamma(x)) < 1e-12);
  }
  CHECK_THROWS_AS(gamma_real(0.0), std::domain_error);
  CHECK_THROWS_AS(gamma_real(-1.5), std::domain_error);
  CHECK_THROWS_AS(digamma(0.0), std::domain_error);
}

TEST_CASE("B_q factors") {
  const BqFactors f = b_q_factors(3, 100000);
  CHECK(f.gamma_factor.value == doctest::Approx(1.0 / std::sqrt(kPi)).epsilon(1e-13));
  CHECK(f.local_q.value == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
  CHECK(f.l_factor.value == doctest::Approx(1.0 / std::sqrt(kL3)).epsilon(1e-12));
  CHECK(f.total.value ==
        doctest::Approx(f.gamma_factor.value * f.local_q.value * f.euler_product.value * f.l_factor.value)
            .epsilon(1e-14));
  CHECK(f.euler_product.err >= 1.0 / 100000 * 0.5 * f.euler_product.value);
  for (u64 q : {3, 5, 7, 11, 13}) {
    const auto b = b_q(q, 1'000'000);
    CHECK(b.value > 0);
    CHECK(b.err > 0);
    CHECK(b.err < 1e-5);
  }
  const auto lo = b_q(3, 1'000'000);
  const auto hi = b_q(3, 10'000'000);
  CHECK(std::abs(hi.value - lo.value) <= lo.err + hi.err);
  CHECK(b_q(5, 2'000'000, 1).value == b_q(5, 2'000'000, 4).value);
  CHECK_THROWS_AS(b_q(2, 1000), std::invalid_argument);
  CHECK_THROWS_AS(b_q(3, 99), std::invalid_argument);
  CHECK_THROWS_AS(b_q(15, 1000), std::invalid_argument);
}

TEST_CASE("K constant composition") {
  const auto b = b_q(3, 1'000'000);
  const auto k0 = k_constant(3, Partition{}, 1'000'000);
  const auto k11 = k_constant(3, Partition{1, 1}, 1'000'000);
  CHECK(k0.value == doctest::Approx(b.value * 4.0 / 3.0).epsilon(1e-15));
  CHECK(k11.value == doctest::Approx(b.value * 0.5 * 4.0 / 27.0).epsilon(1e-15));
  CHECK(k0.err == doctest::Approx(b.err * 4.0 / 3.0).epsilon(1e-6));
  CHECK(k_constant(7, Partition{3, 2, 2, 1}, 1000).value > 0);
}

TEST_CASE("Artin's constant") {
  CHECK(artin_xi_partial(2) == 0.5);
  CHECK(artin_xi_partial(3) == doctest::Approx(0.5 * 5.0 / 6.0).epsilon(1e-15));
  double prev = 1.0;
  for (u64 p = 100; p <= 10'000'000; p *= 10) {
    const double v = artin_xi_partial(p);
    CHECK(v < prev);
    prev = v;
  }
  const auto a = artin_xi(1'000'000);
  const auto b = artin_xi(100'000'000);
  CHECK(std::abs(a.value - b.value) <= a.err);
  CHECK(b.value - b.err <= 0.3739558136);
  CHECK(b.value + b.err >= 0.3739558136);
  CHECK(artin_xi(20'000'000, 1).value == artin_xi(20'000'000, 4).value);
  CHECK_THROWS_AS(artin_xi(50), std::invalid_argument);
}

TEST_CASE("constant A") {
  const SquarefreeTable small = squarefree_sieve(100);
  const double xi = 0.3739558136;
  CHECK(constant_A_partial(2, xi, small) ==
        doctest::Approx(15.0 / 14.0 * 1.75 * std::pow(0.5, xi) / boost::math::tgamma(xi)).epsilon(1e-13));
  const SquarefreeTable sq = squarefree_sieve(100'000'000);
  const auto a7 = constant_A(10'000'000, sq);
  const auto a8 = constant_A(100'000'000, sq);
  CHECK(a7.value > 0);
  CHECK(a7.heuristic_tail > 0);
  CHECK(a7.rigorous_err() > 0);
  CHECK(a7.rigorous_err() < a7.heuristic_tail);
  CHECK(std::abs(a8.value - a7.value) < a7.heuristic_tail);
  CHECK_THROWS_AS(constant_A(1000, small), std::invalid_argument);
}

TEST_CASE("H_gamma series") {
  CHECK(h_gamma(0.5, 0.0) == 0.0);
  CHECK(h_gamma(1.7, 0.0) == 0.0);
  for (double z : {0.1, 0.3, 0.5, 0.9, 0.99}) {
    const double s = std::sqrt(z);
    CHECK(h_gamma(0.5, z) == doctest::Approx(-s * std::atanh(s)).epsilon(1e-12));
  }
  CHECK(h_gamma(0.5, 0.1) == doctest::Approx(-0.10354883).epsilon(1e-7));
  CHECK_THROWS_AS(h_gamma(1.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(h_gamma(-0.5, 0.5), std::domain_error);
  CHECK_THROWS_AS(h_gamma(0.5, 1.0), std::domain_error);
  CHECK_THROWS_AS(h_gamma(0.5, -0.1), std::domain_error);
}

TEST_CASE("H_gamma minus gamma log(1 - z) stays bounded as z -> 1") {
  for (double gamma : {0.3, 0.5, 1.7}) {
    double prev = 0.0;
    double prev_step = INFINITY;
    for (int k = 1; k <= 5; ++k) {
      const double z = 1.0 - std::pow(10.0, -k);
      const double r = h_gamma(gamma, z) - gamma * std::log1p(-z);
      CHECK(std::abs(r) < 5.0);
      if (k > 1) {
        const double step = std::abs(r - prev);
        CHECK(step < prev_step);
        prev_step = step;
      }
      prev = r;
    }
  }
}

TEST_CASE("H_gamma derivative identity") {
  const double h = 1e-5;
  for (double gamma : {0.3, 0.5, 1.7}) {
    for (double x : {10.0, 100.0}) {
      const double lx = std::log(x);
      auto f = [&](double z) { return h_gamma(gamma, z) / (gamma * std::pow(z * lx, gamma)); };
      for (int i = 1; i <= 9; ++i) {
        const double z = i / 10.0;
        const double fd = (f(z + h) - f(z - h)) / (2 * h);
        const double exact = -1.0 / ((1 - z) * std::pow(z * lx, gamma));
        REQUIRE_MESSAGE(rel(fd, exact) < 1e-6, "gamma=" << gamma << " x=" << x << " z=" << z);
      }
    }
  }
}
