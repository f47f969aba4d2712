#include "sylow/special.hpp"

#include <cfloat>
#include <cmath>
#include <stdexcept>

namespace sylow {

namespace {

// B_2, B_4, ..., B_18.
constexpr long double kBernoulli[] = {
    1.0L / 6.0L,       -1.0L / 30.0L, 1.0L / 42.0L,         -1.0L / 30.0L,        5.0L / 66.0L,
    -691.0L / 2730.0L, 7.0L / 6.0L,   -3617.0L / 510.0L,    43867.0L / 798.0L,
};
constexpr int kTerms = 8;  // the ninth entry bounds the truncation error
constexpr long double kShift = 16.0L;
constexpr long double kHalfLog2Pi = 0.918938533204672741780329736405617639861L;

// For real y > 0 both Stirling series alternate in sign with errors bounded
// by the first omitted term.
long double lgamma_stirling(long double y, long double* tail) {
  long double s = (y - 0.5L) * std::log(y) - y + kHalfLog2Pi;
  long double ypow = y;
  const long double y2 = y * y;
  for (int k = 1; k <= kTerms; ++k) {
    s += kBernoulli[k - 1] / (2.0L * k * (2.0L * k - 1.0L) * ypow);
    ypow *= y2;
  }
  if (tail != nullptr) *tail = std::fabs(kBernoulli[kTerms] / (2.0L * (kTerms + 1) * (2.0L * kTerms + 1) * ypow));
  return s;
}

long double digamma_stirling(long double y, long double* tail) {
  long double s = std::log(y) - 0.5L / y;
  const long double y2 = y * y;
  long double ypow = y2;
  for (int k = 1; k <= kTerms; ++k) {
    s -= kBernoulli[k - 1] / (2.0L * k * ypow);
    ypow *= y2;
  }
  if (tail != nullptr) *tail = std::fabs(kBernoulli[kTerms] / (2.0L * (kTerms + 1) * ypow));
  return s;
}

}  // namespace

long double lgamma_ext(long double x) {
  if (!(x > 0)) throw std::domain_error("lgamma: argument must be positive");
  long double log_prod = 0.0L;
  while (x < kShift) {
    log_prod += std::log(x);
    x += 1.0L;
  }
  return lgamma_stirling(x, nullptr) - log_prod;
}

PrecisionValue gamma_real(double x) {
  if (!(x > 0) || !std::isfinite(x)) throw std::domain_error("gamma: argument must be positive and finite");
  long double y = x;
  long double prod = 1.0L;
  int shifts = 0;
  while (y < kShift) {
    prod *= y;
    y += 1.0L;
    ++shifts;
  }
  long double tail = 0.0L;
  const long double lg = lgamma_stirling(y, &tail);
  const long double v = std::exp(lg) / prod;
  const long double rel = tail + (std::fabs(lg) + shifts + 8) * LDBL_EPSILON;
  const double value = static_cast<double>(v);
  return {value, static_cast<double>(std::fabs(v) * rel) + std::fabs(value) * 0x1p-53};
}

long double digamma_ext(long double x, long double* err) {
  if (!(x > 0)) throw std::domain_error("digamma: argument must be positive");
  long double shift_sum = 0.0L;
  long double shift_abs = 0.0L;
  while (x < kShift) {
    shift_sum += 1.0L / x;
    shift_abs += 1.0L / x;
    x += 1.0L;
  }
  long double tail = 0.0L;
  const long double s = digamma_stirling(x, &tail);
  if (err != nullptr) *err = tail + (std::fabs(s) + shift_abs) * 4 * LDBL_EPSILON;
  return s - shift_sum;
}

PrecisionValue digamma(double x) {
  if (!(x > 0) || !std::isfinite(x)) throw std::domain_error("digamma: argument must be positive and finite");
  long double err = 0.0L;
  const long double v = digamma_ext(x, &err);
  const double value = static_cast<double>(v);
  return {value, static_cast<double>(err) + std::fabs(value) * 0x1p-53};
}

}  // namespace sylow
