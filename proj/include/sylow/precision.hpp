#pragma once

#include <cmath>
#include <complex>

namespace sylow {

/// A real value with an absolute error bound.  `heuristic_tail` is the part
/// of `err` that comes from an estimated, not proven, truncation tail.
struct PrecisionValue {
  double value = 0.0;
  double err = 0.0;
  double heuristic_tail = 0.0;

  double rigorous_err() const { return err - heuristic_tail; }
};

struct ComplexPrecisionValue {
  std::complex<double> value;
  double err = 0.0;
};

inline PrecisionValue operator*(const PrecisionValue& a, const PrecisionValue& b) {
  const double v = a.value * b.value;
  const double err = std::fabs(a.value) * b.err + std::fabs(b.value) * a.err + a.err * b.err +
                     std::fabs(v) * 0x1p-52;
  return {v, err, std::fabs(a.value) * b.heuristic_tail + std::fabs(b.value) * a.heuristic_tail};
}

/// Scale by an exactly known factor (rounded once to double).
inline PrecisionValue scaled(const PrecisionValue& a, double exact) {
  const double v = a.value * exact;
  return {v, a.err * std::fabs(exact) + std::fabs(v) * 0x1p-52, a.heuristic_tail * std::fabs(exact)};
}

}  // namespace sylow
