#pragma once

// Gamma and digamma on the positive real axis, shifted Stirling scheme,
// evaluated in extended precision.

#include "sylow/precision.hpp"

namespace sylow {

/// Gamma(x) for x > 0 with relative error well below 1e-13.  Throws std::domain_error otherwise.
PrecisionValue gamma_real(double x);

/// log Gamma(x) for x > 0, extended precision.
long double lgamma_ext(long double x);

/// psi(x) = Gamma'(x)/Gamma(x) for x > 0.  Throws std::domain_error otherwise.
PrecisionValue digamma(double x);

/// Extended-precision digamma with an absolute error bound written to *err.
long double digamma_ext(long double x, long double* err);

}  // namespace sylow
