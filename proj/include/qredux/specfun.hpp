#pragma once

#include "qredux/bignum.hpp"

namespace qredux::specfun {

/// log Gamma(x) for x > 0 (Lanczos approximation, g = 7, 9 terms).
/// Relative accuracy ~1e-14 across (0, 1e6).
double log_gamma(double x);

/// Digamma psi(x) for x > 0: recurrence shift to x >= 10, then the
/// asymptotic series psi(x) ~ log x - 1/(2x) - sum B_2k/(2k x^2k).
double digamma(double x);

/// Trigamma psi'(x) for x > 0, same shift-plus-series scheme.
double trigamma(double x);

/// Exact binomial coefficient C(n, k); returns 0 for k outside [0, n].
BigUint binomial(long n, long k);

/// Exact Catalan number C(2m, m)/(m + 1), m >= 0.
BigUint catalan(long m);

/// log C(n, k) in double precision, for sums whose counts would leave
/// double range if exponentiated term by term.
double log_binomial(double n, double k);

} // namespace qredux::specfun
