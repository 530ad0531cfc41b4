#pragma once

#include "singosc/errors.hpp"

namespace singosc {

// Natural log of the gamma function for x > 0.
// Relative accuracy better than 1e-13 over (0, 1e4].
double log_gamma(double x);

// Gamma(a)/Gamma(b) held in log form so that large arguments never
// overflow.  For the in-scope range a, b > 0 the sign is always +1.
struct GammaRatio {
  double log_value;
  int sign;  // +1 or -1

  double value() const;
};

// Gamma(a)/Gamma(b) for a, b > 0.
//
// When a - b is a (floating-point exact) nonnegative integer k the ratio
// is accumulated as the product b(b+1)...(b+k-1), which is cheaper and
// more accurate than differencing two log-gammas; otherwise it falls back
// to log_gamma(a) - log_gamma(b).
GammaRatio gamma_ratio(double a, double b);

// Terminating Gauss hypergeometric series 2F1(-s, b; c; z), summed as
// s+1 exactly-known terms with a recurrent term update.  Polynomial in z,
// so no |z| < 1 restriction applies.
//
// Throws RangeError if c is a nonpositive integer hit before the series
// terminates (a pole of the coefficients); this cannot occur for the
// parameter combinations the transition formulas generate.
double hyp2f1_terminating(int s, double b, double c, double z);

// Jacobi polynomial P_n^(alpha,beta)(x) via the standard three-term
// recurrence in the degree.  Requires alpha > -1 and beta > -1.  The
// recurrence is the production path for the transition probabilities: it
// is backward-stable for beta >= 0 and x in (-1, 1), exactly the regime
// x = 1 - 2*rho, beta = -2j - 1 that the closed forms evaluate in.
double jacobi_p(int n, double alpha, double beta, double x);

}  // namespace singosc
