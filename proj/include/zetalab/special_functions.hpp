#pragma once

#include <cstdint>

#include "zetalab/common.hpp"

namespace zetalab::special {

// Complex Gamma via recurrence shift plus the Stirling series for log Gamma.
// Relative error below 1e-12 for Re(s) in (0, 2), |Im(s)| <= 100.
// Throws PoleError within kPoleTol of 0, -1, -2, ...
Complex gamma(Complex s);

// log Gamma(s), branch not normalized (imaginary part is correct modulo 2*pi).
Complex log_gamma_unwrapped(Complex s);

// |Gamma(alpha + i*beta)| from the truncated infinite product
//   |Gamma(alpha)| * sqrt( prod_{k<n} 1 / (1 + beta^2 / (k + alpha)^2) ).
// Each factor is <= 1, so the value decreases monotonically in n_terms.
double gamma_abs_product(double alpha, double beta, std::int64_t n_terms);

struct EtaResult {
  Complex value;
  double error_bound;  // truncation bound, rounding not included
  int terms;
};

// Dirichlet eta by the Chebyshev-weighted alternating sum (Borwein's second
// algorithm). Writing eta(s) Gamma(s) = int_0^1 (-log x)^{s-1} / (1 + x) dx
// and replacing 1/(1+x) by its shifted-Chebyshev interpolant gives
//   |error| <= Gamma(sigma) eta(sigma) / (d_n |Gamma(s)|) <= Gamma(sigma) / (d_n |Gamma(s)|)
// with d_n = T_n(3) >= (3 + sqrt 8)^n / 2, valid for every sigma = Re(s) > 0.
// The term count is the smallest n with that bound below 1e-14.
EtaResult eta_with_bound(Complex s);

Complex eta(Complex s);

// eta(s) / (1 - 2^{1-s}); s must lie in the open critical strip.
Complex zeta(const StripPoint& s);

// zeta at a point with Re(s) > 0, s != 1. Used for the 1 - s reflection.
Complex zeta_right_half(Complex s);

// |zeta(1-s) - Gamma(s) 2 (2 pi)^{-s} cos(pi s / 2) zeta(s)|
double functional_equation_residual(const StripPoint& s);

}  // namespace zetalab::special
