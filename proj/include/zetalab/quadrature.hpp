#pragma once

#include <cstdint>

#include "zetalab/common.hpp"

namespace zetalab::quad {

inline constexpr std::int64_t kDefaultEvalBudget = 1'000'000;

struct QuadratureEstimate {
  Complex value;
  double abs_error = 0.0;
  std::int64_t n_evals = 0;
};

/// F(s) = int_0^inf x^{s-1} / (e^x + 1) dx.
///
/// The range is split at x = 1. On [0, 1] the substitution x = u^{1/Re(s)}
/// turns x^{s-1} dx into u^{i Im(s)/Re(s)} du / Re(s), which removes the
/// endpoint singularity; [1, X] is integrated directly and the tail beyond
/// X = max(40, -log(tol/10)) is dropped, since it is bounded by e^{-X}.
/// Both pieces use globally adaptive Gauss-Kronrod (7/15) subdivision.
/// Re(s) = 1 is accepted through StripPoint::upper_half.
///
/// Throws ToleranceNotMet if `budget` integrand evaluations do not reach tol.
QuadratureEstimate fermi_mellin(const StripPoint& s, double tol, std::int64_t budget = kDefaultEvalBudget);

/// The same integrand weighted by log(x)^log_power, i.e. the log_power-th
/// derivative of F at s.
QuadratureEstimate fermi_mellin_log_weighted(const StripPoint& s, int log_power, double tol,
                                             std::int64_t budget = kDefaultEvalBudget);

/// int_lo^hi x^{s-1} / (e^x + 1) dx for 0 <= lo < hi <= inf, with the same
/// singularity and tail handling as fermi_mellin.
QuadratureEstimate fermi_mellin_segment(const StripPoint& s, double lo, double hi, double tol,
                                        std::int64_t budget = kDefaultEvalBudget);

/// F_omega(omega) = F(omega + 1/2).
QuadratureEstimate f_shifted(const HalfStripPoint& omega, double tol, std::int64_t budget = kDefaultEvalBudget);

/// Closed-form bound M(alpha) = 1/(2 alpha) + 1/e, alpha in (0, 1].
double m_bound(double alpha);

/// M*(alpha) = int_0^inf x^{alpha-1} / (e^x + 1) dx, alpha in (0, 1].
double m_star(double alpha, double tol, std::int64_t budget = kDefaultEvalBudget);

/// d^order M* / d alpha^order for order 1 or 2 and alpha in [1/2, 1].
double m_star_derivative(double alpha, int order, double tol, std::int64_t budget = kDefaultEvalBudget);

/// omega_0(b) = 1/4 + Arg[(1 - bi)/(1 + bi)] / (2 pi) = 1/4 - arctan(b)/pi.
double omega0(double b);

/// d omega_0 / db = -1 / (pi (1 + b^2)).
double omega0_derivative(double b);

/// G(b) = M*(omega_0(b) + 1/2) for b in (0, 1).
double g_of_b(double b, double tol, std::int64_t budget = kDefaultEvalBudget);

struct BoundsSample {
  double alpha = 0.0;
  double m = 0.0;
  double m_star = 0.0;
  double m_star_d1 = 0.0;  // NaN when alpha < 1/2
  double m_star_d2 = 0.0;  // NaN when alpha < 1/2
};

BoundsSample bounds_sample(double alpha, double tol, std::int64_t budget = kDefaultEvalBudget);

}  // namespace zetalab::quad
