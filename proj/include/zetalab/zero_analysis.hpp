#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "zetalab/common.hpp"

namespace zetalab::zeros {

/// Callback contract for anything whose zeros we count: analytic, no poles
/// inside the regions it is used on.
using AnalyticFn = std::function<Complex(Complex)>;

class ZeroAtCenter : public DomainError {
 public:
  using DomainError::DomainError;
};

class PoleProximity : public DomainError {
 public:
  using DomainError::DomainError;
};

class ZeroOnBoundary : public BoundaryZeroError {
 public:
  using BoundaryZeroError::BoundaryZeroError;
};

struct RectangleRegion {
  double re_min, re_max, im_min, im_max;

  static RectangleRegion make(double re_min, double re_max, double im_min, double im_max);
  double width() const { return re_max - re_min; }
  double height() const { return im_max - im_min; }
  Complex center() const { return {0.5 * (re_min + re_max), 0.5 * (im_min + im_max)}; }
};

struct WindingOptions {
  double samples_per_unit = 64.0;  // base density along each side
  double boundary_min_modulus = kBoundaryMinModulus;
  int max_refine_depth = 40;              // bisections of one sample segment
  std::int64_t eval_budget = 4'000'000;  // function evaluations per contour
};

/// Winding number of fn around the counter-clockwise boundary of rect, by
/// continuous argument tracking. A sample segment whose phase step exceeds
/// pi/2 is bisected until it does not. Each side gets at least
/// samples_per_side segments.
///
/// Throws BoundaryZeroError when |fn| < boundary_min_modulus at a sample and
/// NonConvergence when refinement runs out of depth or budget.
int winding_count(const AnalyticFn& fn, const RectangleRegion& rect, int samples_per_side,
                  const WindingOptions& options = {});

struct CriticalZeroList {
  double tau = 0.0;
  std::vector<double> betas;                 // strictly increasing, each <= tau
  std::vector<RectangleRegion> certificates;  // final winding-1 cell per beta (s-plane)
  std::vector<Complex> off_line;             // zeros whose final cell misses Re(s) = 1/2
};

struct ZeroSearchOptions {
  double strip_margin = 0.05;  // search region is [margin, 1 - margin] x [0, tau]
  WindingOptions winding{};
  int min_samples_per_side = 8;
  bool polish = true;  // Newton-refine each beta inside its certificate cell
};

/// Zeros 1/2 + i beta of eta (equivalently zeta, F) with 0 < beta <= tau.
/// Cells from the strip rectangle are bisected in height and shrunk
/// symmetrically about Re(s) = 1/2, each step certified by winding counts,
/// until height < zero_tol and width < 2 zero_tol.
/// Throws MultiplicityAmbiguity if a final cell still holds more than one zero.
CriticalZeroList critical_line_zeros(double tau, double zero_tol, const ZeroSearchOptions& options = {});

/// Newton refinement of a zero of eta near s0; returns s0 unchanged if it fails.
Complex polish_eta_zero(Complex s0);

/// N(T) ~ (T / 2pi) log(T / (2 pi e)) + 7/8, for T >= 2 pi e.
double riemann_von_mangoldt(double T);

struct JensenResult {
  double lhs = 0.0;  // log|f(0)| + sum log(R/|z_i|)
  double rhs = 0.0;  // trapezoidal mean of log|f(R e^{i theta})|
};

/// Both sides of Jensen's formula. `zeros` must list every zero in |z| < R
/// with multiplicity.
JensenResult jensen_check(const AnalyticFn& fn, std::span<const Complex> zeros, double R, int samples,
                          double tol = 1e-12);

/// log(M / |f(0)|) / log(1 / delta): an upper bound for the zero count in |z| <= delta R.
double titchmarsh_zero_bound(double M, double f0_abs, double delta);

/// delta * M < |f(0)|, under which the bound is below one and the disk is zero-free.
bool titchmarsh_zero_free(double M, double f0_abs, double delta);

/// prod_j (conj(omega) + i beta_j) / (omega - i beta_j). Each factor is a
/// ratio of complex conjugates, so |L| = 1 away from the poles i beta_j.
Complex blaschke_L(Complex omega, std::span<const double> betas, double pole_tol = kNeutralizerPoleTol);

struct NeutralizedPoint {
  double beta = 0.0;
  double abs_f = 0.0;  // |f(i beta)| via the local quotient limit
};

struct RoucheScanResult {
  double tau = 0.0;  // after any genericity shift
  double lambda = 0.0;
  double epsilon = 0.0;
  double min_margin = 0.0;  // min over samples of |f| + |g| - |f + g|
  Complex argmin_omega{};
  std::int64_t boundary_samples = 0;
  std::vector<double> betas;  // critical zeros neutralized by L
  double min_normalized_f = 0.0;  // min |f| / |Gamma(omega + 1/2)| away from the i beta_j
  Complex argmin_normalized_f{};
  std::vector<NeutralizedPoint> neutralized;
  // Im(omega) of the zeros of 1 - 2^{1/2 - omega} on Re(omega) = 1/2 up to tau.
  // F_omega vanishes there; fixed sampling does not land on them.
  std::vector<double> edge_factor_zeros;
  bool tau_shifted = false;
};

struct RoucheOptions {
  double samples_per_unit = 64.0;
  double zero_tol = 1e-4;
  double pole_tol = kNeutralizerPoleTol;
  double exclusion_tol = kExclusionTol;
  double boundary_min_modulus = kBoundaryMinModulus;
  int ring_points = 64;
};

/// Samples the boundary of K(tau) = [0, 1/2] x [0, tau] (omega-plane) for
/// f = F_omega L and g = lambda (epsilon + omega). F_omega is evaluated as
/// Gamma(s) eta(s), s = omega + 1/2. Within pole_tol of i beta_j the zero of
/// F_omega and the pole of L are combined through the removable quotient
/// eta(s) / (omega - i beta_j), itself taken from a Cauchy mean over a ring.
RoucheScanResult rouche_scan(double tau, double lambda, double epsilon, int samples_per_side, double tol,
                             const RoucheOptions& options = {});

/// (M*(1/2) + nu) / (theta_abs epsilon).
double lambda_choice(double theta_abs, double epsilon, double nu, double quad_tol = 1e-12);

/// |w| + |v| - |w + v| < tol.
bool triangle_equality_condition(Complex w, Complex v, double tol);

/// Re(w) Im(v) - Re(v) Im(w); vanishes exactly when w and v are collinear.
double collinearity_cross_term(Complex w, Complex v);

/// |f| + |g| - |f + g| in a form that cannot go negative through cancellation.
double triangle_margin(Complex f, Complex g);

}  // namespace zetalab::zeros
