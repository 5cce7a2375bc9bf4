#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace zetalab {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kLn2 = std::numbers::ln2;
inline constexpr double kInvE = 0.36787944117144232159552377016146;

// Artifact tolerances; none of these come from the underlying mathematics.
inline constexpr double kPoleTol = 1e-12;          // distance to a Gamma pole
inline constexpr double kBoundaryMinModulus = 1e-8;  // normalized |f| on contours
inline constexpr double kNeutralizerPoleTol = 1e-3;  // ring radius around i*beta_j
inline constexpr double kExclusionTol = 1e-2;        // tau genericity window

// Every failure raised by the library derives from Error. NumericalError marks
// failures of a numerical procedure (budget, convergence, contour hits a zero)
// as opposed to a caller handing in an argument outside the domain.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

class ToleranceNotMet : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NonConvergence : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class BoundaryZeroError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class MultiplicityAmbiguity : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline Complex require_finite(Complex z, const char* what) {
  if (!is_finite(z)) throw DomainError(std::string(what) + ": non-finite complex value");
  return z;
}

/// A point of the open critical strip 0 < Re(s) < 1. The closed upper half
/// (Re(s) in [1/2, 1]) is admitted through upper_half(), which the integral
/// bounds need at their right endpoint.
class StripPoint {
 public:
  explicit StripPoint(Complex s) : s_(require_finite(s, "StripPoint")) {
    if (!(s.real() > 0.0 && s.real() < 1.0))
      throw DomainError("StripPoint: Re(s) must lie in (0, 1)");
  }
  StripPoint(double re, double im) : StripPoint(Complex(re, im)) {}

  static StripPoint upper_half(Complex s) {
    require_finite(s, "StripPoint");
    if (!(s.real() >= 0.5 && s.real() <= 1.0))
      throw DomainError("StripPoint: Re(s) must lie in [1/2, 1]");
    return StripPoint(s, Unchecked{});
  }

  Complex value() const { return s_; }
  double re() const { return s_.real(); }
  double im() const { return s_.imag(); }

 private:
  struct Unchecked {};
  StripPoint(Complex s, Unchecked) : s_(s) {}
  Complex s_;
};

/// omega = s - 1/2 with Re(omega) in [0, 1/2]: the shifted upper half strip.
class HalfStripPoint {
 public:
  explicit HalfStripPoint(Complex omega) : omega_(require_finite(omega, "HalfStripPoint")) {
    if (!(omega.real() >= 0.0 && omega.real() <= 0.5))
      throw DomainError("HalfStripPoint: Re(omega) must lie in [0, 1/2]");
  }
  HalfStripPoint(double re, double im) : HalfStripPoint(Complex(re, im)) {}

  Complex value() const { return omega_; }
  StripPoint to_strip() const { return StripPoint::upper_half(omega_ + 0.5); }

 private:
  Complex omega_;
};

}  // namespace zetalab
