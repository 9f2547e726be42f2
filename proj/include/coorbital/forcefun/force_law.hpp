#pragma once

#include "coorbital/exactq/bigrat.hpp"
#include "coorbital/highprec.hpp"

#include <optional>
#include <string>

namespace coorbital::forcefun {

using exactq::BigRat;

class DomainError : public Error {
 public:
  using Error::Error;
};

class UnsupportedExactExponent : public Error {
 public:
  using Error::Error;
};

/// Homogeneous interaction law: the tangential function is
/// f(theta) = sin(theta) * (1 - (2 sin(theta/2))^p). Newton is p = -3.
class ForceLaw {
 public:
  explicit ForceLaw(double p);
  /// Exponent known exactly (required by the exact certificate path).
  explicit ForceLaw(const BigRat& p);

  static ForceLaw newtonian() { return ForceLaw(BigRat(-3)); }

  double p() const { return p_; }
  const std::optional<BigRat>& exact_p() const { return exact_p_; }
  /// The exponent when it is an exact negative integer.
  std::optional<int> integer_exponent() const;
  bool is_newtonian() const { return exact_p_ && *exact_p_ == -3; }

  std::string to_string() const;

 private:
  double p_;
  std::optional<BigRat> exact_p_;
};

/// Smallest angular distance accepted; f diverges at 0 and 2*pi.
inline constexpr double kMinAngle = 1e-8;

/// f and its first three derivatives in theta, valid on [kMinAngle,
/// 2*pi - kMinAngle]; outside that range they throw DomainError.
double f_eval(double theta, const ForceLaw& law);
double f_prime(double theta, const ForceLaw& law);
double f_second(double theta, const ForceLaw& law);
double f_third(double theta, const ForceLaw& law);

/// f for an arbitrary angle, reduced modulo 2*pi first. Used by the
/// equilibrium equations where angle differences wrap around the circle.
double f_periodic(double theta, const ForceLaw& law);
double f_prime_periodic(double theta, const ForceLaw& law);

/// f and f' in 50-digit arithmetic, theta in (0, 2*pi).
HighFloat f_eval_high(const HighFloat& theta, const HighFloat& p);
HighFloat f_prime_high(const HighFloat& theta, const HighFloat& p);

}  // namespace coorbital::forcefun
