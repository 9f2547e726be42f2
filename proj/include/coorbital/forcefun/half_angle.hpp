#pragma once

#include "coorbital/exactq/unipoly.hpp"
#include "coorbital/forcefun/force_law.hpp"

namespace coorbital::forcefun {

using exactq::UniPoly;

/// Exact expression s^(-shift) * (even(s) + k * odd(s)) with s = sin(theta/2)
/// and k = cos(theta/2). Every theta-derivative of f for an integer
/// exponent stays in this class since ds/dtheta = k/2, dk/dtheta = -s/2
/// and k^2 = 1 - s^2.
struct HalfAngleForm {
  UniPoly even{{}, 's'};
  UniPoly odd{{}, 's'};
  int shift = 0;

  HalfAngleForm derivative() const;
  /// Lowers `shift` while both parts are divisible by s.
  HalfAngleForm normalized() const;

  bool has_even() const { return !even.is_zero(); }
  bool has_odd() const { return !odd.is_zero(); }

  /// Exact value at a rational point (s, k) of the unit circle.
  BigRat eval(const BigRat& s, const BigRat& k) const;
  double eval(double theta) const;

  friend HalfAngleForm operator+(const HalfAngleForm& a, const HalfAngleForm& b);
  friend HalfAngleForm operator-(const HalfAngleForm& a, const HalfAngleForm& b);
  friend HalfAngleForm operator*(const HalfAngleForm& a, const HalfAngleForm& b);
  friend HalfAngleForm operator*(const BigRat& c, const HalfAngleForm& a);
};

/// f for an exact negative integer exponent; throws UnsupportedExactExponent
/// otherwise.
HalfAngleForm f_form(const ForceLaw& law);

struct ExactDerivatives {
  HalfAngleForm f;
  HalfAngleForm d1;
  HalfAngleForm d2;
  HalfAngleForm d3;
  /// -f' f''' + 3 f''^2, which equals f'^5 * (g''' o f) for the inverse g.
  HalfAngleForm inverse_third;
};

ExactDerivatives f_derivatives_exact(const ForceLaw& law);

/// Integer polynomial in y proving the sign of an even-only form on
/// theta in (0, 2*pi): with s = y/(1+y),
///   scale * y^y_power * (1+y)^one_plus_y_power * form = polynomial(y).
struct YCertificate {
  UniPoly polynomial;
  BigRat scale;
  int y_power = 0;
  int one_plus_y_power = 0;
};

/// Requires an even-only form (odd part zero).
YCertificate y_certificate(const HalfAngleForm& form);

}  // namespace coorbital::forcefun
