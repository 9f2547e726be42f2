#pragma once

#include "coorbital/exactq/unipoly.hpp"

#include <optional>

namespace coorbital::isolate {

using exactq::BigRat;
using exactq::UniPoly;

/// x = (a0 + a1 y) / (b0 + b1 y).
///
/// For y running over (0, +inf) the image is the open interval between
/// a0/b0 and a1/b1 (an endpoint is infinite when its denominator is zero).
class MobiusMap {
 public:
  /// Throws exactq::DegenerateInput when a1*b0 - a0*b1 == 0.
  MobiusMap(BigRat a0, BigRat a1, BigRat b0, BigRat b1);

  /// (lo + hi y) / (1 + y): onto (lo, hi).
  static MobiusMap onto_interval(const BigRat& lo, const BigRat& hi);
  /// lo + y: onto (lo, +inf).
  static MobiusMap onto_ray(const BigRat& lo);

  const BigRat& a0() const { return a0_; }
  const BigRat& a1() const { return a1_; }
  const BigRat& b0() const { return b0_; }
  const BigRat& b1() const { return b1_; }

  BigRat determinant() const { return a1_ * b0_ - a0_ * b1_; }

  /// Image of y = 0 and y = +inf; nullopt stands for infinity.
  std::optional<BigRat> image_of_zero() const;
  std::optional<BigRat> image_of_infinity() const;

  BigRat apply(const BigRat& y) const;

  /// (*this) o inner: y -> this(inner(y)).
  MobiusMap compose(const MobiusMap& inner) const;

  friend bool operator==(const MobiusMap&, const MobiusMap&) = default;

 private:
  BigRat a0_, a1_, b0_, b1_;
};

/// Numerator of p(m(y)) after multiplying by (b0 + b1 y)^n with
/// n = homogenizing_degree (defaults to deg p, must be >= deg p).
UniPoly mobius_numerator(const UniPoly& p, const MobiusMap& m, int homogenizing_degree = -1);

/// Sign changes in the sequence of nonzero coefficients. Throws
/// exactq::DegenerateInput for the zero polynomial.
int sign_variations(const UniPoly& p);

/// '+' / '-' for each nonzero coefficient, lowest degree first.
std::string sign_pattern(const UniPoly& p);

}  // namespace coorbital::isolate
