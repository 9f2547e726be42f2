#pragma once

#include "coorbital/exactq/bigrat.hpp"
#include "coorbital/highprec.hpp"

namespace coorbital::forcefun {

/// Rational bracket [lo, hi] on the exponent axis.
struct ExponentBracket {
  exactq::BigRat lo;
  exactq::BigRat hi;
  double mid() const { return (lo.get_d() + hi.get_d()) / 2; }
  double width() const { return exactq::BigRat(hi - lo).get_d(); }
};

/// log of 4 (-p-1)^p ((2+p)^2)^(2-p) / (8-4p)^(2-p), defined for p < -1.
/// Its zero rho is the upper end of the exponent range where f'' < 0.
HighFloat rho_equation(const HighFloat& p);

/// Bracket of width <= `width` around rho = -1.00229670...
ExponentBracket rho_threshold(double width = 1e-12);

/// a X^alpha + b X^beta + c X^gamma (alpha, beta, gamma distinct).
struct ThreeTermSum {
  double a, b, c;
  double alpha, beta, gamma;
};

/// (a/(gamma-beta))^(gamma-beta) (b/(alpha-gamma))^(alpha-gamma)
/// (c/(beta-alpha))^(beta-alpha); equals 1 exactly when the sum has a
/// double root. Negative bases need integral exponents, otherwise NaN.
double double_root_invariant(const ThreeTermSum& e);

bool has_double_root(const ThreeTermSum& e, double tol = 1e-12);

}  // namespace coorbital::forcefun
