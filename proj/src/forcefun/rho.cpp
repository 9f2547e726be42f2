#include "coorbital/forcefun/rho.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace coorbital::forcefun {

namespace {

double signed_power(double base, double exponent) {
  if (base >= 0) return std::pow(base, exponent);
  if (exponent != std::floor(exponent)) return std::numeric_limits<double>::quiet_NaN();
  return std::pow(base, exponent);
}

}  // namespace

HighFloat rho_equation(const HighFloat& p) {
  if (!(p < -1)) throw std::domain_error("rho equation is defined for p < -1");
  const HighFloat two_minus_p = 2 - p;
  return log(HighFloat(4)) + p * log(-p - 1) + two_minus_p * log((2 + p) * (2 + p)) - two_minus_p * log(8 - 4 * p);
}

ExponentBracket rho_threshold(double width) {
  if (!(width > 0)) throw std::invalid_argument("bracket width must be positive");
  HighFloat lo("-1.003"), hi("-1.002");
  if (!(rho_equation(lo) < 0 && rho_equation(hi) > 0)) throw Error("rho equation lost its sign change");
  const HighFloat target = HighFloat(width) / 4;
  while (hi - lo > target) {
    const HighFloat mid = (lo + hi) / 2;
    if (rho_equation(mid) < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {dyadic_bound(lo, 80, false), dyadic_bound(hi, 80, true)};
}

double double_root_invariant(const ThreeTermSum& e) {
  if (e.alpha == e.beta || e.beta == e.gamma || e.alpha == e.gamma) {
    throw std::invalid_argument("three-term sum needs distinct exponents");
  }
  const double gb = e.gamma - e.beta, ag = e.alpha - e.gamma, ba = e.beta - e.alpha;
  return signed_power(e.a / gb, gb) * signed_power(e.b / ag, ag) * signed_power(e.c / ba, ba);
}

bool has_double_root(const ThreeTermSum& e, double tol) {
  return std::abs(double_root_invariant(e) - 1.0) <= tol;
}

}  // namespace coorbital::forcefun
