#pragma once

#include "coorbital/forcefun/half_angle.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coorbital::forcefun {

/// Outcome of one of the five shape properties of f:
///   1. f < 0 on (0, pi/3), f > 0 on (pi/3, pi), f(pi/3) = f(pi) = 0;
///   2. f' has a unique zero theta_c in (0, pi), theta_c > pi/3, f' > 0
///      before and f' < 0 after;
///   3. f'' < 0 on (0, pi), f''(pi) = 0;
///   4. f''' > 0 on (0, pi];
///   5. g''' > 0 for the inverse g of f on (0, theta_c).
struct PropertyCheck {
  int index = 0;
  bool holds = false;
  /// "exact" (sign certificates over Q) or "numerical" (dense sampling).
  std::string method;
  std::string detail;
  /// An angle where the property fails, when one was found.
  std::optional<double> counterexample;
  nlohmann::json certificate;
};

/// Rational bracket [lo, hi] in radians.
struct AngleBracket {
  BigRat lo;
  BigRat hi;
  double mid() const { return (lo.get_d() + hi.get_d()) / 2; }
};

struct FProfile {
  ForceLaw law;
  std::optional<AngleBracket> theta_c;
  std::vector<double> zeros;
  std::vector<PropertyCheck> checks;

  const PropertyCheck& check(int index) const;
  bool holds(int index) const { return check(index).holds; }
  bool all_hold() const;
};

nlohmann::json to_json(const FProfile& profile);

/// Certifies the five properties. Negative integer exponents go through
/// exact sign certificates; any other exponent is sampled on a dense grid
/// and flagged "numerical". Property 5 is exact only for integer exponents.
FProfile certify_properties(const ForceLaw& law, std::size_t samples = 20000);

/// Sampling-only version of the five checks, usable for any exponent.
std::vector<PropertyCheck> sample_properties(const ForceLaw& law, std::size_t samples = 20000);

/// Bracket of width <= precision around the unique zero of f' in (0, pi).
/// Throws std::invalid_argument for precision <= 0 and Error when
/// Property 2 does not hold for the law.
AngleBracket theta_c(const ForceLaw& law, const BigRat& precision);

/// The inverse g of f restricted to (0, theta_c), evaluated by bisection.
class InverseBranch {
 public:
  explicit InverseBranch(const ForceLaw& law);

  double theta_c() const { return theta_c_; }
  /// f(kMinAngle) and f(theta_c): the usable range of values.
  double lower_value() const { return f_lo_; }
  double upper_value() const { return f_hi_; }

  /// g(value) in (0, theta_c); throws DomainError outside the range.
  double operator()(double value) const;
  /// The other preimage of `value`, on the decreasing branch
  /// (theta_c, 2*pi - theta_c).
  double right_preimage(double value) const;

 private:
  ForceLaw law_;
  double theta_c_;
  double f_lo_;
  double f_hi_;
};

}  // namespace coorbital::forcefun
