#pragma once

#include "coorbital/forcefun/force_law.hpp"
#include "coorbital/highprec.hpp"
#include "coorbital/symmetry/gap_config.hpp"

#include <array>

namespace coorbital::symmetry {

using forcefun::ForceLaw;

/// Equilibrium equations of four satellites with gaps (t1, t2, t3, t4):
///   f34 - f2 + f3, f34 - f1 + f4, f23 - f1 + f2, f23 - f4 + f3
/// where fi = f(ti) and fij = f(ti + tj). Zero iff the configuration is
/// central. Throws std::invalid_argument unless the config has 4 gaps and
/// forcefun::DomainError when a pair sum comes within kMinAngle of 0 or 2pi.
std::array<double, 4> residual(const GapConfig& config, const ForceLaw& law);

/// The same four components in 50-digit arithmetic.
std::array<HighFloat, 4> residual_high(const std::array<HighFloat, 4>& gaps, const HighFloat& p);

double max_abs(const std::array<double, 4>& r);

/// Coordinates adapted to configurations with t1 = t3:
///   sigma = (t2 + t4) / 4, nu = (t2 - t4) / 4,
///   t1 = t3 = pi - 2 sigma, t2 = 2 (sigma + nu), t4 = 2 (sigma - nu).
struct SymmetricChart {
  double sigma = 0;
  double nu = 0;

  static SymmetricChart from_gaps(const GapConfig& config);
  /// Throws InvalidConfig when some reconstructed gap is not positive.
  GapConfig gaps() const;

  double C() const;
  double S() const;
  double c() const;
  double s() const;
  /// tan(sigma / 2).
  double t() const;
};

}  // namespace coorbital::symmetry
