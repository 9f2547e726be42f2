#pragma once

#include "coorbital/symmetry/gap_config.hpp"
#include "coorbital/forcefun/force_law.hpp"

#include <vector>

namespace coorbital::symmetry {

/// With t1 = t4 = a and t2 = t3 = pi - a the equilibrium equations reduce
/// to h(a) = f(pi - a) - f(a) - f(2a) = 0 on (0, pi).
double diagonal_equation(double a, const forcefun::ForceLaw& law);

struct DiagonalRoot {
  /// Bracket of a root of h, hi - lo <= precision.
  double lo = 0;
  double hi = 0;
  double a() const { return 0.5 * (lo + hi); }
};

struct DiagonalScan {
  int grid_points = 0;
  /// Every sign change of h on the grid, refined by bisection.
  std::vector<DiagonalRoot> roots;
  /// The configurations (a, pi - a, pi - a, a), deduplicated up to rotation
  /// and reflection, in increasing order of a.
  std::vector<GapConfig> configs;
  std::vector<double> angles;
};

/// Scans h on the grid a_i = (i + 1/2) pi / grid_points, bisects each sign
/// change down to `precision`, drops roots within 1e-6 of 0 or pi, and
/// deduplicates the resulting configurations.
DiagonalScan scan_diagonal_branch(const forcefun::ForceLaw& law, double precision = 1e-14, int grid_points = 10000);

/// scan_diagonal_branch(...).configs.
std::vector<GapConfig> solve_diagonal_branch(const forcefun::ForceLaw& law, double precision = 1e-14);

}  // namespace coorbital::symmetry
