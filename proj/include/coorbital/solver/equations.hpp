#pragma once

#include "coorbital/forcefun/force_law.hpp"
#include "coorbital/symmetry/gap_config.hpp"

#include <vector>

namespace coorbital::solver {

using forcefun::ForceLaw;
using symmetry::GapConfig;

class Coalescent : public Error {
 public:
  using Error::Error;
};

/// Gaps at or below this are treated as a collision.
inline constexpr double kCoalescenceGap = 1e-8;

/// Component i is sum over j != i of f((phi_j - phi_i) mod 2pi), phi the
/// satellite angles. The components sum to zero since f is odd about 2pi.
/// Throws Coalescent when some gap is <= kCoalescenceGap.
std::vector<double> residual_n(const GapConfig& config, const ForceLaw& law);

/// Same as residual_n for raw angles phi_0 = 0 < phi_1 < ... < 2pi.
std::vector<double> residual_angles(const std::vector<double>& phi, const ForceLaw& law);

double max_abs(const std::vector<double>& v);

/// Angles phi_0 = 0, phi_i = cumulative gaps, and back.
std::vector<double> to_angles(const GapConfig& config);
GapConfig from_angles(const std::vector<double>& phi);

enum class NewtonStatus { kConverged, kDiverged, kSingular };

struct NewtonOptions {
  double tol = 1e-12;
  int max_iterations = 60;
  int max_halvings = 50;
  /// Reciprocal condition number below which the Jacobian counts as singular.
  double singular_rcond = 1e-13;
};

struct NewtonResult {
  NewtonStatus status = NewtonStatus::kDiverged;
  std::vector<double> phi;
  double residual = 0;
  int iterations = 0;
  /// Reciprocal condition estimate of the last Jacobian.
  double rcond = 0;
};

/// Damped Newton on components 1..n-1 in the unknowns phi_1..phi_{n-1}
/// with phi_0 = 0 pinned. Each step is halved (at most max_halvings times)
/// until the residual max-norm decreases and every gap stays above
/// kCoalescenceGap.
NewtonResult newton_polish(std::vector<double> phi, const ForceLaw& law, const NewtonOptions& options = {});

/// Reciprocal condition estimate of the reduced Jacobian at phi.
double jacobian_rcond(const std::vector<double>& phi, const ForceLaw& law);

}  // namespace coorbital::solver
