#pragma once

#include "coorbital/solver/equations.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace coorbital::solver {

class NonCentralStart : public Error {
 public:
  using Error::Error;
};

struct PathSample {
  double p = 0;
  GapConfig config = GapConfig::regular(2);
  double residual = 0;
};

/// Zero of the user event function along the path, located by bisection in p.
struct EventHit {
  double p = 0;
  GapConfig config = GapConfig::regular(2);
  double residual = 0;
};

struct ContinuationOptions {
  /// Corrector tolerance on the residual max-norm.
  double tol = 1e-12;
  /// The start must be central to this tolerance at p0.
  double start_tol = 1e-8;
  /// Largest accepted change of any gap in one step.
  double max_gap_change = 0.1;
  /// Give up once the step falls below this fraction of the nominal step.
  double min_step_fraction = 1e-6;
  /// Optional scalar function of the gaps; sign changes are located.
  std::function<double(const GapConfig&)> event;
  /// Width in p down to which an event is bisected.
  double event_precision = 1e-13;
};

struct ContinuationPath {
  std::vector<PathSample> samples;
  bool completed = false;
  /// Empty when completed, otherwise why the path stopped.
  std::string stop_reason;
  double last_good_p = 0;
  /// Reciprocal condition number of the reduced Jacobian at last_good_p.
  double last_rcond = 0;
  int step_halvings = 0;
  std::vector<EventHit> events;
};

/// Natural-parameter continuation in the exponent from p0 to p1 in `steps`
/// nominal steps: secant predictor, Newton corrector, step halving when the
/// corrector fails or a gap jumps by more than max_gap_change. Stops cleanly
/// (completed = false) when the Jacobian becomes singular or the step
/// underflows. Throws NonCentralStart when the start is not central at p0.
ContinuationPath continue_in_p(const GapConfig& start, double p0, double p1, int steps,
                               const ContinuationOptions& options = {});

/// Columns p, residual, gaps in radians, gaps in degrees.
std::string to_csv(const ContinuationPath& path);

}  // namespace coorbital::solver
