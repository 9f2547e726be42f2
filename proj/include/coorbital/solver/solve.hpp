#pragma once

#include "coorbital/solver/equations.hpp"
#include "coorbital/solver/geometry.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace coorbital::solver {

struct Solution {
  /// Canonical representative under rotation and reflection.
  GapConfig gaps;
  double residual = 0;
  AxisReport axes;
  /// Symmetry classes, filled for four satellites only.
  std::vector<std::string> classes;
  /// Restarts that converged onto this configuration.
  int hits = 0;
};

struct SolveRun {
  int n = 0;
  ForceLaw law;
  int restarts = 0;
  std::uint64_t seed = 0;
  double tol = 0;
  int converged = 0;
  std::vector<Solution> found;
};

/// Gaps drawn uniformly from the simplex {gaps > 0, sum = 2pi}; restart k
/// uses a generator seeded with (seed, k).
GapConfig random_start(int n, std::uint64_t seed, int k);

/// Polishes `restarts` random starts with damped Newton (in parallel),
/// keeps converged separate solutions and merges those whose canonical
/// forms are within 1e-6 in max-norm. Deterministic for a fixed seed.
/// Throws std::invalid_argument for n < 2 or restarts < 1.
SolveRun solve_n(int n, const ForceLaw& law, int restarts, std::uint64_t seed, double tol = 1e-12);

nlohmann::json to_json(const SolveRun& run);

/// One row per solution: index, residual, axes, then gaps in degrees.
std::string to_csv(const SolveRun& run);

}  // namespace coorbital::solver
