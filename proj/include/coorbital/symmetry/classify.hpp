#pragma once

#include "coorbital/symmetry/residual.hpp"

#include <string>
#include <vector>

namespace coorbital::symmetry {

class NotCentral : public Error {
 public:
  using Error::Error;
};

enum class SymmetryClass {
  /// t1 + t2 = pi or t2 + t3 = pi: a diagonal of the quadrilateral is a diameter.
  kDiagonalDiameter,
  /// Two cyclically adjacent gaps are equal.
  kAdjacentEqual,
  /// t1 = t3 or t2 = t4.
  kOppositeEqual,
  kAsymmetric,
};

std::string to_string(SymmetryClass c);

/// Every class the configuration belongs to, or {kAsymmetric} when none
/// applies. Equalities are tested to `tol`. Throws NotCentral when the
/// residual max-norm exceeds `tol`.
std::vector<SymmetryClass> classify_symmetry(const GapConfig& config, const ForceLaw& law, double tol = 1e-8);

/// Same classification without the centrality precondition.
std::vector<SymmetryClass> symmetry_classes(const GapConfig& config, double tol = 1e-8);

struct TheoremCheck {
  bool passed = false;
  /// Relabeled gaps: the largest gap last, so an E2-shaped input reads
  /// (t1, t2, t1, t4).
  GapConfig normalized = GapConfig::regular(4);
  double angle_sum_error = 0;
  std::vector<std::string> failures;
};

/// Relabels the gaps so the largest one is t4, then checks t1 = t3,
/// 2 t1 + t2 + t4 = 2 pi and 0 < t2 < t1 < pi < t4, all to `tol`.
TheoremCheck theorem_inequalities(const GapConfig& e2, double tol = 1e-9);

}  // namespace coorbital::symmetry
