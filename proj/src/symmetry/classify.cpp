#include "coorbital/symmetry/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace coorbital::symmetry {

std::string to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::kDiagonalDiameter: return "diagonal-diameter";
    case SymmetryClass::kAdjacentEqual: return "adjacent-equal";
    case SymmetryClass::kOppositeEqual: return "opposite-equal";
    case SymmetryClass::kAsymmetric: return "asymmetric";
  }
  return "unknown";
}

std::vector<SymmetryClass> symmetry_classes(const GapConfig& g, double tol) {
  if (g.size() != 4) throw std::invalid_argument("symmetry classes are defined for four gaps");
  auto near = [tol](double a, double b) { return std::abs(a - b) <= tol; };
  std::vector<SymmetryClass> out;
  if (near(g[0] + g[1], std::numbers::pi) || near(g[1] + g[2], std::numbers::pi)) {
    out.push_back(SymmetryClass::kDiagonalDiameter);
  }
  for (std::size_t i = 0; i < 4; ++i) {
    if (near(g[i], g[(i + 1) % 4])) {
      out.push_back(SymmetryClass::kAdjacentEqual);
      break;
    }
  }
  if (near(g[0], g[2]) || near(g[1], g[3])) out.push_back(SymmetryClass::kOppositeEqual);
  if (out.empty()) out.push_back(SymmetryClass::kAsymmetric);
  return out;
}

std::vector<SymmetryClass> classify_symmetry(const GapConfig& config, const ForceLaw& law, double tol) {
  const double r = max_abs(residual(config, law));
  if (!(r <= tol)) throw NotCentral("configuration " + config.to_string() + " is not central: residual " + std::to_string(r));
  return symmetry_classes(config, tol);
}

TheoremCheck theorem_inequalities(const GapConfig& e2, double tol) {
  if (e2.size() != 4) throw std::invalid_argument("theorem inequalities need four gaps");
  const auto& v = e2.gaps();
  const auto largest = static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
  TheoremCheck out;
  out.normalized = e2.rotated((largest + 1) % 4);
  const double t1 = out.normalized[0], t2 = out.normalized[1], t3 = out.normalized[2], t4 = out.normalized[3];
  const double pi = std::numbers::pi;
  out.angle_sum_error = std::abs(2 * t1 + t2 + t4 - 2 * pi);
  if (std::abs(t1 - t3) > tol) out.failures.push_back("t1 != t3");
  if (out.angle_sum_error > tol) out.failures.push_back("2 t1 + t2 + t4 != 2 pi");
  if (!(t2 > 0)) out.failures.push_back("t2 <= 0");
  if (!(t1 > t2 + tol)) out.failures.push_back("t1 <= t2");
  if (!(pi > t1 + tol)) out.failures.push_back("t1 >= pi");
  if (!(t4 > pi + tol)) out.failures.push_back("t4 <= pi");
  out.passed = out.failures.empty();
  return out;
}

}  // namespace coorbital::symmetry
