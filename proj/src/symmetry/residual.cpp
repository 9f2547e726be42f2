#include "coorbital/symmetry/residual.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace coorbital::symmetry {

std::array<double, 4> residual(const GapConfig& config, const ForceLaw& law) {
  if (config.size() != 4) throw std::invalid_argument("residual expects four gaps");
  auto f = [&](double x) { return forcefun::f_eval(x, law); };
  const double f1 = f(config[0]), f2 = f(config[1]), f3 = f(config[2]), f4 = f(config[3]);
  const double f34 = f(config[2] + config[3]);
  const double f23 = f(config[1] + config[2]);
  return {f34 - f2 + f3, f34 - f1 + f4, f23 - f1 + f2, f23 - f4 + f3};
}

std::array<HighFloat, 4> residual_high(const std::array<HighFloat, 4>& gaps, const HighFloat& p) {
  auto f = [&](const HighFloat& x) { return forcefun::f_eval_high(x, p); };
  const HighFloat f1 = f(gaps[0]), f2 = f(gaps[1]), f3 = f(gaps[2]), f4 = f(gaps[3]);
  const HighFloat f34 = f(gaps[2] + gaps[3]);
  const HighFloat f23 = f(gaps[1] + gaps[2]);
  return {f34 - f2 + f3, f34 - f1 + f4, f23 - f1 + f2, f23 - f4 + f3};
}

double max_abs(const std::array<double, 4>& r) {
  double m = 0;
  for (double x : r) m = std::max(m, std::abs(x));
  return m;
}

SymmetricChart SymmetricChart::from_gaps(const GapConfig& config) {
  if (config.size() != 4) throw std::invalid_argument("chart expects four gaps");
  return {(config[1] + config[3]) / 4, (config[1] - config[3]) / 4};
}

GapConfig SymmetricChart::gaps() const {
  const double t1 = std::numbers::pi - 2 * sigma;
  return GapConfig({t1, 2 * (sigma + nu), t1, 2 * (sigma - nu)}, 1e-9);
}

double SymmetricChart::C() const { return std::cos(sigma); }
double SymmetricChart::S() const { return std::sin(sigma); }
double SymmetricChart::c() const { return std::cos(nu); }
double SymmetricChart::s() const { return std::sin(nu); }
double SymmetricChart::t() const { return std::tan(sigma / 2); }

}  // namespace coorbital::symmetry
