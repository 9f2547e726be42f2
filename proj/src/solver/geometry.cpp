#include "coorbital/solver/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace coorbital::solver {

namespace {

constexpr double kPi = std::numbers::pi;

// Distance on the circle between two angles.
double circular_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), 2 * kPi);
  return std::min(d, 2 * kPi - d);
}

// Distance between two axis directions modulo pi.
double axis_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), kPi);
  return std::min(d, kPi - d);
}

}  // namespace

std::vector<Vec2> nbody_acceleration(const std::vector<Vec2>& x, const std::vector<double>& m, double g) {
  if (x.size() != m.size()) throw std::invalid_argument("positions and masses differ in length");
  std::vector<Vec2> a(x.size(), Vec2{0, 0});
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (i == j) continue;
      const double dx = x[j][0] - x[i][0], dy = x[j][1] - x[i][1];
      const double r = std::hypot(dx, dy);
      if (r < 1e-12) throw CoincidentBodies("bodies " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      const double k = g * m[j] / (r * r * r);
      a[i][0] += k * dx;
      a[i][1] += k * dy;
    }
  }
  return a;
}

SatelliteAccelerations satellite_accelerations(const GapConfig& config, double satellite_mass) {
  const std::vector<double> phi = config.angles();
  std::vector<Vec2> x{{0, 0}};
  std::vector<double> m{1.0};
  for (double p : phi) {
    x.push_back({std::cos(p), std::sin(p)});
    m.push_back(satellite_mass);
  }
  const std::vector<Vec2> a = nbody_acceleration(x, m);
  SatelliteAccelerations out;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const Vec2& ai = a[i + 1];
    const double c = std::cos(phi[i]), s = std::sin(phi[i]);
    out.tangential.push_back(-s * ai[0] + c * ai[1]);
    out.radial.push_back(c * ai[0] + s * ai[1]);
    out.tangential_relative.push_back(-s * (ai[0] - a[0][0]) + c * (ai[1] - a[0][1]));
  }
  return out;
}

bool AxisReport::any_through_satellites() const {
  return std::any_of(axes.begin(), axes.end(), [](const Axis& a) { return a.satellites_on_axis > 0; });
}

AxisReport detect_axis(const GapConfig& config, double tol) {
  const std::vector<double> phi = config.angles();
  AxisReport out;
  // A reflection psi -> 2 alpha - psi sends satellite 0 to some satellite j,
  // so alpha = (phi_0 + phi_j) / 2 mod pi.
  for (double target : phi) {
    const double alpha = std::fmod(0.5 * (phi[0] + target), kPi);
    bool maps = true;
    for (double p : phi) {
      const double image = 2 * alpha - p;
      const bool hit = std::any_of(phi.begin(), phi.end(), [&](double q) { return circular_distance(image, q) <= tol; });
      if (!hit) {
        maps = false;
        break;
      }
    }
    if (!maps) continue;
    const bool seen =
        std::any_of(out.axes.begin(), out.axes.end(), [&](const Axis& a) { return axis_distance(a.angle, alpha) <= tol; });
    if (seen) continue;
    Axis axis{alpha, 0};
    for (double p : phi) axis.satellites_on_axis += axis_distance(p, alpha) <= tol;
    out.axes.push_back(axis);
  }
  std::sort(out.axes.begin(), out.axes.end(), [](const Axis& a, const Axis& b) { return a.angle < b.angle; });
  return out;
}

}  // namespace coorbital::solver
