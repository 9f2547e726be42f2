#pragma once

#include "coorbital/symmetry/gap_config.hpp"

#include <array>
#include <vector>

namespace coorbital::solver {

using symmetry::GapConfig;

class CoincidentBodies : public Error {
 public:
  using Error::Error;
};

using Vec2 = std::array<double, 2>;

/// Newtonian accelerations a_i = G sum_j m_j (x_j - x_i) / |x_j - x_i|^3.
/// Throws CoincidentBodies when two positions are closer than 1e-12.
std::vector<Vec2> nbody_acceleration(const std::vector<Vec2>& positions, const std::vector<double>& masses,
                                     double gravitational_constant = 1.0);

/// A central mass 1 at the origin and satellites of mass m on the unit
/// circle at the configuration's angles, G = 1.
struct SatelliteAccelerations {
  /// Components of each satellite's acceleration along (-sin phi, cos phi).
  std::vector<double> tangential;
  /// Components along (cos phi, sin phi).
  std::vector<double> radial;
  /// Tangential component of the acceleration relative to the central body.
  std::vector<double> tangential_relative;
};

SatelliteAccelerations satellite_accelerations(const GapConfig& config, double satellite_mass);

struct Axis {
  /// Direction of the axis through the center, in [0, pi).
  double angle = 0;
  /// Satellites lying on the axis (0, 1 or 2).
  int satellites_on_axis = 0;
};

struct AxisReport {
  std::vector<Axis> axes;
  std::size_t count() const { return axes.size(); }
  bool any_through_satellites() const;
};

/// Reflections through lines of the center that map the satellite set onto
/// itself, each satellite matched within `tol` radians.
AxisReport detect_axis(const GapConfig& config, double tol = 1e-7);

}  // namespace coorbital::solver
