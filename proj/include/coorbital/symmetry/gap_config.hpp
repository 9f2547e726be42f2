#pragma once

#include "coorbital/exactq/bigrat.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace coorbital::symmetry {

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

/// Angular gaps between consecutive satellites on the circle, in radians.
/// All gaps are positive and they sum to 2*pi.
class GapConfig {
 public:
  /// Throws InvalidConfig unless every gap is positive and finite and the
  /// sum is 2*pi within `sum_tol`.
  explicit GapConfig(std::vector<double> gaps, double sum_tol = 1e-12);
  GapConfig(std::initializer_list<double> gaps) : GapConfig(std::vector<double>(gaps)) {}

  static GapConfig regular(std::size_t n);
  static GapConfig from_degrees(const std::vector<double>& degrees, double sum_tol = 1e-9);

  std::size_t size() const { return gaps_.size(); }
  double operator[](std::size_t i) const { return gaps_[i]; }
  const std::vector<double>& gaps() const { return gaps_; }

  /// Satellite angles phi_0 = 0, phi_i = gap_0 + ... + gap_{i-1}.
  std::vector<double> angles() const;
  std::vector<double> degrees() const;
  std::string to_string() const;

  /// Gaps after a cyclic shift by k (gap k becomes gap 0).
  GapConfig rotated(std::size_t k) const;
  /// Gaps in reverse order: the mirror image of the configuration.
  GapConfig reflected() const;

  friend bool operator==(const GapConfig&, const GapConfig&) = default;

 private:
  std::vector<double> gaps_;
};

/// Smallest of the 2n rotations and reflections of the gap vector under the
/// lexicographic order, where entries closer than `tol` compare equal.
GapConfig canonical(const GapConfig& config, double tol = 1e-9);

/// Max-norm distance between two gap vectors, minimized over rotations and
/// reflections of `b`. Infinity when the sizes differ.
double config_distance(const GapConfig& a, const GapConfig& b);

}  // namespace coorbital::symmetry
