#include "coorbital/symmetry/diagonal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace coorbital::symmetry {

namespace {
constexpr double kEdgeExclusion = 1e-6;
constexpr double kDedupTol = 1e-6;
}  // namespace

double diagonal_equation(double a, const forcefun::ForceLaw& law) {
  using forcefun::f_eval;
  return f_eval(std::numbers::pi - a, law) - f_eval(a, law) - f_eval(2 * a, law);
}

DiagonalScan scan_diagonal_branch(const forcefun::ForceLaw& law, double precision, int grid_points) {
  if (!(precision > 0)) throw std::invalid_argument("precision must be positive");
  if (grid_points < 2) throw std::invalid_argument("grid needs at least two points");
  const double pi = std::numbers::pi;
  auto h = [&](double a) { return diagonal_equation(a, law); };

  DiagonalScan out;
  out.grid_points = grid_points;
  auto grid = [&](int i) { return (i + 0.5) * pi / grid_points; };
  double a_prev = grid(0), h_prev = h(a_prev);
  for (int i = 1; i < grid_points; ++i) {
    const double a = grid(i), ha = h(a);
    if (h_prev == 0) {
      out.roots.push_back({a_prev, a_prev});
    } else if (ha != 0 && (h_prev < 0) != (ha < 0)) {
      double lo = a_prev, hi = a, hlo = h_prev;
      while (hi - lo > precision) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double hm = h(mid);
        if (hm == 0) {
          lo = hi = mid;
          break;
        }
        if ((hm < 0) == (hlo < 0)) {
          lo = mid;
          hlo = hm;
        } else {
          hi = mid;
        }
      }
      out.roots.push_back({lo, hi});
    }
    a_prev = a;
    h_prev = ha;
  }

  for (const DiagonalRoot& r : out.roots) {
    const double a = r.a();
    if (a < kEdgeExclusion || pi - a < kEdgeExclusion) continue;
    const GapConfig cfg({a, pi - a, pi - a, a}, 1e-9);
    bool seen = false;
    for (const GapConfig& other : out.configs) seen = seen || config_distance(cfg, other) <= kDedupTol;
    if (seen) continue;
    out.configs.push_back(cfg);
    out.angles.push_back(a);
  }
  return out;
}

std::vector<GapConfig> solve_diagonal_branch(const forcefun::ForceLaw& law, double precision) {
  return scan_diagonal_branch(law, precision).configs;
}

}  // namespace coorbital::symmetry
