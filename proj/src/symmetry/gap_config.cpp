#include "coorbital/symmetry/gap_config.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace coorbital::symmetry {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

// -1, 0, 1 for a < b, a ~ b, a > b with entrywise tolerance.
int tolerant_compare(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i] - tol) return -1;
    if (a[i] > b[i] + tol) return 1;
  }
  return 0;
}

}  // namespace

GapConfig::GapConfig(std::vector<double> gaps, double sum_tol) : gaps_(std::move(gaps)) {
  if (gaps_.size() < 2) throw InvalidConfig("a configuration needs at least two gaps");
  double sum = 0;
  for (double g : gaps_) {
    if (!std::isfinite(g) || !(g > 0)) throw InvalidConfig("gaps must be positive: " + to_string());
    sum += g;
  }
  if (std::abs(sum - kTwoPi) > sum_tol) throw InvalidConfig("gaps must sum to 2pi: " + to_string());
}

GapConfig GapConfig::regular(std::size_t n) { return GapConfig(std::vector<double>(n, kTwoPi / static_cast<double>(n))); }

GapConfig GapConfig::from_degrees(const std::vector<double>& degrees, double sum_tol) {
  std::vector<double> g;
  g.reserve(degrees.size());
  for (double d : degrees) g.push_back(d * std::numbers::pi / 180.0);
  return GapConfig(std::move(g), sum_tol);
}

std::vector<double> GapConfig::angles() const {
  std::vector<double> phi(gaps_.size());
  double acc = 0;
  for (std::size_t i = 0; i < gaps_.size(); ++i) {
    phi[i] = acc;
    acc += gaps_[i];
  }
  return phi;
}

std::vector<double> GapConfig::degrees() const {
  std::vector<double> d;
  d.reserve(gaps_.size());
  for (double g : gaps_) d.push_back(g * 180.0 / std::numbers::pi);
  return d;
}

std::string GapConfig::to_string() const {
  std::ostringstream os;
  os.precision(10);
  os << "(";
  for (std::size_t i = 0; i < gaps_.size(); ++i) os << (i ? ", " : "") << gaps_[i];
  os << ")";
  return os.str();
}

GapConfig GapConfig::rotated(std::size_t k) const {
  GapConfig out = *this;
  std::rotate(out.gaps_.begin(), out.gaps_.begin() + static_cast<std::ptrdiff_t>(k % gaps_.size()), out.gaps_.end());
  return out;
}

GapConfig GapConfig::reflected() const {
  GapConfig out = *this;
  std::reverse(out.gaps_.begin(), out.gaps_.end());
  return out;
}

GapConfig canonical(const GapConfig& config, double tol) {
  GapConfig best = config;
  for (const GapConfig& base : {config, config.reflected()}) {
    for (std::size_t k = 0; k < config.size(); ++k) {
      GapConfig cand = base.rotated(k);
      if (tolerant_compare(cand.gaps(), best.gaps(), tol) < 0) best = cand;
    }
  }
  return best;
}

double config_distance(const GapConfig& a, const GapConfig& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double best = std::numeric_limits<double>::infinity();
  for (const GapConfig& base : {b, b.reflected()}) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      const GapConfig cand = base.rotated(k);
      double d = 0;
      for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - cand[i]));
      best = std::min(best, d);
    }
  }
  return best;
}

}  // namespace coorbital::symmetry
