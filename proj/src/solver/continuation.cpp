#include "coorbital/solver/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace coorbital::solver {

namespace {

struct Corrected {
  NewtonStatus status;
  std::vector<double> phi;
  double residual;
};

Corrected correct(const std::vector<double>& guess, double p, const ContinuationOptions& opt) {
  NewtonOptions nopt;
  nopt.tol = opt.tol;
  nopt.max_iterations = 30;
  NewtonResult r = newton_polish(guess, ForceLaw(p), nopt);
  return {r.status, std::move(r.phi), r.residual};
}

double max_change(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

std::vector<double> lerp(const std::vector<double>& a, const std::vector<double>& b, double s) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + s * (b[i] - a[i]);
  return out;
}

std::optional<EventHit> locate_event(const PathSample& left, const PathSample& right, const ContinuationOptions& opt) {
  double pl = left.p, pr = right.p;
  std::vector<double> phl = left.config.angles(), phr = right.config.angles();
  const double gl = opt.event(left.config);
  if (gl == 0) return EventHit{left.p, left.config, left.residual};
  bool left_negative = gl < 0;
  EventHit best{right.p, right.config, right.residual};
  while (std::abs(pr - pl) > opt.event_precision) {
    const double pm = 0.5 * (pl + pr);
    if (pm == pl || pm == pr) break;
    const Corrected c = correct(lerp(phl, phr, 0.5), pm, opt);
    if (c.status != NewtonStatus::kConverged) return std::nullopt;
    const GapConfig cfg = from_angles(c.phi);
    const double gm = opt.event(cfg);
    best = {pm, cfg, c.residual};
    if (gm == 0) break;
    if ((gm < 0) == left_negative) {
      pl = pm;
      phl = c.phi;
    } else {
      pr = pm;
      phr = c.phi;
    }
  }
  return best;
}

}  // namespace

ContinuationPath continue_in_p(const GapConfig& start, double p0, double p1, int steps, const ContinuationOptions& opt) {
  if (steps < 1) throw std::invalid_argument("steps must be at least 1");
  if (p0 == p1) throw std::invalid_argument("p0 and p1 must differ");
  const double start_residual = max_abs(residual_n(start, ForceLaw(p0)));
  if (!(start_residual <= opt.start_tol)) {
    throw NonCentralStart("start is not central at p0: residual " + std::to_string(start_residual));
  }

  ContinuationPath path;
  Corrected first = correct(start.angles(), p0, opt);
  if (first.status != NewtonStatus::kConverged) {
    throw NonCentralStart("start does not polish to tolerance at p0");
  }
  path.samples.push_back({p0, from_angles(first.phi), first.residual});
  path.last_good_p = p0;
  path.last_rcond = jacobian_rcond(first.phi, ForceLaw(p0));

  const double nominal = (p1 - p0) / steps;
  const double min_step = std::abs(nominal) * opt.min_step_fraction;
  double h = nominal;
  std::vector<double> phi = first.phi, phi_prev;
  double h_prev = 0;
  double p = p0;
  NewtonStatus last_failure = NewtonStatus::kConverged;

  while ((p1 - p) * nominal > 0) {
    if (std::abs(p1 - p) < std::abs(h)) h = p1 - p;
    const double p_next = std::abs(p1 - (p + h)) <= 1e-15 * std::abs(p1) ? p1 : p + h;
    std::vector<double> guess = phi;
    if (!phi_prev.empty()) {
      for (std::size_t i = 0; i < phi.size(); ++i) guess[i] = phi[i] + (phi[i] - phi_prev[i]) * (h / h_prev);
    }
    Corrected c{NewtonStatus::kDiverged, {}, 0};
    bool ok = std::is_sorted(guess.begin(), guess.end()) && guess.back() < 2 * std::numbers::pi;
    if (ok) {
      c = correct(guess, p_next, opt);
      ok = c.status == NewtonStatus::kConverged && max_change(c.phi, phi) <= opt.max_gap_change;
    }
    if (!ok) {
      last_failure = c.status;
      h *= 0.5;
      ++path.step_halvings;
      if (std::abs(h) < min_step) {
        path.stop_reason = last_failure == NewtonStatus::kSingular ? "singular Jacobian" : "step size underflow";
        return path;
      }
      continue;
    }
    phi_prev = phi;
    phi = c.phi;
    h_prev = p_next - p;
    p = p_next;
    path.samples.push_back({p, from_angles(phi), c.residual});
    path.last_good_p = p;
    if (opt.event) {
      const PathSample& a = path.samples[path.samples.size() - 2];
      const PathSample& b = path.samples.back();
      const double ga = opt.event(a.config), gb = opt.event(b.config);
      if (ga != 0 && gb != 0 && (ga < 0) != (gb < 0)) {
        if (auto hit = locate_event(a, b, opt)) path.events.push_back(*hit);
      }
    }
    path.last_rcond = jacobian_rcond(phi, ForceLaw(p));
    if (path.last_rcond < NewtonOptions{}.singular_rcond) {
      path.stop_reason = "singular Jacobian";
      return path;
    }
    if (std::abs(h) < std::abs(nominal)) h = std::clamp(2 * h, -std::abs(nominal), std::abs(nominal));
  }
  path.completed = true;
  return path;
}

std::string to_csv(const ContinuationPath& path) {
  std::ostringstream os;
  os.precision(15);
  if (path.samples.empty()) return "p,residual\n";
  const std::size_t n = path.samples.front().config.size();
  os << "p,residual";
  for (std::size_t i = 1; i <= n; ++i) os << ",gap" << i << "_rad";
  for (std::size_t i = 1; i <= n; ++i) os << ",gap" << i << "_deg";
  os << "\n";
  for (const PathSample& s : path.samples) {
    os << s.p << "," << s.residual;
    for (double g : s.config.gaps()) os << "," << g;
    for (double d : s.config.degrees()) os << "," << d;
    os << "\n";
  }
  return os.str();
}

}  // namespace coorbital::solver
