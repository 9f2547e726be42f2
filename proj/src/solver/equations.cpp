#include "coorbital/solver/equations.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace coorbital::solver {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

bool separated(const std::vector<double>& phi) {
  for (std::size_t i = 0; i + 1 < phi.size(); ++i) {
    if (!(phi[i + 1] - phi[i] > kCoalescenceGap)) return false;
  }
  return kTwoPi - phi.back() > kCoalescenceGap;
}

Eigen::MatrixXd reduced_jacobian(const std::vector<double>& phi, const ForceLaw& law) {
  const std::size_t n = phi.size();
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n - 1), static_cast<Eigen::Index>(n - 1));
  for (std::size_t i = 1; i < n; ++i) {
    double diag = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double d = forcefun::f_prime_periodic(phi[j] - phi[i], law);
      diag -= d;
      if (j > 0) jac(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(j - 1)) = d;
    }
    jac(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(i - 1)) = diag;
  }
  return jac;
}

}  // namespace

std::vector<double> residual_angles(const std::vector<double>& phi, const ForceLaw& law) {
  if (!separated(phi)) throw Coalescent("satellites closer than 1e-8");
  const std::size_t n = phi.size();
  std::vector<double> r(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) r[i] += forcefun::f_periodic(phi[j] - phi[i], law);
    }
  }
  return r;
}

std::vector<double> residual_n(const GapConfig& config, const ForceLaw& law) {
  for (double g : config.gaps()) {
    if (!(g > kCoalescenceGap)) throw Coalescent("gap " + std::to_string(g) + " is a collision");
  }
  return residual_angles(config.angles(), law);
}

double max_abs(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

std::vector<double> to_angles(const GapConfig& config) { return config.angles(); }

GapConfig from_angles(const std::vector<double>& phi) {
  std::vector<double> gaps(phi.size());
  for (std::size_t i = 0; i + 1 < phi.size(); ++i) gaps[i] = phi[i + 1] - phi[i];
  gaps.back() = kTwoPi - phi.back();
  return GapConfig(std::move(gaps), 1e-9);
}

double jacobian_rcond(const std::vector<double>& phi, const ForceLaw& law) {
  return Eigen::PartialPivLU<Eigen::MatrixXd>(reduced_jacobian(phi, law)).rcond();
}

NewtonResult newton_polish(std::vector<double> phi, const ForceLaw& law, const NewtonOptions& opt) {
  NewtonResult out;
  const std::size_t n = phi.size();
  if (n < 2 || phi[0] != 0 || !separated(phi)) {
    out.phi = std::move(phi);
    return out;
  }
  std::vector<double> r = residual_angles(phi, law);
  double merit = max_abs(r);
  for (int it = 0; it <= opt.max_iterations; ++it) {
    out.iterations = it;
    if (merit <= opt.tol) {
      out.status = NewtonStatus::kConverged;
      break;
    }
    if (it == opt.max_iterations) break;
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(reduced_jacobian(phi, law));
    out.rcond = lu.rcond();
    if (!(out.rcond >= opt.singular_rcond)) {
      out.status = NewtonStatus::kSingular;
      break;
    }
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(n - 1));
    for (std::size_t i = 1; i < n; ++i) rhs(static_cast<Eigen::Index>(i - 1)) = -r[i];
    const Eigen::VectorXd delta = lu.solve(rhs);

    bool accepted = false;
    double lambda = 1;
    std::vector<double> trial(n, 0.0);
    for (int h = 0; h <= opt.max_halvings && !accepted; ++h, lambda *= 0.5) {
      for (std::size_t i = 1; i < n; ++i) trial[i] = phi[i] + lambda * delta(static_cast<Eigen::Index>(i - 1));
      if (!std::all_of(trial.begin(), trial.end(), [](double x) { return std::isfinite(x); }) || !separated(trial)) {
        continue;
      }
      std::vector<double> rt = residual_angles(trial, law);
      const double mt = max_abs(rt);
      if (mt < merit) {
        phi = trial;
        r = std::move(rt);
        merit = mt;
        accepted = true;
      }
    }
    if (!accepted) break;
  }
  out.phi = std::move(phi);
  out.residual = merit;
  return out;
}

}  // namespace coorbital::solver
