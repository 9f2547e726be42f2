#include "coorbital/forcefun/force_law.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace coorbital::forcefun {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double half_sine(double theta) {
  if (!(theta >= kMinAngle && theta <= kTwoPi - kMinAngle)) {
    std::ostringstream os;
    os << "angle " << theta << " outside (0, 2pi) or too close to a collision";
    throw DomainError(os.str());
  }
  return std::sin(0.5 * theta);
}

// f''(theta) = sin(theta) * h(s).
double h_of(double s, double p) {
  const double two_s = 2.0 * s;
  return -p * (1.0 + p) * std::pow(two_s, p - 2.0) + (2.0 + p) * (2.0 + p) * 0.25 * std::pow(two_s, p) - 1.0;
}

double h_prime(double s, double p) {
  const double two_s = 2.0 * s;
  return -2.0 * p * (1.0 + p) * (p - 2.0) * std::pow(two_s, p - 3.0) +
         (2.0 + p) * (2.0 + p) * 0.25 * p * std::pow(two_s, p) / s;
}

double wrap(double theta) {
  double x = std::fmod(theta, kTwoPi);
  if (x < 0) x += kTwoPi;
  return x;
}

}  // namespace

ForceLaw::ForceLaw(double p) : p_(p) {
  if (!std::isfinite(p)) throw std::invalid_argument("force exponent must be finite");
}

ForceLaw::ForceLaw(const BigRat& p) : p_(p.get_d()), exact_p_(p) {}

std::optional<int> ForceLaw::integer_exponent() const {
  if (!exact_p_ || exact_p_->get_den() != 1 || *exact_p_ >= 0) return std::nullopt;
  if (!exact_p_->get_num().fits_sint_p()) return std::nullopt;
  return static_cast<int>(exact_p_->get_num().get_si());
}

std::string ForceLaw::to_string() const {
  if (exact_p_) return "p=" + exact_p_->get_str();
  std::ostringstream os;
  os.precision(17);
  os << "p=" << p_;
  return os.str();
}

double f_eval(double theta, const ForceLaw& law) {
  const double s = half_sine(theta);
  return std::sin(theta) * (1.0 - std::pow(2.0 * s, law.p()));
}

double f_prime(double theta, const ForceLaw& law) {
  const double s = half_sine(theta);
  const double p = law.p();
  const double q = std::pow(2.0 * s, p);
  return 1.0 - 2.0 * s * s - q * (1.0 + p) + (2.0 + p) * s * s * q;
}

double f_second(double theta, const ForceLaw& law) {
  const double s = half_sine(theta);
  return std::sin(theta) * h_of(s, law.p());
}

double f_third(double theta, const ForceLaw& law) {
  const double s = half_sine(theta);
  const double p = law.p();
  return (1.0 - 2.0 * s * s) * h_of(s, p) + s * (1.0 - s * s) * h_prime(s, p);
}

double f_periodic(double theta, const ForceLaw& law) { return f_eval(wrap(theta), law); }

double f_prime_periodic(double theta, const ForceLaw& law) { return f_prime(wrap(theta), law); }

HighFloat f_eval_high(const HighFloat& theta, const HighFloat& p) {
  const HighFloat s = sin(theta / 2);
  return sin(theta) * (1 - pow(2 * s, p));
}

HighFloat f_prime_high(const HighFloat& theta, const HighFloat& p) {
  const HighFloat s = sin(theta / 2);
  const HighFloat q = pow(2 * s, p);
  return 1 - 2 * s * s - q * (1 + p) + (2 + p) * s * s * q;
}

}  // namespace coorbital::forcefun
