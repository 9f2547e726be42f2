#include "coorbital/isolate/mobius.hpp"

#include <stdexcept>

namespace coorbital::isolate {

MobiusMap::MobiusMap(BigRat a0, BigRat a1, BigRat b0, BigRat b1)
    : a0_(std::move(a0)), a1_(std::move(a1)), b0_(std::move(b0)), b1_(std::move(b1)) {
  if (determinant() == 0) throw exactq::DegenerateInput("degenerate Mobius map (zero determinant)");
}

MobiusMap MobiusMap::onto_interval(const BigRat& lo, const BigRat& hi) { return {lo, hi, 1, 1}; }

MobiusMap MobiusMap::onto_ray(const BigRat& lo) { return {lo, 1, 1, 0}; }

std::optional<BigRat> MobiusMap::image_of_zero() const {
  if (b0_ == 0) return std::nullopt;
  return BigRat(a0_ / b0_);
}

std::optional<BigRat> MobiusMap::image_of_infinity() const {
  if (b1_ == 0) return std::nullopt;
  return BigRat(a1_ / b1_);
}

BigRat MobiusMap::apply(const BigRat& y) const {
  BigRat den = b0_ + b1_ * y;
  if (den == 0) throw std::domain_error("Mobius map pole");
  return BigRat((a0_ + a1_ * y) / den);
}

MobiusMap MobiusMap::compose(const MobiusMap& in) const {
  // Matrices [[a1, a0], [b1, b0]] acting on (y, 1) multiply.
  return {a1_ * in.a0_ + a0_ * in.b0_, a1_ * in.a1_ + a0_ * in.b1_, b1_ * in.a0_ + b0_ * in.b0_,
          b1_ * in.a1_ + b0_ * in.b1_};
}

UniPoly mobius_numerator(const UniPoly& p, const MobiusMap& m, int homogenizing_degree) {
  if (p.is_zero()) throw exactq::DegenerateInput("Mobius substitution of the zero polynomial");
  const int n = homogenizing_degree < 0 ? p.degree() : homogenizing_degree;
  if (n < p.degree()) throw std::invalid_argument("homogenizing degree below polynomial degree");
  const char var = 'y';
  const UniPoly x(std::vector<BigRat>{m.a0(), m.a1()}, var);
  const UniPoly y(std::vector<BigRat>{m.b0(), m.b1()}, var);
  std::vector<UniPoly> ypow(static_cast<std::size_t>(n) + 1);
  ypow[0] = UniPoly::constant(1, var);
  for (int k = 1; k <= n; ++k) ypow[static_cast<std::size_t>(k)] = ypow[static_cast<std::size_t>(k) - 1] * y;
  // Projective Horner: h = sum_k a_k x^k y^(n-k).
  UniPoly h = UniPoly::constant(p.coeff(static_cast<std::size_t>(n)), var);
  for (int k = n - 1; k >= 0; --k) {
    h *= x;
    const BigRat a = p.coeff(static_cast<std::size_t>(k));
    if (a != 0) h += ypow[static_cast<std::size_t>(n - k)] * a;
  }
  return h.with_var(var);
}

int sign_variations(const UniPoly& p) {
  if (p.is_zero()) throw exactq::DegenerateInput("sign variations of the zero polynomial");
  int count = 0;
  int last = 0;
  for (const auto& c : p.coeffs()) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

std::string sign_pattern(const UniPoly& p) {
  std::string out;
  for (const auto& c : p.coeffs()) {
    const int s = sgn(c);
    if (s != 0) out.push_back(s > 0 ? '+' : '-');
  }
  return out;
}

}  // namespace coorbital::isolate
