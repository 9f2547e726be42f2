#include "coorbital/forcefun/half_angle.hpp"

#include "coorbital/isolate/mobius.hpp"

#include <cmath>

namespace coorbital::forcefun {

namespace {

const UniPoly& s_poly() {
  static const UniPoly s = UniPoly::identity('s');
  return s;
}

const UniPoly& one_minus_s2() {
  static const UniPoly p = UniPoly({1, 0, -1}, 's');
  return p;
}

UniPoly shifted(const UniPoly& p, int k) { return k == 0 ? p : p * UniPoly::monomial(1, static_cast<unsigned>(k), 's'); }

bool divisible_by_s(const UniPoly& p) { return p.is_zero() || p.coeff(0) == 0; }

UniPoly drop_s(const UniPoly& p) {
  if (p.is_zero()) return p;
  std::vector<BigRat> c(p.coeffs().begin() + 1, p.coeffs().end());
  return UniPoly(std::move(c), 's');
}

}  // namespace

HalfAngleForm HalfAngleForm::derivative() const {
  const BigRat k(shift);
  const UniPoly& s = s_poly();
  HalfAngleForm out;
  out.shift = shift + 1;
  const UniPoly db = odd * (-k) + s * odd.derivative();
  out.even = (one_minus_s2() * db - s * s * odd) * BigRat(1, 2);
  out.odd = (even * (-k) + s * even.derivative()) * BigRat(1, 2);
  return out.normalized();
}

HalfAngleForm HalfAngleForm::normalized() const {
  HalfAngleForm out = *this;
  while ((out.has_even() || out.has_odd()) && divisible_by_s(out.even) && divisible_by_s(out.odd)) {
    out.even = drop_s(out.even);
    out.odd = drop_s(out.odd);
    --out.shift;
  }
  if (!out.has_even() && !out.has_odd()) out.shift = 0;
  return out;
}

BigRat HalfAngleForm::eval(const BigRat& s, const BigRat& k) const {
  if (s == 0) throw DomainError("half-angle form evaluated at s = 0");
  BigRat v = even.eval(s) + k * odd.eval(s);
  if (shift >= 0) return v / exactq::pow(s, static_cast<unsigned>(shift));
  return v * exactq::pow(s, static_cast<unsigned>(-shift));
}

double HalfAngleForm::eval(double theta) const {
  const double s = std::sin(0.5 * theta);
  const double k = std::cos(0.5 * theta);
  return (even.eval(s) + k * odd.eval(s)) * std::pow(s, -shift);
}

HalfAngleForm operator+(const HalfAngleForm& a, const HalfAngleForm& b) {
  const int shift = std::max(a.shift, b.shift);
  HalfAngleForm out;
  out.shift = shift;
  out.even = shifted(a.even, shift - a.shift) + shifted(b.even, shift - b.shift);
  out.odd = shifted(a.odd, shift - a.shift) + shifted(b.odd, shift - b.shift);
  return out.normalized();
}

HalfAngleForm operator*(const BigRat& c, const HalfAngleForm& a) {
  HalfAngleForm out = a;
  out.even *= c;
  out.odd *= c;
  return out.normalized();
}

HalfAngleForm operator-(const HalfAngleForm& a, const HalfAngleForm& b) { return a + BigRat(-1) * b; }

HalfAngleForm operator*(const HalfAngleForm& a, const HalfAngleForm& b) {
  HalfAngleForm out;
  out.shift = a.shift + b.shift;
  out.even = a.even * b.even + one_minus_s2() * a.odd * b.odd;
  out.odd = a.even * b.odd + a.odd * b.even;
  return out.normalized();
}

HalfAngleForm f_form(const ForceLaw& law) {
  const auto p = law.integer_exponent();
  if (!p) throw UnsupportedExactExponent("exact path needs a negative integer exponent, got " + law.to_string());
  const int k = -*p;
  HalfAngleForm f;
  // f = k_hat * (2 s - 2^(p+1) s^(p+1)) = s^(-(k-1)) * k_hat * (2 s^k - 2^(1-k)).
  f.shift = k - 1;
  BigRat two_pow = exactq::pow(BigRat(2), static_cast<unsigned>(k - 1));
  f.odd = UniPoly::monomial(2, static_cast<unsigned>(k), 's') - UniPoly::constant(1 / two_pow, 's');
  return f.normalized();
}

ExactDerivatives f_derivatives_exact(const ForceLaw& law) {
  ExactDerivatives d;
  d.f = f_form(law);
  d.d1 = d.f.derivative();
  d.d2 = d.d1.derivative();
  d.d3 = d.d2.derivative();
  d.inverse_third = BigRat(-1) * (d.d1 * d.d3) + BigRat(3) * (d.d2 * d.d2);
  return d;
}

YCertificate y_certificate(const HalfAngleForm& form) {
  if (form.has_odd()) throw std::invalid_argument("y_certificate needs a form without cos(theta/2) part");
  if (!form.has_even()) throw exactq::DegenerateInput("y_certificate of the zero form");
  const UniPoly num = isolate::mobius_numerator(form.even, isolate::MobiusMap(0, 1, 1, 1));
  YCertificate out;
  const BigRat cont = exactq::content(num);
  out.polynomial = exactq::primitive_part(num);
  out.scale = 1 / cont;
  out.y_power = form.shift;
  out.one_plus_y_power = form.even.degree() - form.shift;
  return out;
}

}  // namespace coorbital::forcefun
