#pragma once

#include "coorbital/exactq/unipoly.hpp"

#include <string>
#include <vector>

namespace coorbital::exactq {

/// Dense bivariate polynomial in (t, c) over Q.
///
/// Stored as a polynomial in c whose coefficients are UniPolys in t:
/// `coeff_c(j)` is the t-polynomial multiplying c^j. No trailing zero
/// c-coefficients are kept, so `degree_c()` is exact.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<UniPoly> c_coeffs);

  static BiPoly constant(const BigRat& v);
  static BiPoly t();
  static BiPoly c();
  /// Lift a polynomial in t.
  static BiPoly from_t(const UniPoly& p);

  bool is_zero() const { return c_coeffs_.empty(); }
  int degree_c() const { return static_cast<int>(c_coeffs_.size()) - 1; }
  int degree_t() const;
  UniPoly coeff_c(std::size_t j) const;
  BigRat coeff(std::size_t i_t, std::size_t j_c) const { return coeff_c(j_c).coeff(i_t); }

  /// Polynomial in c after fixing t.
  UniPoly eval_t(const BigRat& t) const;
  BigRat eval(const BigRat& t, const BigRat& c) const;

  BiPoly pow(unsigned k) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  BiPoly& operator*=(const BiPoly& rhs);
  BiPoly& operator*=(const BigRat& k);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
  friend BiPoly operator*(BiPoly a, const BigRat& k) { return a *= k; }
  friend BiPoly operator*(const BigRat& k, BiPoly a) { return a *= k; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_coeffs_ == b.c_coeffs_; }

  std::string to_string() const;

 private:
  void trim();

  std::vector<UniPoly> c_coeffs_;
};

/// Quotient a / b viewing both as polynomials in c over Q[t]; throws
/// NotDivisible when the division leaves a remainder or a leading
/// coefficient division is not exact in Q[t].
BiPoly exact_div(const BiPoly& a, const BiPoly& b);

}  // namespace coorbital::exactq
