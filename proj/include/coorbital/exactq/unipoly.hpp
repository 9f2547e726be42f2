#pragma once

#include "coorbital/exactq/bigrat.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace coorbital::exactq {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
///
/// The coefficient vector never carries trailing zeros, so the degree is the
/// index of the last stored coefficient and the zero polynomial is the empty
/// vector (degree -1). The variable tag is informational except that binary
/// arithmetic between two non-constant polynomials requires matching tags.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigRat> coeffs, char var = 't');
  UniPoly(std::initializer_list<long> coeffs, char var);

  static UniPoly constant(const BigRat& c, char var = 't');
  static UniPoly monomial(const BigRat& c, unsigned k, char var = 't');
  /// The polynomial `var` itself.
  static UniPoly identity(char var = 't');

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  char var() const { return var_; }
  UniPoly with_var(char var) const;

  /// Coefficient of var^k; zero beyond the degree.
  BigRat coeff(std::size_t k) const;
  std::span<const BigRat> coeffs() const { return coeffs_; }
  /// Leading coefficient; zero for the zero polynomial.
  BigRat leading() const;

  bool has_integer_coeffs() const;

  BigRat eval(const BigRat& x) const;
  double eval(double x) const;
  /// Horner evaluation in any field constructible from a decimal rational.
  template <class Real, class Convert>
  Real eval_as(const Real& x, Convert&& convert) const {
    Real acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + convert(*it);
    return acc;
  }

  UniPoly derivative() const;
  /// this(inner(x)).
  UniPoly compose(const UniPoly& inner) const;
  UniPoly pow(unsigned k) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const UniPoly& rhs);
  UniPoly& operator*=(const BigRat& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const BigRat& c) { return a *= c; }
  friend UniPoly operator*(const BigRat& c, UniPoly a) { return a *= c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  void trim();
  char merged_var(const UniPoly& rhs) const;

  std::vector<BigRat> coeffs_;
  char var_ = 't';
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

/// Euclidean division over Q. Throws DegenerateInput for a zero divisor.
DivMod divmod(const UniPoly& a, const UniPoly& b);

/// Quotient a / b; throws NotDivisible when the remainder is nonzero.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

/// Positive rational c such that p / c has coprime integer coefficients,
/// times the sign of the leading coefficient.
BigRat content(const UniPoly& p);

/// p / content(p): integer coefficients, gcd 1, positive leading coefficient.
UniPoly primitive_part(const UniPoly& p);

/// Monic greatest common divisor (primitive remainder sequence over Z).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// p / gcd(p, p'), normalised to its primitive part.
UniPoly squarefree_part(const UniPoly& p);

/// Multiplicity of the factor `factor` in `p` (p nonzero), stripping it out
/// of `p` in place.
unsigned strip_factor(UniPoly& p, const UniPoly& factor);

}  // namespace coorbital::exactq
