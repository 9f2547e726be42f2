#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace coorbital {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace coorbital

namespace coorbital::exactq {

/// Arbitrary-precision integer.
using BigInt = mpz_class;

/// Arbitrary-precision rational. GMP keeps every value canonical: the
/// denominator is positive, gcd(|num|, den) = 1, and zero is 0/1.
using BigRat = mpq_class;

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// "num/den" with both parts in decimal; integers keep the "/1".
std::string to_string(const BigRat& q);

/// Accepts "num/den" or a bare integer. Throws std::invalid_argument.
BigRat parse_rational(std::string_view text);

/// Exact conversion of a finite double.
BigRat from_double(double x);

double to_double(const BigRat& q);

/// -1, 0 or +1.
int sign(const BigRat& q);

BigRat pow(const BigRat& base, unsigned exponent);

}  // namespace coorbital::exactq
