#include "coorbital/exactq/bigrat.hpp"

#include <cmath>

namespace coorbital::exactq {

std::string to_string(const BigRat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigRat parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  BigRat q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
  q.canonicalize();
  return q;
}

BigRat from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
  BigRat q(x);
  return q;
}

double to_double(const BigRat& q) { return q.get_d(); }

int sign(const BigRat& q) { return sgn(q); }

BigRat pow(const BigRat& base, unsigned exponent) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  BigRat out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace coorbital::exactq
