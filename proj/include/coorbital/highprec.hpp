#pragma once

#include "coorbital/exactq/bigrat.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace coorbital {

/// 50 significant decimal digits.
using HighFloat = boost::multiprecision::cpp_bin_float_50;

inline HighFloat to_high(const exactq::BigRat& q) {
  return HighFloat(q.get_num().get_str()) / HighFloat(q.get_den().get_str());
}

inline HighFloat high_pi() { return boost::math::constants::pi<HighFloat>(); }

/// Rational k / 2^bits with k = floor(x * 2^bits) (or ceil when round_up).
inline exactq::BigRat dyadic_bound(const HighFloat& x, unsigned bits, bool round_up) {
  HighFloat scaled = ldexp(x, static_cast<int>(bits));
  scaled = round_up ? ceil(scaled) : floor(scaled);
  exactq::BigInt k(scaled.convert_to<boost::multiprecision::cpp_int>().str());
  exactq::BigInt den = 1;
  den <<= bits;
  exactq::BigRat out(k, den);
  out.canonicalize();
  return out;
}

}  // namespace coorbital
