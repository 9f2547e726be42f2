#pragma once

#include "coorbital/isolate/mobius.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace coorbital::isolate {

class EndpointRoot : public Error {
 public:
  using Error::Error;
};

class DenominatorVanishes : public Error {
 public:
  using Error::Error;
};

/// Open interval (lo, hi); an empty `hi` means +infinity.
struct Interval {
  BigRat lo;
  std::optional<BigRat> hi;

  static Interval bounded(BigRat lo, BigRat hi) { return {std::move(lo), std::move(hi)}; }
  static Interval ray(BigRat lo) { return {std::move(lo), std::nullopt}; }
  /// A rational strictly inside the interval.
  BigRat interior_point() const;
  std::string to_string() const;
};

/// Node of a Descartes/Vincent certificate tree. A leaf proves that the
/// substituted numerator has `variations` (0 or 1) sign changes, hence that
/// many roots in `interval`. An inner node is split at `split`.
struct Certificate {
  Interval interval;
  MobiusMap map{0, 1, 1, 0};
  std::string signs;
  int variations = 0;
  int roots = 0;
  std::optional<BigRat> split;
  std::vector<Certificate> children;
  /// Perturbed split points, Cauchy bounds and similar side facts.
  std::vector<std::string> notes;
};

nlohmann::json to_json(const Certificate& c);

struct IsolationInterval {
  BigRat lo;
  BigRat hi;
  int root_count = 1;
  Certificate certificate;
};

struct RootCount {
  /// Distinct real roots in the interval.
  int count = 0;
  /// One entry per root, each proven by a single-variation leaf.
  std::vector<IsolationInterval> isolating;
  Certificate certificate;
};

/// Exact count of distinct real roots of p in an open interval by Descartes'
/// rule of signs after Mobius substitution, bisecting until every piece has
/// 0 or 1 sign variations. Throws EndpointRoot when p vanishes at a finite
/// endpoint, exactq::DegenerateInput for p == 0 and std::invalid_argument for
/// an empty interval.
RootCount count_roots_in(const UniPoly& p, const Interval& interval);
RootCount count_roots_in(const UniPoly& p, const BigRat& lo, const BigRat& hi);

/// Shrinks an interval holding exactly one simple root by exact bisection
/// until hi - lo <= precision. The result keeps p(lo) * p(hi) < 0.
std::pair<BigRat, BigRat> refine_root(const UniPoly& p, const IsolationInterval& iv, const BigRat& precision);
std::pair<BigRat, BigRat> refine_root(const UniPoly& p, BigRat lo, BigRat hi, const BigRat& precision);

/// Proof that num/den has constant sign on an open interval.
struct SignCertificate {
  int sign = 0;
  Certificate numerator;
  std::optional<Certificate> denominator;
  /// Powers of (x - lo) / (hi - x) divided out of the numerator because it
  /// vanishes at an endpoint.
  int endpoint_factors = 0;
};

/// num/den vanishes inside (lo, hi); signs at the endpoints are recorded.
struct SignCounterexample {
  BigRat lo;
  BigRat hi;
  int sign_lo = 0;
  int sign_hi = 0;
};

using SignOutcome = std::variant<SignCertificate, SignCounterexample>;

/// Certifies that num/den keeps one sign on the interval or produces a
/// counterexample. The denominator is certified root free first; a root of
/// den in the closed interval throws DenominatorVanishes.
SignOutcome certify_positive(const UniPoly& num, const UniPoly& den, const Interval& interval);
SignOutcome certify_positive(const UniPoly& num, const UniPoly& den, const BigRat& lo, const BigRat& hi);

nlohmann::json to_json(const SignOutcome& outcome);

}  // namespace coorbital::isolate
