#include "coorbital/forcefun/half_angle.hpp"
#include "coorbital/isolate/descartes.hpp"

#include <doctest.h>

#include <random>

using namespace coorbital;
using namespace coorbital::isolate;
using exactq::BigRat;

namespace {

UniPoly y_poly(std::initializer_list<long> c) { return UniPoly(c, 'y'); }

BigRat rat(long num, long den) {
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

// Sturm sequence count of distinct roots in (a, b], an exact oracle
// independent of the Descartes machinery.
int sturm_count(const UniPoly& p, const BigRat& a, const BigRat& b) {
  std::vector<UniPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    UniPoly r = exactq::divmod(seq[seq.size() - 2], seq.back()).remainder;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  auto variations = [&](const BigRat& x) {
    int v = 0, prev = 0;
    for (const auto& q : seq) {
      const int s = exactq::sign(q.eval(x));
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  };
  return variations(a) - variations(b);
}

UniPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coef(-20, 20), kind(0, 1), deg(1, 12), root(-12, 12), den(1, 4);
  if (kind(rng) == 0) {
    std::vector<BigRat> c(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& x : c) x = coef(rng);
    if (c.back() == 0) c.back() = 1;
    return UniPoly(std::move(c), 'x');
  }
  // Products of linear factors, some repeated, and an irreducible quadratic.
  UniPoly p = UniPoly::constant(1, 'x');
  const int factors = static_cast<int>(deg(rng) / 2 + 1);
  for (int i = 0; i < factors; ++i) {
    const UniPoly lin({rat(-root(rng), den(rng)), BigRat(1)}, 'x');
    p *= lin;
    if (kind(rng) == 1) p *= lin;
  }
  return p * UniPoly({1, 0, 1}, 'x');
}

}  // namespace

TEST_CASE("Mobius substitution") {
  const UniPoly s = UniPoly::identity('s');
  CHECK(mobius_numerator(s, MobiusMap(0, 1, 1, 1)) == y_poly({0, 1}));
  CHECK_THROWS_AS(MobiusMap(1, 2, 2, 4), exactq::DegenerateInput);
  CHECK_THROWS_AS(mobius_numerator(UniPoly(), MobiusMap(0, 1, 1, 1)), exactq::DegenerateInput);
  const MobiusMap m = MobiusMap::onto_interval(BigRat(1, 3), BigRat(7, 20));
  CHECK(*m.image_of_zero() == BigRat(1, 3));
  CHECK(*m.image_of_infinity() == BigRat(7, 20));
  CHECK(!MobiusMap::onto_ray(2).image_of_infinity());
}

TEST_CASE("Mobius composition agrees up to a positive constant") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> c(1, 9);
  for (int i = 0; i < 200; ++i) {
    const UniPoly p({BigRat(c(rng) - 5), BigRat(c(rng) - 5), BigRat(c(rng) - 5), BigRat(c(rng))}, 'x');
    const MobiusMap m1(c(rng), c(rng) + 10, c(rng), c(rng));
    const MobiusMap m2(0, c(rng), c(rng), c(rng));
    const UniPoly lhs = mobius_numerator(mobius_numerator(p, m1).with_var('x'), m2, p.degree());
    const UniPoly rhs = mobius_numerator(p, m1.compose(m2));
    REQUIRE(lhs.degree() == rhs.degree());
    const BigRat ratio = lhs.leading() / rhs.leading();
    REQUIRE(ratio > 0);
    REQUIRE(lhs == rhs * ratio);
  }
}

TEST_CASE("sign variations") {
  CHECK(sign_variations(y_poly({-1, 0, 1})) == 1);
  CHECK(sign_variations(y_poly({24, 168, 484, 740, 641, 275, 7, 37})) == 0);
  CHECK(sign_variations(y_poly({1, -1, 0, 1, -1})) == 3);
  CHECK_THROWS_AS(sign_variations(UniPoly()), exactq::DegenerateInput);
  CHECK(sign_pattern(y_poly({1, 0, -2})) == "+-");
}

TEST_CASE("root counting examples") {
  CHECK(count_roots_in(UniPoly({1, 0, 1}, 'x'), BigRat(-10), BigRat(10)).count == 0);
  const auto d = forcefun::f_derivatives_exact(forcefun::ForceLaw::newtonian());
  const RootCount rc = count_roots_in(d.d1.even, BigRat(0), BigRat(1));
  CHECK(rc.count == 1);
  CHECK(rc.isolating.size() == 1);
  // The root is s = sin(theta_c / 2) > sin(pi/4).
  CHECK(rc.isolating[0].hi > BigRat(7, 10));
  CHECK(count_roots_in(d.d1.even, BigRat(0), BigRat(7, 10)).count == 0);
  CHECK_THROWS_AS(count_roots_in(UniPoly({-1, 0, 1}, 'x'), BigRat(1), BigRat(2)), EndpointRoot);
  CHECK_THROWS_AS(count_roots_in(UniPoly({-1, 0, 1}, 'x'), BigRat(2), BigRat(1)), std::invalid_argument);
  CHECK(count_roots_in(UniPoly({-4, 0, 1}, 'x'), Interval::ray(0)).count == 1);
  CHECK(count_roots_in(UniPoly({-1, 1}, 'x').pow(3), BigRat(0), BigRat(2)).count == 1);
  CHECK(to_json(rc.certificate).contains("variations"));
}

TEST_CASE("Descartes counts match Sturm sequences") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> end(-40, 40), den(1, 3);
  int checked = 0;
  while (checked < 1000) {
    const UniPoly p = random_poly(rng);
    BigRat a = rat(end(rng), den(rng)), b = rat(end(rng), den(rng));
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    if (p.eval(a) == 0 || p.eval(b) == 0) continue;
    const UniPoly sf = exactq::squarefree_part(p);
    REQUIRE(count_roots_in(p, a, b).count == sturm_count(sf, a, b));
    ++checked;
  }
}

TEST_CASE("root counts are additive over a split") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> end(-40, 40);
  for (int i = 0; i < 300; ++i) {
    const UniPoly p = random_poly(rng);
    BigRat pts[3] = {rat(end(rng), 3), rat(end(rng), 3), rat(end(rng), 3)};
    std::sort(pts, pts + 3);
    if (pts[0] == pts[1] || pts[1] == pts[2]) continue;
    if (p.eval(pts[0]) == 0 || p.eval(pts[1]) == 0 || p.eval(pts[2]) == 0) continue;
    REQUIRE(count_roots_in(p, pts[0], pts[1]).count + count_roots_in(p, pts[1], pts[2]).count ==
            count_roots_in(p, pts[0], pts[2]).count);
  }
}

TEST_CASE("root refinement keeps the sign change") {
  const UniPoly p({-2, 0, 1}, 'x');
  const auto [lo, hi] = refine_root(p, BigRat(1), BigRat(2), BigRat(1, 10000000000L));
  CHECK(hi - lo <= BigRat(1, 10000000000L));
  CHECK(lo.get_d() <= 1.41421356237 + 1e-10);
  CHECK(hi.get_d() >= 1.41421356237 - 1e-10);
  CHECK(p.eval(lo) * p.eval(hi) < 0);
  CHECK_THROWS_AS(refine_root(p, BigRat(1), BigRat(2), BigRat(0)), std::invalid_argument);

  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    const UniPoly q = random_poly(rng);
    const RootCount rc = count_roots_in(q, BigRat(-50), BigRat(51, 2));
    for (const auto& iv : rc.isolating) {
      const UniPoly sf = exactq::squarefree_part(q);
      const auto [l, h] = refine_root(sf, iv, BigRat(1, 1000000));
      REQUIRE(sf.eval(l) * sf.eval(h) < 0);
      REQUIRE(l >= iv.lo);
      REQUIRE(h <= iv.hi);
    }
  }
}

TEST_CASE("sign certificates") {
  const SignOutcome neg = certify_positive(UniPoly({-2, 1}, 'x'), UniPoly::constant(1, 'x'), BigRat(0), BigRat(1));
  REQUIRE(std::holds_alternative<SignCertificate>(neg));
  CHECK(std::get<SignCertificate>(neg).sign == -1);

  const UniPoly a = y_poly({24, 168, 484, 740, 641, 275, 7, 37});
  const SignOutcome pos = certify_positive(a, UniPoly::constant(1, 'y'), Interval::ray(0));
  REQUIRE(std::holds_alternative<SignCertificate>(pos));
  CHECK(std::get<SignCertificate>(pos).sign == 1);

  const SignOutcome mixed = certify_positive(UniPoly({-1, 2}, 'x'), UniPoly::constant(1, 'x'), BigRat(0), BigRat(1));
  REQUIRE(std::holds_alternative<SignCounterexample>(mixed));
  const auto& ce = std::get<SignCounterexample>(mixed);
  CHECK(ce.sign_lo * ce.sign_hi < 0);

  // (x - 1/2)^2 vanishes at the endpoint only: still sign definite inside.
  const SignOutcome touch =
      certify_positive(UniPoly({-1, 2}, 'x').pow(2), UniPoly({1, 1}, 'x'), BigRat(1, 2), BigRat(1));
  REQUIRE(std::holds_alternative<SignCertificate>(touch));
  CHECK(std::get<SignCertificate>(touch).endpoint_factors == 2);

  CHECK_THROWS_AS(certify_positive(UniPoly({1}, 'x'), UniPoly({-1, 2}, 'x'), BigRat(0), BigRat(1)),
                  DenominatorVanishes);
  CHECK(to_json(pos)["sign"] == 1);
}
