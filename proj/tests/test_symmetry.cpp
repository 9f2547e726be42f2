#include "coorbital/symmetry/classify.hpp"
#include "coorbital/symmetry/diagonal.hpp"
#include "coorbital/symmetry/prop5.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

using namespace coorbital;
using namespace coorbital::symmetry;

namespace {

constexpr double kPi = std::numbers::pi;
const forcefun::ForceLaw kNewton = forcefun::ForceLaw::newtonian();

const Prop5Pipeline& pipeline() {
  static const Prop5Pipeline pl = run_prop5_pipeline();
  return pl;
}

bool has(const std::vector<SymmetryClass>& v, SymmetryClass c) { return std::find(v.begin(), v.end(), c) != v.end(); }

std::string coeff(const UniPoly& p, int k) { return p.coeff(static_cast<std::size_t>(k)).get_str(); }

GapConfig random_config(std::mt19937_64& rng, std::size_t n) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> g(n);
  double sum = 0;
  for (auto& x : g) sum += (x = e(rng) + 1e-3);
  for (auto& x : g) x *= 2 * kPi / sum;
  double total = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) total += g[i];
  g.back() = 2 * kPi - total;
  return GapConfig(g);
}

}  // namespace

TEST_CASE("gap configurations validate their invariants") {
  CHECK_THROWS_AS(GapConfig({1.0, 2.0, 3.0}), InvalidConfig);
  CHECK_THROWS_AS(GapConfig({2 * kPi, 0.0}), InvalidConfig);
  CHECK_THROWS_AS(GapConfig({2 * kPi + 1, -1.0}), InvalidConfig);
  CHECK_NOTHROW(GapConfig({kPi, kPi}));
  const GapConfig sq = GapConfig::regular(4);
  CHECK(sq.angles()[3] == doctest::Approx(1.5 * kPi));
  CHECK(GapConfig::from_degrees({60, 120, 120, 60})[1] == doctest::Approx(2 * kPi / 3));
}

TEST_CASE("canonical form is idempotent and symmetry invariant") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 500; ++i) {
    const GapConfig x = random_config(rng, 3 + static_cast<std::size_t>(i % 6));
    const GapConfig cx = canonical(x);
    REQUIRE(canonical(cx) == cx);
    for (std::size_t k = 0; k < x.size(); ++k) {
      REQUIRE(canonical(x.rotated(k)) == cx);
      REQUIRE(canonical(x.reflected().rotated(k)) == cx);
    }
    REQUIRE(config_distance(x, x.reflected().rotated(2)) == 0.0);
  }
}

TEST_CASE("residual examples") {
  const GapConfig e1({kPi / 3, 2 * kPi / 3, 2 * kPi / 3, kPi / 3});
  CHECK(max_abs(residual(e1, kNewton)) <= 1e-14);
  CHECK(max_abs(residual(GapConfig::regular(4), kNewton)) <= 1e-14);

  const GapConfig spot({kPi / 6, kPi / 6, kPi / 6, 1.5 * kPi});
  const auto r = residual(spot, kNewton);
  // f23 = f(pi/3) = 0, so the last component is f3 - f4.
  const double expected = 3 * (2 * (std::sqrt(2.0) - 1) + std::sqrt(6.0));
  CHECK(std::abs(-4 * r[3] - expected) <= 1e-12 * expected);
  // Direct evaluation of sin(x) (1 - (2 sin(x/2))^-3) at 3pi/2 and pi/6.
  auto f = [](double x) { return std::sin(x) * (1 - std::pow(2 * std::sin(x / 2), -3.0)); };
  CHECK(4 * (f(1.5 * kPi) - f(kPi / 6)) == doctest::Approx(expected).epsilon(1e-12));
  CHECK_THROWS_AS(residual(GapConfig::regular(5), kNewton), std::invalid_argument);

  // 50-digit residual agrees with the double one.
  const std::array<HighFloat, 4> g{HighFloat(spot[0]), HighFloat(spot[1]), HighFloat(spot[2]), HighFloat(spot[3])};
  const auto rh = residual_high(g, HighFloat(-3));
  for (int i = 0; i < 4; ++i) CHECK(static_cast<double>(rh[i]) == doctest::Approx(r[i]).epsilon(1e-12));
}

TEST_CASE("symmetric chart round trip") {
  const GapConfig e2 = *pipeline().e2;
  const SymmetricChart chart = SymmetricChart::from_gaps(e2);
  const GapConfig back = chart.gaps();
  for (std::size_t i = 0; i < 4; ++i) CHECK(back[i] == doctest::Approx(e2[i]).epsilon(1e-14));
  CHECK(chart.S() > 0);
  CHECK(chart.C() > 0);
  CHECK(chart.t() == doctest::Approx(exactq::to_double(pipeline().t2_refined.lo)).epsilon(1e-12));
}

TEST_CASE("symmetry classification") {
  const GapConfig e1({kPi / 3, 2 * kPi / 3, 2 * kPi / 3, kPi / 3});
  const auto c1 = classify_symmetry(e1, kNewton);
  CHECK(has(c1, SymmetryClass::kAdjacentEqual));
  CHECK(has(c1, SymmetryClass::kDiagonalDiameter));
  CHECK(!has(c1, SymmetryClass::kOppositeEqual));

  const auto c3 = classify_symmetry(GapConfig::regular(4), kNewton);
  CHECK(c3.size() == 3);

  const auto c2 = classify_symmetry(*pipeline().e2, kNewton);
  REQUIRE(c2.size() == 1);
  CHECK(c2[0] == SymmetryClass::kOppositeEqual);

  CHECK_THROWS_AS(classify_symmetry(GapConfig({1.0, 1.5, 2.0, 2 * kPi - 4.5}), kNewton), NotCentral);
  CHECK(symmetry_classes(GapConfig({1.0, 1.5, 2.0, 2 * kPi - 4.5}))[0] == SymmetryClass::kAsymmetric);
  CHECK(to_string(SymmetryClass::kDiagonalDiameter) == "diagonal-diameter");
}

TEST_CASE("theorem inequalities") {
  const GapConfig e2 = *pipeline().e2;
  CHECK(theorem_inequalities(e2).passed);
  CHECK(theorem_inequalities(e2.rotated(3)).passed);
  CHECK(theorem_inequalities(e2.reflected().rotated(1)).passed);
  const TheoremCheck sq = theorem_inequalities(GapConfig::regular(4));
  CHECK(!sq.passed);
  CHECK(std::find(sq.failures.begin(), sq.failures.end(), "t4 <= pi") != sq.failures.end());
  CHECK(theorem_inequalities(e2.rotated(3)).normalized[3] == e2[3]);
}

TEST_CASE("diagonal branch") {
  const DiagonalScan scan = scan_diagonal_branch(kNewton, 1e-14);
  REQUIRE(scan.configs.size() == 2);
  CHECK(std::abs(scan.angles[0] - kPi / 3) <= 1e-10);
  CHECK(std::abs(scan.angles[1] - kPi / 2) <= 1e-10);
  // pi/3, pi/2 and the rotated copy of E1 at 2pi/3.
  CHECK(scan.roots.size() == 3);
  for (const auto& cfg : scan.configs) {
    double sum = 0;
    for (double g : cfg.gaps()) sum += g;
    CHECK(std::abs(sum - 2 * kPi) <= 1e-12);
    CHECK(max_abs(residual(cfg, kNewton)) <= 1e-12);
  }

  // Dense oracle: ten times finer grid, same sign changes.
  int changes = 0;
  double prev = diagonal_equation(0.5 * kPi / 100000, kNewton);
  for (int i = 1; i < 100000; ++i) {
    const double h = diagonal_equation((i + 0.5) * kPi / 100000, kNewton);
    changes += (h < 0) != (prev < 0);
    prev = h;
  }
  CHECK(changes == 3);

  // The square from the diagonal branch matches the square branch of the pipeline.
  CHECK(config_distance(scan.configs[1], pipeline().e3) <= 1e-12);
}

TEST_CASE("no central configuration with t1 = t2 and t3 != t4") {
  // Only t1 + t4 = 5pi/3, t2 + t3 = pi/3 remains; scan it.
  double smallest = 1e300;
  for (int i = 0; i < 1000; ++i) {
    const double x = (i + 0.5) * (kPi / 3) / 1000;
    const GapConfig g({x, x, kPi / 3 - x, 5 * kPi / 3 - x});
    smallest = std::min(smallest, max_abs(residual(g, kNewton)));
  }
  CHECK(smallest > 1e-8);
}

TEST_CASE("no central configuration with t1 + t4 = t2 + t3 = pi and t1 != t2") {
  constexpr int kSide = 33;
  double smallest = 1e300;
  int points = 0;
  for (int i = 0; i < kSide; ++i) {
    for (int j = 0; j < kSide; ++j) {
      if (i == j) continue;
      const double a = (i + 0.5) * kPi / kSide, b = (j + 0.5) * kPi / kSide;
      const GapConfig g({a, b, kPi - b, kPi - a});
      smallest = std::min(smallest, max_abs(residual(g, kNewton)));
      ++points;
    }
  }
  CHECK(points >= 1000);
  CHECK(smallest > 1e-8);
}

TEST_CASE("P6 and Q7 leading terms") {
  const BiPoly p6 = build_p6(), q7 = build_q7();
  // -32 t (t^2-1)^3 (1+t^2)^4 at t = 2: -32 * 2 * 27 * 625.
  CHECK(p6.coeff_c(6).eval(BigRat(2)) == -32 * 2 * 27 * 625);
  // -64 t^2 (1+t^2)^4 at t = 2.
  CHECK(q7.coeff_c(7).eval(BigRat(2)) == -64 * 4 * 625);
  CHECK(p6.degree_c() == 6);
  CHECK(q7.degree_c() == 7);
  CHECK(at_c(p6, BigRat(1, 3)).eval(BigRat(2, 5)) == p6.eval(BigRat(2, 5), BigRat(1, 3)));
}

TEST_CASE("pipeline stages all pass") {
  const Prop5Pipeline& pl = pipeline();
  INFO(stage_log(pl));
  REQUIRE(pl.passed());
  std::string ids;
  for (const auto& s : pl.stages) ids += s.stage;
  CHECK(ids == "abcdefgh");
}

TEST_CASE("resultant factorization and R78") {
  const Prop5Pipeline& pl = pipeline();
  CHECK(pl.resultant_scale == -524288);
  CHECK(pl.r78.degree() == 78);
  const std::vector<std::string> head{"1", "12", "77", "464", "-64992"};
  for (int i = 0; i < 5; ++i) CHECK(coeff(pl.r78, 78 - i) == head[static_cast<std::size_t>(i)]);
  CHECK(coeff(pl.r78, 39) == "-104961536141944");
  const std::vector<std::string> tail{"-1", "-12", "-77", "-464", "77790"};
  for (int k = 0; k < 5; ++k) CHECK(coeff(pl.r78, k) == tail[static_cast<std::size_t>(k)]);

  // Rebuild R from its factors and compare with the resultant itself.
  const UniPoly t = UniPoly::identity('t');
  const UniPoly rebuilt = BigRat(-524288) * t.pow(5) * UniPoly({-1, 0, 1}, 't').pow(16) *
                          UniPoly({1, 0, 1}, 't').pow(32) * pl.r78;
  CHECK(rebuilt == pl.resultant);
}

TEST_CASE("root isolation of R78") {
  const Prop5Pipeline& pl = pipeline();
  REQUIRE(pl.substitutions.size() == 4);
  const int expected[4] = {0, 1, 1, 0};
  for (int i = 0; i < 4; ++i) CHECK(pl.substitutions[static_cast<std::size_t>(i)].variations == expected[i]);
  CHECK(pl.t1.lo == BigRat(1, 3));
  CHECK(pl.t1.hi == BigRat(7, 20));
  CHECK(pl.t2.lo == BigRat(7, 20));
  CHECK(pl.t2.hi == BigRat(7, 10));
  // Sign changes of R78 at the break points confirm one root on each side of 7/20.
  CHECK(exactq::sign(pl.r78.eval(BigRat(1, 3))) != exactq::sign(pl.r78.eval(BigRat(7, 20))));
  CHECK(exactq::sign(pl.r78.eval(BigRat(7, 20))) != exactq::sign(pl.r78.eval(BigRat(7, 10))));
  CHECK(pl.t2_refined.lo > BigRat(3, 5));
  CHECK(pl.t2_refined.hi < BigRat(7, 10));
}

TEST_CASE("F, N and D") {
  const Prop5Pipeline& pl = pipeline();
  CHECK(pl.f_scale == BigRat(1, 8));
  CHECK(pl.n.degree() == 56);
  CHECK(pl.d.degree() == 59);
  const std::vector<std::string> nh{"1", "8", "42", "248", "-48461"}, nt{"-1", "-8", "-42", "-248", "47947"};
  for (int i = 0; i < 5; ++i) {
    CHECK(coeff(pl.n, 56 - i) == nh[static_cast<std::size_t>(i)]);
    CHECK(coeff(pl.n, i) == nt[static_cast<std::size_t>(i)]);
  }
  CHECK(coeff(pl.n, 28) == "284953591140");
  const std::vector<std::string> dh{"15", "7", "83"}, dt{"-17", "-25", "-141"};
  for (int i = 0; i < 3; ++i) {
    CHECK(coeff(pl.d, 59 - i) == dh[static_cast<std::size_t>(i)]);
    CHECK(coeff(pl.d, i) == dt[static_cast<std::size_t>(i)]);
  }
  CHECK(coeff(pl.d, 30) == "807713099949204");

  // -M17 * denominator == M18 * numerator, the defining relation of F.
  const BigRat x(5, 11);
  CHECK(-pl.m17.eval(x) / pl.m18.eval(x) == eval_f(pl, x));

  CHECK(pl.f_at_7_20 > 1);
  CHECK(pl.f_at_3_5 > 0);
  CHECK(pl.f_at_7_10 < 1);
  CHECK(pl.d_on_quarter_half.variations == 0);
  CHECK(pl.f_prime_on_quarter_half.variations == 0);
  // Decreasing on (1/4, 1/2): sample a few exact values.
  BigRat prev = eval_f(pl, BigRat(1, 4) + BigRat(1, 1000));
  for (int k = 1; k <= 20; ++k) {
    const BigRat x2 = BigRat(1, 4) + BigRat(k, 81);
    if (x2 >= BigRat(1, 2)) break;
    const BigRat v = eval_f(pl, x2);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("E2 recovery") {
  const Prop5Pipeline& pl = pipeline();
  REQUIRE(pl.e2);
  const auto d = pl.e2->degrees();
  CHECK(std::abs(d[0] - 41.5) <= 0.05);
  CHECK(std::abs(d[2] - 41.5) <= 0.05);
  CHECK(std::abs(d[1] - 37.4) <= 0.05);
  CHECK(std::abs(d[3] - 239.6) <= 0.05);
  CHECK(pl.e2_residual <= HighFloat("1e-20"));
  // c = F(t2) really is a common root of P6(t2, .) and Q7(t2, .).
  const BigRat mid = (pl.t2_refined.lo + pl.t2_refined.hi) / 2;
  const BigRat c = eval_f(pl, mid);
  CHECK(std::abs(pl.p6.eval(mid, c).get_d()) < 1e-30);
  CHECK(std::abs(pl.q7.eval(mid, c).get_d()) < 1e-30);
  CHECK(max_abs(residual(*pl.e2, kNewton)) <= 1e-13);
}

TEST_CASE("corrupted artifacts fail at their stage") {
  PipelineOptions opt;
  opt.corrupt = Corruption::kR78Coefficient;
  const Prop5Pipeline bad = run_prop5_pipeline(opt);
  REQUIRE(bad.failed_stage);
  CHECK(*bad.failed_stage == 'd');
  CHECK(bad.stages.size() == 4);
  CHECK(bad.stages.back().detail.find("R78 [t^39]") != std::string::npos);
  CHECK(!bad.passed());

  opt.corrupt = Corruption::kNCoefficient;
  const Prop5Pipeline bad_n = run_prop5_pipeline(opt);
  REQUIRE(bad_n.failed_stage);
  CHECK(*bad_n.failed_stage == 'f');
}

TEST_CASE("pipeline report") {
  const nlohmann::json j = to_json(pipeline());
  CHECK(j["passed"] == true);
  CHECK(j["stages"].size() == 8);
  CHECK(j["artifacts"]["R78"].size() == 79);
  CHECK(j["artifacts"]["F(7/20)"].get<std::string>().find('/') != std::string::npos);
  CHECK(stage_log(pipeline()).find("pipeline passed") != std::string::npos);
}
