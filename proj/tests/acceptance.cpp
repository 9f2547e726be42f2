// Acceptance run: one PASS/FAIL line per criterion. Arguments select a
// subset of criteria by number; no arguments runs all ten.

#include "coorbital/forcefun/chords.hpp"
#include "coorbital/forcefun/properties.hpp"
#include "coorbital/forcefun/rho.hpp"
#include "coorbital/isolate/descartes.hpp"
#include "coorbital/solver/continuation.hpp"
#include "coorbital/solver/solve.hpp"
#include "coorbital/symmetry/classify.hpp"
#include "coorbital/symmetry/diagonal.hpp"
#include "coorbital/symmetry/prop5.hpp"
#include "coorbital/symmetry/residual.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace coorbital;
using exactq::BigRat;
using exactq::UniPoly;

namespace {

constexpr double kPi = std::numbers::pi;
const forcefun::ForceLaw kNewton = forcefun::ForceLaw::newtonian();

struct Outcome {
  bool pass = true;
  std::vector<std::string> lines;
  std::vector<std::string> flags;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      lines.push_back("failed: " + what);
    }
  }
  void info(const std::string& what) { lines.push_back(what); }
  void flag(const std::string& what) { flags.push_back(what); }
};

const symmetry::Prop5Pipeline& pipeline() {
  static const symmetry::Prop5Pipeline pl = symmetry::run_prop5_pipeline();
  return pl;
}

double seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string num(double x, int digits = 6) {
  std::ostringstream s;
  s.precision(digits);
  s << x;
  return s.str();
}

UniPoly y_poly(std::initializer_list<long> highest_first) {
  std::vector<BigRat> c;
  for (long v : highest_first) c.emplace_back(v);
  std::reverse(c.begin(), c.end());
  return UniPoly(c, 'y');
}

// Head from the leading coefficient down, tail ending at the constant term.
void expect_quoted(Outcome& o, const std::string& name, const UniPoly& p, int degree,
                   const std::vector<std::string>& head, int middle_power, const std::string& middle,
                   const std::vector<std::string>& tail) {
  o.check(p.degree() == degree, name + " degree " + std::to_string(p.degree()));
  for (std::size_t i = 0; i < head.size(); ++i) {
    const std::size_t k = static_cast<std::size_t>(degree) - i;
    o.check(p.coeff(k).get_str() == head[i], name + " [t^" + std::to_string(k) + "]");
  }
  if (!middle.empty()) {
    o.check(p.coeff(static_cast<std::size_t>(middle_power)).get_str() == middle,
            name + " [t^" + std::to_string(middle_power) + "]");
  }
  for (std::size_t i = 0; i < tail.size(); ++i) {
    const std::size_t k = tail.size() - 1 - i;
    o.check(p.coeff(k).get_str() == tail[i], name + " [t^" + std::to_string(k) + "]");
  }
}

// ---- 1, 2: certificate polynomials -----------------------------------------

Outcome criterion1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const forcefun::YCertificate c = forcefun::y_certificate(forcefun::f_derivatives_exact(kNewton).d3);
  const double t = seconds(t0);
  o.check(c.polynomial == y_poly({37, 7, 275, 641, 740, 484, 168, 24}), "polynomial " + c.polynomial.to_string());
  o.check(t < 1.0, "runtime " + num(t) + " s");
  o.info(c.polynomial.to_string() + " in " + num(t, 3) + " s");
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const forcefun::YCertificate c = forcefun::y_certificate(forcefun::f_derivatives_exact(kNewton).inverse_third);
  const double t = seconds(t0);
  o.check(c.polynomial ==
              y_poly({259, 7412, 16934, 32960, 42564, 39236, 35306, 32904, 24389, 12208, 3880, 720, 60}),
          "polynomial " + c.polynomial.to_string());
  o.check(c.scale == 256 && c.y_power == 8 && c.one_plus_y_power == 4, "prefactor 256 y^8 (1+y)^4");
  o.check(t < 1.0, "runtime " + num(t) + " s");
  o.info("13 coefficients in " + num(t, 3) + " s");
  return o;
}

// ---- 3, 4, 5: elimination pipeline ---------------------------------------

Outcome criterion3() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto& pl = pipeline();
  const double t = seconds(t0);
  o.check(pl.passed(), "pipeline stages");

  // R = scale * t^5 (t^2-1)^16 (1+t^2)^32 * R78, rebuilt here.
  const UniPoly x = UniPoly::monomial(1, 1);
  const UniPoly tm1 = x * x - UniPoly::constant(1);
  const UniPoly tp1 = x * x + UniPoly::constant(1);
  UniPoly prod = UniPoly::monomial(pl.resultant_scale, 5) * pl.r78;
  for (int i = 0; i < 16; ++i) prod = prod * tm1;
  for (int i = 0; i < 32; ++i) prod = prod * tp1;
  o.check(prod == pl.resultant, "resultant factorization");
  o.check(abs(pl.resultant_scale) == 524288, "constant " + pl.resultant_scale.get_str());
  expect_quoted(o, "R78", pl.r78, 78, {"1", "12", "77", "464", "-64992"}, 39, "-104961536141944",
                {"77790", "-464", "-77", "-12", "-1"});

  std::vector<int> vars;
  for (const auto& s : pl.substitutions) vars.push_back(isolate::sign_variations(isolate::mobius_numerator(pl.r78, s.map)));
  o.check(vars == std::vector<int>{0, 1, 1, 0}, "sign variations under the four substitutions");

  const isolate::RootCount rc = isolate::count_roots_in(pl.r78, BigRat(0), BigRat(1));
  o.check(rc.count == 2, "roots of R78 in (0, 1): " + std::to_string(rc.count));
  // Root counts on the open intervals; an endpoint root would throw.
  o.check(BigRat(1, 3) <= pl.t1.lo && pl.t1.hi <= BigRat(7, 20), "t1 bracket inside [1/3, 7/20]");
  o.check(BigRat(7, 20) <= pl.t2.lo && pl.t2.hi <= BigRat(7, 10), "t2 bracket inside [7/20, 7/10]");
  o.check(isolate::count_roots_in(pl.r78, BigRat(1, 3), BigRat(7, 20)).count == 1, "one root in (1/3, 7/20)");
  o.check(isolate::count_roots_in(pl.r78, BigRat(7, 20), BigRat(7, 10)).count == 1, "one root in (7/20, 7/10)");
  o.info("variations 0,1,1,0; t1 in (" + num(exactq::to_double(pl.t1.lo), 8) + ", " +
         num(exactq::to_double(pl.t1.hi), 8) + "), t2 in (" + num(exactq::to_double(pl.t2.lo), 8) + ", " +
         num(exactq::to_double(pl.t2.hi), 8) + "); pipeline " + num(t, 3) + " s");
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto& pl = pipeline();
  expect_quoted(o, "N", pl.n, 56, {"1", "8", "42", "248", "-48461"}, 28, "", {"47947", "-248", "-42", "-8", "-1"});
  expect_quoted(o, "D", pl.d, 59, {"15", "7", "83"}, 30, "", {"-141", "-25", "-17"});
  const BigRat f1 = symmetry::eval_f(pl, BigRat(7, 20));
  const BigRat f2 = symmetry::eval_f(pl, BigRat(3, 5));
  const BigRat f3 = symmetry::eval_f(pl, BigRat(7, 10));
  o.check(f1 > 1, "F(7/20) > 1");
  o.check(f2 > 0 && f2 < 1, "0 < F(3/5) < 1");
  o.check(f3 > 0 && f3 < 1, "0 < F(7/10) < 1");
  const isolate::MobiusMap quarter_half(1, 1, 4, 2);
  const int fp = isolate::sign_variations(isolate::mobius_numerator(pl.f_prime_numerator, quarter_half));
  const int dv = isolate::sign_variations(isolate::mobius_numerator(pl.d, quarter_half));
  o.check(fp == 0, "F' numerator variations on (1/4, 1/2): " + std::to_string(fp));
  o.check(dv == 0, "D variations on (1/4, 1/2): " + std::to_string(dv));
  o.info("F(7/20) = " + num(exactq::to_double(f1)) + ", F(3/5) = " + num(exactq::to_double(f2)) +
         ", F(7/10) = " + num(exactq::to_double(f3)));
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto& pl = pipeline();
  if (!pl.e2) {
    o.check(false, "E2 not recovered");
    return o;
  }
  const symmetry::TheoremCheck th = symmetry::theorem_inequalities(*pl.e2);
  o.check(th.passed, "0 < t2 < t1 < pi < t4");
  const std::vector<double> d = th.normalized.degrees();
  o.check(std::abs(d[0] - 41.5) <= 0.05, "t1 = " + num(d[0]));
  o.check(std::abs(d[1] - 37.4) <= 0.05, "t2 = " + num(d[1]));
  o.check(std::abs(d[3] - 239.6) <= 0.05, "t4 = " + num(d[3]));
  o.check(std::numeric_limits<HighFloat>::digits10 >= 40, "working precision");
  HighFloat res = 0;
  for (const HighFloat& r : symmetry::residual_high(pl.e2_high, HighFloat(-3))) res = std::max<HighFloat>(res, abs(r));
  o.check(res <= HighFloat("1e-20"), "residual " + res.str(3));
  o.info("E2 = (" + num(d[0]) + ", " + num(d[1]) + ", " + num(d[2]) + ", " + num(d[3]) + ") deg, residual " +
         res.str(3) + " at " + std::to_string(std::numeric_limits<HighFloat>::digits10) + " digits");
  return o;
}

// ---- 6: diagonal branch ---------------------------------------------------

Outcome criterion6() {
  Outcome o;
  const symmetry::DiagonalScan scan = symmetry::scan_diagonal_branch(kNewton, 1e-14, 10000);
  o.check(scan.grid_points == 10000, "grid size");
  o.check(scan.angles.size() == 2, "root count " + std::to_string(scan.angles.size()));
  if (scan.angles.size() == 2) {
    o.check(std::abs(scan.angles[0] - kPi / 3) <= 1e-10, "root at pi/3");
    o.check(std::abs(scan.angles[1] - kPi / 2) <= 1e-10, "root at pi/2");
    o.info("roots " + num(scan.angles[0], 15) + ", " + num(scan.angles[1], 15));
  }
  return o;
}

// ---- 7: solver counts -----------------------------------------------------

Outcome criterion7() {
  Outcome o;
  const int expected[] = {2, 3, 3, 3, 3, 5, 3, 1};
  double total = 0;
  for (int n = 2; n <= 9; ++n) {
    const int restarts = n <= 6 ? 10000 : 100000;
    const auto t0 = std::chrono::steady_clock::now();
    const solver::SolveRun run = solver::solve_n(n, kNewton, restarts, 20240 + static_cast<std::uint64_t>(n));
    const double t = seconds(t0);
    total += t;
    const int want = expected[n - 2];
    const int got = static_cast<int>(run.found.size());
    o.info("n = " + std::to_string(n) + ": " + std::to_string(got) + " (expected " + std::to_string(want) + "), " +
           std::to_string(run.converged) + "/" + std::to_string(restarts) + " converged, " + num(t, 3) + " s");
    if (n == 4) {
      o.check(got == want, "n = 4 must give exactly 3");
    } else {
      o.check(got >= want, "n = " + std::to_string(n) + " recovered only " + std::to_string(got));
      if (got > want) o.flag("n = " + std::to_string(n) + ": " + std::to_string(got - want) + " extra solutions");
    }
  }
  o.check(total <= 1800, "runtime " + num(total) + " s");
  return o;
}

// ---- 8: exponent landmarks ------------------------------------------------

Outcome criterion8() {
  Outcome o;
  const forcefun::ExponentBracket rho = forcefun::rho_threshold(1e-9);
  o.check(rho.width() <= 1e-6, "rho bracket width");
  o.check(rho.lo >= BigRat(-10022968, 10000000) && rho.hi <= BigRat(-10022967, 10000000),
          "rho bracket within the cell [-1.0022968, -1.0022967]");
  o.info("rho in [" + num(rho.lo.get_d(), 12) + ", " + num(rho.hi.get_d(), 12) + "]");

  const auto& pl = pipeline();
  solver::ContinuationOptions opt;
  opt.event = [](const symmetry::GapConfig& g) { return g[0] - g[1]; };
  // Start from E2 with its small gap first, so the event is the small gap meeting t1.
  symmetry::GapConfig start = symmetry::canonical(*pl.e2);
  const solver::ContinuationPath path = solver::continue_in_p(start, -3.0, -0.05, 200, opt);
  o.check(path.events.size() == 1, "one event on the E2 path");
  if (!path.events.empty()) {
    const solver::EventHit& hit = path.events[0];
    o.check(std::abs(hit.p + 0.101834199) <= 1e-7, "p* = " + num(hit.p, 12));
    const double dist =
        symmetry::config_distance(hit.config, symmetry::GapConfig({kPi / 6, kPi / 6, kPi / 6, 1.5 * kPi}));
    o.check(dist <= 1e-6, "gaps at p* off by " + num(dist));
    o.info("p* = " + num(hit.p, 12) + ", gap distance " + num(dist, 3));
  }
  return o;
}

// ---- 9: spot value --------------------------------------------------------

Outcome criterion9() {
  Outcome o;
  const symmetry::GapConfig spot({kPi / 6, kPi / 6, kPi / 6, 1.5 * kPi});
  const double expected = 3 * (2 * (std::sqrt(2.0) - 1) + std::sqrt(6.0));
  const double value = 4 * (forcefun::f_eval(spot[3], kNewton) - forcefun::f_eval(spot[2], kNewton));
  o.check(std::abs(value - expected) <= 1e-12 * expected, "4(f4 - f3) = " + num(value, 17));
  // The same quantity is the last residual component up to sign, since f(t2 + t3) = f(pi/3) = 0.
  const double from_residual = -4 * symmetry::residual(spot, kNewton)[3];
  o.check(std::abs(from_residual - expected) <= 1e-12 * expected, "residual form " + num(from_residual, 17));
  o.info("4(f4 - f3) = " + num(value, 15) + ", closed form " + num(expected, 15));
  return o;
}

// ---- 10: property suites --------------------------------------------------

Outcome criterion10() {
  Outcome o;
  constexpr int kInstances = 10000;
  std::mt19937_64 rng(1010);
  const forcefun::InverseBranch g(kNewton);
  const double tc = g.theta_c();
  const double top = g.upper_value();

  int l1 = 0;
  std::uniform_real_distribution<double> angle(0.01, kPi);
  for (int i = 0; i < kInstances; ++i) {
    std::array<double, 4> t{angle(rng), angle(rng), angle(rng), angle(rng)};
    std::sort(t.begin(), t.end());
    if (!(t[0] < t[1] && t[1] < t[2] && t[2] < t[3])) {
      --i;
      continue;
    }
    l1 += forcefun::check_lemma1(kNewton, t).holds;
  }
  o.check(l1 == kInstances, "lemma 1: " + std::to_string(l1));

  int l2 = 0, cor = 0;
  std::uniform_real_distribution<double> level(-top * 0.999, top * 0.999);
  for (int i = 0; i < kInstances; ++i) {
    double a = level(rng), b = level(rng);
    if (a > b) std::swap(a, b);
    if (b - a < 1e-3 * top) {
      --i;
      continue;
    }
    const forcefun::Chord outer = forcefun::chord_at_level(g, a);
    const forcefun::Chord inner = forcefun::chord_at_level(g, b);
    l2 += forcefun::check_lemma2(kNewton, outer, inner, tc).holds;
    cor += forcefun::check_corollary(kNewton, outer, tc).holds;
  }
  o.check(l2 == kInstances, "lemma 2: " + std::to_string(l2));
  o.check(cor == kInstances, "corollary: " + std::to_string(cor));

  int l3 = 0;
  std::uniform_real_distribution<double> left(0.02, tc - 1e-3);
  std::uniform_real_distribution<double> frac(0.01, 0.49);
  for (int i = 0; i < kInstances; ++i) {
    double t1 = left(rng), t4 = left(rng);
    if (t1 > t4) std::swap(t1, t4);
    if (t4 - t1 < 1e-3) {
      --i;
      continue;
    }
    const double f1 = forcefun::f_eval(t1, kNewton), f4 = forcefun::f_eval(t4, kNewton);
    const double f2 = f1 + frac(rng) * (f4 - f1);
    const double f3 = f1 + f4 - f2;
    l3 += forcefun::check_lemma3(kNewton, {t1, g(f2), g(f3), t4}, tc).holds;
  }
  o.check(l3 == kInstances, "lemma 3: " + std::to_string(l3));

  // Antisymmetry f(2pi - x) = -f(x).
  int anti = 0;
  std::uniform_real_distribution<double> big(kPi, 2 * kPi - 1e-6);
  const long double two_pi = 2 * std::numbers::pi_v<long double>;
  for (int i = 0; i < kInstances; ++i) {
    const double x = big(rng);
    const double y = static_cast<double>(two_pi - x);
    const double a = forcefun::f_eval(x, kNewton), b = forcefun::f_eval(y, kNewton);
    anti += std::abs(a + b) <= 1e-12 * std::max(1.0, std::abs(b)) + 1e-13;
  }
  o.check(anti == kInstances, "antisymmetry: " + std::to_string(anti));

  // Exact derivatives against the floating ones at rational points of the circle.
  const forcefun::ExactDerivatives d = forcefun::f_derivatives_exact(kNewton);
  std::uniform_int_distribution<long> u(1, 1999);
  int agree = 0, tried = 0;
  for (int i = 0; i < 2000; ++i) {
    const BigRat uu(u(rng), 1000);
    const BigRat den = 1 + uu * uu;
    const BigRat s = 2 * uu / den, k = (1 - uu * uu) / den;
    const double th = 4 * std::atan(uu.get_d());
    if (th < 0.05 || th > 2 * kPi - 0.05) continue;
    ++tried;
    auto rel = [](double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };
    agree += rel(forcefun::f_eval(th, kNewton), d.f.eval(s, k).get_d()) < 1e-10 &&
             rel(forcefun::f_prime(th, kNewton), d.d1.eval(s, k).get_d()) < 1e-10 &&
             rel(forcefun::f_second(th, kNewton), d.d2.eval(s, k).get_d()) < 1e-10 &&
             rel(forcefun::f_third(th, kNewton), d.d3.eval(s, k).get_d()) < 1e-10;
  }
  o.check(agree == tried, "exact/floating agreement: " + std::to_string(agree) + "/" + std::to_string(tried));

  // t1 = t2 with t3 != t4: only the line t1 + t4 = 5pi/3 is left.
  double line_min = 1e300;
  for (int i = 0; i < 1000; ++i) {
    const double x = (i + 0.5) * (kPi / 3) / 1000;
    line_min = std::min(line_min, symmetry::max_abs(symmetry::residual(
                                      symmetry::GapConfig({x, x, kPi / 3 - x, 5 * kPi / 3 - x}), kNewton)));
  }
  o.check(line_min > 1e-8, "adjacent-equal line scan minimum " + num(line_min));

  // t1 + t4 = t2 + t3 = pi off the diagonal.
  double grid_min = 1e300;
  for (int i = 0; i < 33; ++i) {
    for (int j = 0; j < 33; ++j) {
      if (i == j) continue;
      const double a = (i + 0.5) * kPi / 33, b = (j + 0.5) * kPi / 33;
      grid_min = std::min(grid_min, symmetry::max_abs(symmetry::residual(
                                        symmetry::GapConfig({a, b, kPi - b, kPi - a}), kNewton)));
    }
  }
  o.check(grid_min > 1e-8, "diameter grid scan minimum " + num(grid_min));

  o.info("10^4 instances each for lemmas 1-3 and the corollary; scan minima " + num(line_min, 3) + ", " +
         num(grid_min, 3));
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                       criterion6, criterion7, criterion8, criterion9, criterion10};
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) {
    try {
      const int k = std::stoi(argv[i]);
      if (k < 1 || k > 10) throw std::out_of_range(argv[i]);
      selected.insert(k);
    } catch (const std::exception&) {
      std::cerr << "usage: acceptance [criterion numbers 1-10]\n";
      return 2;
    }
  }
  bool all = true;
  for (int k = 1; k <= 10; ++k) {
    if (!selected.empty() && !selected.count(k)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[static_cast<std::size_t>(k - 1)]();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << "criterion " << k << ": " << (o.pass ? "PASS" : "FAIL") << " (" << num(seconds(t0), 3) << " s)";
    if (!o.flags.empty()) std::cout << " FLAGGED";
    std::cout << "\n";
    for (const auto& l : o.lines) std::cout << "    " << l << "\n";
    for (const auto& f : o.flags) std::cout << "    flag: " << f << "\n";
    std::cout.flush();
  }
  return all ? 0 : 1;
}
