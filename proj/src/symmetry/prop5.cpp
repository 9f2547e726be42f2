#include "coorbital/symmetry/prop5.hpp"

#include "coorbital/exactq/polymatrix.hpp"
#include "coorbital/exactq/serialize.hpp"
#include "coorbital/forcefun/force_law.hpp"
#include "coorbital/isolate/descartes.hpp"
#include "coorbital/symmetry/classify.hpp"
#include "coorbital/symmetry/residual.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <sstream>

namespace coorbital::symmetry {

namespace {

using exactq::BigInt;
using isolate::MobiusMap;

BigRat rat(long num, long den) {
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

UniPoly tpoly(std::initializer_list<long> c) { return UniPoly(c, 't'); }

std::string str(const BigRat& q) { return exactq::to_string(q); }

std::string fixed(double x, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

std::string high_str(const HighFloat& x, int digits = 45) { return x.str(digits, std::ios_base::scientific); }

// Quoted coefficients of R78, N and D. Head lists run from the leading
// coefficient down, tail lists from t^k down to t^0.
struct Quoted {
  int degree;
  std::vector<std::string> head;
  int middle_power;
  std::string middle;
  std::vector<std::string> tail;
};

const Quoted kR78{78, {"1", "12", "77", "464", "-64992"}, 39, "-104961536141944", {"77790", "-464", "-77", "-12", "-1"}};
const Quoted kN{56, {"1", "8", "42", "248", "-48461"}, 28, "284953591140", {"47947", "-248", "-42", "-8", "-1"}};
const Quoted kD{59, {"15", "7", "83"}, 30, "807713099949204", {"-141", "-25", "-17"}};

class Stage {
 public:
  Stage(char id, std::string title) : start_(std::chrono::steady_clock::now()) {
    report_.stage = id;
    report_.title = std::move(title);
  }

  void expect(std::string name, std::string expected, std::string computed) {
    const bool match = expected == computed;
    report_.comparisons.push_back({std::move(name), std::move(expected), std::move(computed), match});
  }
  void expect(std::string name, long expected, long computed) {
    expect(std::move(name), std::to_string(expected), std::to_string(computed));
  }
  void expect_near(std::string name, double expected, double tol, double computed) {
    const bool match = std::abs(computed - expected) <= tol;
    report_.comparisons.push_back(
        {std::move(name), fixed(expected, 4) + " +- " + fixed(tol, 4), fixed(computed, 6), match});
  }
  void require(std::string what, bool ok) { report_.comparisons.push_back({std::move(what), "true", ok ? "true" : "false", ok}); }

  void expect_quoted(const std::string& name, const UniPoly& p, const Quoted& q) {
    expect("deg " + name, q.degree, p.degree());
    for (std::size_t i = 0; i < q.head.size(); ++i) {
      const int k = q.degree - static_cast<int>(i);
      expect(name + " [t^" + std::to_string(k) + "]", q.head[i], p.coeff(static_cast<std::size_t>(k)).get_str());
    }
    expect(name + " [t^" + std::to_string(q.middle_power) + "]", q.middle,
           p.coeff(static_cast<std::size_t>(q.middle_power)).get_str());
    for (std::size_t i = 0; i < q.tail.size(); ++i) {
      const int k = static_cast<int>(q.tail.size() - 1 - i);
      expect(name + " [t^" + std::to_string(k) + "]", q.tail[i], p.coeff(static_cast<std::size_t>(k)).get_str());
    }
  }

  void note(std::string text) { report_.notes.push_back(std::move(text)); }
  void fail(std::string detail) {
    failed_ = true;
    report_.detail = std::move(detail);
  }

  StageReport finish() {
    report_.passed = !failed_;
    for (const auto& c : report_.comparisons) report_.passed = report_.passed && c.match;
    if (!report_.passed && report_.detail.empty()) {
      for (const auto& c : report_.comparisons) {
        if (!c.match) {
          report_.detail = "mismatch: " + c.name + " expected " + c.expected + ", computed " + c.computed;
          break;
        }
      }
    }
    report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return report_;
  }

 private:
  StageReport report_;
  bool failed_ = false;
  std::chrono::steady_clock::time_point start_;
};

struct CirclePoint {
  BigRat cos;
  BigRat sin;
  double angle;
};

// cos and sin of 2 atan(u) as rationals.
CirclePoint circle_point(const BigRat& u) {
  const BigRat w = 1 + u * u;
  return {BigRat((1 - u * u) / w), BigRat(2 * u / w), 2 * std::atan(u.get_d())};
}

// 4 f(theta) = cos(theta/2) sin(theta/2)^-2 (8 sin(theta/2)^3 - 1) for p = -3.
BigRat f_half(const BigRat& half_cos, const BigRat& half_sin) {
  return half_cos * (8 * half_sin * half_sin * half_sin - 1) / (4 * half_sin * half_sin);
}

int count_mismatches(const std::vector<std::pair<BigRat, BigRat>>& pairs) {
  int bad = 0;
  for (const auto& [a, b] : pairs) bad += a != b;
  return bad;
}

void stage_a(Prop5Pipeline&, const PipelineOptions&, Stage& st) {
  const std::vector<BigRat> ts{rat(1, 7), rat(1, 5), rat(1, 4), rat(1, 3), rat(2, 5), rat(1, 2),
                               rat(3, 5), rat(2, 3), rat(3, 4), rat(4, 5), rat(6, 7)};
  const std::vector<BigRat> us{rat(-1, 3), rat(-1, 5), rat(-1, 9), rat(1, 11), rat(1, 5), rat(1, 3), rat(1, 2)};
  const forcefun::ForceLaw law = forcefun::ForceLaw::newtonian();
  std::vector<std::pair<BigRat, BigRat>> p_pairs, q_pairs;
  double float_gap = 0;
  for (const BigRat& t : ts) {
    const CirclePoint sig = circle_point(t);
    const BigRat &C = sig.cos, &S = sig.sin;
    for (const BigRat& u : us) {
      const CirclePoint n = circle_point(u);
      const BigRat &c = n.cos, &s = n.sin;
      const double sigma = sig.angle, nu = n.angle;
      if (!(std::abs(nu) < sigma)) continue;
      const BigRat f1 = f_half(S, C);
      const BigRat f2 = f_half(C * c - S * s, S * c + C * s);
      const BigRat f4 = f_half(C * c + S * s, S * c - C * s);
      const BigRat f12 = f_half(-s, c);
      const BigRat gap = (C * C - c * c) * (C * C - c * c);
      p_pairs.emplace_back(2 * (f2 + f4 - 2 * f1) * C * C * gap, p_simplified(C, S, c, s * s));
      q_pairs.emplace_back(2 * (2 * f12 + f2 - f4) * c * c * gap, s * q_simplified(C, S, c));

      const double th1 = std::numbers::pi - 2 * sigma, th2 = 2 * (sigma + nu), th4 = 2 * (sigma - nu);
      float_gap = std::max({float_gap, std::abs(f1.get_d() - forcefun::f_eval(th1, law)),
                            std::abs(f2.get_d() - forcefun::f_eval(th2, law)),
                            std::abs(f4.get_d() - forcefun::f_eval(th4, law)),
                            std::abs(f12.get_d() - forcefun::f_eval(th1 + th2, law))});
    }
  }
  st.note(std::to_string(p_pairs.size()) + " rational points on the torus");
  st.require("at least 40 torus points", p_pairs.size() >= 40);
  st.expect("points where 2(f2+f4-2f1) C^2 (C^2-c^2)^2 != P", 0, count_mismatches(p_pairs));
  st.expect("points where 2(2f12+f2-f4) c^2 (C^2-c^2)^2 != sQ", 0, count_mismatches(q_pairs));
  st.require("half-angle f values agree with f_eval to 1e-9", float_gap <= 1e-9);
}

void stage_b(Prop5Pipeline& pl, const PipelineOptions&, Stage& st) {
  // s = 0 forces c = +-1 and P = S^2 (S^3 - c C^3).
  int bad = 0;
  for (long k = 1; k < 12; ++k) {
    const CirclePoint sig = circle_point(rat(k, 12));
    for (long c : {1L, -1L}) {
      const BigRat& C = sig.cos;
      const BigRat& S = sig.sin;
      bad += p_simplified(C, S, BigRat(c), BigRat(0)) != S * S * (S * S * S - c * C * C * C);
    }
  }
  st.expect("points where P(s=0) != S^2 (S^3 - c C^3)", 0, bad);
  // With S = 2t/(1+t^2), C = (1-t^2)/(1+t^2): S^3 - c C^3 ~ 8t^3 - c (1-t^2)^3.
  const UniPoly cn = tpoly({1, 0, -1});
  const UniPoly t3 = UniPoly::monomial(8, 3, 't');
  const UniPoly g_plus = t3 - cn.pow(3), g_minus = t3 + cn.pow(3);
  st.expect("roots of S^3 - C^3 with 0 < t < 1", 1, isolate::count_roots_in(g_plus, BigRat(0), BigRat(1)).count);
  st.expect("roots of S^3 + C^3 with 0 < t < 1", 0, isolate::count_roots_in(g_minus, BigRat(0), BigRat(1)).count);
  // The root is tan(pi/8) = sqrt(2) - 1, i.e. S = C = 1/sqrt(2).
  st.require("t^2 + 2t - 1 divides S^3 - C^3", exactq::divmod(g_plus, tpoly({-1, 2, 1})).remainder.is_zero());
  const HighFloat sigma = 2 * atan(sqrt(HighFloat(2)) - 1);
  const SymmetricChart chart{static_cast<double>(sigma), 0.0};
  pl.e3 = chart.gaps();
  double dev = 0;
  for (double g : pl.e3.gaps()) dev = std::max(dev, std::abs(g - std::numbers::pi / 2));
  st.require("square branch gives gaps pi/2", dev <= 1e-15);
  st.note("E3 gaps " + pl.e3.to_string());
}

void stage_c(Prop5Pipeline& pl, const PipelineOptions&, Stage& st) {
  pl.p6 = build_p6();
  pl.q7 = build_q7();
  const UniPoly w = tpoly({1, 0, 1});
  const UniPoly t = UniPoly::identity('t');
  st.expect("deg_c P6", 6, pl.p6.degree_c());
  st.expect("deg_c Q7", 7, pl.q7.degree_c());
  st.expect("P6 [c^6]", (BigRat(-32) * t * tpoly({-1, 0, 1}).pow(3) * w.pow(4)).to_string(), pl.p6.coeff_c(6).to_string());
  st.expect("Q7 [c^7]", (BigRat(-64) * t.pow(2) * w.pow(4)).to_string(), pl.q7.coeff_c(7).to_string());
  // Both sides are polynomials of degree <= 16 in t and <= 7 in c, so
  // agreement on a 20 x 9 grid is an identity.
  int bad = 0, points = 0;
  for (long i = 1; i <= 20; ++i) {
    const BigRat tv = rat(i, 7);
    const BigRat wv = 1 + tv * tv;
    const BigRat C = (1 - tv * tv) / wv, S = 2 * tv / wv;
    for (long j = -4; j <= 4; ++j) {
      const BigRat c = rat(j, 3);
      const BigRat w6 = exactq::pow(wv, 6), w8 = w6 * wv * wv;
      bad += pl.p6.eval(tv, c) != w8 * p_simplified(C, S, c, 1 - c * c);
      bad += pl.q7.eval(tv, c) != w6 * q_simplified(C, S, c);
      ++points;
    }
  }
  st.expect("grid points where P6 != (1+t^2)^8 P or Q7 != (1+t^2)^6 Q", 0, bad);
  st.note(std::to_string(points) + " grid points; deg_t P6 = " + std::to_string(pl.p6.degree_t()) +
          ", deg_t Q7 = " + std::to_string(pl.q7.degree_t()));
}

void stage_d(Prop5Pipeline& pl, const PipelineOptions& opt, Stage& st) {
  pl.resultant = exactq::resultant_in_c(pl.p6, pl.q7);
  const UniPoly t = UniPoly::identity('t');
  const UniPoly factor = t.pow(5) * tpoly({-1, 0, 1}).pow(16) * tpoly({1, 0, 1}).pow(32);
  const exactq::DivMod dm = exactq::divmod(pl.resultant, factor);
  st.require("t^5 (t^2-1)^16 (1+t^2)^32 divides R", dm.remainder.is_zero());
  pl.resultant_scale = dm.quotient.leading();
  pl.r78 = dm.quotient * BigRat(1 / pl.resultant_scale);
  if (opt.corrupt == Corruption::kR78Coefficient) pl.r78 += UniPoly::monomial(1, 39, 't');
  st.expect("deg R", 179, pl.resultant.degree());
  st.expect("constant factor of R", "-524288", pl.resultant_scale.get_str());
  st.require("R78 has integer coefficients", pl.r78.has_integer_coeffs());
  st.expect_quoted("R78", pl.r78, kR78);
  // No further powers of t, t - 1, t + 1 or t^2 + 1 hide in R78.
  st.require("R78(0), R78(1), R78(-1) nonzero",
             pl.r78.eval(BigRat(0)) != 0 && pl.r78.eval(BigRat(1)) != 0 && pl.r78.eval(BigRat(-1)) != 0);
  st.require("t^2 + 1 does not divide R78", !exactq::divmod(pl.r78, tpoly({1, 0, 1})).remainder.is_zero());
}

void stage_e(Prop5Pipeline& pl, const PipelineOptions&, Stage& st) {
  const std::vector<MobiusMap> maps{MobiusMap(0, 1, 1, 3), MobiusMap(1, 7, 3, 20), MobiusMap(7, 7, 20, 10),
                                    MobiusMap(7, 1, 10, 1)};
  std::string computed;
  pl.substitutions.clear();
  for (const MobiusMap& m : maps) {
    const UniPoly num = isolate::mobius_numerator(pl.r78, m);
    pl.substitutions.push_back({m, isolate::sign_pattern(num), isolate::sign_variations(num)});
    computed += (computed.empty() ? "" : ",") + std::to_string(pl.substitutions.back().variations);
  }
  st.expect("sign variations under the four substitutions", "0,1,1,0", computed);
  // The substitutions tile (0, 1) minus the break points, which must not be roots.
  st.require("images tile (0,1/3), (1/3,7/20), (7/20,7/10), (7/10,1)",
             *maps[0].image_of_zero() == 0 && *maps[0].image_of_infinity() == rat(1, 3) &&
                 *maps[1].image_of_zero() == rat(1, 3) && *maps[1].image_of_infinity() == rat(7, 20) &&
                 *maps[2].image_of_zero() == rat(7, 20) && *maps[2].image_of_infinity() == rat(7, 10) &&
                 *maps[3].image_of_zero() == rat(7, 10) && *maps[3].image_of_infinity() == 1);
  for (const BigRat& x : {rat(1, 3), rat(7, 20), rat(7, 10)}) {
    st.require("R78(" + str(x) + ") != 0", pl.r78.eval(x) != 0);
  }
  pl.t1 = {rat(1, 3), rat(7, 20)};
  pl.t2 = {rat(7, 20), rat(7, 10)};
  st.expect("roots of R78 in (0,1) by bisection", 2, isolate::count_roots_in(pl.r78, BigRat(0), BigRat(1)).count);
}

void stage_f(Prop5Pipeline& pl, const PipelineOptions& opt, Stage& st) {
  const exactq::SylvesterMatrix s = exactq::sylvester_in_c(pl.p6, pl.q7);
  st.expect("Sylvester dimension", 13, static_cast<long>(s.dimension()));
  pl.m17 = exactq::sylvester_minor(s, 1, 7);
  pl.m18 = exactq::sylvester_minor(s, 1, 8);
  const UniPoly g = exactq::gcd(pl.m17, pl.m18);
  UniPoly num = exactq::exact_div(-pl.m17, g);
  UniPoly den = exactq::exact_div(pl.m18, g);
  const UniPoly t = UniPoly::identity('t');
  const UniPoly tm1 = tpoly({-1, 1}), tp1 = tpoly({1, 1}), w = tpoly({1, 0, 1});
  st.expect("numerator power of (t+1)", 1, strip_factor(num, tp1));
  st.expect("numerator power of (t^2+1)", 4, strip_factor(num, w));
  st.expect("numerator power of t", 0, strip_factor(num, t));
  st.expect("numerator power of (t-1)", 0, strip_factor(num, tm1));
  st.expect("denominator power of t", 2, strip_factor(den, t));
  st.expect("denominator power of (t-1)", 2, strip_factor(den, tm1));
  st.expect("denominator power of (t+1)", 0, strip_factor(den, tp1));
  st.expect("denominator power of (t^2+1)", 0, strip_factor(den, w));
  pl.n = exactq::primitive_part(num);
  pl.d = exactq::primitive_part(den);
  pl.f_scale = (num.leading() / pl.n.leading()) / (den.leading() / pl.d.leading());
  if (opt.corrupt == Corruption::kNCoefficient) pl.n += UniPoly::monomial(1, 28, 't');
  st.expect("constant of F", "1/8", str(pl.f_scale));
  st.expect_quoted("N", pl.n, kN);
  st.expect_quoted("D", pl.d, kD);
  st.note("deg M17 = " + std::to_string(pl.m17.degree()) + ", deg M18 = " + std::to_string(pl.m18.degree()) +
          ", deg gcd = " + std::to_string(g.degree()));
}

UniPoly f_numerator(const Prop5Pipeline& pl) {
  return tpoly({1, 1}) * tpoly({1, 0, 1}).pow(4) * pl.n;
}

UniPoly f_denominator(const Prop5Pipeline& pl) {
  return tpoly({0, 0, 1}) * tpoly({1, -2, 1}) * pl.d;
}

void stage_g(Prop5Pipeline& pl, const PipelineOptions&, Stage& st) {
  const UniPoly u = f_numerator(pl), v = f_denominator(pl);
  UniPoly fp = u.derivative() * v - u * v.derivative();
  fp *= BigRat(exactq::sign(pl.f_scale) / abs(exactq::content(fp)));
  pl.f_prime_numerator = fp;

  const MobiusMap m(1, 1, 4, 2);
  const UniPoly d_sub = isolate::mobius_numerator(pl.d, m);
  const UniPoly fp_sub = isolate::mobius_numerator(fp, m);
  pl.d_on_quarter_half = {m, isolate::sign_pattern(d_sub), isolate::sign_variations(d_sub)};
  pl.f_prime_on_quarter_half = {m, isolate::sign_pattern(fp_sub), isolate::sign_variations(fp_sub)};
  st.expect("variations of D under t = (1+y)/(4+2y)", 0, pl.d_on_quarter_half.variations);
  st.expect("variations of F' numerator under t = (1+y)/(4+2y)", 0, pl.f_prime_on_quarter_half.variations);
  st.expect("sign of F' on (1/4, 1/2)", "-", pl.f_prime_on_quarter_half.signs.substr(0, 1));

  pl.f_at_7_20 = eval_f(pl, rat(7, 20));
  pl.f_at_3_5 = eval_f(pl, rat(3, 5));
  pl.f_at_7_10 = eval_f(pl, rat(7, 10));
  st.require("F(7/20) > 1, so t1 gives c > 1 and is rejected", pl.f_at_7_20 > 1);
  st.expect("roots of R78 in (3/5, 7/10)", 1, isolate::count_roots_in(pl.r78, rat(3, 5), rat(7, 10)).count);
  st.require("F(3/5) > 0", pl.f_at_3_5 > 0);
  st.require("F(7/10) < 1", pl.f_at_7_10 < 1);
  const isolate::SignOutcome rising = isolate::certify_positive(fp, v * v, rat(3, 5), rat(7, 10));
  st.require("F increasing on (3/5, 7/10)", std::holds_alternative<isolate::SignCertificate>(rising) &&
                                                std::get<isolate::SignCertificate>(rising).sign == 1);
  st.note("F(7/20) ~ " + fixed(pl.f_at_7_20.get_d(), 6) + ", F(3/5) ~ " + fixed(pl.f_at_3_5.get_d(), 6) +
          ", F(7/10) ~ " + fixed(pl.f_at_7_10.get_d(), 6));
}

void stage_h(Prop5Pipeline& pl, const PipelineOptions& opt, Stage& st) {
  const auto [lo, hi] = isolate::refine_root(pl.r78, rat(3, 5), rat(7, 10), opt.precision);
  pl.t2_refined = {lo, hi};
  pl.c_bracket = {eval_f(pl, lo), eval_f(pl, hi)};
  st.require("0 < F(t2) < 1 on the refined bracket",
             pl.c_bracket.lo > 0 && pl.c_bracket.lo < pl.c_bracket.hi && pl.c_bracket.hi < 1);

  const BigRat mid = (lo + hi) / 2;
  const HighFloat t = to_high(mid);
  const HighFloat c = to_high(eval_f(pl, mid));
  const HighFloat sigma = 2 * atan(t);
  // nu < 0 labels the small gap t2 and the large gap t4.
  const HighFloat nu = -acos(c);
  const HighFloat th1 = high_pi() - 2 * sigma, th2 = 2 * (sigma + nu), th4 = 2 * (sigma - nu);
  pl.e2_high = {th1, th2, th1, th4};
  bool inside = true;
  for (const HighFloat& g : pl.e2_high) inside = inside && g > 0 && g < 2 * high_pi();
  st.require("all gaps in (0, 2pi)", inside);
  HighFloat worst = 0;
  for (const HighFloat& r : residual_high(pl.e2_high, HighFloat(-3))) worst = std::max(worst, HighFloat(abs(r)));
  pl.e2_residual = worst;
  st.require("residual at E2 <= 1e-20 in 50-digit arithmetic", worst <= HighFloat("1e-20"));

  pl.e2 = GapConfig({static_cast<double>(th1), static_cast<double>(th2), static_cast<double>(th1),
                     static_cast<double>(th4)});
  const std::vector<double> deg = pl.e2->degrees();
  st.expect_near("t1 = t3 (degrees)", 41.5, 0.05, deg[0]);
  st.expect_near("t2 (degrees)", 37.4, 0.05, deg[1]);
  st.expect_near("t4 (degrees)", 239.6, 0.05, deg[3]);
  const TheoremCheck th = theorem_inequalities(*pl.e2);
  st.require("0 < t2 < t1 < pi < t4 and 2 t1 + t2 + t4 = 2 pi", th.passed);
  st.note("max residual " + high_str(worst, 6));
}

}  // namespace

BigRat p_simplified(const BigRat& C, const BigRat& S, const BigRat& c, const BigRat& s2) {
  const BigRat d = C * C - c * c;
  return S * d * d * (1 - 16 * s2 * C * C * C) - C * C * C * c * (s2 + S * S);
}

BigRat q_simplified(const BigRat& C, const BigRat& S, const BigRat& c) {
  const BigRat d = C * C - c * c;
  return d * d * (1 - 16 * S * S * c * c * c) + S * c * c * (C * C + c * c);
}

BiPoly build_p6() {
  const BiPoly t = BiPoly::t(), c = BiPoly::c(), one = BiPoly::constant(1);
  const BiPoly w = one + t * t, cn = one - t * t, sn = BigRat(2) * t, s2 = one - c * c;
  const BiPoly a = cn * cn - c * c * w * w;
  return sn * a * a * w.pow(3) - BigRat(16) * s2 * sn * cn.pow(3) * a * a - cn.pow(3) * c * (s2 * w * w + sn * sn) * w.pow(3);
}

BiPoly build_q7() {
  const BiPoly t = BiPoly::t(), c = BiPoly::c(), one = BiPoly::constant(1);
  const BiPoly w = one + t * t, cn = one - t * t, sn = BigRat(2) * t;
  const BiPoly a = cn * cn - c * c * w * w;
  return a * a * (w * w - BigRat(16) * sn * sn * c.pow(3)) + sn * c * c * (cn * cn + c * c * w * w) * w.pow(3);
}

UniPoly at_c(const BiPoly& p, const BigRat& c0) {
  UniPoly out;
  BigRat power = 1;
  for (int j = 0; j <= p.degree_c(); ++j) {
    out += p.coeff_c(static_cast<std::size_t>(j)) * power;
    power *= c0;
  }
  return out;
}

BigRat eval_f(const Prop5Pipeline& pl, const BigRat& t) {
  return pl.f_scale * f_numerator(pl).eval(t) / f_denominator(pl).eval(t);
}

Prop5Pipeline run_prop5_pipeline(const PipelineOptions& options) {
  using StageFn = std::function<void(Prop5Pipeline&, const PipelineOptions&, Stage&)>;
  const std::vector<std::tuple<char, std::string, StageFn>> plan{
      {'a', "construct P and Q, check the simplified forms", stage_a},
      {'b', "square branch s = 0", stage_b},
      {'c', "half-angle substitution: P6 and Q7", stage_c},
      {'d', "resultant and the factor R78", stage_d},
      {'e', "root isolation of R78 on (0, 1)", stage_e},
      {'f', "F = -M17/M18 and the factors N, D", stage_f},
      {'g', "monotonicity of F and rejection of t1", stage_g},
      {'h', "refinement of t2 and recovery of E2", stage_h},
  };
  Prop5Pipeline pl;
  for (const auto& [id, title, fn] : plan) {
    Stage st(id, title);
    try {
      fn(pl, options, st);
    } catch (const std::exception& e) {
      st.fail(std::string("exception: ") + e.what());
    }
    pl.stages.push_back(st.finish());
    if (!pl.stages.back().passed) {
      pl.failed_stage = id;
      break;
    }
  }
  return pl;
}

nlohmann::json to_json(const Prop5Pipeline& pl) {
  using nlohmann::json;
  json stages = json::array();
  for (const StageReport& s : pl.stages) {
    json cmp = json::array();
    for (const Comparison& c : s.comparisons) {
      cmp.push_back({{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"match", c.match}});
    }
    stages.push_back({{"stage", std::string(1, s.stage)},
                      {"title", s.title},
                      {"passed", s.passed},
                      {"detail", s.detail},
                      {"comparisons", cmp},
                      {"notes", s.notes},
                      {"seconds", s.seconds}});
  }
  json out{{"passed", pl.passed()}, {"stages", stages}};
  if (pl.failed_stage) out["failed_stage"] = std::string(1, *pl.failed_stage);
  auto map_json = [](const MapVariation& m) {
    return json{{"map", {str(m.map.a0()), str(m.map.a1()), str(m.map.b0()), str(m.map.b1())}},
                {"signs", m.signs},
                {"variations", m.variations}};
  };
  auto bracket = [](const RootBracket& b) { return json{{"lo", str(b.lo)}, {"hi", str(b.hi)}}; };
  json art;
  art["e3_gaps"] = pl.e3.gaps();
  if (!pl.p6.is_zero()) {
    art["P6"] = exactq::to_json(pl.p6);
    art["Q7"] = exactq::to_json(pl.q7);
  }
  if (!pl.r78.is_zero()) {
    art["resultant_degree"] = pl.resultant.degree();
    art["resultant_scale"] = str(pl.resultant_scale);
    art["R78"] = exactq::to_json(pl.r78);
  }
  if (!pl.substitutions.empty()) {
    json subs = json::array();
    for (const auto& m : pl.substitutions) subs.push_back(map_json(m));
    art["substitutions"] = subs;
    art["t1"] = bracket(pl.t1);
    art["t2"] = bracket(pl.t2);
  }
  if (!pl.n.is_zero()) {
    art["F_scale"] = str(pl.f_scale);
    art["N"] = exactq::to_json(pl.n);
    art["D"] = exactq::to_json(pl.d);
  }
  if (!pl.f_prime_numerator.is_zero()) {
    art["D_on_quarter_half"] = map_json(pl.d_on_quarter_half);
    art["F_prime_on_quarter_half"] = map_json(pl.f_prime_on_quarter_half);
    art["F(7/20)"] = str(pl.f_at_7_20);
    art["F(3/5)"] = str(pl.f_at_3_5);
    art["F(7/10)"] = str(pl.f_at_7_10);
  }
  if (pl.e2) {
    art["t2_refined"] = bracket(pl.t2_refined);
    art["c_bracket"] = {{"lo", high_str(to_high(pl.c_bracket.lo))}, {"hi", high_str(to_high(pl.c_bracket.hi))}};
    json high = json::array();
    for (const HighFloat& g : pl.e2_high) high.push_back(high_str(g));
    art["e2"] = {{"radians", pl.e2->gaps()}, {"degrees", pl.e2->degrees()}, {"radians_50", high},
                 {"residual", high_str(pl.e2_residual, 6)}};
  }
  out["artifacts"] = art;
  return out;
}

std::string stage_log(const Prop5Pipeline& pl) {
  std::ostringstream os;
  for (const StageReport& s : pl.stages) {
    os << "[" << s.stage << "] " << (s.passed ? "pass" : "FAIL") << "  " << s.title << "  ("
       << s.comparisons.size() << " checks, " << fixed(s.seconds, 2) << " s)\n";
    for (const auto& n : s.notes) os << "      " << n << "\n";
    if (!s.passed) os << "      " << s.detail << "\n";
  }
  if (pl.e2) {
    const auto d = pl.e2->degrees();
    os << "E2 gaps (degrees): " << fixed(d[0], 4) << ", " << fixed(d[1], 4) << ", " << fixed(d[2], 4) << ", "
       << fixed(d[3], 4) << "\n";
  }
  os << (pl.passed() ? "pipeline passed" : "pipeline failed at stage " + std::string(1, pl.failed_stage.value_or('?')))
     << "\n";
  return os.str();
}

}  // namespace coorbital::symmetry
