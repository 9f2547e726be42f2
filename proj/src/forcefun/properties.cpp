#include "coorbital/forcefun/properties.hpp"

#include "coorbital/isolate/descartes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <variant>

namespace coorbital::forcefun {

namespace {

using isolate::Interval;
using isolate::SignCertificate;
using isolate::SignOutcome;

constexpr double kPi = std::numbers::pi;

// Sign of the polynomial on an s-interval, or 0 when it is not definite.
int definite_sign(const SignOutcome& outcome) {
  if (const auto* c = std::get_if<SignCertificate>(&outcome)) return c->sign;
  return 0;
}

PropertyCheck exact_check(int index) {
  PropertyCheck c;
  c.index = index;
  c.method = "exact";
  return c;
}

double s_to_theta(const BigRat& s) { return 2.0 * std::asin(s.get_d()); }

PropertyCheck exact_p1(const ExactDerivatives& d) {
  PropertyCheck c = exact_check(1);
  if (d.f.has_even()) {
    c.detail = "f has an unexpected even part";
    return c;
  }
  const UniPoly& odd = d.f.odd;
  const UniPoly one = UniPoly::constant(1, 's');
  const bool zero_third = odd.eval(BigRat(1, 2)) == 0;
  const SignOutcome left = isolate::certify_positive(odd, one, Interval::bounded(0, BigRat(1, 2)));
  const SignOutcome right = isolate::certify_positive(odd, one, Interval::bounded(BigRat(1, 2), 1));
  c.certificate = {{"f_numerator", odd.to_string()},
                   {"zero_at_s_half", zero_third},
                   {"negative_on_(0,1/2)", isolate::to_json(left)},
                   {"positive_on_(1/2,1)", isolate::to_json(right)}};
  c.holds = zero_third && definite_sign(left) < 0 && definite_sign(right) > 0;
  c.detail = "f(pi/3)=0 exactly; f(pi)=0 since cos(pi/2)=0; sign of the s-numerator certified on both sides";
  if (!c.holds) {
    if (const auto* bad = std::get_if<isolate::SignCounterexample>(&left)) c.counterexample = s_to_theta(bad->lo);
    if (const auto* bad = std::get_if<isolate::SignCounterexample>(&right)) c.counterexample = s_to_theta(bad->lo);
  }
  return c;
}

PropertyCheck exact_p2(const ExactDerivatives& d) {
  PropertyCheck c = exact_check(2);
  if (d.d1.has_odd()) {
    c.detail = "f' has an unexpected odd part";
    return c;
  }
  const UniPoly& num = d.d1.even;
  const SignOutcome left = isolate::certify_positive(num, UniPoly::constant(1, 's'), Interval::bounded(0, BigRat(1, 2)));
  const isolate::RootCount right = isolate::count_roots_in(num, BigRat(1, 2), 1);
  const int sign_at_pi = exactq::sign(num.eval(BigRat(1)));
  c.certificate = {{"fprime_numerator", num.to_string()},
                   {"positive_on_(0,1/2)", isolate::to_json(left)},
                   {"roots_in_(1/2,1)", right.count},
                   {"root_count_certificate", isolate::to_json(right.certificate)},
                   {"sign_at_pi", sign_at_pi}};
  c.holds = definite_sign(left) > 0 && right.count == 1 && sign_at_pi < 0;
  c.detail = "f'>0 for s in (0,1/2]; exactly one simple zero for s in (1/2,1); f'(pi)<0";
  return c;
}

PropertyCheck exact_p3(const ExactDerivatives& d) {
  PropertyCheck c = exact_check(3);
  if (d.d2.has_even()) {
    c.detail = "f'' has an unexpected even part";
    return c;
  }
  const SignOutcome out = isolate::certify_positive(d.d2.odd, UniPoly::constant(1, 's'), Interval::bounded(0, 1));
  c.certificate = {{"fsecond_over_cos_numerator", d.d2.odd.to_string()}, {"negative_on_(0,1)", isolate::to_json(out)}};
  c.holds = definite_sign(out) < 0;
  c.detail = "f''/cos(theta/2) < 0 for s in (0,1); f''(pi)=0 since cos(pi/2)=0";
  return c;
}

PropertyCheck exact_even_positive(int index, const HalfAngleForm& form, bool include_pi, const char* label) {
  PropertyCheck c = exact_check(index);
  if (form.has_odd()) {
    c.detail = std::string(label) + " has an unexpected odd part";
    return c;
  }
  const SignOutcome out = isolate::certify_positive(form.even, UniPoly::constant(1, 's'), Interval::bounded(0, 1));
  const YCertificate yc = y_certificate(form);
  const bool at_pi = !include_pi || form.even.eval(BigRat(1)) > 0;
  c.certificate = {{"s_numerator", form.even.to_string()},
                   {"y_polynomial", yc.polynomial.to_string()},
                   {"y_scale", yc.scale.get_str()},
                   {"y_power", yc.y_power},
                   {"one_plus_y_power", yc.one_plus_y_power},
                   {"positive_on_(0,1)", isolate::to_json(out)}};
  c.holds = definite_sign(out) > 0 && at_pi;
  c.detail = std::string(label) + " > 0 for s in (0,1) via s = y/(1+y)";
  return c;
}

PropertyCheck numerical_check(int index) {
  PropertyCheck c;
  c.index = index;
  c.method = "numerical";
  return c;
}

}  // namespace

const PropertyCheck& FProfile::check(int index) const {
  for (const auto& c : checks) {
    if (c.index == index) return c;
  }
  throw std::out_of_range("no such property check");
}

bool FProfile::all_hold() const {
  for (const auto& c : checks) {
    if (!c.holds) return false;
  }
  return !checks.empty();
}

nlohmann::json to_json(const FProfile& profile) {
  nlohmann::json j;
  j["law"] = profile.law.to_string();
  j["p"] = profile.law.p();
  if (profile.theta_c) {
    j["theta_c"] = {{"lo", exactq::to_string(profile.theta_c->lo)},
                    {"hi", exactq::to_string(profile.theta_c->hi)},
                    {"radians", profile.theta_c->mid()},
                    {"degrees", profile.theta_c->mid() * 180.0 / kPi}};
  }
  j["zeros"] = profile.zeros;
  j["properties"] = nlohmann::json::array();
  for (const auto& c : profile.checks) {
    nlohmann::json pc = {{"property", c.index}, {"holds", c.holds}, {"method", c.method}, {"detail", c.detail}};
    if (c.counterexample) pc["counterexample_theta"] = *c.counterexample;
    if (!c.certificate.is_null()) pc["certificate"] = c.certificate;
    j["properties"].push_back(pc);
  }
  j["all_hold"] = profile.all_hold();
  return j;
}

std::vector<PropertyCheck> sample_properties(const ForceLaw& law, std::size_t samples) {
  std::vector<double> th(samples);
  for (std::size_t i = 0; i < samples; ++i) th[i] = kPi * (static_cast<double>(i) + 0.5) / static_cast<double>(samples);

  std::vector<PropertyCheck> out;
  {
    PropertyCheck c = numerical_check(1);
    c.holds = true;
    for (double t : th) {
      if (std::abs(t - kPi / 3) < 1e-9) continue;
      const double v = f_eval(t, law);
      if ((t < kPi / 3 && !(v < 0)) || (t > kPi / 3 && !(v > 0))) {
        c.holds = false;
        c.counterexample = t;
        break;
      }
    }
    c.detail = "sign of f sampled on (0, pi)";
    out.push_back(c);
  }
  double theta_change = -1;
  {
    PropertyCheck c = numerical_check(2);
    int changes = 0;
    int prev = 0;
    bool ok = true;
    for (double t : th) {
      const double v = f_prime(t, law);
      const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
      if (prev == 0 && s < 0) {
        ok = false;
        c.counterexample = t;
        break;
      }
      if (prev != 0 && s != prev) {
        ++changes;
        theta_change = t;
        if (s > 0) {
          ok = false;
          c.counterexample = t;
          break;
        }
      }
      if (s != 0) prev = s;
    }
    c.holds = ok && changes == 1 && theta_change > kPi / 3;
    if (ok && changes != 1) c.counterexample = theta_change;
    c.detail = "f' sampled: one change from + to - beyond pi/3";
    out.push_back(c);
  }
  {
    PropertyCheck c = numerical_check(3);
    c.holds = true;
    for (double t : th) {
      if (!(f_second(t, law) < 0)) {
        c.holds = false;
        c.counterexample = t;
        break;
      }
    }
    c.detail = "f'' sampled negative on (0, pi)";
    out.push_back(c);
  }
  {
    PropertyCheck c = numerical_check(4);
    c.holds = f_third(kPi, law) > 0;
    if (!c.holds) c.counterexample = kPi;
    for (double t : th) {
      if (!c.holds) break;
      if (!(f_third(t, law) > 0)) {
        c.holds = false;
        c.counterexample = t;
      }
    }
    c.detail = "f''' sampled positive on (0, pi]";
    out.push_back(c);
  }
  {
    PropertyCheck c = numerical_check(5);
    c.holds = out[1].holds;
    for (double t : th) {
      if (!c.holds || t >= theta_change) break;
      const double d1 = f_prime(t, law), d2 = f_second(t, law), d3 = f_third(t, law);
      if (!(-d1 * d3 + 3 * d2 * d2 > 0)) {
        c.holds = false;
        c.counterexample = t;
      }
    }
    c.detail = "-f'f''' + 3f''^2 sampled positive on (0, theta_c)";
    out.push_back(c);
  }
  return out;
}

FProfile certify_properties(const ForceLaw& law, std::size_t samples) {
  FProfile profile{law, std::nullopt, {kPi / 3, kPi}, {}};
  if (law.integer_exponent()) {
    const ExactDerivatives d = f_derivatives_exact(law);
    auto guarded = [&](int index, auto&& run) {
      try {
        profile.checks.push_back(run());
      } catch (const Error& e) {
        PropertyCheck c = exact_check(index);
        c.detail = std::string("certificate construction failed: ") + e.what();
        profile.checks.push_back(c);
      }
    };
    guarded(1, [&] { return exact_p1(d); });
    guarded(2, [&] { return exact_p2(d); });
    guarded(3, [&] { return exact_p3(d); });
    guarded(4, [&] { return exact_even_positive(4, d.d3, true, "f'''"); });
    guarded(5, [&] {
      PropertyCheck c = exact_even_positive(5, d.inverse_third, false, "-f'f'''+3f''^2");
      c.holds = c.holds && profile.holds(2);
      return c;
    });
  } else {
    profile.checks = sample_properties(law, samples);
  }
  if (profile.holds(2)) profile.theta_c = theta_c(law, BigRat(1, 1000000000000000L));
  return profile;
}

AngleBracket theta_c(const ForceLaw& law, const BigRat& precision) {
  if (precision <= 0) throw std::invalid_argument("theta_c precision must be positive");
  constexpr unsigned kBits = 170;
  if (law.integer_exponent()) {
    const ExactDerivatives d = f_derivatives_exact(law);
    const UniPoly& num = d.d1.even;
    const isolate::RootCount rc = isolate::count_roots_in(num, BigRat(1, 2), 1);
    const bool left_ok =
        definite_sign(isolate::certify_positive(num, UniPoly::constant(1, 's'), Interval::bounded(0, BigRat(1, 2)))) > 0;
    if (rc.count != 1 || !left_ok) throw Error("Property 2 does not hold for " + law.to_string());
    BigRat width = precision / 8;
    for (;;) {
      auto [slo, shi] = isolate::refine_root(num, rc.isolating.front(), width);
      AngleBracket b{dyadic_bound(2 * asin(to_high(slo)), kBits, false),
                     dyadic_bound(2 * asin(to_high(shi)), kBits, true)};
      if (b.hi - b.lo <= precision) return b;
      width /= 16;
    }
  }
  const auto checks = sample_properties(law, 20000);
  if (!checks[1].holds) throw Error("Property 2 does not hold for " + law.to_string());
  // Bracket the sign change on the sampling grid, then bisect at 50 digits.
  const HighFloat p(law.p());
  const std::size_t n = 20000;
  HighFloat lo = 0, hi = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double a = kPi * (static_cast<double>(i) + 0.5) / n;
    const double b = kPi * (static_cast<double>(i) + 1.5) / n;
    if (f_prime(a, law) > 0 && !(f_prime(b, law) > 0)) {
      lo = a;
      hi = b;
      break;
    }
  }
  const HighFloat target = to_high(precision) / 4;
  while (hi - lo > target) {
    const HighFloat mid = (lo + hi) / 2;
    if (f_prime_high(mid, p) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {dyadic_bound(lo, kBits, false), dyadic_bound(hi, kBits, true)};
}

InverseBranch::InverseBranch(const ForceLaw& law) : law_(law) {
  theta_c_ = forcefun::theta_c(law, BigRat(1, 1000000000000000L)).mid();
  f_lo_ = f_eval(kMinAngle, law);
  f_hi_ = f_eval(theta_c_, law);
}

double InverseBranch::operator()(double value) const {
  if (!(value > f_lo_ && value <= f_hi_)) throw DomainError("value outside the range of the increasing branch");
  double lo = kMinAngle, hi = theta_c_;
  for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f_eval(mid, law_) < value) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double InverseBranch::right_preimage(double value) const {
  if (!(std::abs(value) <= f_hi_)) throw DomainError("value outside the range of the decreasing branch");
  double lo = theta_c_, hi = 2 * kPi - theta_c_;
  for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f_eval(mid, law_) > value) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace coorbital::forcefun
