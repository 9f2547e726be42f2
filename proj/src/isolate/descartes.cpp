#include "coorbital/isolate/descartes.hpp"

#include <stdexcept>

namespace coorbital::isolate {

namespace {

constexpr int kMaxDepth = 512;

int sign_at(const UniPoly& p, const BigRat& x) { return sgn(p.eval(x)); }

Certificate leaf(const UniPoly& q, const Interval& iv, const MobiusMap& map, UniPoly& numerator_out) {
  numerator_out = mobius_numerator(q, map);
  Certificate c;
  c.interval = iv;
  c.map = map;
  c.signs = sign_pattern(numerator_out);
  c.variations = sign_variations(numerator_out);
  return c;
}

Certificate isolate_bounded(const UniPoly& q, const BigRat& lo, const BigRat& hi, int depth,
                            std::vector<IsolationInterval>& found) {
  if (depth > kMaxDepth) throw Error("root isolation exceeded the bisection depth limit");
  UniPoly num;
  Certificate node = leaf(q, Interval::bounded(lo, hi), MobiusMap::onto_interval(lo, hi), num);
  if (node.variations <= 1) {
    node.roots = node.variations;
    if (node.roots == 1) found.push_back({lo, hi, 1, node});
    return node;
  }
  const BigRat width = hi - lo;
  BigRat mid = (lo + hi) / 2;
  if (q.eval(mid) == 0) {
    // A rational root sits on the split point; nudge the split by width/2^16.
    const BigRat eps = width / BigRat(65536);
    while (q.eval(mid) == 0) mid += eps;
    node.notes.push_back("split perturbed by " + exactq::to_string(BigRat(mid - (lo + hi) / 2)));
  }
  node.split = mid;
  node.children.push_back(isolate_bounded(q, lo, mid, depth + 1, found));
  node.children.push_back(isolate_bounded(q, mid, hi, depth + 1, found));
  node.roots = node.children[0].roots + node.children[1].roots;
  return node;
}

// 1 + max |q_k / q_n| bounds the modulus of every root.
BigRat cauchy_bound(const UniPoly& q) {
  BigRat best = 0;
  const BigRat lead = q.leading();
  for (int k = 0; k < q.degree(); ++k) {
    BigRat r = abs(q.coeff(static_cast<std::size_t>(k)) / lead);
    if (r > best) best = r;
  }
  return best + 1;
}

}  // namespace

BigRat Interval::interior_point() const {
  if (hi) return BigRat((lo + *hi) / 2);
  return BigRat(lo + 1);
}

std::string Interval::to_string() const {
  return "(" + exactq::to_string(lo) + ", " + (hi ? exactq::to_string(*hi) : std::string("inf")) + ")";
}

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json j;
  j["interval"] = {exactq::to_string(c.interval.lo), c.interval.hi ? exactq::to_string(*c.interval.hi) : "inf"};
  j["substitution"] = {exactq::to_string(c.map.a0()), exactq::to_string(c.map.a1()), exactq::to_string(c.map.b0()),
                       exactq::to_string(c.map.b1())};
  j["signs"] = c.signs;
  j["variations"] = c.variations;
  j["roots"] = c.roots;
  if (c.split) j["split"] = exactq::to_string(*c.split);
  if (!c.notes.empty()) j["notes"] = c.notes;
  if (!c.children.empty()) {
    j["children"] = nlohmann::json::array();
    for (const auto& ch : c.children) j["children"].push_back(to_json(ch));
  }
  return j;
}

RootCount count_roots_in(const UniPoly& p, const Interval& interval) {
  if (p.is_zero()) throw exactq::DegenerateInput("root count of the zero polynomial");
  if (interval.hi && !(interval.lo < *interval.hi)) throw std::invalid_argument("empty interval");
  if (p.eval(interval.lo) == 0) throw EndpointRoot("polynomial vanishes at " + exactq::to_string(interval.lo));
  if (interval.hi && p.eval(*interval.hi) == 0) {
    throw EndpointRoot("polynomial vanishes at " + exactq::to_string(*interval.hi));
  }
  const UniPoly q = exactq::squarefree_part(p);
  RootCount out;
  if (interval.hi) {
    out.certificate = isolate_bounded(q, interval.lo, *interval.hi, 0, out.isolating);
    out.count = out.certificate.roots;
    return out;
  }
  UniPoly num;
  Certificate node = leaf(q, interval, MobiusMap::onto_ray(interval.lo), num);
  if (node.variations <= 1) {
    node.roots = node.variations;
    if (node.roots == 1) {
      // Close the ray with a root bound so the isolating interval is finite.
      BigRat hi = cauchy_bound(q);
      if (hi <= interval.lo) hi = interval.lo + 1;
      while (q.eval(hi) == 0) hi += 1;
      out.isolating.push_back({interval.lo, hi, 1, node});
    }
    out.count = node.roots;
    out.certificate = std::move(node);
    return out;
  }
  BigRat hi = cauchy_bound(q);
  if (hi <= interval.lo) hi = interval.lo + 1;
  while (q.eval(hi) == 0) hi += 1;
  node.notes.push_back("all real roots lie below the Cauchy bound " + exactq::to_string(hi));
  node.split = hi;
  node.children.push_back(isolate_bounded(q, interval.lo, hi, 1, out.isolating));
  node.roots = node.children[0].roots;
  out.count = node.roots;
  out.certificate = std::move(node);
  return out;
}

RootCount count_roots_in(const UniPoly& p, const BigRat& lo, const BigRat& hi) {
  return count_roots_in(p, Interval::bounded(lo, hi));
}

std::pair<BigRat, BigRat> refine_root(const UniPoly& p, const IsolationInterval& iv, const BigRat& precision) {
  if (iv.root_count != 1) throw std::invalid_argument("refine_root needs an interval with exactly one root");
  return refine_root(p, iv.lo, iv.hi, precision);
}

std::pair<BigRat, BigRat> refine_root(const UniPoly& p, BigRat lo, BigRat hi, const BigRat& precision) {
  if (precision <= 0) throw std::invalid_argument("refine_root precision must be positive");
  if (!(lo < hi)) throw std::invalid_argument("refine_root needs lo < hi");
  const int s_lo = sign_at(p, lo);
  const int s_hi = sign_at(p, hi);
  if (s_lo * s_hi >= 0) throw Error("refine_root: no sign change across the interval");
  while (hi - lo > precision) {
    BigRat mid = (lo + hi) / 2;
    const int s = sign_at(p, mid);
    if (s == 0) {
      // The root is rational and equals mid; bracket it tightly.
      BigRat w = precision / 4;
      if (w > (hi - lo) / 4) w = (hi - lo) / 4;
      for (;;) {
        BigRat a = mid - w, b = mid + w;
        if (sign_at(p, a) == s_lo && sign_at(p, b) == s_hi) return {a, b};
        w /= 2;
      }
    }
    if (s == s_lo) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  return {lo, hi};
}

SignOutcome certify_positive(const UniPoly& num, const UniPoly& den, const Interval& interval) {
  if (num.is_zero() || den.is_zero()) throw exactq::DegenerateInput("sign certificate of a zero polynomial");
  SignCertificate cert;
  if (den.degree() > 0) {
    const bool hits_lo = den.eval(interval.lo) == 0;
    const bool hits_hi = interval.hi && den.eval(*interval.hi) == 0;
    if (hits_lo || hits_hi) throw DenominatorVanishes("denominator vanishes at an endpoint of " + interval.to_string());
    RootCount rc = count_roots_in(den, interval);
    if (rc.count > 0) throw DenominatorVanishes("denominator has a root in " + interval.to_string());
    cert.denominator = std::move(rc.certificate);
  }
  UniPoly work = num;
  const UniPoly x = UniPoly::identity(num.var());
  if (work.degree() > 0) {
    cert.endpoint_factors += static_cast<int>(exactq::strip_factor(work, x - UniPoly::constant(interval.lo, num.var())));
    if (interval.hi) {
      cert.endpoint_factors +=
          static_cast<int>(exactq::strip_factor(work, x - UniPoly::constant(*interval.hi, num.var())));
    }
  }
  const BigRat probe = interval.interior_point();
  if (work.degree() <= 0) {
    cert.numerator.interval = interval;
    cert.numerator.signs = sign_pattern(work);
    cert.sign = sgn(num.eval(probe)) * sgn(den.eval(probe));
    return cert;
  }
  RootCount rc = count_roots_in(work, interval);
  if (rc.count == 0) {
    cert.numerator = std::move(rc.certificate);
    cert.sign = sgn(num.eval(probe)) * sgn(den.eval(probe));
    return cert;
  }
  const IsolationInterval& first = rc.isolating.front();
  SignCounterexample bad{first.lo, first.hi, sgn(num.eval(first.lo)) * sgn(den.eval(first.lo)),
                         sgn(num.eval(first.hi)) * sgn(den.eval(first.hi))};
  return bad;
}

SignOutcome certify_positive(const UniPoly& num, const UniPoly& den, const BigRat& lo, const BigRat& hi) {
  return certify_positive(num, den, Interval::bounded(lo, hi));
}

nlohmann::json to_json(const SignOutcome& outcome) {
  nlohmann::json j;
  if (const auto* c = std::get_if<SignCertificate>(&outcome)) {
    j["definite"] = true;
    j["sign"] = c->sign;
    j["numerator"] = to_json(c->numerator);
    if (c->denominator) j["denominator"] = to_json(*c->denominator);
    if (c->endpoint_factors > 0) j["endpoint_factors"] = c->endpoint_factors;
  } else {
    const auto& bad = std::get<SignCounterexample>(outcome);
    j["definite"] = false;
    j["vanishes_in"] = {exactq::to_string(bad.lo), exactq::to_string(bad.hi)};
    j["sign_lo"] = bad.sign_lo;
    j["sign_hi"] = bad.sign_hi;
  }
  return j;
}

}  // namespace coorbital::isolate
