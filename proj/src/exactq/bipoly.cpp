#include "coorbital/exactq/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace coorbital::exactq {

BiPoly::BiPoly(std::vector<UniPoly> c_coeffs) : c_coeffs_(std::move(c_coeffs)) {
  for (auto& p : c_coeffs_) p = p.with_var('t');
  trim();
}

BiPoly BiPoly::constant(const BigRat& v) { return BiPoly({UniPoly::constant(v, 't')}); }

BiPoly BiPoly::t() { return BiPoly({UniPoly::identity('t')}); }

BiPoly BiPoly::c() { return BiPoly({UniPoly({}, 't'), UniPoly::constant(1, 't')}); }

BiPoly BiPoly::from_t(const UniPoly& p) { return BiPoly({p.with_var('t')}); }

int BiPoly::degree_t() const {
  int d = -1;
  for (const auto& p : c_coeffs_) d = std::max(d, p.degree());
  return d;
}

UniPoly BiPoly::coeff_c(std::size_t j) const {
  return j < c_coeffs_.size() ? c_coeffs_[j] : UniPoly({}, 't');
}

UniPoly BiPoly::eval_t(const BigRat& t) const {
  std::vector<BigRat> out;
  out.reserve(c_coeffs_.size());
  for (const auto& p : c_coeffs_) out.push_back(p.eval(t));
  return UniPoly(std::move(out), 'c');
}

BigRat BiPoly::eval(const BigRat& t, const BigRat& c) const { return eval_t(t).eval(c); }

BiPoly BiPoly::pow(unsigned k) const {
  BiPoly result = constant(1);
  BiPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& p : out.c_coeffs_) p = -p;
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  if (c_coeffs_.size() < rhs.c_coeffs_.size()) c_coeffs_.resize(rhs.c_coeffs_.size(), UniPoly({}, 't'));
  for (std::size_t j = 0; j < rhs.c_coeffs_.size(); ++j) c_coeffs_[j] += rhs.c_coeffs_[j];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  if (c_coeffs_.size() < rhs.c_coeffs_.size()) c_coeffs_.resize(rhs.c_coeffs_.size(), UniPoly({}, 't'));
  for (std::size_t j = 0; j < rhs.c_coeffs_.size(); ++j) c_coeffs_[j] -= rhs.c_coeffs_[j];
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    c_coeffs_.clear();
    return *this;
  }
  std::vector<UniPoly> out(c_coeffs_.size() + rhs.c_coeffs_.size() - 1, UniPoly({}, 't'));
  for (std::size_t i = 0; i < c_coeffs_.size(); ++i) {
    if (c_coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.c_coeffs_.size(); ++j) out[i + j] += c_coeffs_[i] * rhs.c_coeffs_[j];
  }
  c_coeffs_ = std::move(out);
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const BigRat& k) {
  for (auto& p : c_coeffs_) p *= k;
  trim();
  return *this;
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = c_coeffs_.size(); j-- > 0;) {
    if (c_coeffs_[j].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_coeffs_[j].to_string() << ")";
    if (j > 0) os << "*c^" << j;
  }
  return os.str();
}

void BiPoly::trim() {
  while (!c_coeffs_.empty() && c_coeffs_.back().is_zero()) c_coeffs_.pop_back();
}

BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw DegenerateInput("division by the zero polynomial");
  const int db = b.degree_c();
  const UniPoly lead_b = b.coeff_c(static_cast<std::size_t>(db));
  BiPoly rem = a;
  std::vector<UniPoly> quot(static_cast<std::size_t>(std::max(0, a.degree_c() - db + 1)), UniPoly({}, 't'));
  while (!rem.is_zero() && rem.degree_c() >= db) {
    const int k = rem.degree_c() - db;
    UniPoly q = exact_div(rem.coeff_c(static_cast<std::size_t>(rem.degree_c())), lead_b);
    std::vector<UniPoly> mono(static_cast<std::size_t>(k) + 1, UniPoly({}, 't'));
    mono[static_cast<std::size_t>(k)] = q;
    quot[static_cast<std::size_t>(k)] = q;
    rem -= BiPoly(std::move(mono)) * b;
  }
  if (!rem.is_zero()) throw NotDivisible("bivariate division leaves a remainder");
  return BiPoly(std::move(quot));
}

}  // namespace coorbital::exactq
