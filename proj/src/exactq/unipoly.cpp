#include "coorbital/exactq/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace coorbital::exactq {

namespace {

using IntPoly = std::vector<BigInt>;

void trim_int(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

BigInt int_content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(IntPoly& p) {
  if (p.empty()) return;
  BigInt g = int_content(p);
  if (p.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

IntPoly to_int_poly(const UniPoly& p) {
  BigInt l = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  IntPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    BigInt v = l / c.get_den() * c.get_num();
    out.push_back(v);
  }
  return out;
}

// Pseudo-remainder of a by b over Z: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const BigInt& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    BigInt la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim_int(a);
  }
  return a;
}

}  // namespace

UniPoly::UniPoly(std::vector<BigRat> coeffs, char var) : coeffs_(std::move(coeffs)), var_(var) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

UniPoly::UniPoly(std::initializer_list<long> coeffs, char var) : var_(var) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

UniPoly UniPoly::constant(const BigRat& c, char var) { return UniPoly(std::vector<BigRat>{c}, var); }

UniPoly UniPoly::monomial(const BigRat& c, unsigned k, char var) {
  std::vector<BigRat> v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v), var);
}

UniPoly UniPoly::identity(char var) { return monomial(1, 1, var); }

UniPoly UniPoly::with_var(char var) const {
  UniPoly out = *this;
  out.var_ = var;
  return out;
}

BigRat UniPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigRat(0); }

BigRat UniPoly::leading() const { return coeffs_.empty() ? BigRat(0) : coeffs_.back(); }

bool UniPoly::has_integer_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRat& c) { return c.get_den() == 1; });
}

BigRat UniPoly::eval(const BigRat& x) const {
  // Horner over a common denominator keeps the work in Z.
  if (coeffs_.empty()) return 0;
  const BigInt& xn = x.get_num();
  const BigInt& xd = x.get_den();
  IntPoly ip = to_int_poly(*this);
  BigInt acc = 0, dpow = 1;
  for (auto it = ip.rbegin(); it != ip.rend(); ++it) {
    acc = acc * xn + *it * dpow;
    dpow *= xd;
  }
  // acc = xd^(n) * sum c_k x^k * scale, with dpow = xd^(n+1)
  BigRat scale = coeffs_.back() / BigRat(ip.back());
  BigRat out(acc, dpow / xd);
  out.canonicalize();
  return out * scale;
}

double UniPoly::eval(double x) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return static_cast<double>(acc);
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly({}, var_);
  std::vector<BigRat> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return UniPoly(std::move(d), var_);
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc({}, inner.var());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += UniPoly::constant(*it, inner.var());
  }
  return acc.with_var(inner.var());
}

UniPoly UniPoly::pow(unsigned k) const {
  UniPoly result = UniPoly::constant(1, var_);
  UniPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

char UniPoly::merged_var(const UniPoly& rhs) const {
  if (var_ == rhs.var_) return var_;
  if (degree() <= 0) return rhs.var_;
  if (rhs.degree() <= 0) return var_;
  throw std::invalid_argument(std::string("variable mismatch: ") + var_ + " vs " + rhs.var_);
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  var_ = merged_var(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  var_ = merged_var(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
  var_ = merged_var(rhs);
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigRat> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const BigRat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::string UniPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigRat& c = coeffs_[k];
    if (c == 0) continue;
    BigRat a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (a == 1);
    if (!unit || k == 0) os << a.get_str();
    if (k > 0) {
      if (!unit) os << "*";
      os << var_;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DegenerateInput("division by the zero polynomial");
  const char var = a.degree() > 0 ? a.var() : b.var();
  if (a.degree() < b.degree()) return {UniPoly({}, var), a.with_var(var)};
  std::vector<BigRat> rem(a.coeffs().begin(), a.coeffs().end());
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<BigRat> quot(rem.size() - db);
  const BigRat inv_lead = 1 / b.leading();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    BigRat q = rem[k] * inv_lead;
    quot[k - db] = q;
    for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] -= q * b.coeffs()[i];
  }
  rem.resize(db);
  return {UniPoly(std::move(quot), var), UniPoly(std::move(rem), var)};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  DivMod dm = divmod(a, b);
  if (!dm.remainder.is_zero()) {
    throw NotDivisible("nonzero remainder " + dm.remainder.to_string());
  }
  return dm.quotient;
}

BigRat content(const UniPoly& p) {
  if (p.is_zero()) return 1;
  BigInt l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntPoly ip = to_int_poly(p);
  BigInt g = int_content(ip);
  if (ip.back() < 0) g = -g;
  // p = (g / l) * primitive
  BigRat out(g, l);
  out.canonicalize();
  return out;
}

UniPoly primitive_part(const UniPoly& p) {
  if (p.is_zero()) return p;
  return p * (1 / content(p));
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  const char var = a.degree() > 0 ? a.var() : b.var();
  if (a.is_zero() && b.is_zero()) return UniPoly({}, var);
  IntPoly x = to_int_poly(a), y = to_int_poly(b);
  make_primitive(x);
  make_primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    IntPoly r = pseudo_rem(x, y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<BigRat> out;
  out.reserve(x.size());
  for (const auto& c : x) out.emplace_back(c, x.back());
  for (auto& c : out) c.canonicalize();
  return UniPoly(std::move(out), var);
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return p;
  UniPoly g = gcd(p, p.derivative());
  return primitive_part(exact_div(p, g));
}

unsigned strip_factor(UniPoly& p, const UniPoly& factor) {
  if (factor.degree() < 1) throw std::invalid_argument("strip_factor needs a non-constant factor");
  unsigned count = 0;
  while (!p.is_zero()) {
    DivMod dm = divmod(p, factor);
    if (!dm.remainder.is_zero()) break;
    p = std::move(dm.quotient);
    ++count;
  }
  return count;
}

}  // namespace coorbital::exactq
