#include "coorbital/exactq/polymatrix.hpp"

#include "coorbital/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace coorbital::exactq {

BigRat determinant(RatMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  // Scale each row to integers; the determinant picks up the product of
  // the scale factors.
  BigInt scale = 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    BigInt l = 1;
    for (const auto& x : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    scale *= l;
    for (std::size_t j = 0; j < n; ++j) a[i][j] = l / m[i][j].get_den() * m[i][j].get_num();
  }
  int sgn_flip = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sgn_flip = -sgn_flip;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  BigRat out(a[n - 1][n - 1] * sgn_flip, scale);
  out.canonicalize();
  return out;
}

UniPoly interpolate(std::span<const BigRat> xs, std::span<const BigRat> ys, char var) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  const std::size_t n = xs.size();
  if (n == 0) return UniPoly({}, var);
  std::vector<BigRat> dd(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      BigRat den = xs[i] - xs[i - j];
      if (den == 0) throw std::invalid_argument("interpolate: repeated abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / den;
    }
  }
  // Horner-style expansion of the Newton form into monomials.
  std::vector<BigRat> poly{dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    std::vector<BigRat> next(poly.size() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * xs[k];
    }
    next[0] += dd[k];
    poly = std::move(next);
  }
  return UniPoly(std::move(poly), var);
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, char var)
    : rows_(rows), cols_(cols), var_(var), cells_(rows * cols, UniPoly({}, var)) {}

PolyMatrix PolyMatrix::without(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("PolyMatrix::without index");
  PolyMatrix out(rows_ - 1, cols_ - 1, var_);
  for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
    if (r == row) continue;
    for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
      if (c == col) continue;
      out.at(rr, cc) = at(r, c);
      ++cc;
    }
    ++rr;
  }
  return out;
}

RatMatrix PolyMatrix::eval(const BigRat& x) const {
  RatMatrix out(rows_, std::vector<BigRat>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = at(r, c).eval(x);
  }
  return out;
}

int PolyMatrix::degree_bound() const {
  int total = 0;
  for (std::size_t r = 0; r < rows_; ++r) {
    int best = -1;
    for (std::size_t c = 0; c < cols_; ++c) best = std::max(best, at(r, c).degree());
    if (best < 0) return -1;
    total += best;
  }
  return total;
}

UniPoly det_by_interpolation(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const int bound = m.degree_bound();
  if (bound < 0) return UniPoly({}, m.var());
  const std::size_t npts = static_cast<std::size_t>(bound) + 1;
  std::vector<BigRat> xs(npts), ys(npts);
  for (std::size_t k = 0; k < npts; ++k) xs[k] = static_cast<long>(k) - bound / 2;
  parallel_for(npts, [&](std::size_t k) { ys[k] = determinant(m.eval(xs[k])); });
  return interpolate(xs, ys, m.var());
}

UniPoly det_fraction_free(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return UniPoly::constant(1, m.var());
  std::vector<std::vector<UniPoly>> a(n, std::vector<UniPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  }
  BigRat sgn_flip = 1;
  UniPoly prev = UniPoly::constant(1, m.var());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return UniPoly({}, m.var());
      std::swap(a[k], a[p]);
      sgn_flip = -sgn_flip;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      }
    }
    prev = a[k][k];
  }
  return (a[n - 1][n - 1] * sgn_flip).with_var(m.var());
}

SylvesterMatrix sylvester_in_c(const BiPoly& p, const BiPoly& q, SylvesterLayout layout) {
  if (p.is_zero() || q.is_zero()) throw DegenerateInput("resultant of a zero polynomial");
  const int m = p.degree_c();
  const int n = q.degree_c();
  if (m < 1 || n < 1) throw DegenerateInput("resultant needs positive degree in c");
  const std::size_t dim = static_cast<std::size_t>(m + n);
  SylvesterMatrix s{PolyMatrix(dim, dim, 't'), layout, m, n};
  auto place = [&](const BiPoly& poly, int deg, std::size_t row, std::size_t shift) {
    for (int k = 0; k <= deg; ++k) {
      const std::size_t col =
          layout == SylvesterLayout::kRowsHighestFirst ? shift + static_cast<std::size_t>(deg - k)
                                                      : shift + static_cast<std::size_t>(k);
      s.matrix.at(row, col) = poly.coeff_c(static_cast<std::size_t>(k));
    }
  };
  for (int r = 0; r < n; ++r) place(p, m, static_cast<std::size_t>(r), static_cast<std::size_t>(r));
  for (int r = 0; r < m; ++r) {
    place(q, n, static_cast<std::size_t>(n + r), static_cast<std::size_t>(r));
  }
  return s;
}

UniPoly resultant_in_c(const BiPoly& p, const BiPoly& q) {
  return det_by_interpolation(sylvester_in_c(p, q).matrix);
}

UniPoly sylvester_minor(const SylvesterMatrix& s, std::size_t i, std::size_t j) {
  const std::size_t n = s.dimension();
  if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("Sylvester minor index out of range");
  return det_by_interpolation(s.matrix.without(i - 1, j - 1));
}

}  // namespace coorbital::exactq
