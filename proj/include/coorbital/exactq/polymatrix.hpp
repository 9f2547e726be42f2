#pragma once

#include "coorbital/exactq/bipoly.hpp"

#include <span>
#include <vector>

namespace coorbital::exactq {

/// Dense matrix of rationals, row-major.
using RatMatrix = std::vector<std::vector<BigRat>>;

/// Exact determinant by fraction-free (Bareiss) elimination; rows are first
/// scaled to integers.
BigRat determinant(RatMatrix m);

/// The unique polynomial of degree < xs.size() through (xs[i], ys[i])
/// (Newton divided differences). The xs must be distinct.
UniPoly interpolate(std::span<const BigRat> xs, std::span<const BigRat> ys, char var = 't');

/// Square or rectangular matrix with UniPoly entries in one variable.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, char var = 't');

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  char var() const { return var_; }

  const UniPoly& at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }
  UniPoly& at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }

  /// Copy with one row and one column removed (0-based).
  PolyMatrix without(std::size_t row, std::size_t col) const;
  RatMatrix eval(const BigRat& x) const;

  /// Sum over rows of the largest entry degree; bounds the determinant
  /// degree. Returns -1 when some row is identically zero.
  int degree_bound() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  char var_ = 't';
  std::vector<UniPoly> cells_;
};

/// Determinant by evaluation at degree_bound()+1 integer points, Bareiss at
/// each point, then exact interpolation. Points are processed in parallel.
UniPoly det_by_interpolation(const PolyMatrix& m);

/// Determinant by fraction-free elimination directly over Q[x], dividing by
/// the previous pivot exactly at each step. Independent of the evaluation
/// route; practical for small matrices.
UniPoly det_fraction_free(const PolyMatrix& m);

enum class SylvesterLayout {
  /// Rows of the first polynomial first, coefficients highest degree first,
  /// each row shifted one column right of the previous one.
  kRowsHighestFirst,
  /// Same rows but coefficients lowest degree first.
  kRowsLowestFirst,
};

/// Sylvester matrix of two polynomials in c with coefficients in Q[t].
struct SylvesterMatrix {
  PolyMatrix matrix;
  SylvesterLayout layout = SylvesterLayout::kRowsHighestFirst;
  int degree_p = 0;
  int degree_q = 0;

  std::size_t dimension() const { return matrix.rows(); }
};

/// Throws DegenerateInput if either input is zero or constant in c.
SylvesterMatrix sylvester_in_c(const BiPoly& p, const BiPoly& q,
                               SylvesterLayout layout = SylvesterLayout::kRowsHighestFirst);

/// Res_c(p, q) = det of the highest-first Sylvester matrix; Res(p, q)
/// vanishes at t0 whenever p(t0, .) and q(t0, .) share a root.
UniPoly resultant_in_c(const BiPoly& p, const BiPoly& q);

/// Determinant of the Sylvester matrix with row i and column j removed,
/// 1-based as in M_{i,j}. Throws std::out_of_range on bad indices.
UniPoly sylvester_minor(const SylvesterMatrix& s, std::size_t i, std::size_t j);

}  // namespace coorbital::exactq
