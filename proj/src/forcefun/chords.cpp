#include "coorbital/forcefun/chords.hpp"

#include "coorbital/forcefun/properties.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace coorbital::forcefun {

namespace {

using Mat4 = std::array<std::array<HighFloat, 4>, 4>;

HighFloat det3(const Mat4& m, int skip_col) {
  int c[3];
  for (int j = 0, k = 0; j < 4; ++j) {
    if (j != skip_col) c[k++] = j;
  }
  return m[1][c[0]] * (m[2][c[1]] * m[3][c[2]] - m[2][c[2]] * m[3][c[1]]) -
         m[1][c[1]] * (m[2][c[0]] * m[3][c[2]] - m[2][c[2]] * m[3][c[0]]) +
         m[1][c[2]] * (m[2][c[0]] * m[3][c[1]] - m[2][c[1]] * m[3][c[0]]);
}

HighFloat det4(const Mat4& m) {
  HighFloat d = 0;
  for (int j = 0; j < 4; ++j) {
    const HighFloat term = m[0][j] * det3(m, j);
    d += (j % 2 == 0) ? term : HighFloat(-term);
  }
  return d;
}

// Rows 1, x, x^2, y.
Mat4 moment_matrix(const std::array<HighFloat, 4>& x, const std::array<HighFloat, 4>& y) {
  Mat4 m;
  for (int j = 0; j < 4; ++j) {
    m[0][j] = 1;
    m[1][j] = x[j];
    m[2][j] = x[j] * x[j];
    m[3][j] = y[j];
  }
  return m;
}

HighFloat fh(const ForceLaw& law, double theta) { return f_eval_high(HighFloat(theta), HighFloat(law.p())); }

void require_increasing(const std::array<double, 4>& t, double hi, const char* what) {
  if (!(t[0] > 0 && t[0] < t[1] && t[1] < t[2] && t[2] < t[3] && t[3] <= hi)) {
    throw std::invalid_argument(std::string(what) + ": points must satisfy 0 < t1 < t2 < t3 < t4 within range");
  }
}

}  // namespace

Chord chord_at_level(const InverseBranch& g, double level) { return {g(level), g.right_preimage(level)}; }

void validate_chord(const Chord& chord, const ForceLaw& law, double tol) {
  if (!(chord.left < chord.right)) throw std::invalid_argument("chord needs left < right");
  const double a = f_eval(chord.left, law);
  const double b = f_eval(chord.right, law);
  if (std::abs(a - b) > tol * std::max(1.0, std::abs(a))) throw std::invalid_argument("chord ends are not level");
}

std::string to_string(LemmaKind kind) {
  switch (kind) {
    case LemmaKind::kLemma1:
      return "lemma1";
    case LemmaKind::kLemma2:
      return "lemma2";
    case LemmaKind::kCorollary:
      return "corollary";
    case LemmaKind::kLemma3:
      return "lemma3";
  }
  return "unknown";
}

LemmaResult check_lemma1(const ForceLaw& law, const std::array<double, 4>& t) {
  require_increasing(t, std::numbers::pi, "lemma 1");
  std::array<HighFloat, 4> x, y;
  for (int i = 0; i < 4; ++i) {
    x[i] = t[i];
    y[i] = fh(law, t[i]);
  }
  const HighFloat d = det4(moment_matrix(x, y));
  LemmaResult r{LemmaKind::kLemma1};
  r.determinant = static_cast<double>(d);
  r.factored = r.determinant;
  r.margin = r.determinant;
  r.holds = d > 0;
  return r;
}

LemmaResult check_lemma2(const ForceLaw& law, const Chord& outer, const Chord& inner, double theta_c) {
  if (!(outer.left < inner.left && inner.left < theta_c && theta_c < inner.right && inner.right < outer.right)) {
    throw std::invalid_argument("lemma 2: chords must satisfy t1L < t2L < theta_c < t2R < t1R");
  }
  validate_chord(outer, law);
  validate_chord(inner, law);
  const HighFloat f1 = fh(law, outer.left);
  const HighFloat f2 = fh(law, inner.left);
  const std::array<HighFloat, 4> x{outer.left, inner.left, inner.right, outer.right};
  const HighFloat d = det4(moment_matrix(x, {f1, f2, f2, f1}));
  const HighFloat t1l = outer.left, t1r = outer.right, t2l = inner.left, t2r = inner.right;
  const HighFloat factored = (f2 - f1) * (t1r - t1l) * (t2r - t2l) * (t1l + t1r - t2l - t2r);
  LemmaResult r{LemmaKind::kLemma2};
  r.determinant = static_cast<double>(d);
  r.factored = static_cast<double>(factored);
  r.margin = static_cast<double>(t1l + t1r - t2l - t2r);
  r.holds = d > 0 && factored > 0 && r.margin > 0;
  return r;
}

LemmaResult check_corollary(const ForceLaw& law, const Chord& chord, double theta_c) {
  if (!(chord.left < theta_c && theta_c < chord.right)) {
    throw std::invalid_argument("corollary: chord must straddle theta_c");
  }
  validate_chord(chord, law);
  LemmaResult r{LemmaKind::kCorollary};
  r.margin = chord.left + chord.right - 2 * theta_c;
  r.holds = r.margin > 0;
  return r;
}

LemmaResult check_lemma3(const ForceLaw& law, const std::array<double, 4>& t, double theta_c) {
  require_increasing(t, theta_c, "lemma 3");
  std::array<HighFloat, 4> x, f;
  for (int i = 0; i < 4; ++i) {
    x[i] = t[i];
    f[i] = fh(law, t[i]);
  }
  const HighFloat mismatch = f[0] + f[3] - f[1] - f[2];
  const HighFloat scale = abs(f[3] - f[0]) + 1;
  if (abs(mismatch) > 1e-9 * scale) throw std::invalid_argument("lemma 3: chord midpoints must be level");
  // Rows 1, f, f^2, t: Lemma 1 applied to the inverse of f.
  const HighFloat d = det4(moment_matrix(f, x));
  const HighFloat inner = (x[3] - x[0]) * (f[2] - f[1]) - (x[2] - x[1]) * (f[3] - f[0]);
  const HighFloat factored = (f[3] - f[2]) * (f[2] - f[0]) * inner;
  LemmaResult r{LemmaKind::kLemma3};
  r.determinant = static_cast<double>(d);
  r.factored = static_cast<double>(factored);
  r.margin = static_cast<double>(inner);
  r.holds = d > 0 && r.margin > 0;
  return r;
}

}  // namespace coorbital::forcefun
