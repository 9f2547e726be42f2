#pragma once

#include "coorbital/forcefun/force_law.hpp"

#include <array>
#include <string>

namespace coorbital::forcefun {

class InverseBranch;

/// Horizontal chord on the graph of f: f(left) == f(right), left < right.
struct Chord {
  double left = 0;
  double right = 0;

  double midpoint() const { return 0.5 * (left + right); }
};

/// Chord at height `level`, with one end on each side of theta_c.
Chord chord_at_level(const InverseBranch& g, double level);

/// Throws std::invalid_argument unless left < right and the two ends have
/// equal f values within `tol` (relative).
void validate_chord(const Chord& chord, const ForceLaw& law, double tol = 1e-10);

enum class LemmaKind { kLemma1, kLemma2, kCorollary, kLemma3 };

std::string to_string(LemmaKind kind);

struct LemmaResult {
  LemmaKind kind = LemmaKind::kLemma1;
  bool holds = false;
  /// The 4x4 determinant of the lemma, evaluated at 50 digits. Zero for
  /// the Corollary, which has no determinant.
  double determinant = 0;
  /// The closed-form factorization of the same determinant.
  double factored = 0;
  /// The inequality the lemma concludes, as "lhs - rhs" > 0.
  double margin = 0;
};

/// Lemma 1 for phi = f: det[1; t; t^2; f(t)] > 0 for t1 < t2 < t3 < t4 in
/// (0, pi]. Throws std::invalid_argument when the ordering is violated.
LemmaResult check_lemma1(const ForceLaw& law, const std::array<double, 4>& t);

/// Lemma 2 for an outer chord (t1L, t1R) and an inner chord (t2L, t2R) with
/// t1L < t2L < theta_c < t2R < t1R: t2L + t2R < t1L + t1R.
LemmaResult check_lemma2(const ForceLaw& law, const Chord& outer, const Chord& inner, double theta_c);

/// Corollary: 2 theta_c < tL + tR for any chord with tL < theta_c.
LemmaResult check_corollary(const ForceLaw& law, const Chord& chord, double theta_c);

/// Lemma 3 for t1 < t2 < t3 < t4 < theta_c with f1 + f4 = f2 + f3:
/// (t4 - t1)(f3 - f2) - (t3 - t2)(f4 - f1) > 0.
LemmaResult check_lemma3(const ForceLaw& law, const std::array<double, 4>& t, double theta_c);

}  // namespace coorbital::forcefun
