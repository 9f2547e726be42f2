#pragma once

#include "coorbital/exactq/bipoly.hpp"
#include "coorbital/highprec.hpp"
#include "coorbital/isolate/mobius.hpp"
#include "coorbital/symmetry/gap_config.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coorbital::symmetry {

using exactq::BigRat;
using exactq::BiPoly;
using exactq::UniPoly;

/// P = S (C^2 - c^2)^2 (1 - 16 s^2 C^3) - C^3 c (s^2 + S^2), given s^2.
BigRat p_simplified(const BigRat& C, const BigRat& S, const BigRat& c, const BigRat& s2);
/// Q = (C^2 - c^2)^2 (1 - 16 S^2 c^3) + S c^2 (C^2 + c^2).
BigRat q_simplified(const BigRat& C, const BigRat& S, const BigRat& c);

/// (1+t^2)^8 P and (1+t^2)^6 Q after s^2 = 1 - c^2, C = (1-t^2)/(1+t^2),
/// S = 2t/(1+t^2).
BiPoly build_p6();
BiPoly build_q7();

/// p(t, c0) as a polynomial in t.
UniPoly at_c(const BiPoly& p, const BigRat& c0);

/// One quoted-versus-computed comparison.
struct Comparison {
  std::string name;
  std::string expected;
  std::string computed;
  bool match = false;
};

struct StageReport {
  char stage = 'a';
  std::string title;
  bool passed = false;
  std::string detail;
  std::vector<Comparison> comparisons;
  std::vector<std::string> notes;
  double seconds = 0;
};

/// Test hook: tamper with an artifact right after it is computed so the
/// corresponding stage must fail.
enum class Corruption {
  kNone,
  /// Adds 1 to the t^39 coefficient of R78 (stage d).
  kR78Coefficient,
  /// Adds 1 to the t^28 coefficient of N (stage f).
  kNCoefficient,
};

struct PipelineOptions {
  /// Width of the final bracket around t2.
  BigRat precision{"1/10000000000000000000000000000000000000000"};
  Corruption corrupt = Corruption::kNone;
};

struct RootBracket {
  BigRat lo;
  BigRat hi;
};

struct MapVariation {
  isolate::MobiusMap map;
  std::string signs;
  int variations = 0;
};

/// Every stage and artifact of the elimination proof that the only
/// asymmetric-axis equilibrium with t1 = t3 is E2 (plus the square).
struct Prop5Pipeline {
  std::vector<StageReport> stages;
  std::optional<char> failed_stage;
  bool passed() const { return !failed_stage && stages.size() == 8; }

  GapConfig e3 = GapConfig::regular(4);

  BiPoly p6;
  BiPoly q7;
  UniPoly resultant;
  /// R = resultant_scale * t^5 (t^2-1)^16 (1+t^2)^32 * R78.
  BigRat resultant_scale;
  UniPoly r78;

  std::vector<MapVariation> substitutions;
  RootBracket t1;
  RootBracket t2;

  UniPoly m17;
  UniPoly m18;
  /// F = f_scale * (t+1)(t^2+1)^4 N / (t^2 (t-1)^2 D).
  BigRat f_scale;
  UniPoly n;
  UniPoly d;
  /// Numerator of F' up to a positive factor.
  UniPoly f_prime_numerator;
  MapVariation d_on_quarter_half{isolate::MobiusMap(1, 1, 4, 2), "", 0};
  MapVariation f_prime_on_quarter_half{isolate::MobiusMap(1, 1, 4, 2), "", 0};
  BigRat f_at_7_20;
  BigRat f_at_3_5;
  BigRat f_at_7_10;

  RootBracket t2_refined;
  RootBracket c_bracket;
  std::optional<GapConfig> e2;
  std::array<HighFloat, 4> e2_high{};
  HighFloat e2_residual = 0;
};

/// Runs stages (a) to (h) in order and stops at the first failing stage.
Prop5Pipeline run_prop5_pipeline(const PipelineOptions& options = {});

/// F(t) = f_scale (t+1)(t^2+1)^4 N(t) / (t^2 (t-1)^2 D(t)), exact.
BigRat eval_f(const Prop5Pipeline& pipeline, const BigRat& t);

nlohmann::json to_json(const Prop5Pipeline& pipeline);

/// One line per stage plus the key numbers, for terminal output.
std::string stage_log(const Prop5Pipeline& pipeline);

}  // namespace coorbital::symmetry
