#include "coorbital/solver/solve.hpp"

#include "coorbital/parallel.hpp"
#include "coorbital/symmetry/classify.hpp"

#include <algorithm>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace coorbital::solver {

namespace {
constexpr double kDedupTol = 1e-6;
}  // namespace

GapConfig random_start(int n, std::uint64_t seed, int k) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(k)};
  std::mt19937_64 rng(seq);
  std::exponential_distribution<double> e(1.0);
  std::vector<double> g(static_cast<std::size_t>(n));
  double sum = 0;
  for (double& x : g) sum += (x = e(rng));
  for (double& x : g) x = std::max(x * 2 * std::numbers::pi / sum, 2 * kCoalescenceGap);
  double head = 0;
  for (std::size_t i = 0; i + 1 < g.size(); ++i) head += g[i];
  g.back() = 2 * std::numbers::pi - head;
  return GapConfig(std::move(g), 1e-9);
}

SolveRun solve_n(int n, const ForceLaw& law, int restarts, std::uint64_t seed, double tol) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (restarts < 1) throw std::invalid_argument("restarts must be at least 1");
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");

  std::vector<std::optional<GapConfig>> slots(static_cast<std::size_t>(restarts));
  NewtonOptions opt;
  opt.tol = tol;
  parallel_for(slots.size(), [&](std::size_t k) {
    try {
      const GapConfig start = random_start(n, seed, static_cast<int>(k));
      const NewtonResult r = newton_polish(start.angles(), law, opt);
      if (r.status == NewtonStatus::kConverged) slots[k] = symmetry::canonical(from_angles(r.phi));
    } catch (const symmetry::InvalidConfig&) {
    } catch (const Coalescent&) {
    }
  });

  std::vector<GapConfig> hits;
  for (auto& s : slots) {
    if (s) hits.push_back(std::move(*s));
  }
  std::sort(hits.begin(), hits.end(), [](const GapConfig& a, const GapConfig& b) { return a.gaps() < b.gaps(); });

  SolveRun run{n, law, restarts, seed, tol, static_cast<int>(hits.size()), {}};
  for (const GapConfig& h : hits) {
    auto it = std::find_if(run.found.begin(), run.found.end(),
                           [&](const Solution& s) { return symmetry::config_distance(s.gaps, h) <= kDedupTol; });
    if (it != run.found.end()) {
      ++it->hits;
      continue;
    }
    Solution s{h, max_abs(residual_n(h, law)), detect_axis(h), {}, 1};
    if (n == 4) {
      for (auto c : symmetry::symmetry_classes(h)) s.classes.push_back(symmetry::to_string(c));
    }
    run.found.push_back(std::move(s));
  }
  return run;
}

nlohmann::json to_json(const SolveRun& run) {
  using nlohmann::json;
  json found = json::array();
  for (const Solution& s : run.found) {
    json axes = json::array();
    for (const Axis& a : s.axes.axes) {
      axes.push_back({{"angle_degrees", a.angle * 180 / std::numbers::pi}, {"satellites_on_axis", a.satellites_on_axis}});
    }
    found.push_back({{"gaps_radians", s.gaps.gaps()},
                     {"gaps_degrees", s.gaps.degrees()},
                     {"residual", s.residual},
                     {"axes", axes},
                     {"classes", s.classes},
                     {"hits", s.hits}});
  }
  return json{{"n", run.n},   {"p", run.law.p()},       {"law", run.law.to_string()},
              {"restarts", run.restarts}, {"seed", run.seed}, {"tol", run.tol},
              {"converged", run.converged}, {"count", run.found.size()}, {"found", found}};
}

std::string to_csv(const SolveRun& run) {
  std::ostringstream os;
  os.precision(12);
  os << "index,residual,axes";
  for (int i = 0; i < run.n; ++i) os << ",gap" << i + 1 << "_deg";
  os << "\n";
  for (std::size_t k = 0; k < run.found.size(); ++k) {
    const Solution& s = run.found[k];
    os << k << "," << s.residual << "," << s.axes.count();
    for (double d : s.gaps.degrees()) os << "," << d;
    os << "\n";
  }
  return os.str();
}

}  // namespace coorbital::solver
