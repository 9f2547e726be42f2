#pragma once

#include "coorbital/symmetry/gap_config.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace coorbital::cli {

/// Exit codes: 0 all requested checks passed, 1 a check failed or a path
/// stopped early, 2 invalid arguments.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// E1, E2 or E3 at p = -3. E2 is polished from its known gaps.
symmetry::GapConfig named_equilibrium(const std::string& name);

/// Figure of a configuration: central body, circumcircle, satellites,
/// symmetry axes and gap labels in degrees. Deterministic for fixed input.
std::string render_svg(const symmetry::GapConfig& config, const std::string& title);

}  // namespace coorbital::cli
