#include "coorbital/cli/app.hpp"

#include "coorbital/forcefun/properties.hpp"
#include "coorbital/solver/continuation.hpp"
#include "coorbital/solver/solve.hpp"
#include "coorbital/symmetry/prop5.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

namespace coorbital::cli {

namespace {

using nlohmann::json;
using symmetry::GapConfig;

constexpr double kPi = std::numbers::pi;

// Stable fixed-point formatting for reports and SVG output.
std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  std::string s = buf;
  // No "-0.000" in output.
  if (s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string degrees_list(const GapConfig& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? ", " : "") + fixed(g.degrees()[i], 4);
  return s + ")";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
  if (!f) throw Error("write failed: " + path);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Exact rational exponent for integer p, otherwise a floating law.
forcefun::ForceLaw make_law(double p) {
  if (std::isfinite(p) && p == std::floor(p) && std::abs(p) < 1e9) {
    return forcefun::ForceLaw(exactq::BigRat(static_cast<long>(p)));
  }
  return forcefun::ForceLaw(p);
}

int usage_error(const CLI::App& app, const std::string& message, std::ostream& err) {
  err << "error: " << message << "\n\n" << app.help();
  return kExitUsage;
}

// ---- certify -------------------------------------------------------------

struct CertifyArgs {
  std::string json_path;
  std::string inject;
};

int cmd_certify(const CertifyArgs& a, std::ostream& out) {
  symmetry::PipelineOptions opt;
  if (a.inject == "r78") opt.corrupt = symmetry::Corruption::kR78Coefficient;
  if (a.inject == "n") opt.corrupt = symmetry::Corruption::kNCoefficient;

  const auto t0 = std::chrono::steady_clock::now();
  const forcefun::FProfile profile = forcefun::certify_properties(forcefun::ForceLaw::newtonian());
  const double t_props = seconds_since(t0);
  const auto t1 = std::chrono::steady_clock::now();
  const symmetry::Prop5Pipeline pl = symmetry::run_prop5_pipeline(opt);
  const double t_pipe = seconds_since(t1);

  const forcefun::ExactDerivatives d = forcefun::f_derivatives_exact(forcefun::ForceLaw::newtonian());
  const forcefun::YCertificate c7 = forcefun::y_certificate(d.d3);
  const forcefun::YCertificate c12 = forcefun::y_certificate(d.inverse_third);

  const bool passed = profile.all_hold() && pl.passed();

  out << "properties of f at p = -3 (" << fixed(t_props, 2) << " s)\n";
  for (const auto& c : profile.checks) {
    out << "  property " << c.index << ": " << (c.holds ? "holds" : "FAILS") << " [" << c.method << "] " << c.detail
        << "\n";
  }
  if (profile.theta_c) out << "  theta_c = " << fixed(profile.theta_c->mid() * 180 / kPi, 6) << " deg\n";
  out << "  degree-7 certificate (f'''): " << c7.polynomial.to_string() << "\n";
  out << "  degree-12 certificate (g'''): " << c12.polynomial.to_string() << "\n";
  out << "elimination pipeline (" << fixed(t_pipe, 2) << " s)\n" << symmetry::stage_log(pl);
  if (!profile.all_hold()) out << "FAIL: property checks\n";
  if (pl.failed_stage) out << "FAIL: pipeline stage (" << *pl.failed_stage << ")\n";
  out << (passed ? "certify: PASS\n" : "certify: FAIL\n");

  if (!a.json_path.empty()) {
    json j{{"schema", 1},
           {"command", "certify"},
           {"passed", passed},
           {"properties", forcefun::to_json(profile)},
           {"certificates",
            {{"fthird_degree7",
              {{"polynomial", c7.polynomial.to_string()},
               {"scale", c7.scale.get_str()},
               {"y_power", c7.y_power},
               {"one_plus_y_power", c7.one_plus_y_power}}},
             {"inverse_third_degree12",
              {{"polynomial", c12.polynomial.to_string()},
               {"scale", c12.scale.get_str()},
               {"y_power", c12.y_power},
               {"one_plus_y_power", c12.one_plus_y_power}}}}},
           {"pipeline", symmetry::to_json(pl)},
           {"timings", {{"properties_seconds", t_props}, {"pipeline_seconds", t_pipe}}}};
    if (!a.inject.empty()) j["injected_fault"] = a.inject;
    write_file(a.json_path, j.dump(2) + "\n");
  }
  return passed ? kExitOk : kExitFailed;
}

// ---- solve ---------------------------------------------------------------

struct SolveArgs {
  int n = 4;
  double p = -3;
  int restarts = 10000;
  std::uint64_t seed = 1;
  double tol = 1e-12;
  std::string json_path;
  std::string csv_path;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const forcefun::ForceLaw law = make_law(a.p);
  if (!law.integer_exponent()) {
    err << "warning: exact certificates are unavailable at p = " << a.p
        << "; solutions are numerical only\n";
  }
  const solver::SolveRun run = solver::solve_n(a.n, law, a.restarts, a.seed, a.tol);
  out << "n = " << run.n << ", p = " << a.p << ": " << run.found.size() << " solutions (" << run.converged << " of "
      << run.restarts << " restarts converged)\n";
  for (std::size_t i = 0; i < run.found.size(); ++i) {
    const solver::Solution& s = run.found[i];
    out << "  " << i + 1 << ": gaps " << degrees_list(s.gaps) << " deg, residual " << s.residual << ", axes "
        << s.axes.count();
    if (!s.classes.empty()) {
      out << ", classes";
      for (const auto& c : s.classes) out << " " << c;
    }
    out << "\n";
  }
  json j = solver::to_json(run);
  j["schema"] = 1;
  j["command"] = "solve";
  j["exact_exponent"] = law.integer_exponent().has_value();
  if (!a.json_path.empty()) write_file(a.json_path, j.dump(2) + "\n");
  if (!a.csv_path.empty()) write_file(a.csv_path, solver::to_csv(run));
  bool ok = true;
  for (const auto& s : run.found) ok = ok && s.residual <= a.tol;
  return ok ? kExitOk : kExitFailed;
}

// ---- continue ------------------------------------------------------------

struct ContinueArgs {
  std::string from = "E2";
  double p0 = -3;
  double p1 = -0.05;
  int steps = 200;
  std::string csv_path;
};

int cmd_continue(const ContinueArgs& a, std::ostream& out, std::ostream& err) {
  GapConfig start = named_equilibrium(a.from);
  if (a.p0 != -3) {
    // Carry the p = -3 configuration to p0 first.
    const solver::ContinuationPath lead = solver::continue_in_p(start, -3, a.p0, a.steps);
    if (!lead.completed) {
      err << "error: " << a.from << " could not be continued from p = -3 to p0 = " << a.p0 << " ("
          << lead.stop_reason << " at p = " << lead.last_good_p << ")\n";
      return kExitFailed;
    }
    start = lead.samples.back().config;
  }
  const solver::ContinuationPath path = solver::continue_in_p(start, a.p0, a.p1, a.steps);
  const std::string csv = solver::to_csv(path);
  if (a.csv_path.empty()) {
    out << csv;
  } else {
    write_file(a.csv_path, csv);
    out << path.samples.size() << " samples written to " << a.csv_path << "\n";
  }
  const GapConfig& last = path.samples.back().config;
  if (!path.completed) {
    err << "path stopped: " << path.stop_reason << "; last good p = " << path.last_good_p << ", gaps "
        << degrees_list(last) << " deg\n";
    return kExitFailed;
  }
  err << "reached p = " << path.last_good_p << ", gaps " << degrees_list(last) << " deg\n";
  return kExitOk;
}

// ---- trace-e2 ------------------------------------------------------------

struct TraceArgs {
  std::string json_path;
  std::string log_path;
};

int cmd_trace(const TraceArgs& a, std::ostream& out) {
  const symmetry::Prop5Pipeline pl = symmetry::run_prop5_pipeline();
  json j = symmetry::to_json(pl);
  j["schema"] = 1;
  j["command"] = "trace-e2";
  const std::string log = symmetry::stage_log(pl);
  if (a.log_path.empty()) out << log;
  else write_file(a.log_path, log);
  if (a.json_path.empty()) out << j.dump(2) << "\n";
  else write_file(a.json_path, j.dump(2) + "\n");
  return pl.passed() ? kExitOk : kExitFailed;
}

// ---- figures -------------------------------------------------------------

struct FiguresArgs {
  std::string which = "all";
  std::string out_dir = ".";
};

int cmd_figures(const FiguresArgs& a, std::ostream& out) {
  std::vector<std::string> names = a.which == "all" ? std::vector<std::string>{"E1", "E2", "E3"}
                                                    : std::vector<std::string>{a.which};
  std::filesystem::create_directories(a.out_dir);
  for (const auto& name : names) {
    const GapConfig g = named_equilibrium(name);
    const std::string path = (std::filesystem::path(a.out_dir) / (name + ".svg")).string();
    write_file(path, render_svg(g, name + " " + degrees_list(g) + " deg"));
    out << path << "\n";
  }
  return kExitOk;
}

}  // namespace

GapConfig named_equilibrium(const std::string& name) {
  if (name == "E1") return GapConfig::from_degrees({60, 120, 120, 60});
  if (name == "E3") return GapConfig::regular(4);
  if (name == "E2") {
    const GapConfig guess({0.724271859005994, 0.6519835918639687, 0.724271859005994, 4.18265799730363}, 1e-12);
    const solver::NewtonResult r = solver::newton_polish(guess.angles(), forcefun::ForceLaw::newtonian());
    if (r.status != solver::NewtonStatus::kConverged) throw Error("E2 failed to polish");
    return solver::from_angles(r.phi);
  }
  throw std::invalid_argument("unknown equilibrium " + name + " (expected E1, E2 or E3)");
}

std::string render_svg(const GapConfig& config, const std::string& title) {
  constexpr double c = 200, r = 150;
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"430\" viewBox=\"0 0 400 430\">\n";
  s << "  <title>" << title << "</title>\n";
  s << "  <rect width=\"400\" height=\"430\" fill=\"white\"/>\n";
  s << "  <circle cx=\"200\" cy=\"200\" r=\"150\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";

  const solver::AxisReport axes = solver::detect_axis(config);
  for (const solver::Axis& ax : axes.axes) {
    const double dx = (r + 30) * std::cos(ax.angle), dy = (r + 30) * std::sin(ax.angle);
    s << "  <line class=\"axis\" x1=\"" << fixed(c - dx, 3) << "\" y1=\"" << fixed(c + dy, 3) << "\" x2=\""
      << fixed(c + dx, 3) << "\" y2=\"" << fixed(c - dy, 3)
      << "\" stroke=\"#c33\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";
  }

  s << "  <circle class=\"central\" cx=\"200\" cy=\"200\" r=\"9\" fill=\"#222\"/>\n";
  const std::vector<double> phi = config.angles();
  for (std::size_t i = 0; i < phi.size(); ++i) {
    s << "  <circle class=\"satellite\" cx=\"" << fixed(c + r * std::cos(phi[i]), 3) << "\" cy=\""
      << fixed(c - r * std::sin(phi[i]), 3) << "\" r=\"5\" fill=\"#1f5fbf\"/>\n";
  }
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const double mid = phi[i] + config[i] / 2;
    s << "  <text class=\"gap\" x=\"" << fixed(c + (r + 18) * std::cos(mid), 3) << "\" y=\""
      << fixed(c - (r + 18) * std::sin(mid) + 4, 3)
      << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" << fixed(config.degrees()[i], 1)
      << "&#176;</text>\n";
  }
  s << "  <text x=\"200\" y=\"418\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" << title
    << "</text>\n";
  s << "</svg>\n";
  return s.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relative equilibria of four co-orbital satellites: certificates, solver and figures", "coorbital"};
  app.require_subcommand(1);

  CertifyArgs cert;
  auto* certify = app.add_subcommand("certify", "Certify the properties of f and run the elimination pipeline");
  certify->add_option("--json", cert.json_path, "Write the machine-readable report here");
  certify->add_option("--inject-fault", cert.inject, "Test mode: corrupt an artifact (r78 or n)")
      ->check(CLI::IsMember({"r78", "n"}));

  SolveArgs sol;
  auto* solve = app.add_subcommand("solve", "Find relative equilibria of n satellites from random starts");
  solve->add_option("--n", sol.n, "Number of satellites")->check(CLI::Range(2, 64));
  solve->add_option("--p", sol.p, "Force exponent (p < 0)");
  solve->add_option("--restarts", sol.restarts, "Random starts")->check(CLI::PositiveNumber);
  solve->add_option("--seed", sol.seed, "Random seed");
  solve->add_option("--tol", sol.tol, "Residual tolerance")->check(CLI::PositiveNumber);
  solve->add_option("--json", sol.json_path, "Write the JSON report here");
  solve->add_option("--csv", sol.csv_path, "Write a CSV table here");

  ContinueArgs con;
  auto* cont = app.add_subcommand("continue", "Continue E1, E2 or E3 in the exponent p");
  cont->add_option("--from", con.from, "Starting equilibrium")->check(CLI::IsMember({"E1", "E2", "E3"}));
  cont->add_option("--p0", con.p0, "Start exponent");
  cont->add_option("--p1", con.p1, "End exponent")->required();
  cont->add_option("--steps", con.steps, "Nominal steps")->check(CLI::PositiveNumber);
  cont->add_option("--csv", con.csv_path, "Write the path here instead of stdout");

  TraceArgs tr;
  auto* trace = app.add_subcommand("trace-e2", "Run the elimination pipeline and emit its report and stage log");
  trace->add_option("--json", tr.json_path, "Write the JSON report here instead of stdout");
  trace->add_option("--log", tr.log_path, "Write the stage log here instead of stdout");

  FiguresArgs fig;
  auto* figures = app.add_subcommand("figures", "Write SVG figures of the equilibria");
  figures->add_option("--which", fig.which, "E1, E2, E3 or all")->check(CLI::IsMember({"E1", "E2", "E3", "all"}));
  figures->add_option("--out", fig.out_dir, "Output directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    CLI::App* sub = nullptr;
    for (CLI::App* s : app.get_subcommands()) sub = s;
    return usage_error(sub ? *sub : app, e.what(), err);
  }

  try {
    if (*certify) return cmd_certify(cert, out);
    if (*solve) {
      if (!(sol.p < 0)) return usage_error(*solve, "--p must be negative", err);
      return cmd_solve(sol, out, err);
    }
    if (*cont) {
      if (!(con.p0 < 0) || !(con.p1 < 0)) return usage_error(*cont, "--p0 and --p1 must be negative", err);
      if (con.p0 == con.p1) return usage_error(*cont, "--p0 and --p1 must differ", err);
      return cmd_continue(con, out, err);
    }
    if (*trace) return cmd_trace(tr, out);
    if (*figures) return cmd_figures(fig, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return usage_error(app, "no subcommand", err);
}

}  // namespace coorbital::cli
