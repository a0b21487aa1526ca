// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "zenohol/errors.hpp"
#include "zenohol/version.hpp"

namespace zenohol::cli {

namespace {

namespace fs = std::filesystem;

void add_common(CLI::App* sub, Common& c, bool sector = true) {
  if (sector) {
    sub->add_option("--n", c.n, "total atom count")->capture_default_str();
    sub->add_option("--p", c.p, "atoms in subensemble A (excitation number)")->capture_default_str();
    sub->add_option("--g", c.g, "cavity coupling in units of Omega")->capture_default_str();
    sub->add_option("--omega", c.omega, "drive amplitude Omega")->capture_default_str();
  }
  sub->add_option("--format", c.format, "csv or json (default depends on the command)");
  sub->add_option("--out", c.out, "output file; '-' for stdout");
}

void write_output(const std::string& command, const Emission& e, const Common& c, std::ostream& out,
                  std::ostream& err) {
  fs::path dest = c.out;
  const char* dir = std::getenv(kOutputDirEnv);
  const bool have_dir = dir != nullptr && *dir != '\0';
  if (c.out == "-" || (c.out.empty() && !have_dir)) {
    out << e.body;
    return;
  }
  if (c.out.empty()) {
    dest = fs::path(dir) / (command + "." + e.extension);
  } else if (dest.is_relative() && have_dir) {
    dest = fs::path(dir) / dest;
  }
  if (dest.has_parent_path()) fs::create_directories(dest.parent_path());
  std::ofstream f(dest, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + dest.string() + " for writing");
  f << e.body;
  if (!f) throw std::runtime_error("failed writing " + dest.string());
  err << "wrote " << dest.string() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeno-subspace holonomic gates and Dicke-state preparation", "zenohol"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  Common common;
  std::function<Emission()> action;
  std::string command;

  auto* basis = app.add_subcommand("basis", "list the symmetric sector basis");
  add_common(basis, common);
  basis->callback([&] { command = "basis"; action = [&] { return cmd_basis(common); }; });

  auto* zeno = app.add_subcommand("zeno", "Zeno frame of the cavity coupling");
  add_common(zeno, common);
  zeno->callback([&] { command = "zeno"; action = [&] { return cmd_zeno(common); }; });

  DarkArgs dark_args;
  auto* dark = app.add_subcommand("dark", "dark frame at one parameter point");
  add_common(dark, common);
  dark->add_option("--theta", dark_args.theta, "mixing angle")->capture_default_str();
  dark->add_option("--phi-a", dark_args.phi_a, "phase of Omega_a")->capture_default_str();
  dark->add_option("--phi-b", dark_args.phi_b, "phase of Omega_b")->capture_default_str();
  dark->callback([&] { command = "dark"; action = [&] { return cmd_dark(common, dark_args); }; });

  DegeneracyArgs deg_args;
  auto* deg = app.add_subcommand("degeneracy", "dark and zero-energy dimensions over (n, p)");
  add_common(deg, common, false);
  deg->add_option("--n-max", deg_args.n_max, "largest n")->capture_default_str();
  deg->add_option("--p-max", deg_args.p_max, "largest p")->capture_default_str();
  deg->add_option("--seed", deg_args.seed, "seed for random parameter draws")->capture_default_str();
  deg->callback([&] { command = "degeneracy"; action = [&] { return cmd_degeneracy(common, deg_args); }; });

  HolonomyArgs hol_args;
  auto* hol = app.add_subcommand("holonomy", "holonomy of a path");
  add_common(hol, common);
  hol->add_option("--path", hol_args.path, "path text, e.g. \"theta:pi/4->0.6; phi:ma=1,mb=0@theta=0.6\"")
      ->required();
  hol->add_option("--method", hol_args.method, "transport, closed or both")->capture_default_str();
  hol->add_option("--tol", hol_args.tolerance, "transport tolerance")->capture_default_str();
  hol->add_option("--initial-steps", hol_args.initial_steps, "initial samples per segment")->capture_default_str();
  hol->add_option("--max-steps", hol_args.max_steps, "sample cap per segment")->capture_default_str();
  hol->callback([&] { command = "holonomy"; action = [&] { return cmd_holonomy(common, hol_args); }; });

  UniversalityArgs uni_args;
  auto* uni = app.add_subcommand("universality", "random U1/U2 words applied to |D1>");
  add_common(uni, common);
  uni->add_option("--count", uni_args.count, "number of words")->capture_default_str();
  uni->add_option("--max-len", uni_args.max_len, "largest word length")->capture_default_str();
  uni->add_option("--seed", uni_args.seed, "random seed")->capture_default_str();
  uni->add_option("--cells", uni_args.cells, "equal-area partition size")->capture_default_str();
  uni->add_option("--theta", uni_args.theta, "theta of both generator loops")->capture_default_str();
  uni->callback([&] { command = "universality"; action = [&] { return cmd_universality(common, uni_args); }; });

  SynthXArgs sx_args;
  auto* sx = app.add_subcommand("synth-x", "approximate Pauli X by powers of W(theta*)");
  add_common(sx, common);
  sx->add_option("--ma", sx_args.m_a, "winding of phi_a")->capture_default_str();
  sx->add_option("--mb", sx_args.m_b, "winding of phi_b")->capture_default_str();
  sx->add_option("--max-reps", sx_args.max_reps, "largest power")->capture_default_str();
  sx->add_option("--tol", sx_args.tolerance, "root tolerance on theta")->capture_default_str();
  sx->callback([&] { command = "synth-x"; action = [&] { return cmd_synth_x(common, sx_args); }; });

  DickeArgs dk_args;
  auto* dk = app.add_subcommand("dicke", "holonomic Dicke-state preparation");
  add_common(dk, common);
  dk->add_option("--ma", dk_args.m_a, "winding of phi_a")->capture_default_str();
  dk->add_option("--mb", dk_args.m_b, "winding of phi_b")->capture_default_str();
  dk->add_option("--theta1", dk_args.theta_1, "loop angle")->capture_default_str();
  dk->add_option("--method", dk_args.method, "transport or closed")->capture_default_str();
  dk->add_flag("--search", dk_args.search, "rank closed-form paths over a grid instead");
  dk->add_option("--top", dk_args.top, "rows kept by --search")->capture_default_str();
  dk->add_option("--ma-min", dk_args.m_a_min)->capture_default_str();
  dk->add_option("--ma-max", dk_args.m_a_max)->capture_default_str();
  dk->add_option("--mb-min", dk_args.m_b_min)->capture_default_str();
  dk->add_option("--mb-max", dk_args.m_b_max)->capture_default_str();
  dk->add_option("--theta-min", dk_args.theta_min)->capture_default_str();
  dk->add_option("--theta-max", dk_args.theta_max)->capture_default_str();
  dk->add_option("--theta-count", dk_args.theta_count)->capture_default_str();
  dk->callback([&] { command = "dicke"; action = [&] { return cmd_dicke(common, dk_args); }; });

  SweepArgs sw_args;
  auto* sw = app.add_subcommand("sweep", "Dicke fidelity versus g from time evolution");
  add_common(sw, common);
  sw->add_option("--g-list", sw_args.g_list, "comma-separated g values")->delimiter(',')->capture_default_str();
  sw->add_option("--ma", sw_args.m_a, "winding of phi_a")->capture_default_str();
  sw->add_option("--mb", sw_args.m_b, "winding of phi_b")->capture_default_str();
  sw->add_option("--theta1", sw_args.theta_1, "loop angle")->capture_default_str();
  sw->add_option("--time-factor", sw_args.time_factor, "total time T = factor / g")->capture_default_str();
  sw->add_option("--steps-per-time", sw_args.steps_per_time, "integrator steps per unit time")
      ->capture_default_str();
  sw->callback([&] { command = "sweep"; action = [&] { return cmd_sweep(common, sw_args); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    write_output(command, action(), common, out, err);
    return kExitOk;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace zenohol::cli
