// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "zenohol/application.hpp"

namespace zenohol::cli {

struct Common {
  int n = 4;
  int p = 2;
  double g = 20.0;
  double omega = 1.0;
  std::string format;  ///< csv | json; empty selects the command default
  std::string out;     ///< file path, "-" for stdout
};

/// Rendered output plus the file extension it should carry.
struct Emission {
  std::string body;
  std::string extension;
};

struct DarkArgs {
  double theta = std::numbers::pi / 4;
  double phi_a = 0.0;
  double phi_b = 0.0;
};

struct DegeneracyArgs {
  int n_max = 6;
  int p_max = 6;
  std::uint64_t seed = 0x5eed;
};

struct HolonomyArgs {
  std::string path;
  std::string method = "both";  ///< transport | closed | both
  double tolerance = 1e-8;
  int initial_steps = 256;
  int max_steps = 1 << 16;
};

struct UniversalityArgs {
  int count = 10000;
  int max_len = 30;
  std::uint64_t seed = 7;
  int cells = 200;
  double theta = std::numbers::pi / 6;
};

struct SynthXArgs {
  int m_a = 0;
  int m_b = 1;
  int max_reps = 200;
  double tolerance = 1e-12;
};

struct DickeArgs {
  int m_a = kDickeMa;
  int m_b = kDickeMb;
  double theta_1 = kDickeTheta1;
  std::string method = "transport";  ///< transport | closed
  bool search = false;
  int top = 20;
  int m_a_min = -30;
  int m_a_max = 30;
  int m_b_min = -3;
  int m_b_max = 3;
  double theta_min = 0.05;
  double theta_max = 1.5;
  int theta_count = 59;
};

struct SweepArgs {
  std::vector<double> g_list{5.0, 10.0, 20.0, 40.0};
  int m_a = kDickeMa;
  int m_b = kDickeMb;
  double theta_1 = kDickeTheta1;
  double time_factor = 8000.0;
  double steps_per_time = 500.0;
};

Emission cmd_basis(const Common& c);
Emission cmd_zeno(const Common& c);
Emission cmd_dark(const Common& c, const DarkArgs& a);
Emission cmd_degeneracy(const Common& c, const DegeneracyArgs& a);
Emission cmd_holonomy(const Common& c, const HolonomyArgs& a);
Emission cmd_universality(const Common& c, const UniversalityArgs& a);
Emission cmd_synth_x(const Common& c, const SynthXArgs& a);
Emission cmd_dicke(const Common& c, const DickeArgs& a);
Emission cmd_sweep(const Common& c, const SweepArgs& a);

}  // namespace zenohol::cli
