// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli/commands.hpp"

#include <algorithm>

#include "cli/output.hpp"
#include "zenohol/dynamics.hpp"
#include "zenohol/errors.hpp"
#include "zenohol/gates.hpp"

namespace zenohol::cli {

namespace {

ModelConfig model(const Common& c) {
  ModelConfig m{SectorConfig{c.n, c.p}, c.g};
  m.validate();
  if (!(c.omega > 0.0)) throw InvalidArgument("--omega must be positive");
  return m;
}

std::string format_of(const Common& c, const std::string& fallback) {
  const std::string f = c.format.empty() ? fallback : c.format;
  if (f != "csv" && f != "json") throw InvalidArgument("--format must be csv or json, got '" + f + "'");
  return f;
}

Metadata base_meta(const std::string& command, const Common& c) {
  Metadata m(command);
  m.add("n", c.n).add("p", c.p).add("g", c.g).add("omega", c.omega);
  return m;
}

Json complex_matrix(const CMatrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    Json q = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      r.push_back(m(i, j).real());
      q.push_back(m(i, j).imag());
    }
    re.push_back(std::move(r));
    im.push_back(std::move(q));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

Json labels(const SectorBasis& basis) {
  Json out = Json::array();
  for (const auto& s : basis.states()) out.push_back(to_string(s));
  return out;
}

// One row per basis state, columns re/im per frame column.
Table frame_table(const Frame& frame) {
  std::vector<std::string> cols{"index", "state"};
  for (Eigen::Index k = 0; k < frame.dim(); ++k) {
    cols.push_back("v" + std::to_string(k) + "_re");
    cols.push_back("v" + std::to_string(k) + "_im");
  }
  Table t(std::move(cols));
  for (std::size_t i = 0; i < frame.basis().size(); ++i) {
    std::vector<Json> row{static_cast<long long>(i), to_string(frame.basis()[i])};
    for (Eigen::Index k = 0; k < frame.dim(); ++k) {
      const Complex v = frame.columns()(static_cast<Eigen::Index>(i), k);
      row.emplace_back(v.real());
      row.emplace_back(v.imag());
    }
    t.add_row(std::move(row));
  }
  return t;
}

Emission table_emission(const Metadata& meta, const Table& table, const std::string& format) {
  if (format == "csv") return {table.csv(meta), "csv"};
  return {render_json(meta, table.json()), "json"};
}

Json axis_angle_json(const CMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2) return nullptr;
  const AxisAngle aa = axis_angle(Eigen::Matrix2cd(u));
  return Json{{"axis", {aa.axis.x(), aa.axis.y(), aa.axis.z()}},
              {"angle", aa.angle},
              {"global_phase", aa.global_phase}};
}

HolonomyMethod parse_method(const std::string& m) {
  if (m == "transport") return HolonomyMethod::transport;
  if (m == "closed") return HolonomyMethod::closed_form;
  throw InvalidArgument("--method must be transport or closed, got '" + m + "'");
}

}  // namespace

Emission cmd_basis(const Common& c) {
  const ModelConfig m = model(c);
  const auto basis = enumerate_basis(m.sector);
  Metadata meta = base_meta("basis", c);
  meta.add("dimension", static_cast<long long>(basis->size()));
  Table t({"index", "state", "a0", "a1", "a2", "b0", "b1", "b2", "c"});
  for (std::size_t i = 0; i < basis->size(); ++i) {
    const auto& s = (*basis)[i];
    t.add_row({static_cast<long long>(i), to_string(s), s.a0(m.sector), s.a1, s.a2, s.b0(m.sector), s.b1,
               s.b2, s.c});
  }
  return table_emission(meta, t, format_of(c, "csv"));
}

Emission cmd_zeno(const Common& c) {
  const ModelConfig m = model(c);
  const ZenoFrame z = zeno_frame(m);
  Metadata meta = base_meta("zeno", c);
  meta.add("dimension", static_cast<long long>(z.frame.dim()))
      .add("even_dimension", static_cast<long long>(z.even_dim))
      .add("decoupled_dimension", static_cast<long long>(z.decoupled.dim()));

  Json extra = Json::object();
  if (m.sector.n == 4 && m.sector.p == 2) {
    const CMatrix zeta = zeta_states(z.frame.basis_ptr());
    const Frame zf(z.frame.basis_ptr(), zeta);
    meta.add("zeta_projector_distance", z.frame.projector_distance(zf));
    const CMatrix overlap = (zeta.adjoint() * z.frame.columns()).cwiseAbs2().cast<Complex>();
    extra["zeta_overlap"] = complex_matrix(overlap)["re"];
  }

  if (format_of(c, "json") == "csv") return {frame_table(z.frame).csv(meta), "csv"};
  Json data{{"basis", labels(z.frame.basis())},
            {"frame", complex_matrix(z.frame.columns())},
            {"decoupled", complex_matrix(z.decoupled.columns())}};
  for (auto& [k, v] : extra.items()) data[k] = v;
  return {render_json(meta, data), "json"};
}

Emission cmd_dark(const Common& c, const DarkArgs& a) {
  const ModelConfig m = model(c);
  const ControlParams params{c.omega, a.theta, a.phi_a, a.phi_b};
  const DarkFrame d = dark_frame(m, params);
  Metadata meta = base_meta("dark", c);
  meta.add("theta", a.theta).add("phi_a", a.phi_a).add("phi_b", a.phi_b);
  meta.add("dimension", static_cast<long long>(d.frame.dim()))
      .add("closed_form_gauge", d.closed_form_gauge ? "true" : "false")
      .add("corner", d.corner ? "true" : "false");
  if (format_of(c, "json") == "csv") return {frame_table(d.frame).csv(meta), "csv"};
  return {render_json(meta, Json{{"basis", labels(d.frame.basis())}, {"frame", complex_matrix(d.frame.columns())}}),
          "json"};
}

Emission cmd_degeneracy(const Common& c, const DegeneracyArgs& a) {
  Metadata meta("degeneracy");
  meta.add("n_max", a.n_max).add("p_max", a.p_max).add("seed", static_cast<long long>(a.seed));
  Table t({"n", "p", "sector_dim", "cavity_null_dim", "decoupled_dim", "dark_dim", "zero_energy_dim",
           "zeno_zero_energy_dim"});
  for (const auto& r : degeneracy_scan(a.n_max, a.p_max, a.seed)) {
    t.add_row({r.n, r.p, static_cast<long long>(r.sector_dim), static_cast<long long>(r.cavity_null_dim),
               static_cast<long long>(r.decoupled_dim), static_cast<long long>(r.dark_dim),
               static_cast<long long>(r.zero_energy_dim), static_cast<long long>(r.zeno_zero_energy_dim)});
  }
  return table_emission(meta, t, format_of(c, "csv"));
}

Emission cmd_holonomy(const Common& c, const HolonomyArgs& a) {
  const ModelConfig m = model(c);
  PathProgram path;
  try {
    path = parse_path(a.path);
  } catch (const ParseError& e) {
    const std::string caret(e.position(), ' ');
    throw ParseError(std::string(e.what()) + "\n  " + a.path + "\n  " + caret + "^", e.position(), e.segment());
  }
  if (a.method != "transport" && a.method != "closed" && a.method != "both") {
    throw InvalidArgument("--method must be transport, closed or both, got '" + a.method + "'");
  }
  TransportOptions opts;
  opts.tolerance = a.tolerance;
  opts.initial_steps = a.initial_steps;
  opts.max_steps = a.max_steps;
  opts.omega = c.omega;

  Metadata meta = base_meta("holonomy", c);
  meta.add("path", format_path(path)).add("method", a.method).add("tolerance", a.tolerance);
  meta.add("initial_steps", a.initial_steps).add("max_steps", a.max_steps);

  std::vector<std::pair<std::string, HolonomyResult>> results;
  if (a.method != "closed") results.emplace_back("transport", transport(path, m, opts));
  if (a.method != "transport") results.emplace_back("closed", closed_form(path, m));
  if (results.size() == 2) {
    meta.add("cross_distance", projective_distance(results[0].second.u, results[1].second.u));
  }

  if (format_of(c, "json") == "csv") {
    for (const auto& [name, r] : results) {
      meta.add(name + "_steps_used", static_cast<long long>(r.steps_used));
      meta.add(name + "_est_error", r.est_error);
      if (r.u.rows() == 2) {
        const AxisAngle aa = axis_angle(Eigen::Matrix2cd(r.u));
        meta.add(name + "_axis", number(aa.axis.x()) + " " + number(aa.axis.y()) + " " + number(aa.axis.z()));
        meta.add(name + "_angle", aa.angle);
      }
    }
    Table t({"method", "row", "col", "re", "im"});
    for (const auto& [name, r] : results) {
      for (Eigen::Index i = 0; i < r.u.rows(); ++i) {
        for (Eigen::Index j = 0; j < r.u.cols(); ++j) {
          t.add_row({name, static_cast<long long>(i), static_cast<long long>(j), r.u(i, j).real(), r.u(i, j).imag()});
        }
      }
    }
    return {t.csv(meta), "csv"};
  }
  Json data = Json::object();
  for (const auto& [name, r] : results) {
    data[name] = Json{{"u", complex_matrix(r.u)},
                      {"axis_angle", axis_angle_json(r.u)},
                      {"steps_used", r.steps_used},
                      {"est_error", r.est_error}};
  }
  return {render_json(meta, data), "json"};
}

Emission cmd_universality(const Common& c, const UniversalityArgs& a) {
  const ModelConfig m = model(c);
  if (m.sector.n != 4 || m.sector.p != 2) throw InvalidArgument("universality uses the (4, 2) closed forms");
  const auto u1 = closed_form_phi(1, 0, a.theta);
  const auto u2 = closed_form_phi(0, -1, a.theta);
  const auto points = universality_sample(u1, u2, a.max_len, a.count, a.seed);
  const EqualAreaPartition partition(a.cells);

  Metadata meta = base_meta("universality", c);
  meta.add("generator_1", "phi:ma=1,mb=0@theta=" + number(a.theta))
      .add("generator_2", "phi:ma=0,mb=-1@theta=" + number(a.theta))
      .add("count", a.count)
      .add("max_len", a.max_len)
      .add("seed", static_cast<long long>(a.seed))
      .add("cells", a.cells)
      .add("fill_fraction", fill_fraction(points, partition));
  Table t({"x", "y", "z", "seq_len"});
  for (const auto& p : points) t.add_row({p.x, p.y, p.z, p.seq_len});
  return table_emission(meta, t, format_of(c, "csv"));
}

Emission cmd_synth_x(const Common& c, const SynthXArgs& a) {
  const ModelConfig m = model(c);
  if (m.sector.n != 4 || m.sector.p != 2) throw InvalidArgument("synth-x uses the (4, 2) closed forms");
  ThetaStarOptions opts;
  opts.tolerance = a.tolerance;
  const double theta_star = find_theta_star(a.m_a, a.m_b, opts);
  const XApproximation x = approximate_x(theta_star, a.m_a, a.m_b, a.max_reps);

  Metadata meta = base_meta("synth-x", c);
  meta.add("m_a", a.m_a).add("m_b", a.m_b).add("max_reps", a.max_reps).add("tolerance", a.tolerance);
  meta.add("best_k", x.best_k).add("best_distance", x.best_distance);
  Table t({"theta_star", "k", "distance", "is_best"});
  for (std::size_t i = 0; i < x.distances.size(); ++i) {
    const int k = static_cast<int>(i) + 1;
    t.add_row({theta_star, k, x.distances[i], k == x.best_k ? 1 : 0});
  }
  return table_emission(meta, t, format_of(c, "csv"));
}

Emission cmd_dicke(const Common& c, const DickeArgs& a) {
  const ModelConfig m = model(c);
  if (m.sector.n != 4 || m.sector.p != 2) throw InvalidArgument("the Dicke preparation is defined for (4, 2)");
  Metadata meta = base_meta("dicke", c);

  if (a.search) {
    if (a.theta_count < 1) throw InvalidArgument("--theta-count must be positive");
    DickeSearchGrid grid{a.m_a_min, a.m_a_max, a.m_b_min, a.m_b_max, {}};
    for (int i = 0; i < a.theta_count; ++i) {
      grid.thetas.push_back(a.theta_count == 1 ? a.theta_min
                                               : a.theta_min + (a.theta_max - a.theta_min) * i / (a.theta_count - 1));
    }
    meta.add("mode", "search")
        .add("m_a_range", std::to_string(a.m_a_min) + ".." + std::to_string(a.m_a_max))
        .add("m_b_range", std::to_string(a.m_b_min) + ".." + std::to_string(a.m_b_max))
        .add("theta_min", a.theta_min)
        .add("theta_max", a.theta_max)
        .add("theta_count", a.theta_count)
        .add("top", a.top);
    const auto ranked = search_dicke_path(grid);
    Table t({"rank", "m_a", "m_b", "theta_1", "fidelity"});
    const auto n = std::min<std::size_t>(ranked.size(), static_cast<std::size_t>(std::max(a.top, 0)));
    for (std::size_t i = 0; i < n; ++i) {
      t.add_row({static_cast<long long>(i + 1), ranked[i].m_a, ranked[i].m_b, ranked[i].theta_1, ranked[i].fidelity});
    }
    return table_emission(meta, t, format_of(c, "csv"));
  }

  const HolonomyMethod method = parse_method(a.method);
  const DickePreparation prep = prepare_dicke_holonomic(a.m_a, a.m_b, a.theta_1, method);
  meta.add("mode", "prepare").add("path", format_path(w_prime_path(a.m_a, a.m_b, a.theta_1)));
  meta.add("initial_state", "|2000,0>").add("method", a.method);
  Table t({"m_a", "m_b", "theta_1", "method", "fidelity", "amplitude", "steps_used", "est_error"});
  t.add_row({a.m_a, a.m_b, a.theta_1, a.method, prep.overlap.fidelity, prep.overlap.amplitude,
             static_cast<long long>(prep.holonomy.steps_used), prep.holonomy.est_error});
  return table_emission(meta, t, format_of(c, "csv"));
}

Emission cmd_sweep(const Common& c, const SweepArgs& a) {
  const ModelConfig m = model(c);
  if (a.g_list.empty()) throw InvalidArgument("--g-list must not be empty");
  SweepOptions opts;
  opts.m_a = a.m_a;
  opts.m_b = a.m_b;
  opts.theta_1 = a.theta_1;
  opts.time_factor = a.time_factor;
  opts.evolve.steps_per_time = a.steps_per_time;
  opts.evolve.omega = c.omega;

  std::string glist;
  for (double g : a.g_list) glist += (glist.empty() ? "" : ",") + number(g);
  Metadata meta("sweep");
  meta.add("n", c.n).add("p", c.p).add("omega", c.omega).add("g_list", glist);
  meta.add("path", format_path(w_prime_path(a.m_a, a.m_b, a.theta_1)))
      .add("baseline_path", format_path(theta_path(0.0, std::numbers::pi / 4)))
      .add("time_factor", a.time_factor)
      .add("steps_per_time", a.steps_per_time)
      .add("allocation", "proportional")
      .add("fidelity", "squared overlap");
  Table t({"g", "fidelity_full", "fidelity_zeno", "fidelity_holonomic", "fidelity_no_phi",
           "fidelity_full_equal_time"});
  for (const auto& r : fidelity_sweep(m.sector, a.g_list, opts)) {
    t.add_row({r.g, r.fidelity_full, r.fidelity_zeno, r.fidelity_holonomic, r.fidelity_no_phi,
               r.fidelity_full_equal_time});
  }
  return table_emission(meta, t, format_of(c, "csv"));
}

}  // namespace zenohol::cli
