// Copyright 2026 The bcs-entangle Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file report.hpp
 * @brief Tabular outputs (coherence factors, separation sweeps) and the
 *        single-point state and entanglement-length reports.
 *
 * Floats are written in shortest round-trip form, so parsing an emitted CSV
 * reproduces every value bit for bit. JSON tables are arrays of row objects.
 */

#pragma once

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <nlohmann/json.hpp>

#include "bcs_entangle/correlators.hpp"
#include "bcs_entangle/entanglement.hpp"
#include "bcs_entangle/errors.hpp"
#include "bcs_entangle/model.hpp"
#include "bcs_entangle/parallel.hpp"

namespace bcs {

/// Named columns of doubles, rows in grid order.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::size_t column(std::string_view name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
      if (columns[i] == name) return i;
    throw ConfigError("no column named '" + std::string(name) + "'");
  }

  std::vector<double> values(std::string_view name) const {
    const auto c = column(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r[c]);
    return out;
  }
};

/// Shortest representation that parses back to the same double.
inline std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ConfigError("cannot parse '" + std::string(s) + "' as a number");
  return v;
}

inline void write_csv(const Table& t, std::ostream& os) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << format_double(r[i]);
    os << '\n';
  }
}

inline Table read_csv(std::istream& is) {
  const auto split = [](const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) out.push_back(cell);
    return out;
  };
  Table t;
  std::string line;
  if (!std::getline(is, line)) throw ConfigError("empty CSV input");
  t.columns = split(line);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != t.columns.size()) throw ConfigError("CSV row has " + std::to_string(cells.size()) + " cells");
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) row.push_back(parse_double(c));
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline nlohmann::json to_json(const Table& t) {
  auto arr = nlohmann::json::array();
  for (const auto& r : t.rows) {
    nlohmann::json obj;
    for (std::size_t i = 0; i < r.size(); ++i) obj[t.columns[i]] = r[i];
    arr.push_back(std::move(obj));
  }
  return arr;
}

/// Uniform grid start, start + step, ... up to end (inclusive within step/1e9).
inline std::vector<double> make_grid(double start, double end, double step) {
  if (!std::isfinite(start) || !std::isfinite(end) || !std::isfinite(step))
    throw ConfigError("grid bounds must be finite");
  if (start < 0.0) throw ConfigError("grid start must be >= 0");
  if (!(step > 0.0)) throw ConfigError("grid step must be > 0");
  if (!(end > start)) throw ConfigError("grid end must exceed start");
  std::vector<double> grid;
  for (std::size_t i = 0;; ++i) {
    const double x = start + static_cast<double>(i) * step;
    if (x > end + 1e-9 * step) break;
    grid.push_back(x);
  }
  return grid;
}

/// v^2 and u*v against eps_k / eps_F over [0, 2].
inline Table coherence_table(const MaterialParams& params, double step) {
  Table t{{"eps_over_ef", "v2", "uv"}, {}};
  for (double e : make_grid(0.0, 2.0, step)) {
    const auto c = coherence(Kappa(std::sqrt(e)), params);
    t.rows.push_back({e, c.v2, c.uv});
  }
  return t;
}

/// One sweep row: normalized correlators plus the entanglement columns.
struct SweepPoint {
  CorrelatorSample sample;
  double p = 0.0;
  double concurrence = 0.0;
  double ppt_min_eig = 0.0;
};

inline SweepPoint evaluate_point(const Correlators& corr, double x) {
  SweepPoint pt;
  try {
    pt.sample = corr.sample(x);
  } catch (const NonConvergence& e) {
    throw NonConvergence(std::string(e.what()) + " (at x = " + format_double(x) + ")", e.estimate(),
                         e.error_estimate());
  }
  const auto w = werner_from_gf(pt.sample.g, pt.sample.f);
  pt.p = w.state.p();
  pt.concurrence = concurrence_werner(pt.p);
  pt.ppt_min_eig = ppt_min_eigenvalue(w.rho);
  return pt;
}

/// Evaluates every grid point (in parallel) and returns rows in grid order.
inline Table sweep_table(const Correlators& corr, const std::vector<double>& grid, unsigned workers = 0) {
  std::vector<SweepPoint> points(grid.size());
  detail::parallel_for_index(grid.size(), [&](std::size_t i) { points[i] = evaluate_point(corr, grid[i]); }, workers);
  Table t{{"x", "g", "f", "f_tilde", "p", "concurrence", "ppt_min_eig"}, {}};
  t.rows.reserve(points.size());
  for (const auto& pt : points)
    t.rows.push_back({pt.sample.x, pt.sample.g, pt.sample.f, pt.sample.f_tilde, pt.p, pt.concurrence, pt.ppt_min_eig});
  return t;
}

/// Two-spin state at one separation, in explicit and Werner form.
struct StateReport {
  SweepPoint point;
  Matrix4c explicit_matrix;
  Matrix4c werner_matrix;
  double concurrence_wootters = 0.0;

  double max_form_mismatch() const { return (explicit_matrix - werner_matrix).cwiseAbs().maxCoeff(); }
};

inline StateReport state_report(const Correlators& corr, double x) {
  StateReport r;
  r.point = evaluate_point(corr, x);
  const auto w = werner_from_gf(r.point.sample.g, r.point.sample.f);
  r.explicit_matrix = w.rho.matrix();
  r.werner_matrix = w.state.matrix();
  r.concurrence_wootters = concurrence_wootters(w.rho);
  return r;
}

namespace detail {

inline nlohmann::json real_rows(const Matrix4c& m) {
  auto rows = nlohmann::json::array();
  for (int i = 0; i < 4; ++i) {
    auto row = nlohmann::json::array();
    for (int j = 0; j < 4; ++j) row.push_back(m(i, j).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline void csv_matrix(std::ostream& os, std::string_view label, const Matrix4c& m) {
  static constexpr const char* kBasis[] = {"uu", "ud", "du", "dd"};
  os << label << ",uu,ud,du,dd\n";
  for (int i = 0; i < 4; ++i) {
    os << kBasis[i];
    for (int j = 0; j < 4; ++j) os << ',' << format_double(m(i, j).real());
    os << '\n';
  }
}

}  // namespace detail

inline nlohmann::json to_json(const StateReport& r) {
  const auto& s = r.point.sample;
  return {{"x", s.x},
          {"g", s.g},
          {"f", s.f},
          {"f_tilde", s.f_tilde},
          {"p", r.point.p},
          {"concurrence", r.point.concurrence},
          {"concurrence_wootters", r.concurrence_wootters},
          {"ppt_min_eig", r.point.ppt_min_eig},
          {"entangled", 3.0 * r.point.p > 1.0},
          {"rho", detail::real_rows(r.explicit_matrix)},
          {"rho_werner_form", detail::real_rows(r.werner_matrix)},
          {"max_form_mismatch", r.max_form_mismatch()}};
}

/// Matrix blocks (basis uu, ud, du, dd) followed by quantity,value lines.
inline void write_csv(const StateReport& r, std::ostream& os) {
  detail::csv_matrix(os, "rho", r.explicit_matrix);
  os << '\n';
  detail::csv_matrix(os, "rho_werner_form", r.werner_matrix);
  os << '\n';
  const auto& s = r.point.sample;
  os << "quantity,value\n";
  for (const auto& [k, v] : std::initializer_list<std::pair<const char*, double>>{
           {"x", s.x},
           {"g", s.g},
           {"f", s.f},
           {"f_tilde", s.f_tilde},
           {"p", r.point.p},
           {"concurrence", r.point.concurrence},
           {"concurrence_wootters", r.concurrence_wootters},
           {"ppt_min_eig", r.point.ppt_min_eig},
           {"max_form_mismatch", r.max_form_mismatch()}})
    os << k << ',' << format_double(v) << '\n';
}

inline nlohmann::json to_json(const EntanglementLength& l) {
  return {{"x_c", l.x_c},
          {"r_c_over_lambda_f", l.r_over_lambda_f},
          {"kf_xi0", l.kf_xi0},
          {"xi0_over_r_c", l.xi0_over_rc},
          {"verified_up_to", l.verified_up_to},
          {"verified_points", l.verified_points},
          {"max_p_beyond", l.max_p_beyond},
          {"reentrant", l.reentrant},
          {"entangled_region_much_smaller_than_coherence_length", l.scale_separated()}};
}

inline void write_csv(const EntanglementLength& l, std::ostream& os) {
  os << "quantity,value\n"
     << "x_c," << format_double(l.x_c) << '\n'
     << "r_c_over_lambda_f," << format_double(l.r_over_lambda_f) << '\n'
     << "kf_xi0," << format_double(l.kf_xi0) << '\n'
     << "xi0_over_r_c," << format_double(l.xi0_over_rc) << '\n'
     << "verified_up_to," << format_double(l.verified_up_to) << '\n'
     << "verified_points," << l.verified_points << '\n'
     << "max_p_beyond," << format_double(l.max_p_beyond) << '\n'
     << "reentrant," << (l.reentrant ? 1 : 0) << '\n'
     << "entangled_region_much_smaller_than_coherence_length," << (l.scale_separated() ? 1 : 0) << '\n';
}

}  // namespace bcs
