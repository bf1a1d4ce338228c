// Copyright 2026 The bcs-entangle Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file run_config.hpp
 * @brief Run configuration shared by the command-line front end.
 *
 * Values are layered: built-in defaults, then a flat "key = value" config
 * file, then command-line flags. Keys are the long flag names without the
 * leading dashes. Physical inputs (gap-mev, debye-mev, fermi-ev) are turned
 * into ratios here; an explicit delta / debye-w wins over physical inputs
 * given at the same or a lower layer.
 */

#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bcs_entangle/errors.hpp"
#include "bcs_entangle/model.hpp"
#include "bcs_entangle/quadrature.hpp"
#include "bcs_entangle/report.hpp"

namespace bcs {

enum class OutputFormat { csv, json };

struct RunConfig {
  // Defaults are Delta = 1 meV, hbar omega_D = 100 meV, eps_F = 1 eV.
  double gap_mev = 1.0;
  double debye_mev = 100.0;
  double fermi_ev = 1.0;
  std::optional<double> delta;
  std::optional<double> debye_w;

  double x_start = 0.01;
  double x_end = 20.0;
  double x_step = 0.01;
  double x = 0.0;

  OutputFormat format = OutputFormat::csv;
  QuadratureSettings settings;

  MaterialParams params() const {
    const double fermi_mev = fermi_ev * 1000.0;
    if (!delta && !(fermi_ev > 0.0)) throw ConfigError("fermi-ev must be > 0");
    try {
      return MaterialParams(delta.value_or(gap_mev / fermi_mev), debye_w.value_or(debye_mev / fermi_mev));
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
  }

  /// Sets one key. Physical energies clear a ratio set at a lower layer.
  void set(const std::string& key, const std::string& value) {
    const auto num = [&] {
      try {
        return parse_double(value);
      } catch (const ConfigError&) {
        throw ConfigError("invalid value '" + value + "' for " + key);
      }
    };
    if (key == "delta") {
      delta = num();
    } else if (key == "debye-w") {
      debye_w = num();
    } else if (key == "gap-mev") {
      gap_mev = num();
      delta.reset();
    } else if (key == "debye-mev") {
      debye_mev = num();
      debye_w.reset();
    } else if (key == "fermi-ev") {
      fermi_ev = num();
      delta.reset();
      debye_w.reset();
    } else if (key == "x-start") {
      x_start = num();
    } else if (key == "x-end") {
      x_end = num();
    } else if (key == "x-step") {
      x_step = num();
    } else if (key == "x") {
      x = num();
    } else if (key == "rel-tol") {
      settings.rel_tol = num();
    } else if (key == "abs-tol") {
      settings.abs_tol = num();
    } else if (key == "format") {
      if (value == "csv")
        format = OutputFormat::csv;
      else if (value == "json")
        format = OutputFormat::json;
      else
        throw ConfigError("format must be csv or json, got '" + value + "'");
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }

  /// Applies a layer; ratios are applied after physical inputs so that an
  /// explicit ratio in the same layer takes precedence.
  void apply(const std::vector<std::pair<std::string, std::string>>& layer) {
    for (const auto& [k, v] : layer)
      if (k != "delta" && k != "debye-w") set(k, v);
    for (const auto& [k, v] : layer)
      if (k == "delta" || k == "debye-w") set(k, v);
  }

  std::vector<double> grid() const { return make_grid(x_start, x_end, x_step); }

  void validate() const {
    (void)params();
    settings.validate();
    if (!(x >= 0.0)) throw ConfigError("x must be >= 0");
    (void)make_grid(x_start, x_end, x_step);
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace detail

/// Parses "key = value" lines; blank lines and '#' comments are skipped.
inline std::vector<std::pair<std::string, std::string>> parse_config(std::istream& is) {
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  for (int lineno = 1; std::getline(is, line); ++lineno) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    auto key = detail::trim(line.substr(0, eq));
    auto value = detail::trim(line.substr(eq + 1));
    if (key.starts_with("--")) key.erase(0, 2);
    if (key.empty() || value.empty())
      throw ConfigError("config line " + std::to_string(lineno) + ": empty key or value");
    out.emplace_back(std::move(key), std::move(value));
  }
  return out;
}

inline std::vector<std::pair<std::string, std::string>> load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in);
}

}  // namespace bcs
