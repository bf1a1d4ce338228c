// Copyright 2026 The bcs-entangle Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: coherence factors, separation sweeps, the two-spin
// state at one separation, and the entanglement length.

#include <array>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "bcs_entangle/bcs_entangle.hpp"

namespace {

struct FlagSpec {
  const char* key;
  const char* help;
};

constexpr std::array kFlags{
    FlagSpec{"delta", "gap ratio Delta / eps_F (overrides --gap-mev)"},
    FlagSpec{"debye-w", "Debye ratio hbar omega_D / eps_F (overrides --debye-mev)"},
    FlagSpec{"gap-mev", "gap Delta in meV (default 1)"},
    FlagSpec{"debye-mev", "Debye energy hbar omega_D in meV (default 100)"},
    FlagSpec{"fermi-ev", "Fermi energy eps_F in eV (default 1)"},
    FlagSpec{"x-start", "first separation k_F r of the sweep grid (default 0.01)"},
    FlagSpec{"x-end", "last separation k_F r of the sweep grid (default 20)"},
    FlagSpec{"x-step", "grid step; also the eps/eps_F resolution of 'coherence' (default 0.01)"},
    FlagSpec{"x", "separation k_F r for 'state' (default 0)"},
    FlagSpec{"format", "output format: csv or json (default csv)"},
    FlagSpec{"rel-tol", "quadrature relative tolerance (default 1e-9)"},
    FlagSpec{"abs-tol", "quadrature absolute tolerance (default 1e-12)"},
};

void emit(const bcs::Table& t, bcs::OutputFormat format) {
  if (format == bcs::OutputFormat::json)
    std::cout << bcs::to_json(t).dump(2) << '\n';
  else
    bcs::write_csv(t, std::cout);
}

template <class Report>
void emit_report(const Report& r, bcs::OutputFormat format) {
  if (format == bcs::OutputFormat::json)
    std::cout << bcs::to_json(r).dump(2) << '\n';
  else
    bcs::write_csv(r, std::cout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spin entanglement of electron pairs in a BCS superconductor"};
  app.require_subcommand(1);

  std::array<std::optional<std::string>, kFlags.size()> flag_values;
  for (std::size_t i = 0; i < kFlags.size(); ++i)
    app.add_option(std::string("--") + kFlags[i].key, flag_values[i], kFlags[i].help);
  std::optional<std::string> config_path;
  app.add_option("--config", config_path, "flat key = value file; flags override its values");

  auto* coherence = app.add_subcommand("coherence", "v^2 and u*v against eps_k / eps_F over [0, 2]");
  auto* sweep = app.add_subcommand("sweep", "g, f, F~, p, concurrence and PPT eigenvalue over the x grid");
  auto* state = app.add_subcommand("state", "two-spin density matrix at separation --x");
  auto* length = app.add_subcommand("length", "entanglement length and its comparison to the coherence length");
  for (auto* sub : {coherence, sweep, state, length}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    bcs::RunConfig config;
    if (config_path) config.apply(bcs::load_config_file(*config_path));
    std::vector<std::pair<std::string, std::string>> layer;
    for (std::size_t i = 0; i < kFlags.size(); ++i)
      if (flag_values[i]) layer.emplace_back(kFlags[i].key, *flag_values[i]);
    config.apply(layer);
    config.validate();

    const auto params = config.params();
    if (!params.weak_coupling())
      std::cerr << "warning: delta >= w, outside the weak-coupling regime (Delta << hbar omega_D)\n";

    if (coherence->parsed()) {
      emit(bcs::coherence_table(params, config.x_step), config.format);
    } else if (sweep->parsed()) {
      const bcs::Correlators corr(params, config.settings);
      emit(bcs::sweep_table(corr, config.grid()), config.format);
    } else if (state->parsed()) {
      const bcs::Correlators corr(params, config.settings);
      emit_report(bcs::state_report(corr, config.x), config.format);
    } else if (length->parsed()) {
      const bcs::Correlators corr(params, config.settings);
      emit_report(bcs::entanglement_length(corr), config.format);
    }
  } catch (const bcs::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
