#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "eitengine_cli/commands.hpp"

namespace {

using namespace eitengine_cli;

struct CommonState {
  std::string config_path;
  std::string out_path;
  std::string format = "csv";
  ParamOverrides overrides;
};

void add_common(CLI::App* cmd, CommonState& state, bool with_format = true) {
  cmd->add_option("--config", state.config_path,
                  "JSON parameter file (sections: system, reservoirs, drive)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", state.out_path,
                  "write the result to this file instead of stdout");
  if (with_format) {
    cmd->add_option("--format", state.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
  }
  auto bind = [cmd](const std::string& name, std::optional<double>& slot,
                    const std::string& help) {
    cmd->add_option_function<double>(
        name, [&slot](double v) { slot = v; }, help);
  };
  bind("--gamma31", state.overrides.gamma31, "spontaneous 3->1 rate (rad/s)");
  bind("--gamma32", state.overrides.gamma32, "spontaneous 3->2 rate (rad/s)");
  bind("--omega13", state.overrides.omega13,
       "1-3 transition frequency (rad/s)");
  bind("--omega12", state.overrides.omega12, "1-2 level splitting (rad/s)");
  bind("--dipole13", state.overrides.dipole13, "1-3 dipole moment (C m)");
  bind("--t13", state.overrides.t13, "reservoir temperature on 1-3 (K)");
  bind("--t23", state.overrides.t23, "reservoir temperature on 2-3 (K)");
  bind("--omega-c", state.overrides.omega_c, "coupling Rabi frequency (rad/s)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Steady-state spectra, radiative transfer and thermodynamic bounds "
      "for a coherently driven three-level medium pumped by thermal light."};
  app.require_subcommand(1);

  CommonState state;

  auto* spectrum = app.add_subcommand(
      "spectrum", "cross sections and saturated brightness over detuning");
  std::string spectrum_grid = "-10:10:81";
  add_common(spectrum, state);
  spectrum->add_option("--grid", spectrum_grid,
                       "detuning grid MIN:MAX:COUNT[:log|lin], units of the "
                       "1-3 width");

  auto* sweep = app.add_subcommand(
      "sweep-rabi", "line-center brightness versus coupling strength");
  std::string sweep_grid = "0.01:1000:61:log";
  bool no_zero_drive = false;
  add_common(sweep, state);
  sweep->add_option("--grid", sweep_grid,
                    "omega_c grid MIN:MAX:COUNT[:log|lin], units of the 1-3 "
                    "width");
  sweep->add_flag("--no-zero-drive", no_zero_drive,
                  "do not prepend the omega_c = 0 reference row");

  auto* transfer = app.add_subcommand(
      "transfer", "brightness growth through a medium of finite depth");
  TransferOptions transfer_defaults;
  std::string transfer_grid = "-10:10:21";
  std::string convention = "eit";
  double depth = transfer_defaults.depth;
  double length = transfer_defaults.length;
  int z_points = transfer_defaults.z_points;
  std::optional<double> density;
  std::string sigma0_mode = transfer_defaults.sigma0_mode;
  double sigma0_value = 0.0;
  add_common(transfer, state);
  transfer->add_option("--grid", transfer_grid,
                       "detuning grid MIN:MAX:COUNT[:log|lin], units of the "
                       "1-3 width");
  transfer->add_option("--depth", depth,
                       "line-center optical depth used to pick the density");
  transfer->add_option("--depth-convention", convention,
                       "which cross section defines the depth")
      ->check(CLI::IsMember({"eit", "bare"}));
  transfer->add_option("--length", length, "medium length (m)");
  transfer->add_option("--z-points", z_points, "output positions along z")
      ->check(CLI::Range(2, 100000));
  transfer->add_option_function<double>(
      "--density", [&density](double v) { density = v; },
      "atom density (m^-3), overrides --depth");
  transfer->add_option("--sigma0-mode", sigma0_mode,
                       "absolute cross-section scale")
      ->check(CLI::IsMember({"lifetime", "dipole", "explicit"}));
  transfer->add_option("--sigma0-value", sigma0_value,
                       "scale value (m^2) for --sigma0-mode explicit");

  auto* bounds = app.add_subcommand(
      "bounds", "thresholds, entropy bound, ceiling and efficiencies");
  add_common(bounds, state);

  auto* verify = app.add_subcommand(
      "verify", "replay every closed form against its independent route");
  std::uint64_t seed = VerifyOptions{}.seed;
  add_common(verify, state, /*with_format=*/false);
  verify->add_option("--seed", seed, "seed for the random parameter draws");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!state.out_path.empty()) {
    file.open(state.out_path);
    if (!file) {
      std::cerr << "error: cannot open " << state.out_path << '\n';
      return kExitBadInput;
    }
    out = &file;
  }

  try {
    const eitengine::EngineParams params =
        load_params(state.config_path, state.overrides);
    const OutputFormat format = parse_format(state.format);

    if (spectrum->parsed()) {
      SpectrumOptions o;
      o.params = params;
      o.grid = parse_grid(spectrum_grid);
      o.format = format;
      return run_spectrum(o, *out);
    }
    if (sweep->parsed()) {
      SweepOptions o;
      o.params = params;
      o.grid = parse_grid(sweep_grid);
      o.include_drive_off = !no_zero_drive;
      o.format = format;
      return run_sweep(o, *out);
    }
    if (transfer->parsed()) {
      TransferOptions o;
      o.params = params;
      o.grid = parse_grid(transfer_grid);
      o.depth = depth;
      o.convention = parse_depth_convention(convention);
      o.length = length;
      o.density = density;
      o.z_points = z_points;
      o.sigma0_mode = sigma0_mode;
      o.sigma0_value = sigma0_value;
      o.format = format;
      return run_transfer(o, *out);
    }
    if (bounds->parsed()) {
      BoundsOptions o;
      o.params = params;
      o.format = format;
      return run_bounds(o, *out);
    }
    if (verify->parsed()) {
      VerifyOptions o;
      o.params = params;
      o.seed = seed;
      return run_verify(o, *out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kExitBadInput;
}
