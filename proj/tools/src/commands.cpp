#include "eitengine_cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "eitengine/eitengine.hpp"

namespace eitengine_cli {

using namespace eitengine;

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

// tolerances are round constants; %g keeps them readable
std::string format_tolerance(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

void add_param_meta(ResultTable& table, const EngineParams& p) {
  table.add_meta("gamma31", p.system.gamma31);
  table.add_meta("gamma32", p.system.gamma32);
  table.add_meta("omega13", p.system.omega13);
  table.add_meta("omega12", p.system.omega12);
  if (p.system.dipole13) table.add_meta("dipole13", *p.system.dipole13);
  table.add_meta("t13", p.reservoirs.t13);
  table.add_meta("t23", p.reservoirs.t23);
  table.add_meta("omega_c", p.drive.omega_c);
}

const char* threshold_label(ThresholdClass c) {
  switch (c) {
    case ThresholdClass::kBelow:
      return "below";
    case ThresholdClass::kAt:
      return "at";
    case ThresholdClass::kAbove:
      return "above";
  }
  return "?";
}

}  // namespace

int exit_code_for(const std::exception& error) {
  if (dynamic_cast<const NumericalError*>(&error)) return kExitNumerical;
  if (dynamic_cast<const Error*>(&error)) return kExitBadInput;
  return kExitNumerical;
}

ResultTable spectrum_table(const SpectrumOptions& options) {
  const EngineParams& p = options.params;
  const DerivedRates rates = derive_rates(p);
  const SteadyState steady = populations(rates, p.drive, p.system);

  ResultTable table;
  table.command = "spectrum";
  add_param_meta(table, p);
  table.add_meta("gamma31_width", rates.gamma31);
  table.add_meta("gamma21_width", rates.gamma21);
  table.add_meta("nbar13", rates.nbar13);
  table.add_meta("nbar23", rates.nbar23);
  table.add_meta("lambda", steady.lambda);
  table.columns = {"detuning_over_gamma31", "detuning",
                   "sigma_abs",             "sigma_em",
                   "brightness",            "brightness_over_nbar13",
                   "amplifying"};
  table.units = {"gamma31_width", "rad/s",  "sigma_0", "sigma_0",
                 "photons/mode",  "nbar13", "flag"};

  for (double x : options.grid.samples()) {
    const double dw = x * rates.gamma31;
    const CrossSections xs = cross_sections(dw, rates, p.drive, p.system);
    double b = kNan;
    double b_norm = kNan;
    double amplifying = 0.0;
    try {
      const BrightnessPoint point = saturated_brightness(xs, steady, rates);
      b = point.b;
      b_norm = point.b_normalized;
    } catch (const GainMediumError&) {
      amplifying = 1.0;
    }
    table.rows.push_back({x, dw, xs.sigma_abs_norm, xs.sigma_em_norm, b,
                          b_norm, amplifying});
  }
  return table;
}

ResultTable sweep_table(const SweepOptions& options) {
  const EngineParams& p = options.params;
  const DerivedRates rates = derive_rates(p);

  ResultTable table;
  table.command = "sweep-rabi";
  add_param_meta(table, p);
  table.add_meta("gamma31_width", rates.gamma31);
  table.add_meta("nbar13", rates.nbar13);

  double b_inf = kNan;
  try {
    b_inf = strong_coupling_brightness(rates, p.system);
  } catch (const ThresholdError&) {
  }
  table.add_meta("b_strong_coupling", b_inf);
  double t_bound = kInf;
  double b_max = kInf;
  try {
    const BrightnessCeiling ceiling = brightness_ceiling(rates, p.system);
    b_max = ceiling.b_max;
    t_bound = ceiling.t_max;
  } catch (const ThresholdError&) {
  }
  table.add_meta("b_max", b_max);
  table.add_meta("t_bound", t_bound);

  table.columns = {"omega_c_over_gamma31", "omega_c", "b0",
                   "b0_over_nbar13",       "t_b",     "t_b_over_t13",
                   "above_threshold"};
  table.units = {"gamma31_width", "rad/s", "photons/mode", "nbar13",
                 "K",             "t13",   "flag"};

  std::vector<double> points;
  if (options.include_drive_off) points.push_back(0.0);
  for (double x : options.grid.samples()) points.push_back(x);

  for (double x : points) {
    DriveConfig drive;
    drive.omega_c = x * rates.gamma31;
    double b0 = kNan;
    double t_b = kNan;
    double above = 0.0;
    try {
      b0 = line_center_brightness(rates, drive, p.system);
      t_b = brightness_to_temperature(b0, p.system.omega13);
    } catch (const ThresholdError&) {
      above = 1.0;
    }
    table.rows.push_back({x, drive.omega_c, b0, b0 / rates.nbar13, t_b,
                          t_b / p.reservoirs.t13, above});
  }
  return table;
}

ResultTable transfer_table(const TransferOptions& options) {
  const EngineParams& p = options.params;
  const DerivedRates rates = derive_rates(p);
  const Sigma0Spec sigma0_spec =
      parse_sigma0(options.sigma0_mode, options.sigma0_value);

  MediumConfig medium;
  if (options.density) {
    medium.density = *options.density;
    medium.length = options.length;
  } else {
    medium = medium_from_depth(options.depth, options.convention, p,
                               sigma0_spec, options.length);
  }

  ResultTable table;
  table.command = "transfer";
  add_param_meta(table, p);
  table.add_meta("gamma31_width", rates.gamma31);
  table.add_meta("nbar13", rates.nbar13);
  table.add_meta("sigma0_mode", options.sigma0_mode);
  table.add_meta("sigma0", sigma0(sigma0_spec, p.system, rates));
  if (!options.density) {
    table.add_meta("depth", options.depth);
    table.add_meta("depth_convention",
                   options.convention == DepthConvention::kEit ? "eit"
                                                               : "bare");
  }
  table.add_meta("density", medium.density);
  table.add_meta("length", medium.length);

  std::vector<double> detunings;
  for (double x : options.grid.samples()) detunings.push_back(x * rates.gamma31);

  const TransferField field = analytic_transfer_field(
      detunings, medium, p, sigma0_spec, options.z_points);

  table.columns = {"detuning_over_gamma31", "detuning", "z", "brightness",
                   "amplifying"};
  table.units = {"gamma31_width", "rad/s", "m", "photons/mode", "flag"};
  for (std::size_t i = 0; i < field.detunings.size(); ++i) {
    const double x = field.detunings[i] / rates.gamma31;
    for (std::size_t k = 0; k < field.z.size(); ++k) {
      table.rows.push_back({x, field.detunings[i], field.z[k],
                            field.brightness[i][k],
                            static_cast<double>(field.amplifying[i])});
    }
  }
  return table;
}

ResultTable bounds_table(const BoundsOptions& options) {
  const EngineParams& p = options.params;
  const DerivedRates rates = derive_rates(p);

  ResultTable table;
  table.command = "bounds";
  add_param_meta(table, p);
  table.add_meta("nbar13", rates.nbar13);
  table.add_meta("nbar23", rates.nbar23);

  const ThresholdClass threshold = lwi_threshold(rates);

  double t_bound = kInf;
  double b_max = kInf;
  double t_max = kInf;
  if (threshold == ThresholdClass::kBelow) {
    t_bound = second_law_bound(p.reservoirs, p.system);
    const BrightnessCeiling ceiling = brightness_ceiling(rates, p.system);
    b_max = ceiling.b_max;
    t_max = ceiling.t_max;
  }

  double b0 = kNan;
  double t_b0 = kNan;
  double delta_s = kNan;
  try {
    b0 = line_center_brightness(rates, p.drive, p.system);
    t_b0 = brightness_to_temperature(b0, p.system.omega13);
    delta_s = entropy_delta(p.reservoirs, p.system, t_b0);
  } catch (const ThresholdError&) {
  }

  double b_inf = kNan;
  try {
    b_inf = strong_coupling_brightness(rates, p.system);
  } catch (const ThresholdError&) {
  }

  const Efficiencies eta = efficiencies(p.system, p.reservoirs);
  double eta_ratio = kNan;
  if (p.reservoirs.t13 > p.reservoirs.t23) {
    eta_ratio = efficiency_ratio(p.reservoirs);
  }
  const PowerBudget budget = power_budget(p.system);
  const ReservoirRange range = reservoir_range(p.system, p.reservoirs.t13);

  table.columns = {"threshold",      "t23_min",
                   "b0",             "t_b0",
                   "b_strong_coupling", "b_max",
                   "t_max",          "t_bound",
                   "delta_s_per_photon", "eta_carnot_freq",
                   "eta_carnot_temp", "eta_eit_freq",
                   "eta_eit_temp",   "eta_ratio",
                   "coupling_fraction", "thermal_fraction"};
  table.units = {"class", "K",   "photons/mode", "K",   "photons/mode",
                 "photons/mode", "K", "K", "J/K", "1",
                 "1",     "1",   "1",            "1",   "1",
                 "1"};
  table.rows.push_back({std::string(threshold_label(threshold)),
                        range.t23_min, b0, t_b0, b_inf, b_max, t_max, t_bound,
                        delta_s, eta.carnot_frequency, eta.carnot_temperature,
                        eta.eit_frequency, eta.eit_temperature, eta_ratio,
                        budget.coupling_fraction, budget.thermal_fraction});
  return table;
}

int run_spectrum(const SpectrumOptions& options, std::ostream& out) {
  write_table(spectrum_table(options), options.format, out);
  return kExitOk;
}

int run_sweep(const SweepOptions& options, std::ostream& out) {
  write_table(sweep_table(options), options.format, out);
  return kExitOk;
}

int run_transfer(const TransferOptions& options, std::ostream& out) {
  write_table(transfer_table(options), options.format, out);
  return kExitOk;
}

int run_bounds(const BoundsOptions& options, std::ostream& out) {
  write_table(bounds_table(options), options.format, out);
  return kExitOk;
}

int run_verify(const VerifyOptions& options, std::ostream& out) {
  const VerifyReport report = run_verification(options.params, options.seed);
  out << "seed: " << options.seed << '\n';
  const EngineParams& p = options.params;
  out << "parameters: gamma31=" << format_double(p.system.gamma31)
      << " gamma32=" << format_double(p.system.gamma32)
      << " omega13=" << format_double(p.system.omega13)
      << " omega12=" << format_double(p.system.omega12)
      << " omega_c=" << format_double(p.drive.omega_c)
      << " t13=" << format_double(p.reservoirs.t13)
      << " t23=" << format_double(p.reservoirs.t23) << '\n';
  std::size_t passed = 0;
  for (const auto& check : report.checks) {
    out << "check " << check.name << ": "
        << (check.pass ? "PASS" : "FAIL")
        << " max_rel_dev=" << format_double(check.max_rel_dev)
        << " tolerance=" << format_tolerance(check.tolerance)
        << " samples=" << check.samples << '\n';
    if (check.pass) ++passed;
  }
  out << "result: " << (report.ok() ? "PASS" : "FAIL") << " (" << passed
      << "/" << report.checks.size() << ")\n";
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

}  // namespace eitengine_cli
