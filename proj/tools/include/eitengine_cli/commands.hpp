#pragma once

#include <cstdint>
#include <exception>
#include <ostream>
#include <string>

#include "eitengine_cli/config.hpp"
#include "eitengine_cli/table.hpp"

namespace eitengine_cli {

// Process exit codes. Physical regimes (inversion, gain) are results, not
// failures; they surface as labeled cells and still exit 0.
inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 1;
inline constexpr int kExitVerifyFailed = 2;
inline constexpr int kExitNumerical = 3;

// Maps a thrown error to the exit code contract above.
int exit_code_for(const std::exception& error);

struct SpectrumOptions {
  eitengine::EngineParams params;
  GridSpec grid{-10.0, 10.0, 81, false};  // units of the 1-3 width
  OutputFormat format = OutputFormat::kCsv;
};

struct SweepOptions {
  eitengine::EngineParams params;
  GridSpec grid{1e-2, 1e3, 61, true};  // omega_c in units of the 1-3 width
  bool include_drive_off = true;       // prepend the omega_c = 0 row
  OutputFormat format = OutputFormat::kCsv;
};

struct TransferOptions {
  eitengine::EngineParams params;
  GridSpec grid{-10.0, 10.0, 21, false};
  double depth = 10.0;
  eitengine::DepthConvention convention = eitengine::DepthConvention::kEit;
  double length = 1.0;
  std::optional<double> density;  // overrides depth when given
  int z_points = 11;
  std::string sigma0_mode = "lifetime";
  double sigma0_value = 0.0;
  OutputFormat format = OutputFormat::kCsv;
};

struct BoundsOptions {
  eitengine::EngineParams params;
  OutputFormat format = OutputFormat::kCsv;
};

struct VerifyOptions {
  eitengine::EngineParams params;
  std::uint64_t seed = 20240917;
};

ResultTable spectrum_table(const SpectrumOptions& options);
ResultTable sweep_table(const SweepOptions& options);
ResultTable transfer_table(const TransferOptions& options);
ResultTable bounds_table(const BoundsOptions& options);

int run_spectrum(const SpectrumOptions& options, std::ostream& out);
int run_sweep(const SweepOptions& options, std::ostream& out);
int run_transfer(const TransferOptions& options, std::ostream& out);
int run_bounds(const BoundsOptions& options, std::ostream& out);
// Fixed-format text report; returns kExitVerifyFailed when any check fails.
int run_verify(const VerifyOptions& options, std::ostream& out);

}  // namespace eitengine_cli
