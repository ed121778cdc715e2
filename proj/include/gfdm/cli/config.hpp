#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gfdm/filter.hpp"

namespace gfdm::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitSingular = 3,
  kExitVerifyFailed = 4,
};

enum class Command {
  Design,
  Spectrum,
  CondSweep,
  NefSweep,
  MetricsVsM,
  Modulate,
  Demodulate,
  Verify,
};

std::string command_name(Command c);

/// Inclusive arithmetic grid "start:step:stop".
struct GridSpec {
  double start = 0.0;
  double step = 1.0;
  double stop = 0.0;

  static GridSpec parse(const std::string& text);
  std::vector<double> values() const;
  std::string to_string() const;
};

enum class Receiver { ZeroForcing, MatchedFilter };

enum class Fault { None, LambdaMisSign };

struct RunConfig {
  Command command = Command::Verify;
  GfdmParams params{};
  PrototypeFilter filter = PrototypeFilter::rc(0.5);
  std::optional<GridSpec> grid;
  std::string input;
  std::string output;
  bool binary = false;
  Receiver receiver = Receiver::ZeroForcing;
  std::uint64_t seed = 0;
  std::optional<double> snr_db;
  bool quick = false;
  Fault fault = Fault::None;

  /// Full resolved configuration, echoed into every output header.
  nlohmann::json to_json() const;
};

/// Builds a filter from the CLI vocabulary: name in {rc, rrc, xia}, family in
/// {a, b} (empty = name default), generator in {sin, linear}.
PrototypeFilter resolve_filter(const std::string& name, const std::string& family, int beta,
                               const std::string& generator, double alpha);

/// Applies a JSON filter/geometry description
/// {family, alpha, beta, generator, K, M, lambda} (every key optional).
void apply_json_config(const nlohmann::json& j, RunConfig& config);

} // namespace gfdm::cli
