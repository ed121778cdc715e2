#include "gfdm/cli/config.hpp"

#include <cmath>
#include <sstream>

namespace gfdm::cli {

std::string command_name(Command c) {
  switch (c) {
  case Command::Design: return "design";
  case Command::Spectrum: return "spectrum";
  case Command::CondSweep: return "cond-sweep";
  case Command::NefSweep: return "nef-sweep";
  case Command::MetricsVsM: return "metrics-vs-m";
  case Command::Modulate: return "modulate";
  case Command::Demodulate: return "demodulate";
  case Command::Verify: return "verify";
  }
  return "?";
}

GridSpec GridSpec::parse(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) {
        throw ConfigError("trailing characters");
      }
    } catch (const std::exception&) {
      throw ConfigError("invalid grid '" + text + "' (expected start:step:stop)");
    }
  }
  if (parts.size() != 3) {
    throw ConfigError("invalid grid '" + text + "' (expected start:step:stop)");
  }
  GridSpec g{parts[0], parts[1], parts[2]};
  if (!std::isfinite(g.start) || !std::isfinite(g.stop) || !(g.step > 0.0) ||
      g.stop < g.start) {
    throw ConfigError("invalid grid '" + text + "' (need step > 0 and start <= stop)");
  }
  if ((g.stop - g.start) / g.step > 1e6) {
    throw ConfigError("invalid grid '" + text + "' (more than 1e6 points)");
  }
  return g;
}

std::vector<double> GridSpec::values() const {
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) {
    v[i] = start + static_cast<double>(i) * step;
  }
  return v;
}

std::string GridSpec::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << start << ':' << step << ':' << stop;
  return os.str();
}

PrototypeFilter resolve_filter(const std::string& name, const std::string& family, int beta,
                               const std::string& generator, double alpha) {
  const GeneratorFunction gen = GeneratorFunction::from_name(generator);
  PrototypeFilter f;
  if (name == "rc") {
    if (family.empty() || family == "a") {
      f = {FilterFamily::CaseA, 0, alpha, gen};
    } else if (family == "b") {
      f = {FilterFamily::CaseB, beta, alpha, gen};
    } else {
      throw ConfigError("unknown family '" + family + "' (expected a|b)");
    }
  } else if (name == "rrc") {
    if (!family.empty() && family != "b") {
      throw ConfigError("filter rrc belongs to family b");
    }
    f = {FilterFamily::CaseB, beta, alpha, gen};
  } else if (name == "xia") {
    if (!family.empty() && family != "b") {
      throw ConfigError("filter xia belongs to family b");
    }
    f = {FilterFamily::Xia, 1, alpha, gen};
  } else {
    throw ConfigError("unknown filter '" + name + "' (expected rc|rrc|xia)");
  }
  f.validate();
  return f;
}

void apply_json_config(const nlohmann::json& j, RunConfig& config) {
  if (!j.is_object()) {
    throw ConfigError("config must be a JSON object");
  }
  try {
    if (j.contains("K")) {
      config.params.K = j.at("K").get<std::size_t>();
    }
    if (j.contains("M")) {
      config.params.M = j.at("M").get<std::size_t>();
    }
    if (j.contains("lambda")) {
      config.params.lambda = j.at("lambda").get<double>();
    }
    auto& f = config.filter;
    if (j.contains("alpha")) {
      f.alpha = j.at("alpha").get<double>();
    }
    if (j.contains("beta")) {
      f.beta = j.at("beta").get<int>();
    }
    if (j.contains("generator")) {
      f.generator = GeneratorFunction::from_name(j.at("generator").get<std::string>());
    }
    if (j.contains("family")) {
      const auto family = j.at("family").get<std::string>();
      if (family == "a") {
        f.family = FilterFamily::CaseA;
      } else if (family == "b") {
        f.family = FilterFamily::CaseB;
      } else if (family == "xia") {
        f.family = FilterFamily::Xia;
      } else {
        throw ConfigError("unknown family '" + family + "' (expected a|b|xia)");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
  if (config.filter.family == FilterFamily::Xia) {
    config.filter.beta = 1;
  }
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j;
  j["command"] = command_name(command);
  j["K"] = params.K;
  j["M"] = params.M;
  j["N"] = params.N();
  j["lambda"] = params.lambda;
  j["filter"] = filter.label();
  j["family"] = std::string(family_name(filter.family));
  j["beta"] = filter.effective_beta();
  j["alpha"] = filter.alpha;
  j["generator"] = std::string(filter.generator.name());
  j["grid"] = grid ? nlohmann::json(grid->to_string()) : nlohmann::json(nullptr);
  j["input"] = input;
  j["output"] = output;
  j["binary"] = binary;
  j["receiver"] = receiver == Receiver::ZeroForcing ? "zf" : "mf";
  j["seed"] = seed;
  if (!snr_db) {
    j["snr_db"] = nullptr;
  } else if (std::isinf(*snr_db)) {
    j["snr_db"] = "inf";
  } else {
    j["snr_db"] = *snr_db;
  }
  j["quick"] = quick;
  j["version"] = kVersion;
  return j;
}

} // namespace gfdm::cli
