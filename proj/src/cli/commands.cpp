#include "gfdm/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include <CLI11.hpp>

#include "gfdm/cli/symbol_io.hpp"
#include "gfdm/cli/verify.hpp"
#include "gfdm/metrics.hpp"
#include "gfdm/modem.hpp"

namespace gfdm::cli {

namespace {

ResultTable make_table(const RunConfig& config, std::vector<std::string> columns) {
  ResultTable t;
  t.columns = std::move(columns);
  t.metadata = config.to_json();
  return t;
}

std::vector<double> lambda_grid(const RunConfig& config) {
  const GridSpec grid = config.grid.value_or(GridSpec{0.0, 0.05, 0.5});
  std::vector<double> values = grid.values();
  for (double v : values) {
    if (!(v >= 0.0 && v < 1.0)) {
      throw ConfigError("invalid lambda grid '" + grid.to_string() + "': values must lie in [0, 1)");
    }
  }
  return values;
}

std::vector<std::size_t> m_grid(const RunConfig& config) {
  const GridSpec grid = config.grid.value_or(GridSpec{2.0, 1.0, 64.0});
  std::vector<std::size_t> out;
  for (double v : grid.values()) {
    const double r = std::round(v);
    if (std::abs(v - r) > 1e-9 || r < 2.0) {
      throw ConfigError("invalid M grid '" + grid.to_string() + "': values must be integers >= 2");
    }
    out.push_back(static_cast<std::size_t>(r));
  }
  return out;
}

Cell optional_cell(const std::optional<double>& v) {
  return v ? Cell{*v} : Cell{std::string("na")};
}

void write_table(const RunConfig& config, const ResultTable& table, std::ostream& out) {
  if (config.output.empty()) {
    table.write_csv(out);
    return;
  }
  std::ofstream os(config.output, std::ios::trunc);
  if (!os) {
    throw ConfigError("cannot open output file '" + config.output + "'");
  }
  table.write_csv(os);
}

void write_values(const RunConfig& config, const CVector& values, std::ostream& out) {
  if (config.output.empty()) {
    if (config.binary) {
      throw ConfigError("--binary output requires --out");
    }
    write_complex_text(out, values);
    return;
  }
  write_complex_file(config.output, values, config.binary);
}

CVector read_blocks(const RunConfig& config, const char* what) {
  if (config.input.empty()) {
    throw ConfigError(std::string(command_name(config.command)) + " requires --in");
  }
  CVector values = read_complex_file(config.input, config.binary);
  const std::size_t n = config.params.N();
  if (values.empty() || values.size() % n != 0) {
    throw DimensionError(std::string(what) + " count " + std::to_string(values.size()) +
                         " is not a positive multiple of N=K*M=" + std::to_string(n));
  }
  return values;
}

} // namespace

// ---------------------------------------------------------------------------

ResultTable cmd_design(const RunConfig& config) {
  const CVector gt = sample_gtilde(config.params, config.filter);
  const CVector g = time_filter(gt);
  ResultTable t = make_table(config, {"n", "gtilde_re", "gtilde_im", "g_re", "g_im"});
  for (std::size_t n = 0; n < gt.size(); ++n) {
    t.add_row({static_cast<long long>(n), gt[n].real(), gt[n].imag(), g[n].real(), g[n].imag()});
  }
  return t;
}

ResultTable cmd_spectrum(const RunConfig& config) {
  const ZakGrid zak = zak_spectrum(config.params, config.filter);
  const double sk = std::sqrt(static_cast<double>(config.params.K));
  ResultTable t = make_table(config, {"k", "m", "z_re", "z_im", "sigma_sq", "singular_value"});
  for (Eigen::Index m = 0; m < zak.z.cols(); ++m) {
    for (Eigen::Index k = 0; k < zak.z.rows(); ++k) {
      const cplx z = zak.z(k, m);
      t.add_row({static_cast<long long>(k), static_cast<long long>(m), z.real(), z.imag(),
                 zak.sigma_sq(k, m), std::abs(z) / sk});
    }
  }
  return t;
}

ResultTable cmd_cond_sweep(const RunConfig& config) {
  std::vector<GfdmParams> points;
  for (double lambda : lambda_grid(config)) {
    points.push_back({config.params.K, config.params.M, lambda});
  }
  ResultTable t = make_table(config, {"lambda", "cond_numeric", "cond_closed", "filter", "M", "K",
                                      "status"});
  for (const auto& row : sweep(points, config.filter)) {
    const auto M = static_cast<long long>(row.params.M);
    const auto K = static_cast<long long>(row.params.K);
    if (!row.report) {
      t.add_row({row.params.lambda, std::string("na"), std::string("na"), config.filter.label(), M,
                 K, row.error});
      continue;
    }
    t.add_row({row.params.lambda, row.report->cond_numeric, optional_cell(row.report->cond_closed),
               config.filter.label(), M, K, std::string("ok")});
  }
  return t;
}

ResultTable cmd_nef_sweep(const RunConfig& config) {
  std::vector<GfdmParams> points;
  for (double lambda : lambda_grid(config)) {
    points.push_back({config.params.K, config.params.M, lambda});
  }
  ResultTable t = make_table(config, {"lambda", "nef", "nef_db", "sir_metric", "sir_metric_db",
                                      "cond_numeric", "filter", "M", "K", "status"});
  for (const auto& row : sweep(points, config.filter)) {
    const auto M = static_cast<long long>(row.params.M);
    const auto K = static_cast<long long>(row.params.K);
    if (!row.report) {
      const Cell na = std::string("na");
      t.add_row({row.params.lambda, na, na, na, na, na, config.filter.label(), M, K, row.error});
      continue;
    }
    const auto& r = *row.report;
    t.add_row({row.params.lambda, r.nef, to_db(r.nef), r.sir_metric, r.sir_metric_db,
               r.cond_numeric, config.filter.label(), M, K, std::string("ok")});
  }
  return t;
}

ResultTable cmd_metrics_vs_m(const RunConfig& config) {
  std::vector<GfdmParams> points;
  for (std::size_t M : m_grid(config)) {
    points.push_back({config.params.K, M, optimal_lambda(M)});
  }
  const double asymptote = sir_asymptotic(config.filter, config.params.K);
  ResultTable t = make_table(config, {"M", "lambda_used", "cond_numeric", "nef", "nef_db",
                                      "sir_metric", "sir_metric_db", "sir_asymptotic", "status"});
  for (const auto& row : sweep(points, config.filter)) {
    const auto M = static_cast<long long>(row.params.M);
    if (!row.report) {
      const Cell na = std::string("na");
      t.add_row({M, row.params.lambda, na, na, na, na, na, asymptote, row.error});
      continue;
    }
    const auto& r = *row.report;
    t.add_row({M, row.params.lambda, r.cond_numeric, r.nef, to_db(r.nef), r.sir_metric,
               r.sir_metric_db, asymptote, std::string("ok")});
  }
  return t;
}

void cmd_modulate(const RunConfig& config, std::ostream& out) {
  const GfdmParams& p = config.params;
  const CVector symbols = read_blocks(config, "symbol");
  const ModulationMatrix a = factorize_A(p, sample_gtilde(p, config.filter));
  const std::size_t n = p.N();
  CVector samples;
  samples.reserve(symbols.size());
  for (std::size_t b = 0; b < symbols.size() / n; ++b) {
    DataGrid d(p.K, p.M, CVector(symbols.begin() + static_cast<std::ptrdiff_t>(b * n),
                                 symbols.begin() + static_cast<std::ptrdiff_t>((b + 1) * n)));
    GfdmSignal x = modulate_fast(a, d);
    if (config.snr_db) {
      x = awgn(x, *config.snr_db, config.seed + b);
    }
    samples.insert(samples.end(), x.samples.begin(), x.samples.end());
  }
  write_values(config, samples, out);
}

void cmd_demodulate(const RunConfig& config, std::ostream& out) {
  const GfdmParams& p = config.params;
  const CVector samples = read_blocks(config, "sample");
  const ModulationMatrix a = factorize_A(p, sample_gtilde(p, config.filter));
  const std::size_t n = p.N();
  CVector symbols;
  symbols.reserve(samples.size());
  for (std::size_t b = 0; b < samples.size() / n; ++b) {
    const GfdmSignal y{CVector(samples.begin() + static_cast<std::ptrdiff_t>(b * n),
                               samples.begin() + static_cast<std::ptrdiff_t>((b + 1) * n))};
    const DataGrid d = config.receiver == Receiver::ZeroForcing ? demodulate_zf(a, y)
                                                                 : demodulate_mf(a, y);
    symbols.insert(symbols.end(), d.symbols.begin(), d.symbols.end());
  }
  write_values(config, symbols, out);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
    case Command::Design: write_table(config, cmd_design(config), out); break;
    case Command::Spectrum: write_table(config, cmd_spectrum(config), out); break;
    case Command::CondSweep: write_table(config, cmd_cond_sweep(config), out); break;
    case Command::NefSweep: write_table(config, cmd_nef_sweep(config), out); break;
    case Command::MetricsVsM: write_table(config, cmd_metrics_vs_m(config), out); break;
    case Command::Modulate: cmd_modulate(config, out); break;
    case Command::Demodulate: cmd_demodulate(config, out); break;
    case Command::Verify: {
      const auto results = run_verification({config.quick, config.fault});
      print_verification(out, results);
      for (const auto& r : results) {
        if (!r.passed) {
          return kExitVerifyFailed;
        }
      }
      break;
    }
    }
  } catch (const SingularModulation& e) {
    err << e.what() << '\n';
    return kExitSingular;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"GFDM filter design, conditioning analysis and modem"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  std::size_t K = 0;
  std::size_t M = 0;
  double alpha = 0.0;
  double lambda = 0.0;
  std::string filter_name;
  std::string family;
  int beta = 0;
  std::string generator;
  std::string receiver;
  std::string snr;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string in_path;
  std::string grid;
  std::string config_path;
  std::string fault;
  bool binary = false;
  bool quick = false;

  auto* o_k = app.add_option("--K", K, "number of subcarriers")->check(CLI::PositiveNumber);
  auto* o_m = app.add_option("--M", M, "number of subsymbols")->check(CLI::PositiveNumber);
  auto* o_alpha = app.add_option("--alpha", alpha, "roll-off in (0, 1]");
  auto* o_lambda = app.add_option("--lambda", lambda, "sampling shift in [0, 1)");
  auto* o_filter = app.add_option("--filter", filter_name, "prototype filter")
                       ->check(CLI::IsMember({"rc", "rrc", "xia"}));
  auto* o_family = app.add_option("--family", family, "filter family")
                       ->check(CLI::IsMember({"a", "b"}));
  auto* o_beta = app.add_option("--beta", beta, "case-B phase class")->check(CLI::Range(0, 3));
  auto* o_gen = app.add_option("--generator", generator, "transition generator")
                    ->check(CLI::IsMember({"sin", "linear"}));
  auto* o_recv = app.add_option("--receiver", receiver, "demodulator")
                     ->check(CLI::IsMember({"zf", "mf"}));
  auto* o_snr = app.add_option("--snr-db", snr, "add AWGN at this SNR (dB, or inf)");
  auto* o_seed = app.add_option("--seed", seed, "noise seed");
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--in", in_path, "input symbol/sample file");
  auto* o_grid = app.add_option("--grid", grid, "sweep grid start:step:stop");
  app.add_option("--config", config_path, "JSON config {family, alpha, beta, generator, K, M, lambda}");
  app.add_flag("--binary", binary, "little-endian float64 pairs instead of text");
  app.add_flag("--quick", quick, "verify: restrict to K, M <= 8");
  app.add_option("--inject-fault", fault, "verify: inject a known fault")
      ->check(CLI::IsMember({"none", "lambda-sign"}));

  RunConfig config;
  struct Entry {
    const char* name;
    Command command;
    const char* help;
  };
  const std::vector<Entry> commands{
      {"design", Command::Design, "sampled frequency response g~ and time filter g"},
      {"spectrum", Command::Spectrum, "Zak spectrum z_{k,m} and singular values"},
      {"cond-sweep", Command::CondSweep, "condition number over a lambda grid"},
      {"nef-sweep", Command::NefSweep, "NEF and SIR metric over a lambda grid"},
      {"metrics-vs-m", Command::MetricsVsM, "metrics over an M grid at the optimal lambda"},
      {"modulate", Command::Modulate, "symbols -> samples, one block of K*M at a time"},
      {"demodulate", Command::Demodulate, "samples -> symbols with the zf or mf receiver"},
      {"verify", Command::Verify, "cross-check fast paths against dense oracles"}};
  for (const auto& e : commands) {
    app.add_subcommand(e.name, e.help)->callback([&config, c = e.command] { config.command = c; });
  }

  std::vector<std::string> storage(args);
  std::vector<char*> argv;
  for (auto& s : storage) {
    argv.push_back(s.data());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfig;
  }

  try {
    if (!config_path.empty()) {
      std::ifstream is(config_path);
      if (!is) {
        throw ConfigError("cannot open config file '" + config_path + "'");
      }
      nlohmann::json j;
      try {
        is >> j;
      } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config file '" + config_path + "' is not valid JSON: " + e.what());
      }
      apply_json_config(j, config);
    }
    if (o_k->count()) config.params.K = K;
    if (o_m->count()) config.params.M = M;
    if (o_lambda->count()) config.params.lambda = lambda;

    PrototypeFilter& f = config.filter;
    if (o_filter->count()) {
      f = resolve_filter(filter_name, o_family->count() ? family : "",
                         o_beta->count() ? beta : 0,
                         o_gen->count() ? generator : std::string(f.generator.name()),
                         o_alpha->count() ? alpha : f.alpha);
    } else {
      if (o_family->count()) {
        f.family = family == "a" ? FilterFamily::CaseA : FilterFamily::CaseB;
      }
      if (o_beta->count()) f.beta = beta;
      if (o_gen->count()) f.generator = GeneratorFunction::from_name(generator);
      if (o_alpha->count()) f.alpha = alpha;
    }
    f.validate();

    if (o_recv->count()) {
      config.receiver = receiver == "mf" ? Receiver::MatchedFilter : Receiver::ZeroForcing;
    }
    if (o_snr->count()) {
      if (snr == "inf" || snr == "+inf") {
        config.snr_db = std::numeric_limits<double>::infinity();
      } else {
        try {
          std::size_t used = 0;
          config.snr_db = std::stod(snr, &used);
          if (used != snr.size() || !std::isfinite(*config.snr_db)) {
            throw ConfigError("bad");
          }
        } catch (const std::exception&) {
          throw ConfigError("invalid --snr-db '" + snr + "'");
        }
      }
    }
    if (o_seed->count()) config.seed = seed;
    if (o_grid->count()) config.grid = GridSpec::parse(grid);
    config.output = out_path;
    config.input = in_path;
    config.binary = binary;
    config.quick = quick;
    config.fault = fault == "lambda-sign" ? Fault::LambdaMisSign : Fault::None;

    if (config.command != Command::Verify) {
      config.params.validate();
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  return run(config, out, err);
}

} // namespace gfdm::cli
