#pragma once

#include <ostream>
#include <vector>

#include "gfdm/cli/config.hpp"
#include "gfdm/cli/table.hpp"

namespace gfdm::cli {

/// Frequency samples g~ and time-domain filter g.
ResultTable cmd_design(const RunConfig& config);
/// Zak spectrum z_{k,m} and the derived singular values.
ResultTable cmd_spectrum(const RunConfig& config);
/// Numeric and closed-form condition number over a lambda grid.
ResultTable cmd_cond_sweep(const RunConfig& config);
/// NEF and SIR metric over a lambda grid.
ResultTable cmd_nef_sweep(const RunConfig& config);
/// NEF and SIR metric over an M grid at the optimal lambda of each M.
ResultTable cmd_metrics_vs_m(const RunConfig& config);

/// Reads symbols from config.input, writes N samples per K x M block.
void cmd_modulate(const RunConfig& config, std::ostream& out);
/// Reads samples, writes K x M symbols per block (zf or mf).
void cmd_demodulate(const RunConfig& config, std::ostream& out);

/// Runs a resolved configuration; returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses command-line arguments and runs. argv[0] is the program name.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gfdm::cli
