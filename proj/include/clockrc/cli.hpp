#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace clockrc {

struct RunConfig {
  std::string subcommand;
  int q = 4;
  double beta = 1.0;
  double beta_min = 0.01;
  double beta_max = 20.0;
  int points = 200;
  double p = 1.0;
  double rho = 0.5;
  double pc = -1.0;  // < 0: use 1/2 when d == 2, otherwise required
  int n = 16;
  int d = 2;
  std::string corpus = "default";
  long samples = 1000;
  long sweeps = 10000;
  long burnin = 1000;
  int quench_samples = 1;
  std::uint64_t seed = 1;
  int threads = 0;  // 0: logical cores
  std::string out;  // empty: stdout
  bool pc_estimate = false;
  std::vector<int> n_list;
  std::string dump_dir;  // injection-verify failure dumps
};

// Validates ranges for the given subcommand; throws std::invalid_argument.
void validate(const RunConfig& cfg);

// Echoed as a comment line at the top of every CSV output.
std::string config_line(const RunConfig& cfg);

// Dispatches to the subcommand runner. Returns the process exit status:
// 0 on success, 1 on a failed verification, 2 on a configuration or
// size-guard error (message on stderr).
int run(const RunConfig& cfg);

// Individual runners write to os and return the exit status.
int run_weight_table(const RunConfig& cfg, std::ostream& os);
int run_phi_curve(const RunConfig& cfg, std::ostream& os);
int run_beta0(const RunConfig& cfg, std::ostream& os);
int run_beta0_bound(const RunConfig& cfg, std::ostream& os);
int run_oracle_verify(const RunConfig& cfg, std::ostream& os);
int run_injection_verify(const RunConfig& cfg, std::ostream& os);
int run_percolate(const RunConfig& cfg, std::ostream& os);
int run_simulate(const RunConfig& cfg, std::ostream& os);

}  // namespace clockrc
