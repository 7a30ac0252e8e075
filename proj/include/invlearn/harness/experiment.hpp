#pragma once

#include <string>
#include <vector>

#include "invlearn/harness/config.hpp"
#include "invlearn/harness/oracle.hpp"

namespace invlearn {

// aggregate for one (policy, T) cell
struct PolicyRunStat {
  std::string policy;
  long T = 0;
  long replications = 0;
  double mean_rel_regret = 0.0;
  double std_rel_regret = 0.0;
  double mean_switches = 0.0;
  double mean_waiting = 0.0;
  double wall_clock_s = 0.0;
  std::vector<double> rep_total_cost;  // indexed by replication
  std::vector<double> rep_regret;
  // per-period curves (filled when requested)
  std::vector<double> curve_mean, curve_std;
};

struct SimulationResult {
  std::string application;
  OracleResult oracle;
  std::vector<PolicyRunStat> runs;  // config order: T-major, then policy
};

// Runs R replications of every (policy, T) cell. Replications share demand
// streams across policies (common random numbers) and the reduction is
// ordered by replication index, so results are identical at any worker count.
SimulationResult run_experiment(const ExperimentConfig& cfg, int jobs = 1);

}  // namespace invlearn
