#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "invlearn/application.hpp"
#include "invlearn/schedule.hpp"
#include "invlearn/two_echelon.hpp"
#include "invlearn/vec.hpp"

namespace invlearn {

// default search grids for stepsizes and exponential bases
inline constexpr double kEtaGrid[] = {0.01, 0.03, 0.1, 0.3, 1.0, 3.0, 10.0, 30.0, 100.0};
inline constexpr double kBaseGrid[] = {1.05, 1.15, 1.25, 1.5, 2.0};

struct PolicySpec {
  std::string name;
  std::string type;           // meta | sgd | saa
  std::string schedule_kind;  // fixed_time | any_time_linear | exponential | exponential_base
  double eta = 0.1;
  long K = 1;
  double alpha = 0.0;
  double varsigma = 0.0;
  double p = 0.5;              // sgd stepsize pattern eta / t^p
  double initial_level = 0.0;  // saa fallback before data arrives
};

struct DemandSpec {
  std::string family;  // uniform | normal | poisson | geometric | gamma
  double a = 0.0, b = 0.0;       // uniform
  double mu = 0.0, sigma = 1.0;  // normal
  double lambda = 1.0;           // poisson, gamma rate
  double pgeom = 0.5;
  double r = 1.0;  // gamma shape
  int dimension = 1;
  std::vector<double> correlation;  // row-major, optional
  double density_upper = 0.0;       // 0 = derive from the family
  double density_lower = 0.0;       // 0 = unset
};

struct ExperimentConfig {
  std::string application;  // multiproduct | multiechelon | owms | two_echelon
  // instance parameters (interpretation depends on the application)
  Vec h, b, c, rho;
  std::vector<double> A;  // row-major constraint matrix, multiproduct only
  Vec box_upper;          // optional componentwise cap, multiproduct only
  bool owms_halt_most_beneficial = false;
  DemandSpec demand;
  std::vector<PolicySpec> policies;
  std::vector<long> horizons;
  long replications = 100;
  std::uint64_t seed = 1;
  std::string output = "results.csv";
  bool curves = false;
  bool timing = true;
  long oracle_samples = 1000000;
  long oracle_iters = 10000;
  TwoEchelonParams two_echelon;
};

ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config(const std::string& json_text);

DemandModel make_demand(const DemandSpec& spec);
// builds the configured instance; two_echelon runs outside this interface
std::unique_ptr<Application> make_application(const ExperimentConfig& cfg);

// schedule + stepsize for a meta policy spec
BatchSchedule make_schedule(const PolicySpec& spec, long T);

// configuration sanity + stepsize admissibility report (empty = clean)
std::vector<std::string> validate_config(const ExperimentConfig& cfg);

}  // namespace invlearn
