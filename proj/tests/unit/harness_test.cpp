#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "invlearn/harness/config.hpp"
#include "invlearn/harness/csv.hpp"
#include "invlearn/harness/experiment.hpp"
#include "invlearn/harness/oracle.hpp"
#include "invlearn/multi_product.hpp"

using namespace invlearn;

namespace {

const char* kNewsvendorConfig = R"({
  "application": "multiproduct",
  "instance": { "h": [1.0], "b": [50.0], "box_upper": [15.0] },
  "demand": { "family": "uniform", "a": 0.0, "b": 10.0 },
  "policies": [
    { "name": "ms-e", "type": "meta", "eta": 0.05,
      "schedule": { "kind": "exponential", "alpha": 5.1 } },
    { "name": "sgd-0.5", "type": "sgd", "eta": 1.0, "p": 0.5 },
    { "name": "saa", "type": "saa" }
  ],
  "horizons": [200],
  "replications": 24,
  "seed": 7,
  "timing": false,
  "oracle_samples": 50000,
  "oracle_iters": 500
})";

}  // namespace

TEST_CASE("relative average regret formula") {
  CHECK(relative_average_regret(110.0, 10, 10.0) == doctest::Approx(10.0));
  CHECK(relative_average_regret(100.0, 10, 10.0) == doctest::Approx(0.0));
  CHECK(relative_average_regret(150.0, 10, 10.0) == doctest::Approx(50.0));
  CHECK_THROWS(relative_average_regret(1.0, 10, 0.0));
}

TEST_CASE("config parsing keeps every normative key") {
  const ExperimentConfig cfg = parse_config(kNewsvendorConfig);
  CHECK(cfg.application == "multiproduct");
  CHECK(cfg.h == Vec{1.0});
  CHECK(cfg.b == Vec{50.0});
  CHECK(cfg.box_upper == Vec{15.0});
  CHECK(cfg.demand.family == "uniform");
  CHECK(cfg.policies.size() == 3);
  CHECK(cfg.policies[0].type == "meta");
  CHECK(cfg.policies[0].schedule_kind == "exponential");
  CHECK(cfg.horizons == std::vector<long>{200});
  CHECK(cfg.replications == 24);
  CHECK(cfg.seed == 7);
  CHECK(cfg.output == "results.csv");
  const auto app = make_application(cfg);
  CHECK(app->state_dim() == 1);
}

TEST_CASE("oracle recovers the closed-form newsvendor solution") {
  MultiProductInstance app({1.0}, {50.0}, ConstraintSet::box({15.0}),
                           DemandModel::uniform(0, 10));
  const OracleResult r = optimal_oracle(app, 11, 200000, 2000);
  CHECK(std::fabs(r.y_star[0] - 500.0 / 51.0) <= 0.05);
  // C* = closed-form expected cost at y*
  const double y = r.y_star[0];
  const double expected = (1.0 * y * y + 50.0 * (10.0 - y) * (10.0 - y)) / 20.0;
  CHECK(r.c_star == doctest::Approx(expected).epsilon(0.02));
}

TEST_CASE("oracle handles degenerate demand") {
  MultiProductInstance app({1.0}, {50.0}, ConstraintSet::box({15.0}),
                           DemandModel::uniform(0, 0));
  const OracleResult r = optimal_oracle(app, 11, 2000, 100);
  CHECK(r.y_star[0] == doctest::Approx(0.0).scale(1.0).epsilon(1e-6));
  CHECK(r.c_star == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
}

TEST_CASE("experiments are deterministic at any worker count") {
  const ExperimentConfig cfg = parse_config(kNewsvendorConfig);
  const SimulationResult a = run_experiment(cfg, 1);
  const SimulationResult b = run_experiment(cfg, 4);
  CHECK(render_summary_csv(a) == render_summary_csv(b));
  for (std::size_t i = 0; i < a.runs.size(); ++i)
    for (long r = 0; r < cfg.replications; ++r)
      CHECK(a.runs[i].rep_total_cost[r] == b.runs[i].rep_total_cost[r]);
}

TEST_CASE("policies share demand paths within a replication") {
  ExperimentConfig cfg = parse_config(kNewsvendorConfig);
  // two copies of the same policy must see identical costs path for path
  cfg.policies = {cfg.policies[1], cfg.policies[1]};
  cfg.policies[1].name = "sgd-copy";
  const SimulationResult r = run_experiment(cfg, 2);
  REQUIRE(r.runs.size() == 2);
  for (long rep = 0; rep < cfg.replications; ++rep)
    CHECK(r.runs[0].rep_total_cost[rep] == r.runs[1].rep_total_cost[rep]);
}

TEST_CASE("csv output carries the exact header and row shape") {
  ExperimentConfig cfg = parse_config(kNewsvendorConfig);
  cfg.replications = 4;
  cfg.curves = true;
  cfg.horizons = {50};
  cfg.policies.resize(1);
  const SimulationResult r = run_experiment(cfg, 1);
  const std::string path = "/tmp/invlearn_test_out.csv";
  emit_csv(r, path);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header ==
        "application,policy,T,replications,mean_rel_regret_pct,std_rel_regret_pct,"
        "mean_switches,mean_waiting_periods,wall_clock_s");
  long rows = 0;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 1);
  std::ifstream curve("/tmp/invlearn_test_out_curve_ms-e_T50.csv");
  REQUIRE(curve.good());
  std::getline(curve, header);
  CHECK(header == "t,mean_rel_regret_pct,std_rel_regret_pct");
  rows = 0;
  while (std::getline(curve, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 50);
  std::remove(path.c_str());
  std::remove("/tmp/invlearn_test_out_curve_ms-e_T50.csv");
}

TEST_CASE("six significant digits in every value") {
  CHECK(format_sig6(1.0 / 3.0) == "0.333333");
  CHECK(format_sig6(123456789.0) == "1.23457e+08");
  CHECK(format_sig6(0.0) == "0");
}

TEST_CASE("configuration errors are caught by validation") {
  ExperimentConfig cfg = parse_config(kNewsvendorConfig);
  cfg.horizons.clear();
  bool has_error = false;
  for (const auto& n : validate_config(cfg))
    if (n.rfind("error:", 0) == 0) has_error = true;
  CHECK(has_error);
  CHECK_THROWS(run_experiment(cfg, 1));
}

TEST_CASE("stepsize warnings surface through validation") {
  ExperimentConfig cfg = parse_config(kNewsvendorConfig);
  cfg.demand.density_lower = 0.1;
  cfg.policies[0].eta = 50.0;  // far above 1/(2 beta)
  cfg.policies[0].schedule_kind = "exponential_base";
  cfg.policies[0].varsigma = 1.25;
  bool warned = false;
  for (const auto& n : validate_config(cfg))
    if (n.find("stepsize") != std::string::npos) warned = true;
  CHECK(warned);
}

TEST_CASE("two-echelon oracle and runner fit the harness") {
  ExperimentConfig cfg;
  cfg.application = "two_echelon";
  cfg.demand = {.family = "normal", .mu = 5.0, .sigma = 1.0};
  cfg.two_echelon.h1 = 2.0;
  cfg.two_echelon.h2 = 1.0;
  cfg.two_echelon.p1 = 50.0;
  cfg.two_echelon.s_max = 12.0;
  cfg.two_echelon.dbar = 10.0;
  cfg.two_echelon.eta = 0.5;
  cfg.policies.push_back({.name = "planner", .type = "planner"});
  cfg.horizons = {300};
  cfg.replications = 8;
  cfg.seed = 3;
  cfg.timing = false;
  cfg.oracle_samples = 40000;
  const SimulationResult r = run_experiment(cfg, 2);
  REQUIRE(r.runs.size() == 1);
  CHECK(r.oracle.c_star > 0.0);
  CHECK(r.runs[0].mean_rel_regret > -50.0);
  CHECK(r.runs[0].mean_switches > 0.0);
}

TEST_CASE("grid flags expand policies over the default search grids") {
  const char* cfg_json = R"({
    "application": "multiproduct",
    "instance": { "h": [1.0], "b": [50.0], "box_upper": [15.0] },
    "demand": { "family": "uniform", "a": 0.0, "b": 10.0 },
    "policies": [
      { "name": "ms", "type": "meta", "eta_grid": true,
        "schedule": { "kind": "exponential", "base_grid": true } },
      { "name": "sgd", "type": "sgd", "eta_grid": true, "p": 1.0 }
    ],
    "horizons": [100],
    "replications": 1
  })";
  const ExperimentConfig cfg = parse_config(cfg_json);
  CHECK(cfg.policies.size() == 9 * 5 + 9);
  CHECK(cfg.policies[0].name == "ms-eta0.01-base1.05");
  CHECK(cfg.policies[0].varsigma == doctest::Approx(1.05));
  CHECK(cfg.policies.back().name == "sgd-eta100");
  CHECK(cfg.policies.back().eta == doctest::Approx(100.0));
}

TEST_CASE("oracle tracks the critical quantile for the documented distributions") {
  // |y* - F^{-1}(b/(b+h))| <= 0.05 for the four families used throughout
  const double q = 50.0 / 51.0;
  const std::vector<DemandModel> families{
      DemandModel::uniform(0, 10), DemandModel::clipped_normal(5, 1),
      DemandModel::poisson(5), DemandModel::geometric(0.2)};
  int idx = 0;
  for (const DemandModel& demand : families) {
    MultiProductInstance app({1.0}, {50.0}, ConstraintSet::box({60.0}), demand);
    const OracleResult r = optimal_oracle(app, 31 + idx, 200000, 1000);
    CHECK(std::fabs(r.y_star[0] - demand.marginal_quantile(q)) <= 0.05);
    ++idx;
  }
}

TEST_CASE("owms halt switch reaches the application") {
  ExperimentConfig cfg;
  cfg.application = "owms";
  cfg.h = {1.0, 1.0, 1.0};
  cfg.b = {10.0, 5.0};
  cfg.c = {1.0, 2.0};
  cfg.rho = {20.0, 20.0, 20.0};
  cfg.demand = {.family = "uniform", .a = 0.0, .b = 10.0, .dimension = 2};
  cfg.owms_halt_most_beneficial = true;
  const auto app = make_application(cfg);
  // argmax(b - c) = store 1 gets halted when the warehouse target is infeasible
  CHECK(app->transition_solver({3.0, 0.0, 0.0}, {2.0, 1.0, 1.0}) == Vec{3.0, 0.0, 1.0});
}
