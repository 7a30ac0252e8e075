#include <cstdio>
#include <exception>
#include <iostream>

#include "CLI11.hpp"

#include "invlearn/harness/config.hpp"
#include "invlearn/harness/csv.hpp"
#include "invlearn/harness/experiment.hpp"
#include "invlearn/harness/oracle.hpp"

using namespace invlearn;

int main(int argc, char** argv) {
  CLI::App cli{"Inventory learning experiment runner"};
  cli.require_subcommand(1);

  std::string config_path, out_path;
  bool curves = false, no_timing = false;
  int jobs = 1;
  std::uint64_t seed = 0;
  bool seed_set = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("config", config_path, "experiment configuration (JSON)")->required();
    sub->add_option("--seed", seed, "override the configured seed")
        ->each([&seed_set](const std::string&) { seed_set = true; });
  };

  CLI::App* run = cli.add_subcommand("run", "run the configured experiment");
  add_common(run);
  run->add_option("--out", out_path, "override the configured output path");
  run->add_flag("--curves", curves, "also write per-period regret curves");
  run->add_option("--jobs", jobs, "worker threads for replications")->check(CLI::Range(1, 512));
  run->add_flag("--no-timing", no_timing, "report wall_clock_s as 0 for reproducible output");

  CLI::App* validate = cli.add_subcommand("validate", "check the configuration and stepsizes");
  add_common(validate);

  CLI::App* oracle = cli.add_subcommand("oracle", "print the benchmark (y*, C*)");
  add_common(oracle);

  CLI11_PARSE(cli, argc, argv);

  try {
    ExperimentConfig cfg = load_config(config_path);
    if (seed_set) cfg.seed = seed;

    if (validate->parsed()) {
      const auto notes = validate_config(cfg);
      bool bad = false;
      for (const auto& n : notes) {
        std::cout << n << "\n";
        if (n.rfind("error:", 0) == 0) bad = true;
      }
      if (notes.empty()) std::cout << "configuration ok\n";
      return bad ? 1 : 0;
    }

    if (oracle->parsed()) {
      if (cfg.application == "two_echelon") {
        DemandModel demand = make_demand(cfg.demand);
        const TwoEchelonOracle r =
            two_echelon_optimal(cfg.two_echelon, demand, cfg.seed, cfg.oracle_samples);
        std::cout << "s1* = " << r.s1 << "\ns2* = " << r.s2 << "\nC* = " << r.c_star << "\n";
        return 0;
      }
      auto app = make_application(cfg);
      const OracleResult r = optimal_oracle(*app, cfg.seed, cfg.oracle_samples, cfg.oracle_iters);
      std::cout << "y* =";
      for (double v : r.y_star) std::cout << ' ' << v;
      std::cout << "\nC* = " << r.c_star << "\n";
      return 0;
    }

    // run
    if (!out_path.empty()) cfg.output = out_path;
    if (curves) cfg.curves = true;
    if (no_timing) cfg.timing = false;
    const auto notes = validate_config(cfg);
    for (const auto& n : notes) {
      std::cerr << n << "\n";
      if (n.rfind("error:", 0) == 0) return 1;
    }
    const SimulationResult result = run_experiment(cfg, jobs);
    emit_csv(result, cfg.output);
    std::cout << "y* =";
    for (double v : result.oracle.y_star) std::cout << ' ' << v;
    std::cout << "\nC* = " << result.oracle.c_star << "\nwrote " << cfg.output << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
