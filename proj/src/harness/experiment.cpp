#include "invlearn/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <thread>

#include "invlearn/baselines.hpp"
#include "invlearn/meta_policy.hpp"
#include "invlearn/two_echelon.hpp"

namespace invlearn {

namespace {

// fixed chunking keeps the reduction independent of the worker count
constexpr long kChunk = 16;

struct RepOutcome {
  double total_cost = 0.0;
  double switches = 0.0;
  double waiting = 0.0;
};

std::unique_ptr<Policy> make_policy(const PolicySpec& spec, const Application& app, long T,
                                    const Vec& x1) {
  if (spec.type == "meta") return std::make_unique<MetaPolicy>(app, x1, make_schedule(spec, T), spec.eta);
  if (spec.type == "sgd") return std::make_unique<SgdPolicy>(app, x1, spec.eta, spec.p);
  if (spec.type == "saa") {
    const auto sep = app.separable_costs();
    if (!sep || app.state_dim() != 1)
      throw std::invalid_argument("saa policy requires a scalar newsvendor system");
    const double h = sep->first[0], b = sep->second[0];
    return std::make_unique<SaaPolicy>(app, b / (b + h), spec.initial_level);
  }
  throw std::invalid_argument("unknown policy type: " + spec.type);
}

}  // namespace

SimulationResult run_experiment(const ExperimentConfig& cfg, int jobs) {
  if (cfg.horizons.empty()) throw std::invalid_argument("run_experiment: empty horizon list");
  if (cfg.replications < 1)
    throw std::invalid_argument("run_experiment: replications must be >= 1");
  if (cfg.policies.empty()) throw std::invalid_argument("run_experiment: no policies configured");

  SimulationResult result;
  result.application = cfg.application;

  const bool planner = cfg.application == "two_echelon";
  std::unique_ptr<Application> app;
  DemandModel demand = make_demand(cfg.demand);
  if (planner) {
    result.oracle.y_star = {0.0};
    const TwoEchelonOracle te =
        two_echelon_optimal(cfg.two_echelon, demand, cfg.seed, cfg.oracle_samples);
    result.oracle.y_star = {te.s1, te.s2};
    result.oracle.c_star = te.c_star;
  } else {
    app = make_application(cfg);
    result.oracle = optimal_oracle(*app, cfg.seed, cfg.oracle_samples, cfg.oracle_iters);
  }
  const double c_star = result.oracle.c_star;

  for (long T : cfg.horizons) {
    for (const PolicySpec& spec : cfg.policies) {
      PolicyRunStat stat;
      stat.policy = spec.name.empty() ? spec.type : spec.name;
      stat.T = T;
      stat.replications = cfg.replications;
      stat.rep_total_cost.assign(cfg.replications, 0.0);
      stat.rep_regret.assign(cfg.replications, 0.0);
      std::vector<RepOutcome> outcomes(cfg.replications);

      const long n_chunks = (cfg.replications + kChunk - 1) / kChunk;
      std::vector<std::vector<double>> chunk_curve_mean, chunk_curve_m2;
      std::vector<long> chunk_count;
      if (cfg.curves) {
        chunk_curve_mean.assign(n_chunks, std::vector<double>());
        chunk_curve_m2.assign(n_chunks, std::vector<double>());
        chunk_count.assign(n_chunks, 0);
      }

      std::vector<std::string> rep_errors(cfg.replications);
      const auto t0 = std::chrono::steady_clock::now();
      auto run_rep_inner = [&](long rep) {
        RandomStream stream(cfg.seed, static_cast<std::uint64_t>(rep));
        RepOutcome out;
        std::vector<double> period_cost;
        if (planner) {
          PlannerResult pr = planner_run(cfg.two_echelon, demand, T, stream);
          out.total_cost = pr.total_cost;
          out.switches = static_cast<double>(pr.epochs.size() > 0 ? pr.epochs.size() - 1 : 0);
          out.waiting = 0.0;
          if (cfg.curves) period_cost = std::move(pr.period_cost);
        } else {
          auto policy = make_policy(spec, *app, T, Vec(app->state_dim(), 0.0));
          Trajectory traj = run_episode(*app, *policy, T, stream, {}, cfg.curves);
          out.total_cost = traj.total_cost;
          out.switches = static_cast<double>(policy->stats().updates);
          out.waiting = static_cast<double>(policy->stats().waiting_periods);
          if (cfg.curves) period_cost = std::move(traj.cost);
        }
        outcomes[rep] = out;
        if (cfg.curves) {
          // Welford accumulation of the running relative average regret,
          // merged later in chunk order
          const long chunk = rep / kChunk;
          auto& mean = chunk_curve_mean[chunk];
          auto& m2 = chunk_curve_m2[chunk];
          if (mean.empty()) {
            mean.assign(T, 0.0);
            m2.assign(T, 0.0);
          }
          const long k = ++chunk_count[chunk];
          double cum = 0.0;
          for (long t = 0; t < T; ++t) {
            cum += period_cost[t];
            const double opt = c_star * static_cast<double>(t + 1);
            const double val = (cum - opt) / opt * 100.0;
            const double delta = val - mean[t];
            mean[t] += delta / static_cast<double>(k);
            m2[t] += delta * (val - mean[t]);
          }
        }
      };
      // a contract violation aborts the replication, not the process
      auto run_rep = [&](long rep) {
        try {
          run_rep_inner(rep);
        } catch (const std::exception& e) {
          rep_errors[rep] = e.what();
        }
      };

      // chunks are assigned whole to workers so per-chunk accumulators stay
      // single-writer
      if (jobs <= 1 || cfg.replications == 1) {
        for (long rep = 0; rep < cfg.replications; ++rep) run_rep(rep);
      } else {
        std::atomic<long> next{0};
        auto worker = [&]() {
          for (;;) {
            const long chunk = next.fetch_add(1);
            const long lo = chunk * kChunk;
            if (lo >= cfg.replications) return;
            const long hi = std::min<long>(cfg.replications, lo + kChunk);
            for (long rep = lo; rep < hi; ++rep) run_rep(rep);
          }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
      }
      const auto t1 = std::chrono::steady_clock::now();
      stat.wall_clock_s =
          cfg.timing ? std::chrono::duration<double>(t1 - t0).count() : 0.0;

      std::string failures;
      for (long rep = 0; rep < cfg.replications; ++rep)
        if (!rep_errors[rep].empty())
          failures += "\n  replication " + std::to_string(rep) + ": " + rep_errors[rep];
      if (!failures.empty())
        throw std::runtime_error("policy " + stat.policy + ", T=" + std::to_string(T) +
                                 ": replication failures:" + failures);

      // ordered reduction
      double sum_r = 0.0, sum_r2 = 0.0, sum_sw = 0.0, sum_wait = 0.0;
      for (long rep = 0; rep < cfg.replications; ++rep) {
        const double regret = relative_average_regret(outcomes[rep].total_cost, T, c_star);
        stat.rep_total_cost[rep] = outcomes[rep].total_cost;
        stat.rep_regret[rep] = regret;
        sum_r += regret;
        sum_r2 += regret * regret;
        sum_sw += outcomes[rep].switches;
        sum_wait += outcomes[rep].waiting;
      }
      const double R = static_cast<double>(cfg.replications);
      stat.mean_rel_regret = sum_r / R;
      stat.std_rel_regret =
          cfg.replications > 1
              ? std::sqrt(std::max(0.0, (sum_r2 - R * stat.mean_rel_regret * stat.mean_rel_regret) /
                                            (R - 1.0)))
              : 0.0;
      stat.mean_switches = sum_sw / R;
      stat.mean_waiting = sum_wait / R;

      if (cfg.curves) {
        stat.curve_mean.assign(T, 0.0);
        stat.curve_std.assign(T, 0.0);
        std::vector<double> m2(T, 0.0);
        long count = 0;
        for (long chunk = 0; chunk < n_chunks; ++chunk) {
          const long ck = chunk_count[chunk];
          if (ck == 0) continue;
          if (count == 0) {
            stat.curve_mean = chunk_curve_mean[chunk];
            m2 = chunk_curve_m2[chunk];
            count = ck;
            continue;
          }
          // Chan's pairwise merge, applied in fixed chunk order
          const long nc = count + ck;
          for (long t = 0; t < T; ++t) {
            const double delta = chunk_curve_mean[chunk][t] - stat.curve_mean[t];
            stat.curve_mean[t] += delta * static_cast<double>(ck) / static_cast<double>(nc);
            m2[t] += chunk_curve_m2[chunk][t] +
                     delta * delta * static_cast<double>(count) * static_cast<double>(ck) /
                         static_cast<double>(nc);
          }
          count = nc;
        }
        for (long t = 0; t < T; ++t)
          stat.curve_std[t] = count > 1 ? std::sqrt(m2[t] / static_cast<double>(count - 1)) : 0.0;
      }
      result.runs.push_back(std::move(stat));
    }
  }
  return result;
}

}  // namespace invlearn
