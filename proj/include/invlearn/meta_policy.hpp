#pragma once

#include <vector>

#include "invlearn/application.hpp"
#include "invlearn/optimizer.hpp"
#include "invlearn/rng.hpp"
#include "invlearn/schedule.hpp"
#include "invlearn/vec.hpp"

namespace invlearn {

enum class PeriodKind { working, waiting };

struct Decision {
  Vec y;
  PeriodKind kind;
};

struct PolicyStats {
  long updates = 0;            // target updates performed (batch completions)
  long effective_updates = 0;  // updates whose new target governed a later period
  long working_periods = 0;
  long waiting_periods = 0;
  // distinct target-level epochs experienced during the horizon
  long epochs_used() const { return effective_updates + 1; }
};

// A sequential order-up-to policy driven by decide/observe pairs.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual Decision decide(const Vec& x) = 0;
  // d is the realized demand (available to full-information baselines only);
  // obs is the application's censored observation
  virtual void observe(const Vec& y, const Vec& d, const Vec& obs) = 0;
  virtual const Vec& target() const = 0;
  virtual const PolicyStats& stats() const = 0;
};

// Keeps a constant target for each minibatch of working periods, buffers one
// gradient estimate per working period, updates by projected minibatch SGD
// when the batch fills, and delegates to the transition solver whenever the
// target is infeasible. No update happens on a partial final batch.
class MetaPolicy : public Policy {
 public:
  // x1 must lie in the application's target set
  MetaPolicy(const Application& app, const Vec& x1, BatchSchedule schedule, double eta);

  Decision decide(const Vec& x) override;
  void observe(const Vec& y, const Vec& d, const Vec& obs) override;

  const Vec& target() const override { return w_; }
  const PolicyStats& stats() const override { return stats_; }
  long batch_index() const { return sgd_.tau(); }
  long buffer_size() const { return static_cast<long>(buffer_.size()); }

  // feasibility comparison tolerance for x <= w
  static constexpr double kFeasTol = 1e-9;

 private:
  const Application* app_;
  MinibatchSgd sgd_;  // iterate lives in update space
  Vec w_;             // target in physical space
  std::vector<Vec> buffer_;
  PeriodKind last_kind_ = PeriodKind::working;
  bool pending_update_ = false;
  PolicyStats stats_;
};

struct Trajectory {
  std::vector<Vec> x, y, d;
  std::vector<double> cost;
  std::vector<PeriodKind> kind;
  double total_cost = 0.0;
};

// Simulates T periods of the event sequence: observe inventory, decide the
// order-up-to level, realize demand, pay the period cost, transition.
// Contract violations (y < x, y outside the set, x' > y) abort with an error.
// An empty x1 means a zero initial inventory.
Trajectory run_episode(const Application& app, Policy& policy, long T, RandomStream& stream,
                       Vec x1 = {}, bool record = true);

}  // namespace invlearn
