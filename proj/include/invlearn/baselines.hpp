#pragma once

#include <queue>
#include <vector>

#include "invlearn/application.hpp"
#include "invlearn/meta_policy.hpp"
#include "invlearn/vec.hpp"

namespace invlearn {

// Plain projected SGD with stepsize eta / t^p, p in {0.5, 1}. Updates the
// target every period from the gradient at the implemented level; infeasible
// targets fall back on the application's transition solver.
class SgdPolicy : public Policy {
 public:
  SgdPolicy(const Application& app, const Vec& x1, double eta, double p);

  Decision decide(const Vec& x) override;
  void observe(const Vec& y, const Vec& d, const Vec& obs) override;
  const Vec& target() const override { return w_; }
  const PolicyStats& stats() const override { return stats_; }
  long period() const { return t_; }

 private:
  const Application* app_;
  double eta_, p_;
  Vec u_;  // target in update space
  Vec w_;
  long t_ = 0;  // completed periods
  PolicyStats stats_;
};

// Streaming order statistic: the k-th smallest of the values seen so far,
// with k following ceil(q * m) as m grows. Two-heap construction, O(log m)
// per insertion.
class QuantileTracker {
 public:
  explicit QuantileTracker(double q);
  void add(double x);
  long size() const { return static_cast<long>(lo_.size() + hi_.size()); }
  // the ceil(q*m)-th order statistic; requires size() >= 1
  double value() const;

 private:
  void rebalance();
  double q_;
  std::priority_queue<double> lo_;  // max-heap with the k smallest
  std::priority_queue<double, std::vector<double>, std::greater<double>> hi_;
};

// SAA newsvendor policy for scalar systems: orders up to the empirical
// b/(b+h) quantile of the uncensored demand history.
class SaaPolicy : public Policy {
 public:
  // critical_ratio = b / (b + h); initial_level is used until data arrives
  SaaPolicy(const Application& app, double critical_ratio, double initial_level = 0.0);

  Decision decide(const Vec& x) override;
  void observe(const Vec& y, const Vec& d, const Vec& obs) override;
  const Vec& target() const override { return w_; }
  const PolicyStats& stats() const override { return stats_; }

  // ceil(q*m)-th order statistic of a history (reference definition)
  static double empirical_quantile(std::vector<double> history, double q);

 private:
  const Application* app_;
  QuantileTracker tracker_;
  Vec w_;
  Vec prev_w_;
  PolicyStats stats_;
};

}  // namespace invlearn
