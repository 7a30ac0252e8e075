#pragma once

#include <vector>

#include "invlearn/convex.hpp"
#include "invlearn/schedule.hpp"
#include "invlearn/vec.hpp"

namespace invlearn {

// Projected minibatch SGD: w' = Pi_Gamma[w - (eta/n_tau) * sum(gradients)].
// The iterate stays inside the feasible set after every step.
class MinibatchSgd {
 public:
  MinibatchSgd(Vec w0, const ConvexSet& set, BatchSchedule schedule, double eta);

  const Vec& iterate() const { return w_; }
  long tau() const { return tau_; }
  double eta() const { return eta_; }
  const BatchSchedule& schedule() const { return schedule_; }
  // batch size of the batch currently being filled
  long current_batch_size() const { return schedule_.batch_size(tau_); }

  // consumes exactly one batch of gradients; rejects a length mismatch
  void step(const std::vector<Vec>& gradients);

 private:
  Vec w_;
  const ConvexSet* set_;
  BatchSchedule schedule_;
  double eta_;
  long tau_ = 1;
};

}  // namespace invlearn
