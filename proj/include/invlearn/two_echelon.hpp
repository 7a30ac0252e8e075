#pragma once

#include <vector>

#include "invlearn/demand.hpp"
#include "invlearn/rng.hpp"
#include "invlearn/vec.hpp"

namespace invlearn {

// Central planner for a two-echelon chain: Agent 1 (retailer) holds h1 and
// pays p1 per lost unit, Agent 2 (supplier) holds h2. The retailer's
// achievable level in a period is s1 - (d_prev - s2)^+ (the supplier shortfall
// passes downstream). Decisions stay constant within doubling epochs; each
// epoch boundary recomputes s1 by SAA on the first half of the epoch's data
// and s2 by minibatch SGD on the second half.
struct TwoEchelonParams {
  double h1 = 2.0;
  double h2 = 1.0;
  double p1 = 50.0;
  double s_max = 0.0;   // cap for the supplier decision (configured, not derived)
  double C1 = 1.0;      // regularization constant in the SGD gradient
  double dbar = 0.0;    // demand upper bound used by the same term
  double eta = 0.1;     // SGD stepsize
  long K = 1;           // linear batch sizes n_tau = K tau
  double s1_init = 0.0;
  double s2_init = 0.0;
};

struct EpochRecord {
  long index = 0;
  long length = 0;
  double s1 = 0.0;
  double s2 = 0.0;
  double cost = 0.0;  // cost incurred during the epoch
};

struct PlannerResult {
  std::vector<EpochRecord> epochs;
  std::vector<double> period_cost;
  double total_cost = 0.0;
};

// per-period cost given current demand d and the previous period's demand
double two_echelon_period_cost(const TwoEchelonParams& p, double s1, double s2, double d_prev,
                               double d);

// One epoch of length L (even): SAA quantile (h2+p1)/(h1+p1) on the first
// half, clamped minibatch SGD over the second half, returning the averaged
// iterate. T is the full horizon (enters the regularization term).
std::pair<double, double> epoch_optimize(const std::vector<double>& data,
                                         const TwoEchelonParams& p, long T,
                                         double s2_start);

// Runs epochs of lengths 2, 4, 8, ... (the last truncated at T).
PlannerResult planner_run(const TwoEchelonParams& p, const DemandModel& demand, long T,
                          RandomStream& stream);

}  // namespace invlearn
