#pragma once

#include <string>
#include <vector>

#include "invlearn/application.hpp"
#include "invlearn/constraint_set.hpp"
#include "invlearn/simplex.hpp"

namespace invlearn {

// Outcome of the second-stage delivery program, solved greedily in descending
// b_i - c_i order. Indexed by store (1..n mapped to 0..n-1).
struct DeliveryOutcome {
  Vec s;        // warehouse remainder after serving the k-th store in priority order
  Vec z;        // deliveries
  Vec o;        // store leftovers (y_i - d_i)^+
  Vec l;        // unsatisfied demand
  double cost;  // c.z + h0 s_n + sum(h_i o_i + b_i l_i)
  double warehouse_left() const { return s.empty() ? 0.0 : s.back(); }
};

// One warehouse (installation 0) and n stores with two-stage decisions: pick
// order-up-to levels, observe demand, then deliver from the warehouse to the
// stores by solving the delivery program. Demand is fully observed here; the
// censoring acts through lost sales only.
class OwmsInstance : public Application {
 public:
  // holding has n+1 entries (warehouse first), lost_sales and fares have n
  OwmsInstance(Vec holding, Vec lost_sales, Vec fares, Vec capacities, DemandModel demand,
               bool halt_most_beneficial_store = false);

  int state_dim() const override { return n_ + 1; }
  int stores() const { return n_; }
  const DemandModel& demand() const override { return demand_; }
  const ConvexSet& target_set() const override { return box_; }

  DeliveryOutcome greedy_delivery(const Vec& y, const Vec& d) const;
  double cost(const Vec& y, const Vec& d) const override;
  Vec dynamics(const Vec& y, const Vec& d) const override;
  Vec observation(const Vec& /*y*/, const Vec& d) const override { return d; }
  // exact gradient of the delivery cost at differentiability points
  // (right-derivative convention at kinks), derived from the greedy structure
  Vec gradient(const Vec& y, const Vec& d) const override;
  // keep y >= x everywhere except, when the warehouse target is infeasible,
  // the halted store i* (argmin b-c by default, argmax when configured)
  Vec transition_solver(const Vec& x, const Vec& w) const override;

  // exact LP value and a dual optimum of the standard-form program; the
  // gradient of record is -H^T pi*
  LpSolution lp_oracle(const Vec& y, const Vec& d) const;
  Vec lp_gradient(const Vec& y, const Vec& d) const;

  double sigma0() const override { return sigma0_; }
  // M = n + 6 beta0 sum_{i=0..n} rho_i
  double waiting_time_bound() const override;
  // beta = (n+4)^2 beta0 (h0 + sum(h_i + b_i + c_i))
  TheoryConstants theory_constants() const override;

  const Vec& holding() const { return h_; }
  const Vec& lost_sales() const { return b_; }
  const Vec& fares() const { return c_; }
  const Vec& capacities() const { return rho_; }
  const std::vector<int>& priority() const { return priority_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  int n_;
  Vec h_, b_, c_, rho_;
  DemandModel demand_;
  ConstraintSet box_;
  std::vector<int> priority_;  // store indices sorted by b-c descending
  bool halt_argmax_ = false;
  double sigma0_;
  std::vector<std::string> warnings_;
};

}  // namespace invlearn
