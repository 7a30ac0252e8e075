#pragma once

#include "invlearn/application.hpp"
#include "invlearn/constraint_set.hpp"
#include "invlearn/convex.hpp"

namespace invlearn {

// Image of the box [0, rho] under the prefix-sum transform: vectors with
// nondecreasing increments q_i = v_i - v_{i-1} in [0, rho_i]. Projection runs
// Dykstra over the 2n increment halfspaces.
class ChainBoxSet : public ConvexSet {
 public:
  explicit ChainBoxSet(Vec rho);
  int dimension() const override { return static_cast<int>(rho_.size()); }
  Vec project(const Vec& p) const override;
  bool contains(const Vec& p, double tol) const override;
  double diameter_bound() const;

 private:
  Vec rho_;
};

// n serially arranged stages facing one demand stream: stage 1 sells, higher
// stages replenish lower ones at transport fares b_1..b_{n-1}, leftovers of
// demand are lost at rate b_1+...+b_n. Capacities rho bound each stage. The
// target is learned in the transformed space ytilde = prefix sums of y, where
// the cost separates into per-prefix newsvendor terms.
class MultiEchelonInstance : public Application {
 public:
  MultiEchelonInstance(Vec holding_increments, Vec fares, Vec capacities, DemandModel demand);

  int state_dim() const override { return n_; }
  const DemandModel& demand() const override { return demand_; }
  const ConvexSet& target_set() const override { return box_; }
  const ConvexSet& update_set() const override { return chain_; }
  Vec to_update(const Vec& w) const override { return transform(w); }
  Vec from_update(const Vec& u) const override { return inverse_transform(u); }

  static Vec transform(const Vec& y) { return prefix_sum(y); }
  // first differences; rejects a decreasing input
  static Vec inverse_transform(const Vec& ytilde);

  // the term-by-term holding + transportation + lost-sales expression
  double cost_detailed(const Vec& y, double d) const;
  // equivalent separable form over prefix sums
  double cost_simplified(const Vec& y, double d) const;
  double cost(const Vec& y, const Vec& d) const override {
    return cost_simplified(y, d[0]);
  }

  Vec dynamics(const Vec& y, const Vec& d) const override;
  // total sales s = min(d, y_1 + ... + y_n), a single scalar
  Vec observation(const Vec& y, const Vec& d) const override;
  Vec gradient(const Vec& y, const Vec& obs) const override;
  // estimator in the transformed space from the censored total sales
  Vec gradient_tilde(const Vec& ytilde, double total_sales) const;
  // freeze stages 1..i* at their current stock, where i* is the highest stage
  // with an infeasible target; keep the target above it
  Vec transition_solver(const Vec& x, const Vec& w) const override;

  double sigma0() const override { return sigma0_; }
  // M = 1 + 6 beta0 sum_i rho_i
  double waiting_time_bound() const override;

  std::optional<std::pair<Vec, Vec>> separable_costs() const override {
    return std::make_pair(h_, b_);
  }
  Vec update_demand(const Vec& d) const override { return Vec(n_, d[0]); }
  TheoryConstants theory_constants() const override;

  const Vec& holding() const { return h_; }
  const Vec& fares() const { return b_; }
  const Vec& capacities() const { return rho_; }

 private:
  int n_;
  Vec h_, b_, rho_;
  DemandModel demand_;
  ConstraintSet box_;
  ChainBoxSet chain_;
  double sigma0_;
};

}  // namespace invlearn
