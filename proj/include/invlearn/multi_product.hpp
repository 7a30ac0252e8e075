#pragma once

#include "invlearn/application.hpp"
#include "invlearn/constraint_set.hpp"

namespace invlearn {

// n products under linear resource constraints, lost sales, censored demand.
// Per-period cost h.(y-d)^+ + b.(d-y)^+; only sales min(d, y) are observed.
class MultiProductInstance : public Application {
 public:
  MultiProductInstance(Vec holding, Vec lost_sales, ConstraintSet set, DemandModel demand);

  int state_dim() const override { return n_; }
  const DemandModel& demand() const override { return demand_; }
  const ConvexSet& target_set() const override { return set_; }
  const ConstraintSet& constraint_set() const { return set_; }

  double cost(const Vec& y, const Vec& d) const override;
  Vec dynamics(const Vec& y, const Vec& d) const override;
  // censored sales s = min(d, y)
  Vec observation(const Vec& y, const Vec& d) const override;
  // h_i when s_i < y_i, -b_i when s_i >= y_i (the stockout test observable
  // from sales data; equals 1[y_i <= d_i] a.s. for continuous demand)
  Vec gradient(const Vec& y, const Vec& sales) const override;
  // Euclidean projection of w onto Gamma intersected with {y >= x}
  Vec transition_solver(const Vec& x, const Vec& w) const override;

  double sigma0() const override { return sigma0_; }
  // M = n + 6 n beta0 R
  double waiting_time_bound() const override;

  std::optional<std::pair<Vec, Vec>> separable_costs() const override {
    return std::make_pair(h_, b_);
  }
  TheoryConstants theory_constants() const override;

  const Vec& holding() const { return h_; }
  const Vec& lost_sales() const { return b_; }

 private:
  int n_;
  Vec h_, b_;
  ConstraintSet set_;
  DemandModel demand_;
  double sigma0_;
};

}  // namespace invlearn
