#pragma once

#include <optional>
#include <utility>

#include "invlearn/convex.hpp"
#include "invlearn/demand.hpp"
#include "invlearn/schedule.hpp"
#include "invlearn/vec.hpp"

namespace invlearn {

// One inventory system: per-period cost, dynamics, censoring, a well-behaved
// gradient estimator, and a transition solver. Targets may be optimized in a
// transformed ("update") space; the identity for most systems.
class Application {
 public:
  virtual ~Application() = default;

  // dimension of inventory/order-up-to vectors
  virtual int state_dim() const = 0;
  virtual const DemandModel& demand() const = 0;

  // feasible order-up-to levels (physical space)
  virtual const ConvexSet& target_set() const = 0;
  // set the SGD update is projected onto; defaults to the physical set
  virtual const ConvexSet& update_set() const { return target_set(); }
  virtual Vec to_update(const Vec& w) const { return w; }
  virtual Vec from_update(const Vec& u) const { return u; }

  virtual double cost(const Vec& y, const Vec& d) const = 0;
  virtual Vec dynamics(const Vec& y, const Vec& d) const = 0;
  // what the firm actually records after the period (censored view)
  virtual Vec observation(const Vec& y, const Vec& d) const = 0;
  // single-sample gradient estimate, expressed in update space, evaluated at
  // the implemented level y
  virtual Vec gradient(const Vec& y, const Vec& obs) const = 0;
  // order-up-to level while the target w is infeasible; output >= x and in the
  // target set
  virtual Vec transition_solver(const Vec& x, const Vec& w) const = 0;

  // per-sample gradient norm bound (Definition of a well-behaved estimator)
  virtual double sigma0() const = 0;
  // expected-hitting-time bound M of the transition solver
  virtual double waiting_time_bound() const = 0;

  // convenience used by oracles: gradient from the uncensored demand
  Vec gradient_from_demand(const Vec& y, const Vec& d) const {
    return gradient(y, observation(y, d));
  }

  // {h, b} when the update-space objective separates into per-coordinate
  // newsvendor terms sum_i h_i (u_i - e_i)^+ + b_i (e_i - u_i)^+; the
  // benchmark oracle then works from sorted samples
  virtual std::optional<std::pair<Vec, Vec>> separable_costs() const { return std::nullopt; }
  // effective demand e seen by each update coordinate for a demand draw d
  virtual Vec update_demand(const Vec& d) const { return d; }

  // whatever problem constants are derivable from the instance
  virtual TheoryConstants theory_constants() const {
    TheoryConstants c;
    c.sigma0 = sigma0();
    c.sigma = sigma0();
    if (demand().has_density_upper()) c.beta0 = demand().density_upper();
    if (demand().density_lower()) c.alpha0 = *demand().density_lower();
    c.M = waiting_time_bound();
    return c;
  }
};

}  // namespace invlearn
