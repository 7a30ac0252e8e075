#include "invlearn/meta_policy.hpp"

#include <cmath>
#include <stdexcept>

namespace invlearn {

MetaPolicy::MetaPolicy(const Application& app, const Vec& x1, BatchSchedule schedule,
                       double eta)
    : app_(&app),
      sgd_(app.to_update(x1), app.update_set(), schedule, eta),
      w_(app.from_update(sgd_.iterate())) {
  if (!app.target_set().contains(x1, kFeasTol))
    throw std::invalid_argument("MetaPolicy: initial inventory is infeasible");
}

Decision MetaPolicy::decide(const Vec& x) {
  if (pending_update_) {
    ++stats_.effective_updates;
    pending_update_ = false;
  }
  if (leq(x, w_, kFeasTol)) {
    last_kind_ = PeriodKind::working;
    return {w_, PeriodKind::working};
  }
  last_kind_ = PeriodKind::waiting;
  Vec y = app_->transition_solver(x, w_);
  if (!leq(x, y, 1e-6) || !app_->target_set().contains(y, 1e-6))
    throw std::runtime_error("transition solver violated its contract (y >= x, y in Gamma)");
  return {std::move(y), PeriodKind::waiting};
}

void MetaPolicy::observe(const Vec& y, const Vec& /*d*/, const Vec& obs) {
  if (last_kind_ == PeriodKind::waiting) {
    ++stats_.waiting_periods;
    return;  // no gradient in waiting periods; target unchanged
  }
  ++stats_.working_periods;
  Vec g = app_->gradient(y, obs);
  const double bound = app_->sigma0();
  if (norm2(g) > bound * (1.0 + 1e-9) + 1e-9)
    throw std::runtime_error("gradient estimator violated its norm bound sigma0");
  buffer_.push_back(std::move(g));
  if (static_cast<long>(buffer_.size()) == sgd_.current_batch_size()) {
    sgd_.step(buffer_);
    w_ = app_->from_update(sgd_.iterate());
    buffer_.clear();
    ++stats_.updates;
    pending_update_ = true;
  }
}

Trajectory run_episode(const Application& app, Policy& policy, long T, RandomStream& stream,
                       Vec x1, bool record) {
  if (T < 1) throw std::invalid_argument("run_episode: T must be >= 1");
  const int n = app.state_dim();
  Vec x = x1.empty() ? Vec(n, 0.0) : std::move(x1);
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("run_episode: x1 has the wrong dimension");
  Trajectory traj;
  if (record) {
    traj.x.reserve(T);
    traj.y.reserve(T);
    traj.d.reserve(T);
    traj.cost.reserve(T);
    traj.kind.reserve(T);
  }
  for (long t = 0; t < T; ++t) {
    Decision dec = policy.decide(x);
    if (!leq(x, dec.y, 1e-6) || !app.target_set().contains(dec.y, 1e-6))
      throw std::runtime_error("run_episode: implemented level violates y >= x or Gamma");
    const Vec d = app.demand().sample(stream);
    const double c = app.cost(dec.y, d);
    const Vec obs = app.observation(dec.y, d);
    Vec xn = app.dynamics(dec.y, d);
    if (!leq(xn, dec.y, 1e-6))
      throw std::runtime_error("run_episode: dynamics produced x' > y");
    policy.observe(dec.y, d, obs);
    traj.total_cost += c;
    if (record) {
      traj.x.push_back(x);
      traj.y.push_back(dec.y);
      traj.d.push_back(d);
      traj.cost.push_back(c);
      traj.kind.push_back(dec.kind);
    }
    x = std::move(xn);
  }
  return traj;
}

}  // namespace invlearn
