#include "invlearn/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace invlearn {

SgdPolicy::SgdPolicy(const Application& app, const Vec& x1, double eta, double p)
    : app_(&app), eta_(eta), p_(p) {
  if (eta <= 0.0) throw std::invalid_argument("SgdPolicy: eta must be positive");
  if (p != 0.5 && p != 1.0)
    throw std::invalid_argument("SgdPolicy: stepsize pattern p must be 0.5 or 1");
  if (!app.target_set().contains(x1, 1e-9))
    throw std::invalid_argument("SgdPolicy: initial inventory is infeasible");
  u_ = app.to_update(x1);
  if (!app.update_set().contains(u_, 1e-9)) u_ = app.update_set().project(u_);
  w_ = app.from_update(u_);
}

Decision SgdPolicy::decide(const Vec& x) {
  if (leq(x, w_, 1e-9)) return {w_, PeriodKind::working};
  Vec y = app_->transition_solver(x, w_);
  if (!leq(x, y, 1e-6) || !app_->target_set().contains(y, 1e-6))
    throw std::runtime_error("transition solver violated its contract (y >= x, y in Gamma)");
  return {std::move(y), PeriodKind::waiting};
}

void SgdPolicy::observe(const Vec& y, const Vec& /*d*/, const Vec& obs) {
  ++t_;
  if (leq(y, w_, 1e-9) && leq(w_, y, 1e-9))
    ++stats_.working_periods;
  else
    ++stats_.waiting_periods;
  const Vec g = app_->gradient(y, obs);
  const double step = eta_ / std::pow(static_cast<double>(t_), p_);
  Vec target(u_.size());
  for (std::size_t i = 0; i < u_.size(); ++i) target[i] = u_[i] - step * g[i];
  u_ = app_->update_set().project(target);
  w_ = app_->from_update(u_);
  ++stats_.updates;
  ++stats_.effective_updates;
}

QuantileTracker::QuantileTracker(double q) : q_(q) {
  if (!(q > 0.0 && q <= 1.0)) throw std::invalid_argument("QuantileTracker: q outside (0,1]");
}

void QuantileTracker::add(double x) {
  if (lo_.empty() || x <= lo_.top())
    lo_.push(x);
  else
    hi_.push(x);
  rebalance();
}

void QuantileTracker::rebalance() {
  const long m = size();
  long k = static_cast<long>(std::ceil(q_ * static_cast<double>(m) - 1e-12));
  if (k < 1) k = 1;
  while (static_cast<long>(lo_.size()) > k) {
    hi_.push(lo_.top());
    lo_.pop();
  }
  while (static_cast<long>(lo_.size()) < k) {
    lo_.push(hi_.top());
    hi_.pop();
  }
}

double QuantileTracker::value() const {
  if (lo_.empty()) throw std::logic_error("QuantileTracker: no observations");
  return lo_.top();
}

SaaPolicy::SaaPolicy(const Application& app, double critical_ratio, double initial_level)
    : app_(&app), tracker_(critical_ratio) {
  if (app.state_dim() != 1)
    throw std::invalid_argument("SaaPolicy: defined for scalar systems only");
  w_ = app.target_set().project({initial_level});
  prev_w_ = w_;
}

Decision SaaPolicy::decide(const Vec& x) {
  if (leq(x, w_, 1e-9)) return {w_, PeriodKind::working};
  Vec y = app_->transition_solver(x, w_);
  if (!leq(x, y, 1e-6) || !app_->target_set().contains(y, 1e-6))
    throw std::runtime_error("transition solver violated its contract (y >= x, y in Gamma)");
  return {std::move(y), PeriodKind::waiting};
}

void SaaPolicy::observe(const Vec& y, const Vec& d, const Vec& /*obs*/) {
  if (leq(y, w_, 1e-9) && leq(w_, y, 1e-9))
    ++stats_.working_periods;
  else
    ++stats_.waiting_periods;
  tracker_.add(d[0]);
  prev_w_ = w_;
  w_ = app_->target_set().project({tracker_.value()});
  if (w_[0] != prev_w_[0]) {
    ++stats_.updates;
    ++stats_.effective_updates;
  }
}

double SaaPolicy::empirical_quantile(std::vector<double> history, double q) {
  if (history.empty()) throw std::invalid_argument("empirical_quantile: empty history");
  const long m = static_cast<long>(history.size());
  long k = static_cast<long>(std::ceil(q * static_cast<double>(m) - 1e-12));
  if (k < 1) k = 1;
  std::nth_element(history.begin(), history.begin() + (k - 1), history.end());
  return history[k - 1];
}

}  // namespace invlearn
