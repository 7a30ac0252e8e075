#include "invlearn/multi_product.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace invlearn {

MultiProductInstance::MultiProductInstance(Vec holding, Vec lost_sales, ConstraintSet set,
                                           DemandModel demand)
    : n_(set.dimension()),
      h_(std::move(holding)),
      b_(std::move(lost_sales)),
      set_(std::move(set)),
      demand_(std::move(demand)) {
  if (static_cast<int>(h_.size()) != n_ || static_cast<int>(b_.size()) != n_)
    throw std::invalid_argument("MultiProductInstance: cost vector dimension mismatch");
  if (demand_.dimension() != n_)
    throw std::invalid_argument("MultiProductInstance: demand dimension mismatch");
  for (int i = 0; i < n_; ++i)
    if (h_[i] <= 0.0 || b_[i] <= 0.0)
      throw std::invalid_argument("MultiProductInstance: h and b must be positive");
  sigma0_ = std::sqrt(dot(h_, h_) + dot(b_, b_));
}

double MultiProductInstance::cost(const Vec& y, const Vec& d) const {
  double c = 0.0;
  for (int i = 0; i < n_; ++i) {
    const double over = y[i] - d[i];
    c += over > 0.0 ? h_[i] * over : -b_[i] * over;
  }
  return c;
}

Vec MultiProductInstance::dynamics(const Vec& y, const Vec& d) const {
  Vec x(n_);
  for (int i = 0; i < n_; ++i) x[i] = std::max(0.0, y[i] - d[i]);
  return x;
}

Vec MultiProductInstance::observation(const Vec& y, const Vec& d) const {
  return cwise_min(d, y);
}

Vec MultiProductInstance::gradient(const Vec& y, const Vec& sales) const {
  Vec g(n_);
  for (int i = 0; i < n_; ++i) g[i] = sales[i] >= y[i] ? -b_[i] : h_[i];
  return g;
}

Vec MultiProductInstance::transition_solver(const Vec& x, const Vec& w) const {
  if (leq(x, w)) return w;
  return set_.with_floor(x).project(w);
}

double MultiProductInstance::waiting_time_bound() const {
  const double beta0 = demand_.density_upper();
  return n_ + 6.0 * n_ * beta0 * set_.diameter_bound();
}

TheoryConstants MultiProductInstance::theory_constants() const {
  TheoryConstants c = Application::theory_constants();
  c.R = set_.diameter_bound();
  c.G = sigma0_;
  if (c.beta0) {
    double mx = 0.0, mn = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_; ++i) {
      mx = std::max(mx, h_[i] + b_[i]);
      mn = std::min(mn, h_[i] + b_[i]);
    }
    c.beta = mx * *c.beta0;
    if (c.alpha0) c.alpha = mn * *c.alpha0;
  }
  return c;
}

}  // namespace invlearn
