#include "invlearn/multi_echelon.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace invlearn {

ChainBoxSet::ChainBoxSet(Vec rho) : rho_(std::move(rho)) {
  if (rho_.empty()) throw std::invalid_argument("ChainBoxSet: empty capacity vector");
  for (double r : rho_)
    if (r < 0.0) throw std::invalid_argument("ChainBoxSet: capacities must be >= 0");
}

bool ChainBoxSet::contains(const Vec& p, double tol) const {
  double prev = 0.0;
  for (std::size_t i = 0; i < rho_.size(); ++i) {
    const double q = p[i] - prev;
    if (q < -tol || q > rho_[i] + tol) return false;
    prev = p[i];
  }
  return true;
}

Vec ChainBoxSet::project(const Vec& p) const {
  const int n = dimension();
  if (static_cast<int>(p.size()) != n)
    throw std::invalid_argument("ChainBoxSet::project: wrong dimension");
  if (contains(p, 0.0)) return p;
  // each increment bound 0 <= v_i - v_{i-1} <= rho_i is a pair of halfspaces;
  // projecting onto one changes only coordinates i-1 and i
  std::vector<Projector> sets;
  sets.reserve(2 * n);
  for (int i = 0; i < n; ++i) {
    sets.push_back([i](Vec& v) {  // v_i - v_{i-1} >= 0
      const double prev = i > 0 ? v[i - 1] : 0.0;
      const double q = v[i] - prev;
      if (q < 0.0) {
        if (i > 0) {
          const double c = 0.5 * q;
          v[i] -= c;
          v[i - 1] += c;
        } else {
          v[0] = 0.0;
        }
      }
    });
    const double cap = rho_[i];
    sets.push_back([i, cap](Vec& v) {  // v_i - v_{i-1} <= rho_i
      const double prev = i > 0 ? v[i - 1] : 0.0;
      const double q = v[i] - prev;
      if (q > cap) {
        if (i > 0) {
          const double c = 0.5 * (q - cap);
          v[i] -= c;
          v[i - 1] += c;
        } else {
          v[0] = cap;
        }
      }
    });
  }
  return dykstra_project(p, sets);
}

double ChainBoxSet::diameter_bound() const {
  double s = 0.0, prefix = 0.0;
  for (double r : rho_) {
    prefix += r;
    s += prefix * prefix;
  }
  return 2.0 * std::sqrt(s);
}

MultiEchelonInstance::MultiEchelonInstance(Vec holding_increments, Vec fares, Vec capacities,
                                           DemandModel demand)
    : n_(static_cast<int>(capacities.size())),
      h_(std::move(holding_increments)),
      b_(std::move(fares)),
      rho_(capacities),
      demand_(std::move(demand)),
      box_(ConstraintSet::box(capacities)),
      chain_(std::move(capacities)) {
  if (static_cast<int>(h_.size()) != n_ || static_cast<int>(b_.size()) != n_)
    throw std::invalid_argument("MultiEchelonInstance: cost vector dimension mismatch");
  if (demand_.dimension() != 1)
    throw std::invalid_argument("MultiEchelonInstance: demand must be scalar");
  for (int i = 0; i < n_; ++i)
    if (h_[i] <= 0.0 || b_[i] <= 0.0)
      throw std::invalid_argument("MultiEchelonInstance: h and b must be positive");
  sigma0_ = std::sqrt(dot(h_, h_) + dot(b_, b_));
}

Vec MultiEchelonInstance::inverse_transform(const Vec& ytilde) {
  Vec y(ytilde.size());
  double prev = 0.0;
  for (std::size_t i = 0; i < ytilde.size(); ++i) {
    const double q = ytilde[i] - prev;
    if (q < -1e-9)
      throw std::invalid_argument("inverse_transform: input is decreasing");
    y[i] = q > 0.0 ? q : 0.0;
    prev = ytilde[i];
  }
  return y;
}

double MultiEchelonInstance::cost_detailed(const Vec& y, double d) const {
  // holding per stage, transport between consecutive stages, then lost sales
  double total = 0.0;
  double prefix = 0.0;        // y_1 + ... + y_{i-1}
  double suffix = sum(y);     // y_i + ... + y_n
  double htail = sum(h_);     // h_i + ... + h_n
  for (int i = 0; i < n_; ++i) {
    suffix -= y[i];
    const double shifted = std::max(0.0, d - prefix);        // demand reaching stage i
    const double onhand = std::max(0.0, y[i] - shifted);     // leftover at stage i
    total += htail * onhand;
    prefix += y[i];
    if (i < n_ - 1) total += b_[i] * std::min(suffix, std::max(0.0, d - prefix));
    htail -= h_[i];
  }
  total += sum(b_) * std::max(0.0, d - prefix);
  return total;
}

double MultiEchelonInstance::cost_simplified(const Vec& y, double d) const {
  double total = 0.0, prefix = 0.0;
  for (int i = 0; i < n_; ++i) {
    prefix += y[i];
    const double over = prefix - d;
    total += over > 0.0 ? h_[i] * over : -b_[i] * over;
  }
  return total;
}

Vec MultiEchelonInstance::dynamics(const Vec& y, const Vec& d) const {
  Vec x(n_);
  double prefix = 0.0;
  for (int i = 0; i < n_; ++i) {
    const double shifted = std::max(0.0, d[0] - prefix);
    x[i] = std::max(0.0, y[i] - shifted);
    prefix += y[i];
  }
  return x;
}

Vec MultiEchelonInstance::observation(const Vec& y, const Vec& d) const {
  return {std::min(d[0], sum(y))};
}

Vec MultiEchelonInstance::gradient_tilde(const Vec& ytilde, double total_sales) const {
  Vec g(n_);
  for (int i = 0; i < n_; ++i)
    g[i] = total_sales >= ytilde[i] ? -b_[i] : h_[i];
  return g;
}

Vec MultiEchelonInstance::gradient(const Vec& y, const Vec& obs) const {
  return gradient_tilde(transform(y), obs[0]);
}

Vec MultiEchelonInstance::transition_solver(const Vec& x, const Vec& w) const {
  int istar = -1;
  for (int i = 0; i < n_; ++i)
    if (w[i] < x[i]) istar = i;
  if (istar < 0) return w;
  Vec y(n_);
  for (int i = 0; i < n_; ++i) y[i] = i <= istar ? x[i] : w[i];
  return y;
}

double MultiEchelonInstance::waiting_time_bound() const {
  return 1.0 + 6.0 * demand_.density_upper() * sum(rho_);
}

TheoryConstants MultiEchelonInstance::theory_constants() const {
  TheoryConstants c = Application::theory_constants();
  c.R = chain_.diameter_bound();
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
