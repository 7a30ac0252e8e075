#include "invlearn/constraint_set.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace invlearn {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

ConstraintSet::ConstraintSet(int dimension, Vec lower, std::optional<Vec> upper,
                             std::vector<Halfspace> halfspaces)
    : n_(dimension),
      lower_(std::move(lower)),
      upper_(std::move(upper)),
      halfspaces_(std::move(halfspaces)) {
  if (n_ < 1) throw std::invalid_argument("ConstraintSet: dimension must be >= 1");
  if (static_cast<int>(lower_.size()) != n_)
    throw std::invalid_argument("ConstraintSet: lower bound has wrong dimension");
  if (upper_) {
    if (static_cast<int>(upper_->size()) != n_)
      throw std::invalid_argument("ConstraintSet: upper bound has wrong dimension");
    for (int i = 0; i < n_; ++i)
      if ((*upper_)[i] < lower_[i])
        throw std::invalid_argument("ConstraintSet: upper < lower");
  }
  for (const auto& h : halfspaces_) {
    if (static_cast<int>(h.a.size()) != n_)
      throw std::invalid_argument("ConstraintSet: halfspace has wrong dimension");
    if (h.rhs < 0.0) throw std::invalid_argument("ConstraintSet: halfspace rhs must be >= 0");
    double norm = 0.0;
    for (double c : h.a) {
      if (c < 0.0)
        throw std::invalid_argument("ConstraintSet: halfspace coefficients must be >= 0");
      norm += c * c;
    }
    if (norm == 0.0) throw std::invalid_argument("ConstraintSet: zero halfspace");
    // the default lower corner must stay feasible
    if (dot(h.a, lower_) > h.rhs + 1e-12)
      throw std::invalid_argument("ConstraintSet: lower corner violates a halfspace");
  }
  // per-coordinate caps from the box and from each halfspace with a_j > 0
  implied_upper_.assign(n_, kInf);
  for (int j = 0; j < n_; ++j) {
    if (upper_) implied_upper_[j] = (*upper_)[j];
    for (const auto& h : halfspaces_)
      if (h.a[j] > 0.0) implied_upper_[j] = std::min(implied_upper_[j], h.rhs / h.a[j]);
    if (!std::isfinite(implied_upper_[j]))
      throw std::invalid_argument("ConstraintSet: coordinate " + std::to_string(j) +
                                  " is unbounded");
  }
}

ConstraintSet ConstraintSet::box(Vec upper) {
  const int n = static_cast<int>(upper.size());
  return ConstraintSet(n, Vec(n, 0.0), std::move(upper), {});
}

ConstraintSet ConstraintSet::polyhedron(int dimension, const std::vector<double>& A,
                                        const Vec& rho) {
  const int m = static_cast<int>(rho.size());
  if (static_cast<int>(A.size()) != m * dimension)
    throw std::invalid_argument("polyhedron: matrix size mismatch");
  std::vector<Halfspace> hs;
  hs.reserve(m);
  for (int i = 0; i < m; ++i) {
    Vec a(A.begin() + i * dimension, A.begin() + (i + 1) * dimension);
    hs.push_back({std::move(a), rho[i]});
  }
  return ConstraintSet(dimension, Vec(dimension, 0.0), std::nullopt, std::move(hs));
}

bool ConstraintSet::contains(const Vec& p, double tol) const {
  for (int i = 0; i < n_; ++i) {
    if (p[i] < lower_[i] - tol) return false;
    if (upper_ && p[i] > (*upper_)[i] + tol) return false;
  }
  for (const auto& h : halfspaces_)
    if (dot(h.a, p) > h.rhs + tol) return false;
  return true;
}

Vec ConstraintSet::project(const Vec& p) const {
  if (static_cast<int>(p.size()) != n_)
    throw std::invalid_argument("project: wrong dimension");
  // pure box: clamping is exact
  auto clamp_box = [this](Vec& x) {
    for (int i = 0; i < n_; ++i) {
      if (x[i] < lower_[i]) x[i] = lower_[i];
      if (upper_ && x[i] > (*upper_)[i]) x[i] = (*upper_)[i];
    }
  };
  if (halfspaces_.empty()) {
    Vec x = p;
    clamp_box(x);
    return x;
  }
  std::vector<Projector> sets;
  sets.push_back(clamp_box);
  for (const auto& h : halfspaces_) {
    const double nrm2 = dot(h.a, h.a);
    sets.push_back([&h, nrm2](Vec& x) {
      const double v = dot(h.a, x);
      if (v > h.rhs) {
        const double c = (v - h.rhs) / nrm2;
        for (std::size_t i = 0; i < x.size(); ++i) x[i] -= c * h.a[i];
      }
    });
  }
  return dykstra_project(p, sets);
}

double ConstraintSet::diameter_bound() const {
  double s = 0.0;
  for (int j = 0; j < n_; ++j) s += implied_upper_[j] * implied_upper_[j];
  return 2.0 * std::sqrt(s);
}

ConstraintSet ConstraintSet::with_floor(const Vec& floor) const {
  if (static_cast<int>(floor.size()) != n_)
    throw std::invalid_argument("with_floor: wrong dimension");
  Vec lo = cwise_max(lower_, floor);
  ConstraintSet out = *this;
  out.lower_ = std::move(lo);
  // the raised floor may break the lower-corner feasibility invariant checked
  // by the constructor; callers use this only when a feasible point >= floor
  // exists (x in Gamma implies A x <= rho for nonnegative A)
  if (out.upper_) {
    for (int i = 0; i < n_; ++i)
      if ((*out.upper_)[i] < out.lower_[i]) (*out.upper_)[i] = out.lower_[i];
  }
  return out;
}

}  // namespace invlearn
