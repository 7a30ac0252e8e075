#include "invlearn/owms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace invlearn {

OwmsInstance::OwmsInstance(Vec holding, Vec lost_sales, Vec fares, Vec capacities,
                           DemandModel demand, bool halt_most_beneficial_store)
    : n_(static_cast<int>(lost_sales.size())),
      h_(std::move(holding)),
      b_(std::move(lost_sales)),
      c_(std::move(fares)),
      rho_(std::move(capacities)),
      demand_(std::move(demand)),
      box_(ConstraintSet::box(rho_)),
      halt_argmax_(halt_most_beneficial_store) {
  if (static_cast<int>(h_.size()) != n_ + 1)
    throw std::invalid_argument("OwmsInstance: holding needs n+1 entries");
  if (static_cast<int>(c_.size()) != n_ || static_cast<int>(rho_.size()) != n_ + 1)
    throw std::invalid_argument("OwmsInstance: dimension mismatch");
  if (demand_.dimension() != n_)
    throw std::invalid_argument("OwmsInstance: demand dimension must equal store count");
  for (int i = 0; i <= n_; ++i)
    if (h_[i] <= 0.0) throw std::invalid_argument("OwmsInstance: holding costs must be positive");
  double min_c_plus_h = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_; ++i) {
    if (b_[i] <= 0.0 || c_[i] <= 0.0)
      throw std::invalid_argument("OwmsInstance: b and c must be positive");
    if (b_[i] <= c_[i])
      warnings_.push_back("store " + std::to_string(i + 1) +
                          " has b <= c; deliveries are never worthwhile there");
    min_c_plus_h = std::min(min_c_plus_h, c_[i] + h_[i + 1]);
  }
  if (h_[0] > min_c_plus_h)
    warnings_.push_back(
        "warehouse holding exceeds min(c_i + h_i); the greedy delivery (which never "
        "sends stock beyond demand) is then not the LP optimum");
  priority_.resize(n_);
  std::iota(priority_.begin(), priority_.end(), 0);
  std::stable_sort(priority_.begin(), priority_.end(),
                   [this](int a, int b) { return b_[a] - c_[a] > b_[b] - c_[b]; });
  double sb = 0.0, ss = 0.0;
  for (int i = 0; i < n_; ++i) {
    sb += b_[i];
    ss += (h_[i + 1] + b_[i]) * (h_[i + 1] + b_[i]);
  }
  sigma0_ = std::sqrt((h_[0] + sb) * (h_[0] + sb) + ss);
}

DeliveryOutcome OwmsInstance::greedy_delivery(const Vec& y, const Vec& d) const {
  DeliveryOutcome out;
  out.s.resize(n_);
  out.z.assign(n_, 0.0);
  out.o.resize(n_);
  out.l.resize(n_);
  double stock = y[0];
  for (int k = 0; k < n_; ++k) {
    const int i = priority_[k];
    const double need = std::max(0.0, d[i] - y[i + 1]);
    const double give = std::min(need, stock);
    out.z[i] = give;
    stock -= give;
    out.s[k] = stock;
    out.l[i] = need - give;
    out.o[i] = std::max(0.0, y[i + 1] - d[i]);
  }
  out.cost = h_[0] * stock;
  for (int i = 0; i < n_; ++i)
    out.cost += c_[i] * out.z[i] + h_[i + 1] * out.o[i] + b_[i] * out.l[i];
  return out;
}

double OwmsInstance::cost(const Vec& y, const Vec& d) const {
  return greedy_delivery(y, d).cost;
}

Vec OwmsInstance::dynamics(const Vec& y, const Vec& d) const {
  const DeliveryOutcome out = greedy_delivery(y, d);
  Vec x(n_ + 1);
  x[0] = out.warehouse_left();
  for (int i = 0; i < n_; ++i) x[i + 1] = std::max(0.0, y[i + 1] + out.z[i] - d[i]);
  return x;
}

Vec OwmsInstance::gradient(const Vec& y, const Vec& d) const {
  const DeliveryOutcome out = greedy_delivery(y, d);
  const double left = out.warehouse_left();
  // highest-priority store left short, if any
  int jshort = -1;
  for (int k = 0; k < n_ && jshort < 0; ++k)
    if (out.l[priority_[k]] > 0.0) jshort = priority_[k];

  Vec g(n_ + 1);
  // an extra warehouse unit either sits (holding) or serves the best short store
  g[0] = (left > 0.0 || jshort < 0) ? h_[0] : -(b_[jshort] - c_[jshort]);

  for (int i = 0; i < n_; ++i) {
    if (d[i] <= y[i + 1]) {
      g[i + 1] = h_[i + 1];
    } else if (out.l[i] > 0.0) {
      g[i + 1] = -b_[i];
    } else if (left > 0.0) {
      // fully served via delivery; an extra store unit keeps one unit at the
      // warehouse instead
      g[i + 1] = h_[0] - c_[i];
    } else {
      // the freed warehouse unit flows on to the best short store, if any
      g[i + 1] = jshort >= 0 ? c_[jshort] - b_[jshort] - c_[i] : h_[0] - c_[i];
    }
  }
  return g;
}

Vec OwmsInstance::transition_solver(const Vec& x, const Vec& w) const {
  Vec y = cwise_max(x, w);
  if (x[0] <= w[0]) return y;
  int istar = 0;
  for (int i = 1; i < n_; ++i) {
    const double margin = b_[i] - c_[i];
    const double best = b_[istar] - c_[istar];
    if (halt_argmax_ ? margin > best : margin < best) istar = i;
  }
  y[istar + 1] = x[istar + 1];
  return y;
}

LpSolution OwmsInstance::lp_oracle(const Vec& y, const Vec& d) const {
  // Standard form W z' = d' - H y over
  //   z' = (z_1..z_n, z0^(1)..zn^(1), z1^(2)..zn^(2), z0^(3), z0^(4),
  //         z1^(4)..zn^(4), z1^(5)..zn^(5)),
  // rows exactly as the slack construction lays them out:
  //   -sum z - z0^(3)                = -y0
  //   -sum z - z0^(1) + z0^(4)       = -y0
  //    z_i - z_i^(1) + z_i^(4)       = d_i - y_i
  //    z_i + z_i^(2) - z_i^(5)       = d_i - y_i
  const int n = n_;
  const int off_z1 = n;           // z0^(1)..zn^(1)
  const int off_z2 = 2 * n + 1;   // z1^(2)..zn^(2)
  const int z03 = 3 * n + 1;
  const int z04 = 3 * n + 2;
  const int off_z4 = 3 * n + 3;   // z1^(4)..zn^(4)
  const int off_z5 = 4 * n + 3;   // z1^(5)..zn^(5)
  const int cols = 5 * n + 3;
  const int rows = 2 * n + 2;

  std::vector<Vec> A(rows, Vec(cols, 0.0));
  Vec rhs(rows, 0.0), cost(cols, 0.0);
  for (int i = 0; i < n; ++i) {
    A[0][i] = -1.0;
    A[1][i] = -1.0;
  }
  A[0][z03] = -1.0;
  A[1][off_z1] = -1.0;
  A[1][z04] = 1.0;
  rhs[0] = -y[0];
  rhs[1] = -y[0];
  for (int i = 0; i < n; ++i) {
    A[2 + i][i] = 1.0;
    A[2 + i][off_z1 + 1 + i] = -1.0;
    A[2 + i][off_z4 + i] = 1.0;
    rhs[2 + i] = d[i] - y[i + 1];
    A[2 + n + i][i] = 1.0;
    A[2 + n + i][off_z2 + i] = 1.0;
    A[2 + n + i][off_z5 + i] = -1.0;
    rhs[2 + n + i] = d[i] - y[i + 1];
  }
  for (int i = 0; i < n; ++i) cost[i] = c_[i];
  for (int i = 0; i <= n; ++i) cost[off_z1 + i] = h_[i];
  for (int i = 0; i < n; ++i) cost[off_z2 + i] = b_[i];

  return solve_standard_lp(A, rhs, cost);
}

Vec OwmsInstance::lp_gradient(const Vec& y, const Vec& d) const {
  const LpSolution sol = lp_oracle(y, d);
  // H stacks (e0; e0; e_i; e_i), so -H^T pi sums the two duals touching each
  // installation
  Vec g(n_ + 1, 0.0);
  g[0] = -(sol.dual[0] + sol.dual[1]);
  for (int i = 0; i < n_; ++i) g[i + 1] = -(sol.dual[2 + i] + sol.dual[2 + n_ + i]);
  return g;
}

double OwmsInstance::waiting_time_bound() const {
  return n_ + 6.0 * demand_.density_upper() * sum(rho_);
}

TheoryConstants OwmsInstance::theory_constants() const {
  TheoryConstants c = Application::theory_constants();
  c.R = box_.diameter_bound();
  c.G = sigma0_;
  if (c.beta0) {
    double cost_sum = h_[0];
    for (int i = 0; i < n_; ++i) cost_sum += h_[i + 1] + b_[i] + c_[i];
    const double nn = static_cast<double>(n_) + 4.0;
    c.beta = nn * nn * *c.beta0 * cost_sum;
  }
  return c;
}

}  // namespace invlearn
