#include "invlearn/two_echelon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace invlearn {

double two_echelon_period_cost(const TwoEchelonParams& p, double s1, double s2, double d_prev,
                               double d) {
  const double shortfall = std::max(0.0, d_prev - s2);
  const double achievable = s1 - shortfall;
  const double over = achievable - d;
  const double retailer = over > 0.0 ? p.h1 * over : -p.p1 * over;
  return retailer + p.h2 * std::max(0.0, s2 - d);
}

std::pair<double, double> epoch_optimize(const std::vector<double>& data,
                                         const TwoEchelonParams& p, long T,
                                         double s2_start) {
  const long L = static_cast<long>(data.size());
  if (L < 2 || L % 2 != 0)
    throw std::invalid_argument("epoch_optimize: data length must be even and >= 2");
  const double q = (p.h2 + p.p1) / (p.h1 + p.p1);
  if (!(q > 0.0 && q <= 1.0))
    throw std::invalid_argument("epoch_optimize: quantile target (h2+p1)/(h1+p1) outside (0,1]");

  const long half = L / 2;
  // empirical CDF of the first half, Phi(x) = (2/L) sum 1[d_i <= x]
  std::vector<double> first(data.begin(), data.begin() + half);
  std::sort(first.begin(), first.end());
  auto phi = [&](double x) {
    return static_cast<double>(std::upper_bound(first.begin(), first.end(), x) -
                               first.begin()) /
           static_cast<double>(half);
  };
  // generalized inverse: smallest observed value with Phi >= q
  long k = static_cast<long>(std::ceil(q * static_cast<double>(half) - 1e-12));
  if (k < 1) k = 1;
  const double s1 = first[k - 1];

  // minibatch SGD over the second half with linear batch sizes
  const double reg =
      p.C1 * (p.h1 + p.p1) *
      std::sqrt(2.0 * std::log(std::pow(static_cast<double>(T), 3.0) * p.dbar) /
                static_cast<double>(L));
  double w = std::clamp(s2_start, 0.0, p.s_max);
  long l = 0, tau = 1;
  double grad_sum = 0.0;
  double iterate_sum = 0.0;
  for (long i = half; i < L; ++i) {
    const double s2i = w;
    iterate_sum += s2i;
    const double d_prev = data[i - 1];
    const double d = data[i];
    const double shat = d_prev <= s2i ? s1 : s1 + s2i - d_prev;
    double m = 0.0;
    if (s2i <= d_prev) m += (shat >= d ? p.h1 + p.p1 : 0.0) - p.p1;
    if (s2i >= d) m += p.h2;
    m += reg * phi(s2i);
    grad_sum += m;
    ++l;
    if (l == p.K * tau) {
      const double n_tau = static_cast<double>(p.K * tau);
      w = std::clamp(w - (p.eta / n_tau) * grad_sum, 0.0, p.s_max);
      l = 0;
      ++tau;
      grad_sum = 0.0;
    }
  }
  const double s2 = iterate_sum * 2.0 / static_cast<double>(L);
  return {s1, s2};
}

PlannerResult planner_run(const TwoEchelonParams& p, const DemandModel& demand, long T,
                          RandomStream& stream) {
  if (T < 2) throw std::invalid_argument("planner_run: T must be >= 2");
  if (demand.dimension() != 1)
    throw std::invalid_argument("planner_run: demand must be scalar");
  if (p.s_max <= 0.0) throw std::invalid_argument("planner_run: s_max must be positive");
  if (p.dbar <= 1.0)
    throw std::invalid_argument("planner_run: dbar must exceed 1 (enters a logarithm)");

  PlannerResult res;
  res.period_cost.reserve(T);
  double s1 = p.s1_init;
  double s2 = std::clamp(p.s2_init, 0.0, p.s_max);
  double d_prev = 0.0;
  long t = 0;
  long epoch_len = 2;
  long epoch_index = 1;
  while (t < T) {
    const long len = std::min(epoch_len, T - t);
    EpochRecord rec;
    rec.index = epoch_index;
    rec.length = len;
    rec.s1 = s1;
    rec.s2 = s2;
    std::vector<double> window;
    window.reserve(len);
    for (long i = 0; i < len; ++i) {
      const double d = demand.sample(stream)[0];
      const double c = two_echelon_period_cost(p, s1, s2, d_prev, d);
      res.period_cost.push_back(c);
      res.total_cost += c;
      rec.cost += c;
      window.push_back(d);
      d_prev = d;
    }
    t += len;
    res.epochs.push_back(rec);
    if (t < T && len == epoch_len) {
      auto [ns1, ns2] = epoch_optimize(window, p, T, s2);
      s1 = ns1;
      s2 = ns2;
    }
    epoch_len *= 2;
    ++epoch_index;
  }
  return res;
}

}  // namespace invlearn
