#include "invlearn/convex.hpp"

#include <cmath>
#include <stdexcept>

namespace invlearn {

Vec dykstra_project(const Vec& point, const std::vector<Projector>& sets,
                    const DykstraOptions& opts) {
  if (sets.empty()) return point;
  const std::size_t n = point.size();
  const std::size_t m = sets.size();
  Vec x = point;
  // one correction term per set
  std::vector<Vec> corr(m, Vec(n, 0.0));
  Vec prev(n), tmp(n);
  for (int cycle = 0; cycle < opts.max_cycles; ++cycle) {
    prev = x;
    // the iterate alone can stall for whole cycles while the corrections keep
    // moving, so convergence is measured on both (Birgin-Raydan criterion)
    double corr_change = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + corr[k][i];
      x = tmp;
      sets[k](x);
      for (std::size_t i = 0; i < n; ++i) {
        const double q = tmp[i] - x[i];
        const double dq = q - corr[k][i];
        corr_change += dq * dq;
        corr[k][i] = q;
      }
    }
    double delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) delta += (x[i] - prev[i]) * (x[i] - prev[i]);
    if (std::sqrt(delta) <= opts.tol && std::sqrt(corr_change) <= opts.tol) return x;
  }
  throw std::runtime_error("dykstra_project: no convergence within the cycle cap");
}

}  // namespace invlearn
