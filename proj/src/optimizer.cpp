#include "invlearn/optimizer.hpp"

#include <stdexcept>

namespace invlearn {

MinibatchSgd::MinibatchSgd(Vec w0, const ConvexSet& set, BatchSchedule schedule, double eta)
    : w_(std::move(w0)), set_(&set), schedule_(schedule), eta_(eta) {
  if (static_cast<int>(w_.size()) != set.dimension())
    throw std::invalid_argument("MinibatchSgd: iterate dimension mismatch");
  if (eta <= 0.0) throw std::invalid_argument("MinibatchSgd: eta must be positive");
  if (!set.contains(w_, 1e-9)) w_ = set.project(w_);
}

void MinibatchSgd::step(const std::vector<Vec>& gradients) {
  const long n_tau = schedule_.batch_size(tau_);
  if (static_cast<long>(gradients.size()) != n_tau)
    throw std::invalid_argument("MinibatchSgd::step: batch has wrong length");
  Vec g(w_.size(), 0.0);
  for (const Vec& gi : gradients) {
    if (gi.size() != w_.size())
      throw std::invalid_argument("MinibatchSgd::step: gradient dimension mismatch");
    for (std::size_t i = 0; i < g.size(); ++i) g[i] += gi[i];
  }
  const double scale = eta_ / static_cast<double>(n_tau);
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = w_[i] - scale * g[i];
  w_ = set_->project(g);
  ++tau_;
}

}  // namespace invlearn
