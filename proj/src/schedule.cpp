#include "invlearn/schedule.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace invlearn {

BatchSchedule BatchSchedule::fixed_time(long T) {
  if (T < 1) throw std::invalid_argument("fixed_time: T must be >= 1");
  BatchSchedule s;
  s.kind_ = ScheduleKind::fixed_time;
  s.horizon_ = T;
  return s;
}

BatchSchedule BatchSchedule::any_time_linear(long K) {
  if (K < 1) throw std::invalid_argument("any_time_linear: K must be >= 1");
  BatchSchedule s;
  s.kind_ = ScheduleKind::any_time_linear;
  s.slope_ = K;
  return s;
}

BatchSchedule BatchSchedule::exponential(double eta, double alpha) {
  if (eta <= 0.0 || alpha <= 0.0)
    throw std::invalid_argument("exponential: eta and alpha must be positive");
  const double gamma = 1.0 - eta * alpha + 2.0 * eta * eta;
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("exponential: gamma = 1 - eta*alpha + 2*eta^2 must lie in (0,1)");
  BatchSchedule s;
  s.kind_ = ScheduleKind::exponential;
  s.varsigma_ = 1.0 / gamma;
  return s;
}

BatchSchedule BatchSchedule::exponential_base(double varsigma) {
  if (!(varsigma > 1.0)) throw std::invalid_argument("exponential_base: varsigma must be > 1");
  BatchSchedule s;
  s.kind_ = ScheduleKind::exponential;
  s.varsigma_ = varsigma;
  return s;
}

long BatchSchedule::batch_size(long tau) const {
  if (tau < 1) throw std::invalid_argument("batch_size: tau must be >= 1");
  switch (kind_) {
    case ScheduleKind::fixed_time:
      return static_cast<long>(std::ceil(std::sqrt(static_cast<double>(horizon_))));
    case ScheduleKind::any_time_linear:
      return slope_ * tau;
    case ScheduleKind::exponential: {
      const double v = std::pow(varsigma_, static_cast<double>(tau - 1));
      if (v >= 9.0e18) return std::numeric_limits<long>::max();
      return static_cast<long>(std::ceil(v - 1e-12));
    }
  }
  return 1;
}

long BatchSchedule::tau_max(long T) const {
  if (T < 1) throw std::invalid_argument("tau_max: T must be >= 1");
  long total = 0;
  long k = 0;
  while (total < T) {
    ++k;
    total += batch_size(k);
  }
  return k;
}

std::string BatchSchedule::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case ScheduleKind::fixed_time: os << "fixed_time(T=" << horizon_ << ")"; break;
    case ScheduleKind::any_time_linear: os << "any_time_linear(K=" << slope_ << ")"; break;
    case ScheduleKind::exponential: os << "exponential(varsigma=" << varsigma_ << ")"; break;
  }
  return os.str();
}

double TheoryConstants::kappa() const {
  const double r2 = R ? (*R) * (*R) : 0.0;
  const double s = sigma ? *sigma : (sigma0 ? *sigma0 : 0.0);
  return std::max(r2, s * s);
}

std::vector<std::string> stepsize_warnings(const BatchSchedule& schedule, double eta,
                                           const TheoryConstants& c) {
  std::vector<std::string> out;
  auto warn = [&out](const std::string& s) { out.push_back(s); };
  if (schedule.kind() == ScheduleKind::exponential) {
    if (c.alpha) {
      if (eta > *c.alpha / 2.0) warn("stepsize exceeds alpha/2");
      if (eta > 1.0 / *c.alpha) warn("stepsize exceeds 1/alpha");
    } else {
      warn("strong-convexity constant unknown; cannot verify the exponential-scheme stepsize");
    }
    if (c.beta) {
      if (eta > 1.0 / (2.0 * *c.beta)) warn("stepsize exceeds 1/(2 beta)");
    } else {
      warn("smoothness constant unknown; cannot verify the exponential-scheme stepsize");
    }
  } else {
    if (c.beta) {
      if (eta >= 1.0 / *c.beta) warn("stepsize is not below 1/beta");
    } else {
      warn("smoothness constant unknown; cannot verify the stepsize");
    }
  }
  return out;
}

}  // namespace invlearn
