#pragma once

#include <optional>
#include <string>
#include <vector>

namespace invlearn {

enum class ScheduleKind { fixed_time, any_time_linear, exponential };

// Batch-size rule tau -> n_tau.
//   fixed_time(T):      n_tau = ceil(sqrt(T))
//   any_time_linear(K): n_tau = K * tau
//   exponential:        n_tau = ceil(varsigma^(tau-1)), varsigma = 1/gamma,
//                       gamma = 1 - eta*alpha + 2*eta^2 in (0,1)
class BatchSchedule {
 public:
  static BatchSchedule fixed_time(long T);
  static BatchSchedule any_time_linear(long K);
  static BatchSchedule exponential(double eta, double alpha);
  // direct base varsigma > 1, for grid-searched bases
  static BatchSchedule exponential_base(double varsigma);

  ScheduleKind kind() const { return kind_; }
  long batch_size(long tau) const;
  // smallest k with sum_{tau<=k} n_tau >= T
  long tau_max(long T) const;

  double varsigma() const { return varsigma_; }
  double gamma() const { return 1.0 / varsigma_; }
  std::string describe() const;

 private:
  BatchSchedule() = default;
  ScheduleKind kind_ = ScheduleKind::fixed_time;
  long horizon_ = 0;       // fixed_time
  long slope_ = 1;         // any_time_linear
  double varsigma_ = 0.0;  // exponential
};

// Problem constants used by the stepsize admissibility checks; all optional
// because most are unknown in practice.
struct TheoryConstants {
  std::optional<double> beta;    // smoothness
  std::optional<double> alpha;   // strong convexity
  std::optional<double> beta0;   // demand density upper bound
  std::optional<double> alpha0;  // demand density lower bound
  std::optional<double> sigma0;  // gradient norm / variance bound
  std::optional<double> sigma;   // gradient noise bound (defaults to sigma0)
  std::optional<double> R;       // diameter bound
  std::optional<double> G;       // max expected-gradient norm
  std::optional<double> Qbar;    // max expected cost
  std::optional<double> M;       // transition-solver hitting bound

  double kappa() const;  // max{R^2, sigma^2}
};

// Warnings (not errors) when a stepsize violates the theorems' conditions:
// eta < 1/beta for the convex schemes, eta <= min{alpha/2, 1/alpha, 1/(2 beta)}
// for the exponential scheme.
std::vector<std::string> stepsize_warnings(const BatchSchedule& schedule, double eta,
                                           const TheoryConstants& c);

}  // namespace invlearn
