#pragma once

#include <cstdint>

#include "invlearn/application.hpp"
#include "invlearn/two_echelon.hpp"
#include "invlearn/vec.hpp"

namespace invlearn {

struct OracleResult {
  Vec y_star;      // optimal order-up-to level (physical space)
  double c_star;   // per-period optimal expected cost, from an independent sample
};

// Myopic benchmark (y*, C*): minimizes the sample-average cost over the
// feasible set with projected gradient and diminishing steps, refines on a
// local grid for problems of dimension <= 2, then evaluates C* on an
// independent sample. Separable systems use exact sorted-sample gradients;
// the warehouse system uses minibatched sample gradients.
OracleResult optimal_oracle(const Application& app, std::uint64_t seed,
                            long n_samples = 1000000, long iters = 10000);

// (C^pi(T) - T C*) / (T C*) * 100; requires C* > 0
double relative_average_regret(double total_cost, long T, double c_star);

struct TwoEchelonOracle {
  double s1 = 0.0;
  double s2 = 0.0;
  double c_star = 0.0;
};

// grid-refined SAA minimum of the two-echelon per-period cost
TwoEchelonOracle two_echelon_optimal(const TwoEchelonParams& p, const DemandModel& demand,
                                     std::uint64_t seed, long n_samples = 200000);

}  // namespace invlearn
