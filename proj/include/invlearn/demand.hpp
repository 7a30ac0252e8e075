#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invlearn/rng.hpp"
#include "invlearn/vec.hpp"

namespace invlearn {

enum class DemandFamily { uniform, clipped_normal, poisson, geometric, clipped_gamma };

// A stationary demand distribution: one marginal family shared by all
// coordinates, optionally coupled through a Gaussian copula. Negative raw
// draws of the clipped families are mapped to exactly 0. Immutable once
// configured; safe to share across threads.
class DemandModel {
 public:
  static DemandModel uniform(double a, double b, int dim = 1);
  static DemandModel clipped_normal(double mu, double sigma, int dim = 1);
  static DemandModel poisson(double lambda, int dim = 1);
  static DemandModel geometric(double p, int dim = 1);
  static DemandModel clipped_gamma(double r, double lambda, int dim = 1);

  // copies with extra configuration; validation happens here
  DemandModel with_correlation(const std::vector<double>& corr_row_major) const;
  DemandModel with_density_upper(double beta0) const;
  DemandModel with_density_lower(double alpha0) const;

  DemandFamily family() const { return family_; }
  int dimension() const { return dim_; }
  bool continuous() const;
  bool correlated() const { return !chol_.empty(); }

  // density bound beta0; defaults to the closed-form supremum for continuous
  // families, must be supplied explicitly for discrete ones
  double density_upper() const;
  bool has_density_upper() const;
  std::optional<double> density_lower() const { return alpha0_; }

  double marginal_mean() const;
  double marginal_cdf(double x) const;
  double marginal_quantile(double u) const;
  // supremum of the continuous part of the marginal density (inf if unbounded)
  double density_sup() const;
  // finite only for the uniform family
  double upper_support() const;

  Vec sample(RandomStream& stream) const;

  const std::vector<std::string>& warnings() const { return warnings_; }
  std::string describe() const;

 private:
  DemandModel(DemandFamily f, double p1, double p2, int dim);

  DemandFamily family_;
  double p1_ = 0.0;  // a | mu | lambda | p | r
  double p2_ = 0.0;  // b | sigma | -- | -- | lambda
  int dim_ = 1;
  std::optional<double> beta0_;
  std::optional<double> alpha0_;
  std::vector<double> chol_;  // lower Cholesky factor of correlation, row-major
  std::vector<std::string> warnings_;
};

}  // namespace invlearn
