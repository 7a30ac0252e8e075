#include "invlearn/demand.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "invlearn/special.hpp"

namespace invlearn {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

DemandModel::DemandModel(DemandFamily f, double p1, double p2, int dim)
    : family_(f), p1_(p1), p2_(p2), dim_(dim) {
  if (dim < 1) throw std::invalid_argument("DemandModel: dimension must be >= 1");
}

DemandModel DemandModel::uniform(double a, double b, int dim) {
  if (a < 0.0 || b < a) throw std::invalid_argument("uniform demand requires 0 <= a <= b");
  DemandModel m(DemandFamily::uniform, a, b, dim);
  if (a == b) {
    m.warnings_.push_back("uniform(a,a) is a point mass; density bounds do not apply");
    if (a == 0.0) m.warnings_.push_back("demand is identically 0 (P[D>0] = 0)");
  }
  return m;
}

DemandModel DemandModel::clipped_normal(double mu, double sigma, int dim) {
  if (sigma <= 0.0) throw std::invalid_argument("clipped_normal requires sigma > 0");
  return DemandModel(DemandFamily::clipped_normal, mu, sigma, dim);
}

DemandModel DemandModel::poisson(double lambda, int dim) {
  if (lambda <= 0.0) throw std::invalid_argument("poisson requires lambda > 0");
  return DemandModel(DemandFamily::poisson, lambda, 0.0, dim);
}

DemandModel DemandModel::geometric(double p, int dim) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("geometric requires p in (0,1]");
  return DemandModel(DemandFamily::geometric, p, 0.0, dim);
}

DemandModel DemandModel::clipped_gamma(double r, double lambda, int dim) {
  if (r <= 0.0 || lambda <= 0.0)
    throw std::invalid_argument("clipped_gamma requires r > 0 and lambda > 0");
  DemandModel m(DemandFamily::clipped_gamma, r, lambda, dim);
  if (r < 1.0) m.warnings_.push_back("gamma with shape < 1 has unbounded density");
  return m;
}

bool DemandModel::continuous() const {
  return family_ == DemandFamily::uniform || family_ == DemandFamily::clipped_normal ||
         family_ == DemandFamily::clipped_gamma;
}

double DemandModel::density_sup() const {
  switch (family_) {
    case DemandFamily::uniform:
      return p2_ > p1_ ? 1.0 / (p2_ - p1_) : kInf;
    case DemandFamily::clipped_normal: {
      const double m = p1_ > 0.0 ? p1_ : 0.0;
      const double z = (m - p1_) / p2_;
      return std::exp(-0.5 * z * z) / (p2_ * std::sqrt(2.0 * M_PI));
    }
    case DemandFamily::clipped_gamma: {
      const double r = p1_, lam = p2_;
      if (r < 1.0) return kInf;
      if (r == 1.0) return lam;
      const double lp = std::log(lam) + (r - 1.0) * std::log(r - 1.0) - (r - 1.0) -
                        std::lgamma(r);
      return std::exp(lp);
    }
    default:
      return std::numeric_limits<double>::quiet_NaN();  // no density
  }
}

DemandModel DemandModel::with_density_upper(double beta0) const {
  if (beta0 <= 0.0) throw std::invalid_argument("density_upper must be positive");
  DemandModel m = *this;
  if (continuous()) {
    const double sup = density_sup();
    if (std::isfinite(sup) && beta0 < sup * (1.0 - 1e-12)) {
      std::ostringstream os;
      os << "declared density_upper " << beta0 << " is below the marginal density supremum "
         << sup;
      throw std::invalid_argument(os.str());
    }
  } else {
    m.warnings_.push_back(
        "discrete demand has no density; density_upper is kept for transition-solver "
        "bookkeeping only");
  }
  m.beta0_ = beta0;
  return m;
}

DemandModel DemandModel::with_density_lower(double alpha0) const {
  if (alpha0 <= 0.0) throw std::invalid_argument("density_lower must be positive");
  DemandModel m = *this;
  if (family_ == DemandFamily::uniform && p2_ > p1_ && alpha0 > 1.0 / (p2_ - p1_) + 1e-12)
    throw std::invalid_argument("density_lower exceeds the uniform density");
  if (family_ != DemandFamily::uniform)
    m.warnings_.push_back("density_lower holds only on a bounded part of the support");
  m.alpha0_ = alpha0;
  return m;
}

DemandModel DemandModel::with_correlation(const std::vector<double>& corr) const {
  const int n = dim_;
  if (static_cast<int>(corr.size()) != n * n)
    throw std::invalid_argument("correlation matrix has wrong size");
  for (int i = 0; i < n; ++i) {
    if (std::fabs(corr[i * n + i] - 1.0) > 1e-12)
      throw std::invalid_argument("correlation matrix must have unit diagonal");
    for (int j = 0; j < i; ++j)
      if (std::fabs(corr[i * n + j] - corr[j * n + i]) > 1e-12)
        throw std::invalid_argument("correlation matrix must be symmetric");
  }
  // Cholesky; failure means the matrix is not positive definite
  std::vector<double> L(n * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = corr[i * n + j];
      for (int k = 0; k < j; ++k) s -= L[i * n + k] * L[j * n + k];
      if (i == j) {
        if (s <= 1e-12) throw std::invalid_argument("correlation matrix is not positive definite");
        L[i * n + i] = std::sqrt(s);
      } else {
        L[i * n + j] = s / L[j * n + j];
      }
    }
  }
  DemandModel m = *this;
  m.chol_ = std::move(L);
  return m;
}

bool DemandModel::has_density_upper() const {
  return beta0_.has_value() || (continuous() && std::isfinite(density_sup()));
}

double DemandModel::density_upper() const {
  if (beta0_) return *beta0_;
  if (continuous()) {
    const double sup = density_sup();
    if (std::isfinite(sup)) return sup;
  }
  throw std::logic_error("density_upper unavailable: supply it explicitly");
}

double DemandModel::marginal_mean() const {
  switch (family_) {
    case DemandFamily::uniform:
      return 0.5 * (p1_ + p2_);
    case DemandFamily::clipped_normal: {
      const double z = p1_ / p2_;
      const double phi = std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI);
      return p1_ * normal_cdf(z) + p2_ * phi;
    }
    case DemandFamily::poisson:
      return p1_;
    case DemandFamily::geometric:
      return 1.0 / p1_;
    case DemandFamily::clipped_gamma:
      return p1_ / p2_;
  }
  return 0.0;
}

double DemandModel::marginal_cdf(double x) const {
  switch (family_) {
    case DemandFamily::uniform:
      if (x < p1_) return 0.0;
      if (x >= p2_) return 1.0;
      return (x - p1_) / (p2_ - p1_);
    case DemandFamily::clipped_normal:
      if (x < 0.0) return 0.0;
      return normal_cdf((x - p1_) / p2_);
    case DemandFamily::poisson: {
      if (x < 0.0) return 0.0;
      const int k = static_cast<int>(std::floor(x));
      double pmf = std::exp(-p1_);
      double cdf = pmf;
      for (int i = 1; i <= k; ++i) {
        pmf *= p1_ / i;
        cdf += pmf;
      }
      return cdf < 1.0 ? cdf : 1.0;
    }
    case DemandFamily::geometric: {
      if (x < 1.0) return 0.0;
      const double k = std::floor(x);
      return 1.0 - std::pow(1.0 - p1_, k);
    }
    case DemandFamily::clipped_gamma:
      if (x <= 0.0) return 0.0;
      return gamma_p(p1_, p2_ * x);
  }
  return 0.0;
}

double DemandModel::marginal_quantile(double u) const {
  if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error("quantile level outside [0,1]");
  const double eps = 1e-15;
  if (u < eps) u = eps;
  if (u > 1.0 - eps) u = 1.0 - eps;
  switch (family_) {
    case DemandFamily::uniform:
      return p1_ + (p2_ - p1_) * u;
    case DemandFamily::clipped_normal: {
      const double x = p1_ + p2_ * normal_quantile(u);
      return x > 0.0 ? x : 0.0;
    }
    case DemandFamily::poisson: {
      double pmf = std::exp(-p1_);
      double cdf = pmf;
      int k = 0;
      const int cap = static_cast<int>(p1_ + 60.0 * std::sqrt(p1_) + 60.0);
      while (cdf < u && k < cap) {
        ++k;
        pmf *= p1_ / k;
        cdf += pmf;
      }
      return static_cast<double>(k);
    }
    case DemandFamily::geometric: {
      if (p1_ == 1.0) return 1.0;
      const double k = std::ceil(std::log1p(-u) / std::log1p(-p1_));
      return k > 1.0 ? k : 1.0;
    }
    case DemandFamily::clipped_gamma:
      return gamma_p_inv(p1_, u) / p2_;
  }
  return 0.0;
}

double DemandModel::upper_support() const {
  return family_ == DemandFamily::uniform ? p2_ : kInf;
}

Vec DemandModel::sample(RandomStream& stream) const {
  Vec d(dim_);
  if (chol_.empty()) {
    for (int i = 0; i < dim_; ++i) d[i] = marginal_quantile(stream.next_open01());
    return d;
  }
  // Gaussian copula: correlate standard normals, map through Phi and F^{-1}
  Vec z(dim_);
  for (int i = 0; i < dim_; ++i) z[i] = normal_quantile(stream.next_open01());
  for (int i = dim_ - 1; i >= 0; --i) {
    double s = 0.0;
    for (int j = 0; j <= i; ++j) s += chol_[i * dim_ + j] * z[j];
    d[i] = marginal_quantile(normal_cdf(s));
  }
  return d;
}

std::string DemandModel::describe() const {
  std::ostringstream os;
  switch (family_) {
    case DemandFamily::uniform: os << "uniform(" << p1_ << "," << p2_ << ")"; break;
    case DemandFamily::clipped_normal: os << "normal(" << p1_ << "," << p2_ << ")"; break;
    case DemandFamily::poisson: os << "poisson(" << p1_ << ")"; break;
    case DemandFamily::geometric: os << "geometric(" << p1_ << ")"; break;
    case DemandFamily::clipped_gamma: os << "gamma(" << p1_ << "," << p2_ << ")"; break;
  }
  if (dim_ > 1) os << "^" << dim_;
  if (correlated()) os << " copula";
  return os.str();
}

}  // namespace invlearn
