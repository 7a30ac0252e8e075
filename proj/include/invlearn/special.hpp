#pragma once

namespace invlearn {

// standard normal CDF
double normal_cdf(double x);

// standard normal quantile, u in (0,1)
double normal_quantile(double u);

// regularized lower incomplete gamma P(a, x)
double gamma_p(double a, double x);

// inverse of P(a, .): returns x with P(a, x) = p
double gamma_p_inv(double a, double p);

}  // namespace invlearn
