#include <cmath>
#include <vector>

#include "doctest.h"
#include "invlearn/demand.hpp"
#include "invlearn/rng.hpp"
#include "invlearn/special.hpp"

using namespace invlearn;

TEST_CASE("streams are reproducible and replication-dependent") {
  RandomStream a(42, 3), b(42, 3), c(42, 4);
  bool identical = true, all_same = true;
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.next_u64();
    if (x != b.next_u64()) identical = false;
    if (x != c.next_u64()) all_same = false;  // expected to differ
  }
  CHECK(identical);
  CHECK_FALSE(all_same);
}

TEST_CASE("normal quantile inverts the cdf") {
  for (double u : {1e-8, 1e-3, 0.1, 0.5, 0.77, 0.999, 1.0 - 1e-9}) {
    const double x = normal_quantile(u);
    CHECK(normal_cdf(x) == doctest::Approx(u).epsilon(1e-10));
  }
  CHECK(normal_quantile(0.5) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("incomplete gamma round trip") {
  for (double a : {0.7, 1.0, 2.5, 9.0}) {
    for (double p : {0.01, 0.3, 0.5, 0.9, 0.999}) {
      const double x = gamma_p_inv(a, p);
      CHECK(gamma_p(a, x) == doctest::Approx(p).epsilon(1e-9));
    }
  }
}

TEST_CASE("uniform support membership") {
  const DemandModel m = DemandModel::uniform(0.0, 10.0);
  RandomStream s(7, 0);
  for (int i = 0; i < 10000; ++i) {
    const double x = m.sample(s)[0];
    CHECK(x >= 0.0);
    CHECK(x <= 10.0);
  }
}

TEST_CASE("clipped normal puts negative mass exactly at zero") {
  const DemandModel m = DemandModel::clipped_normal(0.5, 1.0);
  RandomStream s(11, 0);
  int zeros = 0;
  for (int i = 0; i < 20000; ++i) {
    const double x = m.sample(s)[0];
    CHECK(x >= 0.0);
    if (x == 0.0) ++zeros;
  }
  // P[N(0.5,1) < 0] ~ 0.3085
  CHECK(zeros > 5000);
}

TEST_CASE("poisson sample mean within 4 standard errors") {
  const DemandModel m = DemandModel::poisson(5.0);
  RandomStream s(2024, 0);
  const long N = 1000000;
  double total = 0.0;
  for (long i = 0; i < N; ++i) total += m.sample(s)[0];
  const double mean = total / N;
  const double se = std::sqrt(5.0 / N);
  CHECK(std::fabs(mean - 5.0) <= 4.0 * se);
}

TEST_CASE("geometric mean matches 1/p") {
  const DemandModel m = DemandModel::geometric(0.2);
  RandomStream s(5, 0);
  const long N = 200000;
  double total = 0.0;
  double min_seen = 1e9;
  for (long i = 0; i < N; ++i) {
    const double x = m.sample(s)[0];
    total += x;
    min_seen = std::min(min_seen, x);
  }
  CHECK(min_seen == 1.0);
  const double sd = std::sqrt(1.0 - 0.2) / 0.2;
  CHECK(std::fabs(total / N - 5.0) <= 4.0 * sd / std::sqrt(static_cast<double>(N)));
}

TEST_CASE("declared density bounds are checked") {
  CHECK_THROWS(DemandModel::uniform(0, 10).with_density_upper(0.05));
  CHECK_NOTHROW(DemandModel::uniform(0, 10).with_density_upper(0.1));
  CHECK(DemandModel::uniform(0, 10).density_upper() == doctest::Approx(0.1));
  CHECK(DemandModel::clipped_normal(5, 1).density_upper() ==
        doctest::Approx(1.0 / std::sqrt(2.0 * M_PI)));
  // discrete families carry the value through with a caveat
  const DemandModel pois = DemandModel::poisson(5.0).with_density_upper(0.2);
  CHECK(pois.density_upper() == doctest::Approx(0.2));
  CHECK_FALSE(pois.warnings().empty());
}

TEST_CASE("invalid parameters are rejected at construction") {
  CHECK_THROWS(DemandModel::geometric(0.0));
  CHECK_THROWS(DemandModel::geometric(1.5));
  CHECK_THROWS(DemandModel::uniform(-1.0, 5.0));
  CHECK_THROWS(DemandModel::clipped_normal(1.0, 0.0));
  CHECK_THROWS(DemandModel::poisson(-2.0));
}

TEST_CASE("uniform density lower bound shows up empirically") {
  // histogram density >= alpha0/2 on the interior at bin width 0.1
  const DemandModel m =
      DemandModel::uniform(0.0, 10.0).with_density_lower(0.1).with_density_upper(0.1);
  RandomStream s(99, 1);
  const long N = 1000000;
  std::vector<long> bins(100, 0);
  for (long i = 0; i < N; ++i) {
    const int k = static_cast<int>(m.sample(s)[0] * 10.0);
    if (k >= 0 && k < 100) ++bins[k];
  }
  const double alpha0 = *m.density_lower();
  for (int k = 1; k < 99; ++k) {
    const double density = bins[k] / (0.1 * N);
    CHECK(density >= alpha0 / 2.0);
  }
}

TEST_CASE("copula correlation carries into the samples") {
  const std::vector<double> corr{1.0, 0.8, 0.8, 1.0};
  const DemandModel m = DemandModel::clipped_normal(5.0, 1.0, 2).with_correlation(corr);
  RandomStream s(13, 0);
  const long N = 100000;
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (long i = 0; i < N; ++i) {
    const Vec d = m.sample(s);
    sx += d[0];
    sy += d[1];
    sxx += d[0] * d[0];
    syy += d[1] * d[1];
    sxy += d[0] * d[1];
  }
  const double mx = sx / N, my = sy / N;
  const double r = (sxy / N - mx * my) /
                   std::sqrt((sxx / N - mx * mx) * (syy / N - my * my));
  CHECK(r > 0.7);
  CHECK(r < 0.9);
  CHECK_THROWS(m.with_correlation({1.0, 2.0, 2.0, 1.0}));  // not PSD
}

TEST_CASE("marginal quantiles invert marginal cdfs") {
  const DemandModel g = DemandModel::clipped_gamma(2.0, 0.5);
  for (double u : {0.05, 0.5, 0.95}) {
    CHECK(g.marginal_cdf(g.marginal_quantile(u)) == doctest::Approx(u).epsilon(1e-8));
  }
  const DemandModel p = DemandModel::poisson(5.0);
  CHECK(p.marginal_quantile(0.999999) < 40.0);
  CHECK(p.marginal_cdf(p.marginal_quantile(0.7)) >= 0.7);
}
