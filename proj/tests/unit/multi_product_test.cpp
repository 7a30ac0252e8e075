#include <cmath>

#include "doctest.h"
#include "invlearn/multi_product.hpp"
#include "invlearn/rng.hpp"

using namespace invlearn;

namespace {

MultiProductInstance two_product() {
  return MultiProductInstance({1.0, 2.0}, {5.0, 6.0}, ConstraintSet::box({10.0, 10.0}),
                              DemandModel::uniform(0, 10, 2));
}

}  // namespace

TEST_CASE("per-period cost") {
  const MultiProductInstance app = two_product();
  CHECK(app.cost({3.0, 4.0}, {2.0, 6.0}) == doctest::Approx(13.0));  // 1*1 + 6*2
  CHECK(app.cost({3.0, 4.0}, {3.0, 4.0}) == doctest::Approx(0.0));
  CHECK(app.cost({0.0, 0.0}, {1.0, 1.0}) == doctest::Approx(11.0));
}

TEST_CASE("gradient estimator from censored sales") {
  const MultiProductInstance app = two_product();
  // y > d everywhere: h
  CHECK(app.gradient_from_demand({3.0, 4.0}, {2.0, 3.0}) == Vec{1.0, 2.0});
  // y <= d everywhere: -b
  CHECK(app.gradient_from_demand({3.0, 4.0}, {3.0, 9.0}) == Vec{-5.0, -6.0});
  // the boundary y = d counts as a stockout
  CHECK(app.gradient_from_demand({3.0, 4.0}, {2.0, 4.0}) == Vec{1.0, -6.0});
}

TEST_CASE("censoring and dynamics") {
  const MultiProductInstance app = two_product();
  CHECK(app.observation({3.0, 4.0}, {2.0, 6.0}) == Vec{2.0, 4.0});
  CHECK(app.observation({3.0, 4.0}, {0.0, 0.0}) == Vec{0.0, 0.0});
  CHECK(app.observation({3.0, 4.0}, {3.0, 4.0}) == Vec{3.0, 4.0});
  CHECK(app.dynamics({3.0, 4.0}, {2.0, 6.0}) == Vec{1.0, 0.0});
  CHECK(app.dynamics({3.0, 4.0}, {0.0, 0.0}) == Vec{3.0, 4.0});
  CHECK(app.dynamics({3.0, 4.0}, {5.0, 6.0}) == Vec{0.0, 0.0});
}

TEST_CASE("censoring is sufficient for the estimator") {
  const MultiProductInstance app = two_product();
  RandomStream s(31, 0);
  for (int i = 0; i < 2000; ++i) {
    const Vec y{10.0 * s.next_double(), 10.0 * s.next_double()};
    const Vec d{10.0 * s.next_double(), 10.0 * s.next_double()};
    Vec full(2);
    for (int k = 0; k < 2; ++k)
      full[k] = y[k] > d[k] ? app.holding()[k] : -app.lost_sales()[k];
    CHECK(app.gradient_from_demand(y, d) == full);
  }
}

TEST_CASE("greedy projection transition solver") {
  MultiProductInstance app({1.0, 1.0}, {5.0, 5.0},
                           ConstraintSet::polyhedron(2, {1.0, 1.0}, {2.0}),
                           DemandModel::uniform(0, 1, 2));
  SUBCASE("projects onto the floor-raised set") {
    const Vec y = app.transition_solver({1.5, 0.0}, {0.5, 0.5});
    CHECK(y[0] == doctest::Approx(1.5).epsilon(1e-6));
    CHECK(y[1] == doctest::Approx(0.5).epsilon(1e-6));
  }
  SUBCASE("already feasible targets pass through") {
    CHECK(app.transition_solver({0.1, 0.2}, {0.5, 0.5}) == Vec{0.5, 0.5});
  }
  SUBCASE("clamps to the floor in a box") {
    MultiProductInstance boxed({1.0, 1.0}, {5.0, 5.0}, ConstraintSet::box({3.0, 3.0}),
                               DemandModel::uniform(0, 1, 2));
    const Vec y = boxed.transition_solver({2.0, 0.0}, {0.0, 0.0});
    CHECK(y[0] == doctest::Approx(2.0));
    CHECK(y[1] == doctest::Approx(0.0));
  }
}

TEST_CASE("transition solver output is optimal by the variational inequality") {
  MultiProductInstance app({1.0, 1.0}, {5.0, 5.0},
                           ConstraintSet::polyhedron(2, {1.0, 2.0, 2.0, 1.0}, {4.0, 4.0}),
                           DemandModel::uniform(0, 1, 2));
  RandomStream s(77, 0);
  for (int trial = 0; trial < 30; ++trial) {
    const Vec x{1.2 * s.next_double(), 1.2 * s.next_double()};
    Vec w{1.5 * s.next_double(), 1.5 * s.next_double()};
    w[trial % 2] = std::max(0.0, x[trial % 2] - 0.5 - s.next_double());  // force infeasibility
    const Vec y = app.transition_solver(x, w);
    CHECK(leq(x, y, 1e-7));
    CHECK(app.constraint_set().contains(y, 1e-7));
    // no feasible point with y >= x is closer to w
    for (int k = 0; k < 1000; ++k) {
      Vec q{x[0] + 1.5 * s.next_double(), x[1] + 1.5 * s.next_double()};
      if (!app.constraint_set().contains(q, 0.0)) continue;
      CHECK(dot(q - y, w - y) <= 1e-6 * (1.0 + norm2(w)));
    }
  }
}

TEST_CASE("per-sample gradient norms never exceed sigma0") {
  const MultiProductInstance app = two_product();
  const double bound = std::sqrt(1.0 + 4.0 + 25.0 + 36.0);
  CHECK(app.sigma0() == doctest::Approx(bound));
  RandomStream s(3, 0);
  for (int i = 0; i < 5000; ++i) {
    const Vec y{10.0 * s.next_double(), 10.0 * s.next_double()};
    const Vec d = app.demand().sample(s);
    CHECK(norm2(app.gradient_from_demand(y, d)) <= bound);
  }
}

TEST_CASE("estimator mean matches the finite difference of the sample objective") {
  // correlated demand exercises the copula path
  const std::vector<double> corr{1.0, 0.5, 0.5, 1.0};
  MultiProductInstance app({1.0, 2.0}, {5.0, 6.0}, ConstraintSet::box({12.0, 12.0}),
                           DemandModel::clipped_normal(5.0, 1.0, 2).with_correlation(corr));
  RandomStream s(1234, 0);
  const long N = 200000;
  std::vector<Vec> sample;
  sample.reserve(N);
  for (long j = 0; j < N; ++j) sample.push_back(app.demand().sample(s));
  const Vec y{4.6, 5.4};
  const double delta = 1e-3;
  for (int i = 0; i < 2; ++i) {
    Vec yp = y, ym = y;
    yp[i] += delta;
    ym[i] -= delta;
    double mean = 0.0, m2 = 0.0;
    long k = 0;
    for (const Vec& d : sample) {
      const double fd = (app.cost(yp, d) - app.cost(ym, d)) / (2.0 * delta);
      const double diff = fd - app.gradient_from_demand(y, d)[i];
      ++k;
      const double dmean = diff - mean;
      mean += dmean / k;
      m2 += dmean * (diff - mean);
    }
    const double se = std::sqrt(m2 / (N - 1.0) / N);
    CHECK(std::fabs(mean) <= 4.0 * se + 1e-3);
  }
}

TEST_CASE("instances validate their inputs") {
  CHECK_THROWS(MultiProductInstance({1.0}, {5.0}, ConstraintSet::box({1.0, 1.0}),
                                    DemandModel::uniform(0, 1, 2)));
  CHECK_THROWS(MultiProductInstance({0.0, 1.0}, {5.0, 5.0}, ConstraintSet::box({1.0, 1.0}),
                                    DemandModel::uniform(0, 1, 2)));
  CHECK_THROWS(MultiProductInstance({1.0, 1.0}, {5.0, 5.0}, ConstraintSet::box({1.0, 1.0}),
                                    DemandModel::uniform(0, 1, 1)));
}
