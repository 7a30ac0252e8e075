#include <cmath>

#include "doctest.h"
#include "invlearn/owms.hpp"
#include "invlearn/rng.hpp"

using namespace invlearn;

namespace {

OwmsInstance example_instance() {
  // h = (1,1,1), b = (10,5), c = (1,2), roomy capacities
  return OwmsInstance({1.0, 1.0, 1.0}, {10.0, 5.0}, {1.0, 2.0}, {20.0, 20.0, 20.0},
                      DemandModel::uniform(0, 10, 2));
}

OwmsInstance random_instance(RandomStream& s, int n) {
  Vec h(n + 1), b(n), c(n), rho(n + 1);
  // keep the greedy delivery optimal: b > c and h0 <= min(c_i + h_i)
  for (int i = 0; i < n; ++i) {
    c[i] = 0.5 + 3.0 * s.next_double();
    b[i] = c[i] + 0.5 + 8.0 * s.next_double();
    h[i + 1] = 0.2 + 2.0 * s.next_double();
  }
  double cap = 1e9;
  for (int i = 0; i < n; ++i) cap = std::min(cap, c[i] + h[i + 1]);
  h[0] = cap * s.next_double() * 0.9 + 1e-3;
  for (int i = 0; i <= n; ++i) rho[i] = 5.0 + 10.0 * s.next_double();
  return OwmsInstance(h, b, c, rho, DemandModel::uniform(0, 8, n));
}

}  // namespace

TEST_CASE("greedy delivery on the worked examples") {
  const OwmsInstance app = example_instance();
  {
    const DeliveryOutcome out = app.greedy_delivery({5.0, 1.0, 1.0}, {3.0, 2.0});
    CHECK(out.z == Vec{2.0, 1.0});
    CHECK(out.warehouse_left() == doctest::Approx(2.0));
    CHECK(out.o == Vec{0.0, 0.0});
    CHECK(out.l == Vec{0.0, 0.0});
    CHECK(out.cost == doctest::Approx(6.0));
  }
  {
    const DeliveryOutcome out = app.greedy_delivery({1.0, 0.0, 0.0}, {2.0, 2.0});
    CHECK(out.z == Vec{1.0, 0.0});
    CHECK(out.l == Vec{1.0, 2.0});
    CHECK(out.cost == doctest::Approx(21.0));
  }
  {
    const DeliveryOutcome out = app.greedy_delivery({5.0, 1.0, 1.0}, {0.0, 0.0});
    CHECK(out.z == Vec{0.0, 0.0});
    CHECK(out.cost == doctest::Approx(5.0 + 1.0 + 1.0));
  }
}

TEST_CASE("delivery outcome identities hold on random inputs") {
  RandomStream s(12, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(s.next_double() * 4);
    const OwmsInstance app = random_instance(s, n);
    Vec y(n + 1), d(n);
    for (int i = 0; i <= n; ++i) y[i] = 8.0 * s.next_double();
    for (int i = 0; i < n; ++i) d[i] = 10.0 * s.next_double();
    const DeliveryOutcome out = app.greedy_delivery(y, d);
    double zsum = 0.0;
    for (int i = 0; i < n; ++i) {
      const double need = std::max(0.0, d[i] - y[i + 1]);
      CHECK(out.z[i] <= need + 1e-12);
      CHECK(out.l[i] >= -1e-12);
      CHECK(out.l[i] + out.z[i] == doctest::Approx(need));
      CHECK(out.o[i] == doctest::Approx(std::max(0.0, y[i + 1] - d[i])));
      zsum += out.z[i];
    }
    CHECK(zsum <= y[0] + 1e-9);
    // greedy order: a short store means every higher-priority store was fully
    // served or the warehouse was empty by then
    for (int k = 0; k < n; ++k) {
      const int i = app.priority()[k];
      if (out.l[i] > 1e-12) {
        for (int k2 = 0; k2 < k; ++k2) {
          const int j = app.priority()[k2];
          const bool served = out.l[j] <= 1e-12;
          const bool empty = out.s[k2] <= 1e-12;
          CHECK((served || empty));
        }
      }
    }
  }
}

TEST_CASE("greedy cost equals the exact LP value") {
  const OwmsInstance app = example_instance();
  CHECK(app.lp_oracle({5.0, 1.0, 1.0}, {3.0, 2.0}).objective == doctest::Approx(6.0));
  CHECK(app.lp_oracle({1.0, 0.0, 0.0}, {2.0, 2.0}).objective == doctest::Approx(21.0));
  // d = 0: pure holding
  CHECK(app.lp_oracle({5.0, 1.0, 1.0}, {0.0, 0.0}).objective == doctest::Approx(7.0));
  RandomStream s(13, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(s.next_double() * 3);
    const OwmsInstance r = random_instance(s, n);
    Vec y(n + 1), d(n);
    for (int i = 0; i <= n; ++i) y[i] = 8.0 * s.next_double();
    for (int i = 0; i < n; ++i) d[i] = 10.0 * s.next_double();
    CHECK(r.greedy_delivery(y, d).cost ==
          doctest::Approx(r.lp_oracle(y, d).objective).epsilon(1e-9));
  }
}

TEST_CASE("analytic gradient on the worked examples") {
  const OwmsInstance app = example_instance();
  CHECK(app.gradient({5.0, 1.0, 1.0}, {0.0, 0.0}) == Vec{1.0, 1.0, 1.0});
  CHECK(app.gradient({1.0, 0.0, 0.0}, {2.0, 2.0}) == Vec{-9.0, -10.0, -5.0});
  CHECK(app.gradient({5.0, 1.0, 1.0}, {3.0, 2.0}) == Vec{1.0, 0.0, -1.0});
}

TEST_CASE("analytic gradient agrees with central finite differences off kinks") {
  RandomStream s(14, 0);
  int accepted = 0;
  while (accepted < 60) {
    const int n = 1 + static_cast<int>(s.next_double() * 3);
    const OwmsInstance app = random_instance(s, n);
    Vec y(n + 1), d(n);
    for (int i = 0; i <= n; ++i) y[i] = 8.0 * s.next_double();
    for (int i = 0; i < n; ++i) d[i] = 10.0 * s.next_double();
    const double delta = 1e-4;
    const Vec g = app.gradient(y, d);
    bool kink = false;
    Vec fd(n + 1);
    for (int i = 0; i <= n && !kink; ++i) {
      Vec yp = y, ym = y;
      yp[i] += delta;
      ym[i] -= delta;
      if (ym[i] < 0.0) {
        kink = true;
        break;
      }
      fd[i] = (app.cost(yp, d) - app.cost(ym, d)) / (2.0 * delta);
      Vec yp2 = y, ym2 = y;
      yp2[i] += 2.0 * delta;
      ym2[i] -= 2.0 * delta;
      const double fd2 = (app.cost(yp2, d) - app.cost(ym2, d)) / (4.0 * delta);
      if (std::fabs(fd[i] - fd2) > 1e-6) kink = true;  // self-agreement filter
    }
    if (kink) continue;
    ++accepted;
    for (int i = 0; i <= n; ++i) CHECK(g[i] == doctest::Approx(fd[i]).epsilon(1e-6));
  }
}

TEST_CASE("analytic gradient equals the LP dual gradient off kinks") {
  RandomStream s(15, 0);
  int accepted = 0;
  while (accepted < 60) {
    const int n = 1 + static_cast<int>(s.next_double() * 3);
    const OwmsInstance app = random_instance(s, n);
    Vec y(n + 1), d(n);
    for (int i = 0; i <= n; ++i) y[i] = 8.0 * s.next_double();
    for (int i = 0; i < n; ++i) d[i] = 10.0 * s.next_double();
    // kink filter via FD self-agreement
    const double delta = 1e-4;
    bool kink = false;
    for (int i = 0; i <= n && !kink; ++i) {
      Vec yp = y, ym = y;
      yp[i] += delta;
      ym[i] -= delta;
      if (ym[i] < 0.0) { kink = true; break; }
      const double fd1 = (app.cost(yp, d) - app.cost(ym, d)) / (2.0 * delta);
      yp[i] += delta;
      ym[i] -= delta;
      const double fd2 = (app.cost(yp, d) - app.cost(ym, d)) / (4.0 * delta);
      if (std::fabs(fd1 - fd2) > 1e-6) kink = true;
    }
    if (kink) continue;
    ++accepted;
    const Vec g = app.gradient(y, d);
    const Vec gd = app.lp_gradient(y, d);
    for (int i = 0; i <= n; ++i) CHECK(g[i] == doctest::Approx(gd[i]).epsilon(1e-6));
  }
}

TEST_CASE("transition solver halts the configured store") {
  const OwmsInstance app = example_instance();
  // warehouse target feasible: plain componentwise max
  CHECK(app.transition_solver({1.0, 2.0, 0.0}, {2.0, 1.0, 1.0}) == Vec{2.0, 2.0, 1.0});
  // warehouse target infeasible: halt argmin(b - c) = store 2
  CHECK(app.transition_solver({3.0, 0.0, 0.0}, {2.0, 1.0, 1.0}) == Vec{3.0, 1.0, 0.0});
  // the argmax switch halts the most beneficial store instead
  OwmsInstance alt({1.0, 1.0, 1.0}, {10.0, 5.0}, {1.0, 2.0}, {20.0, 20.0, 20.0},
                   DemandModel::uniform(0, 10, 2), true);
  CHECK(alt.transition_solver({3.0, 0.0, 0.0}, {2.0, 1.0, 1.0}) == Vec{3.0, 0.0, 1.0});
  // already feasible: passthrough
  CHECK(app.transition_solver({0.0, 0.0, 0.0}, {2.0, 1.0, 1.0}) == Vec{2.0, 1.0, 1.0});
}

TEST_CASE("dynamics follow the delivery outcome") {
  const OwmsInstance app = example_instance();
  CHECK(app.dynamics({5.0, 1.0, 1.0}, {3.0, 2.0}) == Vec{2.0, 0.0, 0.0});
  CHECK(app.dynamics({1.0, 0.0, 0.0}, {2.0, 2.0}) == Vec{0.0, 0.0, 0.0});
  CHECK(app.dynamics({5.0, 1.0, 1.0}, {0.0, 0.0}) == Vec{5.0, 1.0, 1.0});
}

TEST_CASE("per-sample gradient norm stays within sigma0") {
  const OwmsInstance app = example_instance();
  const double expected = std::sqrt((1.0 + 15.0) * (1.0 + 15.0) + 121.0 + 36.0);
  CHECK(app.sigma0() == doctest::Approx(expected));
  RandomStream s(16, 0);
  for (int i = 0; i < 5000; ++i) {
    Vec y{20.0 * s.next_double(), 10.0 * s.next_double(), 10.0 * s.next_double()};
    const Vec d = app.demand().sample(s);
    CHECK(norm2(app.gradient(y, d)) <= app.sigma0());
  }
}

TEST_CASE("monte-carlo gradients obey the smoothness bound") {
  // || grad Q(y+dy) - grad Q(y) || <= beta ||dy|| + statistical slack
  OwmsInstance app({0.5, 1.0, 1.0}, {7.0, 5.0}, {1.0, 2.0}, {15.0, 10.0, 10.0},
                   DemandModel::uniform(0, 10, 2));
  const double beta = *app.theory_constants().beta;
  RandomStream s(18, 0);
  const long N = 100000;
  auto mc_grad = [&](const Vec& y) {
    RandomStream ds(18, 99);
    Vec g(3, 0.0);
    for (long j = 0; j < N; ++j) {
      const Vec gi = app.gradient(y, app.demand().sample(ds));
      for (int i = 0; i < 3; ++i) g[i] += gi[i];
    }
    for (double& v : g) v /= N;
    return g;
  };
  for (int trial = 0; trial < 3; ++trial) {
    Vec y{10.0 * s.next_double() + 1.0, 8.0 * s.next_double() + 1.0,
          8.0 * s.next_double() + 1.0};
    Vec dy{0.4 * s.next_double(), 0.4 * s.next_double(), 0.4 * s.next_double()};
    const Vec g1 = mc_grad(y);
    Vec y2 = y;
    for (int i = 0; i < 3; ++i) y2[i] += dy[i];
    const Vec g2 = mc_grad(y2);
    const double slack = 6.0 * app.sigma0() / std::sqrt(static_cast<double>(N));
    CHECK(norm2(g2 - g1) <= beta * norm2(dy) + slack);
  }
}

TEST_CASE("questionable cost parameters are flagged") {
  OwmsInstance bad({5.0, 1.0, 1.0}, {10.0, 1.5}, {1.0, 2.0}, {20.0, 20.0, 20.0},
                   DemandModel::uniform(0, 10, 2));
  CHECK_FALSE(bad.warnings().empty());
  CHECK(example_instance().warnings().empty());
}
