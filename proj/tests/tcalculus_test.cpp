#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "tem/tcalculus.hpp"

using namespace tem;

TEST_CASE("t-derivative closed forms") {
  for (double t : {0.5, 1.0, 1.3}) {
    const Temperature temp(t);
    // D_t log_t = 1/x
    auto f = [&](double x) { return log_t(x, temp); };
    CHECK(t_derivative(f, 2.0, temp) == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(t_derivative(f, 0.7, temp) ==
          doctest::Approx(1.0 / 0.7).epsilon(1e-6));
    // constants
    auto c = [](double) { return 0.25; };
    CHECK(t_derivative(c, 1.0, temp) == doctest::Approx(0.0).epsilon(1e-9));
  }
  // clipped value of f rejects the quotient
  const Temperature half(0.5);
  auto bad = [](double) { return -3.0; };
  CHECK_THROWS_AS(t_derivative(bad, 0.0, half), std::domain_error);
}

TEST_CASE("constant t-derivative solutions") {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(-0.4, 0.4);
  for (double t : {0.5, 1.0, 1.5}) {
    const Temperature temp(t);
    for (double K : {0.5, 3.0, -1.0}) {
      const auto f = const_t_derivative_solution(K, temp);
      CHECK(f(0.0) == doctest::Approx(0.0));
      for (int k = 0; k < 50; ++k) {
        const double x = u(rng);
        CHECK(t_derivative(f, x, temp) == doctest::Approx(K).epsilon(1e-6));
      }
    }
    // second-order: nested numeric t-derivative returns K
    const double K = 1.3;
    const auto g = const_t_second_derivative_solution(K, temp);
    CHECK(g(0.0) == doctest::Approx(0.0).epsilon(1e-12));
    for (int k = 0; k < 20; ++k) {
      const double x = u(rng);
      auto Dg = [&](double y) { return t_derivative(g, y, temp, 1e-5); };
      CHECK(t_derivative(Dg, x, temp, 1e-4) ==
            doctest::Approx(K).epsilon(1e-4));
    }
  }
  // t -> 1 reduces to Kx
  const auto near = const_t_derivative_solution(2.0, Temperature(1.0 - 1e-9));
  CHECK(near(0.3) == doctest::Approx(0.6).epsilon(1e-6));
  CHECK_THROWS_AS(const_t_second_derivative_solution(0.0, Temperature(0.5)),
                  std::invalid_argument);
}

TEST_CASE("Riemann t-sums") {
  const Temperature t1(1.0);
  // t=1: ordinary midpoint Riemann sum of x^2 on [0,1]
  const auto div = Division::uniform_midpoint(0.0, 1.0, 1000);
  auto sq = [](double x) { return x * x; };
  CHECK(riemann_t_sum(sq, div, t1) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-5));

  // single cell
  Division one;
  one.knots = {0.0, 2.0};
  one.sample_points = {0.5};
  CHECK(riemann_t_sum(sq, one, Temperature(0.5)) == doctest::Approx(0.5));

  // accumulation order invariance: reversed division knots processed forward
  const Temperature half(0.5);
  const auto d1 = Division::uniform_midpoint(1.0, 2.0, 64);
  double fwd = riemann_t_sum([](double x) { return 1.0 / x; }, d1, half);
  double rev = 0.0;
  for (int i = static_cast<int>(d1.sample_points.size()) - 1; i >= 0; --i) {
    rev = t_add(rev,
                (d1.knots[i + 1] - d1.knots[i]) * (1.0 / d1.sample_points[i]),
                half);
  }
  CHECK(fwd == doctest::Approx(rev).epsilon(1e-12));

  Division bad;
  bad.knots = {0.0, 1.0, 0.5};
  bad.sample_points = {0.5, 0.7};
  CHECK_THROWS_AS(riemann_t_sum(sq, bad, t1), std::invalid_argument);
}

TEST_CASE("t-integral of 1/x") {
  auto inv = [](double x) { return 1.0 / x; };
  for (double t : {0.5, 1.0, 1.5}) {
    const Temperature temp(t);
    auto primitive = [&](double x) { return log_t(x, temp); };
    const double exact = t_integral(primitive, 1.0, 2.0, temp);
    CHECK(exact == doctest::Approx(t_sub(log_t(2.0, temp), 0.0, temp)));
    CHECK(t_integral(primitive, 1.5, 1.5, temp) == doctest::Approx(0.0));

    // convergence with observed order >= 1
    const double e1 = std::abs(t_integral_numeric(inv, 1.0, 2.0, temp, 100) -
                               exact);
    const double e2 = std::abs(t_integral_numeric(inv, 1.0, 2.0, temp, 200) -
                               exact);
    CHECK(e2 <= e1 / 1.9);
    CHECK(std::abs(t_integral_numeric(inv, 1.0, 2.0, temp, 100000) - exact) <=
          1e-4);
  }
}

TEST_CASE("tautological Lagrangian") {
  const auto half = ConvexDomain::half_space({1.0, 0.0}, 1.0);
  CHECK(tautological_lagrangian(half, {0.0, 0.0}, {1.0, 0.0}) ==
        doctest::Approx(1.0));
  CHECK(tautological_lagrangian(half, {0.0, 0.0}, {-1.0, 0.0}) == 0.0);
  CHECK(tautological_lagrangian(half, {0.0, 0.0}, {0.0, 0.0}) == 0.0);
  CHECK_THROWS_AS(tautological_lagrangian(half, {2.0, 0.0}, {1.0, 0.0}),
                  std::domain_error);

  const auto ball = ConvexDomain::ball({0.0, 0.0}, 1.0);
  // positive homogeneity
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  for (int k = 0; k < 200; ++k) {
    const Point x = {u(rng), u(rng)};
    const Point xi = {u(rng), u(rng)};
    const double F = tautological_lagrangian(ball, x, xi);
    Point xi3 = xi;
    for (double& v : xi3) v *= 3.0;
    CHECK(tautological_lagrangian(ball, x, xi3) ==
          doctest::Approx(3.0 * F).epsilon(1e-8));
  }
  // nested domains reverse the ordering of F
  const auto big = ConvexDomain::ball({0.0, 0.0}, 2.0);
  for (int k = 0; k < 100; ++k) {
    const Point x = {u(rng), u(rng)};
    const Point xi = {u(rng), u(rng)};
    CHECK(tautological_lagrangian(ball, x, xi) + 1e-12 >=
          tautological_lagrangian(big, x, xi));
  }
}

TEST_CASE("t-length of straight rays equals t-Funk") {
  const auto ball = ConvexDomain::ball({0.0, 0.0}, 1.0);
  const Point r = {0.1, -0.2};
  const Point s = {0.4, 0.3};
  Curve seg;
  seg.position = [&](double u) {
    return Point{r[0] + u * (s[0] - r[0]), r[1] + u * (s[1] - r[1])};
  };
  seg.velocity = [&](double) { return Point{s[0] - r[0], s[1] - r[1]}; };
  for (double t : {0.5, 1.0}) {
    const Temperature temp(t);
    const double funk = t_funk_domain(ball, r, s, temp);
    CHECK(t_length(ball, seg, temp, 100000) ==
          doctest::Approx(funk).epsilon(1e-4));
  }
  Curve still;
  still.position = [&](double) { return r; };
  still.velocity = [](double) { return Point{0.0, 0.0}; };
  CHECK(t_length(ball, still, Temperature(0.5), 100) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("t-geodesics are unit speed") {
  const auto ball = ConvexDomain::ball({0.0, 0.0}, 1.0);
  const Point r = {0.2, 0.1};
  const Point xi = {0.6, -0.3};
  std::mt19937_64 rng(79);
  std::uniform_real_distribution<double> u(0.0, 1.5);
  for (double t : {0.5, 1.0, 1.3}) {
    const Temperature temp(t);
    CHECK(t_geodesic_point(ball, r, xi, 0.0, temp) == Point{r});
    for (int k = 0; k < 100; ++k) {
      const double tau = u(rng);
      const auto g = t_geodesic_point(ball, r, xi, tau, temp);
      CHECK(t_funk_domain(ball, r, g, temp) ==
            doctest::Approx(tau).epsilon(1e-9));
    }
  }
  // classical Funk geodesic at t=1
  const double F = tautological_lagrangian(ball, r, xi);
  const auto g1 = t_geodesic_point(ball, r, xi, 0.7, Temperature(1.0));
  CHECK(g1[0] == doctest::Approx(r[0] + (1.0 - std::exp(-0.7)) / F * xi[0]));
  CHECK(g1[1] == doctest::Approx(r[1] + (1.0 - std::exp(-0.7)) / F * xi[1]));
}
