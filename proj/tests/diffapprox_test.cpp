#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "tem/diffapprox.hpp"
#include "tem/tgeometry.hpp"

using namespace tem;

namespace {

CoSimplexPoint random_point(int d, const Temperature& temp,
                            std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> p(d);
  double s = 0.0;
  for (double& v : p) {
    v = u(rng);
    s += v;
  }
  for (double& v : p) v /= s;
  return from_probability(p, temp);
}

}  // namespace

TEST_CASE("lse_t fixed values") {
  CHECK(lse_t({0.0, 0.0}, 1.0, Temperature(1.0)) ==
        doctest::Approx(std::log(2.0)));
  for (double t : {0.5, 1.0, 1.5}) {
    for (double T : {1.0, 10.0}) {
      // keep T*x inside the exp_t pole (T*x < 1/(t-1) for t > 1)
      CHECK(lse_t({0.03}, T, Temperature(t)) ==
            doctest::Approx(0.03).epsilon(1e-12));
    }
    CHECK(lse_t({0.37}, 1.0, Temperature(t)) ==
          doctest::Approx(0.37).epsilon(1e-12));
  }
  CHECK_THROWS_AS(lse_t({}, 1.0, Temperature(1.0)), std::invalid_argument);
  CHECK_THROWS_AS(lse_t({0.0}, -1.0, Temperature(1.0)), std::invalid_argument);
}

TEST_CASE("T limit recovers the max for t <= 1") {
  // the residual smoothing error scales like (1-t)*max*log_t(...) plus
  // log_t(d)/T, so the limit check uses small-magnitude inputs
  std::mt19937_64 rng(83);
  std::uniform_real_distribution<double> u(-0.004, 0.004);
  for (double t : {0.5, 0.9, 1.0}) {
    const Temperature temp(t);
    for (int k = 0; k < 200; ++k) {
      std::vector<double> x(6);
      for (double& v : x) v = u(rng);
      const double m = *std::max_element(x.begin(), x.end());
      CHECK(std::abs(lse_t(x, 1000.0, temp) - m) <= 1e-2);
    }
  }
}

TEST_CASE("sandwich bounds across the grid") {
  std::mt19937_64 rng(89);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (double t : {0.5, 0.8, 1.0, 1.2, 1.5}) {
    const Temperature temp(t);
    for (double T : {1.0, 10.0, 100.0}) {
      for (int d : {2, 8, 64}) {
        for (int k = 0; k < 60; ++k) {
          std::vector<double> x(d);
          for (double& v : x) v = u(rng) / std::max(1.0, T * (t - 1.0) * 2.0);
          double lo, hi;
          try {
            std::tie(lo, hi) = lse_error_bounds(x, T, temp);
          } catch (const std::domain_error&) {
            continue;  // clipped configuration, outside the bound's domain
          }
          const double v = lse_t(x, T, temp);
          CHECK(lo <= v + 1e-10);
          CHECK(v <= hi + 1e-10);
          // single element: both bounds collapse
          const auto [l1, h1] = lse_error_bounds({x[0]}, T, temp);
          CHECK(l1 == doctest::Approx(x[0]).epsilon(1e-10));
          CHECK(h1 == doctest::Approx(x[0]).epsilon(1e-10));
        }
      }
    }
  }
}

TEST_CASE("sum-form bound identity") {
  std::mt19937_64 rng(97);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (double t : {0.5, 1.2, 1.5}) {
    const Temperature temp(t);
    for (int k = 0; k < 500; ++k) {
      std::vector<double> x(5);
      for (double& v : x) v = u(rng);
      const double T = 4.0;
      std::vector<double> tx(x.size());
      for (size_t i = 0; i < x.size(); ++i) tx[i] = T * x[i];
      const double v = t_var_norm(tx, temp);
      const double eps =
          log_t(1.0 + (x.size() - 1.0) * exp_t(t_neg(v, temp), temp), temp);
      const double max_tx = *std::max_element(tx.begin(), tx.end());
      const double oplus_form = t_add(max_tx, eps, temp) / T;
      CHECK(lse_bound_sum_form(x, T, temp, eps) ==
            doctest::Approx(oplus_form).epsilon(1e-10));
    }
  }
}

TEST_CASE("differentiable distances converge to the exact ones") {
  std::mt19937_64 rng(101);
  const Temperature t1(1.0);
  const SmoothingConfig big{1000.0, 0.0};
  for (int k = 0; k < 100; ++k) {
    const auto p = random_point(4, t1, rng);
    const auto q = random_point(4, t1, rng);
    CHECK(std::abs(diff_hilbert(p, q, big) - t_hilbert_cosimplex(p, q)) <=
          1e-2);
    // symmetry is exact
    CHECK(diff_hilbert(p, q, big) == diff_hilbert(q, p, big));
    // asymmetry of the smoothed Funk matches the exact sign at large T
    const double exact_gap = t_funk_cosimplex(p, q) - t_funk_cosimplex(q, p);
    const double smooth_gap = diff_funk(p, q, big) - diff_funk(q, p, big);
    if (std::abs(exact_gap) > 1e-3) {
      CHECK(exact_gap * smooth_gap > 0.0);
    }
  }
  // self-distance bias at t=1 is 2 ln(d) / T
  const auto p = random_point(5, t1, rng);
  const SmoothingConfig cfg{50.0, 0.0};
  CHECK(diff_hilbert(p, p, cfg) ==
        doctest::Approx(2.0 * std::log(5.0) / 50.0).epsilon(1e-9));
}

TEST_CASE("gradients match finite differences") {
  // Directional derivatives along the co-simplex tangent space (directions
  // preserving the co-density sum), so the constructor's renormalization
  // stays O(h^2) and does not pollute the central differences.
  std::mt19937_64 rng(103);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto tangent_dir = [&](const CoSimplexPoint& z) {
    const double ts = z.temp().t_star;
    std::vector<double> c(z.dim()), v(z.dim());
    double cv = 0.0, cc = 0.0;
    for (int i = 0; i < z.dim(); ++i) {
      c[i] = std::pow(z[i], 1.0 / ts - 1.0) / ts;  // d(codensity sum)/dz_i
      v[i] = u(rng);
      cv += c[i] * v[i];
      cc += c[i] * c[i];
    }
    for (int i = 0; i < z.dim(); ++i) v[i] -= cv / cc * c[i];
    return v;
  };
  auto shift = [](const CoSimplexPoint& z, const std::vector<double>& v,
                  double h) {
    auto out = z.values();
    for (size_t i = 0; i < out.size(); ++i) out[i] += h * v[i];
    return CoSimplexPoint(out, z.temp());
  };
  int checked = 0;
  for (double t : {0.5, 0.8, 1.0, 1.2, 1.5}) {
    const Temperature temp(t);
    for (double delta : {0.0, 0.02}) {
      const SmoothingConfig cfg{10.0, delta};
      for (int k = 0; k < 110; ++k) {
        const auto p = random_point(4, temp, rng);
        const auto q = random_point(4, temp, rng);
        const auto [gp, gq] = diff_hilbert_gradient(p, q, cfg);
        const auto vp = tangent_dir(p);
        const auto vq = tangent_dir(q);
        const double h = 1e-6;
        const double fd_p = (diff_hilbert(shift(p, vp, h), q, cfg) -
                             diff_hilbert(shift(p, vp, -h), q, cfg)) /
                            (2 * h);
        const double fd_q = (diff_hilbert(p, shift(q, vq, h), cfg) -
                             diff_hilbert(p, shift(q, vq, -h), cfg)) /
                            (2 * h);
        double an_p = 0.0, an_q = 0.0;
        for (int i = 0; i < 4; ++i) {
          an_p += gp[i] * vp[i];
          an_q += gq[i] * vq[i];
        }
        const double scale = std::max({1.0, std::abs(fd_p), std::abs(fd_q)});
        CHECK(std::abs(an_p - fd_p) <= 1e-5 * scale);
        CHECK(std::abs(an_q - fd_q) <= 1e-5 * scale);
        ++checked;
      }
    }
  }
  CHECK(checked >= 1000);
}

TEST_CASE("histogram directions match the under/over-estimation regimes") {
  const SmoothingConfig cfg{10.0, 0.0};
  const auto over = relative_error_histogram(4000, 8, Temperature(0.8), cfg, 5);
  const auto under =
      relative_error_histogram(4000, 8, Temperature(1.2), cfg, 5);
  auto signed_mass = [](const Histogram& h, bool negative) {
    long total = 0, part = 0;
    for (size_t i = 0; i < h.counts.size(); ++i) {
      total += h.counts[i];
      if ((h.bins[i] < 0.0) == negative) part += h.counts[i];
    }
    return static_cast<double>(part) / static_cast<double>(total);
  };
  CHECK(signed_mass(over, false) >= 0.9);   // t < 1 overestimates
  CHECK(signed_mass(under, true) >= 0.9);   // t > 1 underestimates
  CHECK(over.mean > 0.0);
  CHECK(under.mean < 0.0);

  // near-exact regime at t=1 with large T concentrates at zero
  const auto tight =
      relative_error_histogram(500, 4, Temperature(1.0), {2000.0, 0.0}, 9);
  CHECK(std::abs(tight.mean) <= 0.05);

  // serialization carries the metadata
  const auto text = to_json(tight);
  CHECK(text.find("\"bins\"") != std::string::npos);
  CHECK(text.find("\"counts\"") != std::string::npos);
}
