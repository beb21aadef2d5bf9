#include "tem/diffapprox.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "json.hpp"

#include "tem/tgeometry.hpp"

namespace tem {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log of exp_s(y), or -inf when clipped.
double log_exp_deformed(double y, double s) {
  if (std::abs(s - 1.0) < kClassicWindow) return y;
  const double base = 1.0 + (1.0 - s) * y;
  if (base <= 0.0) return kNegInf;
  return std::log(base) / (1.0 - s);
}

// log sum_i exp_s(T x_i), classical shifted accumulation in log space.
double log_sum_exp_deformed(const std::vector<double>& x, double T, double s) {
  double m = kNegInf;
  for (double xi : x) m = std::max(m, log_exp_deformed(T * xi, s));
  if (m == kNegInf) {
    throw std::domain_error("lse_t: all components clipped");
  }
  double acc = 0.0;
  for (double xi : x) {
    const double l = log_exp_deformed(T * xi, s);
    if (l != kNegInf) acc += std::exp(l - m);
  }
  return m + std::log(acc);
}

double lse_param(const std::vector<double>& x, double T, double s) {
  const double L = log_sum_exp_deformed(x, T, s);
  if (std::abs(s - 1.0) < kClassicWindow) return L / T;
  return std::expm1((1.0 - s) * L) / (1.0 - s) / T;
}

double op_temp(const Temperature& temp, const SmoothingConfig& cfg) {
  return cfg.delta > 0.0 ? 1.0 - cfg.delta : temp.t;
}

std::vector<double> log_ratio_coords(const CoSimplexPoint& p,
                                     const CoSimplexPoint& q) {
  std::vector<double> x(p.dim());
  for (int i = 0; i < p.dim(); ++i) {
    x[i] = log_t(p[i] / q[i], p.temp());
  }
  return x;
}

// softmax-style weights (d LSE_s / d x_i) = (exp_s(T x_i) / sum)^s
std::vector<double> lse_weights(const std::vector<double>& x, double T,
                                double s) {
  const double L = log_sum_exp_deformed(x, T, s);
  std::vector<double> w(x.size(), 0.0);
  for (size_t i = 0; i < x.size(); ++i) {
    const double l = log_exp_deformed(T * x[i], s);
    if (l != kNegInf) w[i] = std::exp(s * (l - L));
  }
  return w;
}

}  // namespace

double lse_t(const std::vector<double>& x, double T, const Temperature& temp) {
  if (x.empty() || !(T > 0.0)) {
    throw std::invalid_argument("lse_t: need nonempty x and T > 0");
  }
  return lse_param(x, T, temp.t);
}

std::pair<double, double> lse_error_bounds(const std::vector<double>& x,
                                           double T, const Temperature& temp) {
  const double d = static_cast<double>(x.size());
  std::vector<double> tx(x.size());
  for (size_t i = 0; i < x.size(); ++i) tx[i] = T * x[i];
  const double v = t_var_norm(tx, temp);
  const double decay = exp_t(t_neg(v, temp), temp);
  const double max_tx = *std::max_element(tx.begin(), tx.end());
  const double eps_l = log_t(1.0 + (d - 1.0) * decay, temp);
  const double eps_r = log_t((d - 1.0) + decay, temp);
  return {t_add(max_tx, eps_l, temp) / T, t_add(max_tx, eps_r, temp) / T};
}

double lse_bound_sum_form(const std::vector<double>& x, double T,
                          const Temperature& temp, double eps) {
  double max_x = *std::max_element(x.begin(), x.end());
  // exp_t(max T x)^{1-t} = 1 + (1-t) max T x
  return max_x + eps * (1.0 + (1.0 - temp.t) * T * max_x) / T;
}

double diff_funk(const CoSimplexPoint& p, const CoSimplexPoint& q,
                 const SmoothingConfig& cfg) {
  return lse_param(log_ratio_coords(p, q), cfg.T, op_temp(p.temp(), cfg));
}

double diff_hilbert(const CoSimplexPoint& p, const CoSimplexPoint& q,
                    const SmoothingConfig& cfg) {
  return t_add(diff_funk(p, q, cfg), diff_funk(q, p, cfg), p.temp());
}

std::pair<std::vector<double>, std::vector<double>> diff_hilbert_gradient(
    const CoSimplexPoint& p, const CoSimplexPoint& q,
    const SmoothingConfig& cfg) {
  const Temperature& temp = p.temp();
  const double t = temp.t;
  const double s = op_temp(temp, cfg);
  const int d = p.dim();

  const auto x = log_ratio_coords(p, q);  // forward ratios
  const auto y = log_ratio_coords(q, p);  // reverse ratios
  const double a = lse_param(x, cfg.T, s);
  const double b = lse_param(y, cfg.T, s);
  const auto wa = lse_weights(x, cfg.T, s);
  const auto wb = lse_weights(y, cfg.T, s);
  const double da = 1.0 + (1.0 - t) * b;  // d(a +_t b)/da
  const double db = 1.0 + (1.0 - t) * a;

  std::vector<double> gp(d), gq(d);
  for (int i = 0; i < d; ++i) {
    const double pi = p[i], qi = q[i];
    const double dx_dp = std::pow(pi, -t) * std::pow(qi, t - 1.0);
    const double dx_dq = -std::pow(pi, 1.0 - t) * std::pow(qi, t - 2.0);
    const double dy_dq = std::pow(qi, -t) * std::pow(pi, t - 1.0);
    const double dy_dp = -std::pow(qi, 1.0 - t) * std::pow(pi, t - 2.0);
    gp[i] = da * wa[i] * dx_dp + db * wb[i] * dy_dp;
    gq[i] = da * wa[i] * dx_dq + db * wb[i] * dy_dq;
  }
  return {std::move(gp), std::move(gq)};
}

Histogram relative_error_histogram(int n_pairs, int d, const Temperature& temp,
                                   const SmoothingConfig& cfg, uint64_t seed) {
  if (n_pairs < 1 || d < 2) {
    throw std::invalid_argument("relative_error_histogram: bad arguments");
  }
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  auto draw_point = [&]() {
    while (true) {
      std::vector<double> prob(d);
      double sum = 0.0;
      for (double& v : prob) {
        v = expo(rng);
        sum += v;
      }
      bool ok = true;
      for (double& v : prob) {
        v /= sum;
        if (v < 1e-10) ok = false;
      }
      if (ok) return from_probability(prob, temp);
    }
  };

  constexpr int kBins = 101;
  Histogram h;
  h.t = temp.t;
  h.T = cfg.T;
  h.delta = cfg.delta;
  h.d = d;
  h.counts.assign(kBins, 0);
  h.bins.resize(kBins);
  const double width = 2.0 / kBins;
  for (int i = 0; i < kBins; ++i) h.bins[i] = -1.0 + (i + 0.5) * width;

  double sum = 0.0, sum2 = 0.0;
  int used = 0;
  for (int k = 0; k < n_pairs; ++k) {
    const auto p = draw_point();
    const auto q = draw_point();
    const double exact = t_hilbert_cosimplex(p, q);
    if (exact == 0.0) continue;
    const double rel = (diff_hilbert(p, q, cfg) - exact) / exact;
    int bin = static_cast<int>(std::floor((rel + 1.0) / width));
    bin = std::clamp(bin, 0, kBins - 1);
    ++h.counts[bin];
    sum += rel;
    sum2 += rel * rel;
    ++used;
  }
  if (used > 0) {
    h.mean = sum / used;
    const double var = sum2 / used - h.mean * h.mean;
    h.sd = var > 0.0 ? std::sqrt(var) : 0.0;
  }
  return h;
}

std::string to_json(const Histogram& h) {
  nlohmann::json j;
  j["t"] = h.t;
  j["T"] = h.T;
  j["delta"] = h.delta;
  j["d"] = h.d;
  j["bins"] = h.bins;
  j["counts"] = h.counts;
  j["mean"] = h.mean;
  j["sd"] = h.sd;
  return j.dump();
}

}  // namespace tem
