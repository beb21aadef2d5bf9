#include "tem/temparam.hpp"

#include <cmath>
#include <numeric>

#include "json.hpp"

namespace tem {

namespace {

double codensity_sum(const std::vector<double>& values, const Temperature& temp) {
  double s = 0.0;
  for (double v : values) s += std::pow(v, 1.0 / temp.t_star);
  return s;
}

// exp_t(y)^{1/t*}, the co-density weight of a dual coordinate.
double exp_t_pow(double y, const Temperature& temp) {
  const double e = exp_t(y, temp);
  if (e <= 0.0) throw std::domain_error("exp_t clipped in dual evaluation");
  return std::pow(e, 1.0 / temp.t_star);
}

}  // namespace

CoSimplexPoint::CoSimplexPoint(std::vector<double> values, Temperature temp)
    : values_(std::move(values)), temp_(temp) {
  if (values_.empty()) throw std::invalid_argument("CoSimplexPoint: empty");
  for (double v : values_) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::domain_error("CoSimplexPoint: components must be positive");
    }
  }
  const double s = codensity_sum(values_, temp_);
  if (std::abs(s - 1.0) > 1e-6) {
    throw std::domain_error("CoSimplexPoint: co-density sum deviates from 1");
  }
  if (s != 1.0) {
    const double scale = std::pow(s, -temp_.t_star);
    for (double& v : values_) v *= scale;
  }
  for (double v : values_) {
    if (v <= 1e-12) {
      throw std::domain_error("CoSimplexPoint: boundary point rejected");
    }
  }
}

std::vector<double> codensity(const CoSimplexPoint& p) {
  std::vector<double> out(p.values().size());
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] = std::pow(p[i], 1.0 / p.temp().t_star);
  }
  return out;
}

CoSimplexPoint from_probability(const std::vector<double>& p, Temperature temp) {
  std::vector<double> values(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] > 0.0)) {
      throw std::domain_error("from_probability: entries must be positive");
    }
    values[i] = std::pow(p[i], temp.t_star);
  }
  return CoSimplexPoint(std::move(values), temp);
}

double neg_tempered_entropy(const CoSimplexPoint& p) {
  const double t = p.temp().t;
  double sum = 0.0;
  for (double v : p.values()) {
    // log_{t-1}: the deformed log evaluated at parameter t-1
    sum += v * detail::log_deformed(v, t) - detail::log_deformed(v, t - 1.0);
  }
  return sum;
}

MinimalParams minimal_link(const CoSimplexPoint& p) {
  const int d = p.dim();
  const double last = p[d - 1];
  MinimalParams out;
  out.theta_hat.resize(d - 1);
  for (int i = 0; i < d - 1; ++i) {
    out.theta_hat[i] = log_t(p[i] / last, p.temp());
  }
  out.cumulant = log_t(1.0 / last, p.temp());
  return out;
}

CoSimplexPoint minimal_inverse_link(const std::vector<double>& theta_hat,
                                    Temperature temp) {
  double denom_base = 1.0;
  for (double th : theta_hat) denom_base += exp_t_pow(th, temp);
  const double denom = std::pow(denom_base, temp.t_star);
  std::vector<double> values(theta_hat.size() + 1);
  for (size_t i = 0; i < theta_hat.size(); ++i) {
    values[i] = exp_t(theta_hat[i], temp) / denom;
    if (!(values[i] > 0.0)) {
      throw std::domain_error("minimal_inverse_link: left positive orthant");
    }
  }
  values.back() = 1.0 / denom;
  return CoSimplexPoint(std::move(values), temp);
}

double minimal_dual(const std::vector<double>& theta_hat, Temperature temp) {
  double base = 1.0;
  for (double th : theta_hat) base += exp_t_pow(th, temp);
  return log_t(std::pow(base, temp.t_star), temp);
}

double bregman_minimal(const CoSimplexPoint& p, const CoSimplexPoint& q) {
  const int d = p.dim();
  if (q.dim() != d) throw std::invalid_argument("bregman_minimal: dim mismatch");
  const Temperature& temp = p.temp();
  double sum = 0.0;
  for (int i = 0; i < d - 1; ++i) {
    sum += p[i] * (log_t(p[i] / p[d - 1], temp) - log_t(q[i] / q[d - 1], temp));
  }
  return sum - log_t(1.0 / p[d - 1], temp) + log_t(1.0 / q[d - 1], temp);
}

double unconstrained_dual(const std::vector<double>& theta, Temperature temp) {
  double sum = 0.0;
  for (double th : theta) sum += exp_t_pow(th, temp);
  return temp.t_star * (sum - 1.0);
}

double lagrange_lambda(const CoSimplexPoint& p) {
  const Temperature& temp = p.temp();
  if (temp.classic()) {
    double mean_log = 0.0;
    for (double v : p.values()) mean_log += std::log(v);
    return -mean_log / p.dim();
  }
  const double t = temp.t;
  double num = 0.0, den = 0.0;
  for (double v : p.values()) {
    num += std::pow(v, 1.0 - t);
    den += std::pow(v, 2.0 - 2.0 * t);
  }
  return log_t(std::pow(num / den, 1.0 / (1.0 - t)), temp);
}

ConstrainedParams constrained_link(const CoSimplexPoint& p) {
  const Temperature& temp = p.temp();
  const double lam = lagrange_lambda(p);
  const double lam_tilde = 1.0 / exp_t(lam, temp);
  ConstrainedParams out{std::vector<double>(p.dim()), temp};
  for (int i = 0; i < p.dim(); ++i) {
    out.theta_check[i] = log_t(p[i] / lam_tilde, temp);
  }
  return out;
}

Matrix tangent_projection(const CoSimplexPoint& p) {
  const int d = p.dim();
  const double t = p.temp().t;
  std::vector<double> n(d);
  double norm2 = 0.0;
  for (int i = 0; i < d; ++i) {
    n[i] = std::pow(p[i], 1.0 - t);
    norm2 += n[i] * n[i];
  }
  Matrix P(d, std::vector<double>(d, 0.0));
  for (int i = 0; i < d; ++i) {
    P[i][i] = 1.0;
    for (int j = 0; j < d; ++j) {
      P[i][j] -= n[i] * n[j] / norm2;
    }
  }
  return P;
}

CoSimplexPoint tempered_softmax(const std::vector<double>& theta_check,
                                Temperature temp) {
  double base = 0.0;
  int unclipped = 0;
  for (double th : theta_check) {
    const double e = exp_t(th, temp);
    if (e > 0.0) {
      base += std::pow(e, 1.0 / temp.t_star);
      ++unclipped;
    }
  }
  if (unclipped == 0) {
    throw std::domain_error("tempered_softmax: all components clipped");
  }
  const double denom = std::pow(base, temp.t_star);
  std::vector<double> values(theta_check.size());
  for (size_t i = 0; i < theta_check.size(); ++i) {
    values[i] = exp_t(theta_check[i], temp) / denom;
  }
  return CoSimplexPoint(std::move(values), temp);
}

double constrained_dual(const std::vector<double>& theta_check,
                        Temperature temp) {
  double base = 0.0;
  for (double th : theta_check) base += exp_t_pow(th, temp);
  return log_t(std::pow(base, temp.t_star), temp);
}

std::string to_json(const CoSimplexPoint& p) {
  nlohmann::json j;
  j["t"] = p.temp().t;
  j["values"] = p.values();
  return j.dump();
}

CoSimplexPoint cosimplex_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  return CoSimplexPoint(j.at("values").get<std::vector<double>>(),
                        Temperature(j.at("t").get<double>()));
}

}  // namespace tem
