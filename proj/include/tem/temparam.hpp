#ifndef TEM_TEMPARAM_HPP
#define TEM_TEMPARAM_HPP

#include <string>
#include <vector>

#include "tem/talgebra.hpp"

// Discrete TEM representations and the conversions between them: the three
// dual coordinate systems (minimal, unconstrained, constrained), their
// Legendre duals and links, the Lagrange multiplier and tempered softmax.

namespace tem {

using Matrix = std::vector<std::vector<double>>;

// A discrete TEM p~ in the co-simplex: positive vector whose co-density
// p~^{1/t*} sums to one. Constructors re-normalize small drift (< 1e-6)
// and reject anything larger, as well as components <= 1e-12.
class CoSimplexPoint {
 public:
  CoSimplexPoint(std::vector<double> values, Temperature temp);

  const std::vector<double>& values() const { return values_; }
  const Temperature& temp() const { return temp_; }
  int dim() const { return static_cast<int>(values_.size()); }
  double operator[](int i) const { return values_[i]; }

 private:
  std::vector<double> values_;
  Temperature temp_;
};

// p = p~^{1/t*}, the probability vector carrying the unit-mass constraint.
std::vector<double> codensity(const CoSimplexPoint& p);

// p~ = p^{t*}; inverse of codensity.
CoSimplexPoint from_probability(const std::vector<double>& p, Temperature temp);

// Negative tempered entropy sum_i (p~_i log_t p~_i - log_{t-1} p~_i).
double neg_tempered_entropy(const CoSimplexPoint& p);

struct MinimalParams {
  std::vector<double> theta_hat;  // d-1 reduced coordinates
  double cumulant;                // G_t = log_t(1 / p~_d)
};

MinimalParams minimal_link(const CoSimplexPoint& p);
CoSimplexPoint minimal_inverse_link(const std::vector<double>& theta_hat,
                                    Temperature temp);
double minimal_dual(const std::vector<double>& theta_hat, Temperature temp);

// Bregman divergence of the minimal form in reduced coordinates.
double bregman_minimal(const CoSimplexPoint& p, const CoSimplexPoint& q);

// Unconstrained Legendre dual t*(sum_i exp_t^{1/t*} theta_i - 1);
// its gradient is the inverse link exp_t(theta).
double unconstrained_dual(const std::vector<double>& theta, Temperature temp);

// Lagrange multiplier of the constrained dual; closed form for t != 1,
// log-inverse geometric mean of the co-density at t = 1.
double lagrange_lambda(const CoSimplexPoint& p);

struct ConstrainedParams {
  std::vector<double> theta_check;
  Temperature temp;
};

// theta_check = log_t(p~ / lambda~_t), lying on the tangent space of the
// co-simplex constraint at p~.
ConstrainedParams constrained_link(const CoSimplexPoint& p);

// P_t = I - p~^{1-t} (p~^{1-t})^T / sum_i p~_i^{2-2t}; idempotent, fixes
// theta_check.
Matrix tangent_projection(const CoSimplexPoint& p);

// Inverse link of the constrained dual: exp_t(th_i) / (sum exp_t^{1/t*})^{t*}.
CoSimplexPoint tempered_softmax(const std::vector<double>& theta_check,
                                Temperature temp);

// Tempered log-sum-exp log_t[(sum_i exp_t^{1/t*} th_i)^{t*}].
double constrained_dual(const std::vector<double>& theta_check,
                        Temperature temp);

std::string to_json(const CoSimplexPoint& p);
CoSimplexPoint cosimplex_from_json(const std::string& text);

}  // namespace tem

#endif
