#ifndef TEM_DIFFAPPROX_HPP
#define TEM_DIFFAPPROX_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tem/talgebra.hpp"
#include "tem/temparam.hpp"

// Smooth-max approximations: the tempered log-sum-exp LSE_t, differentiable
// t-Funk / t-Hilbert distances, sandwich error bounds, the mismatched-
// temperature variant and analytic gradients.

namespace tem {

struct SmoothingConfig {
  double T = 20.0;     // smoothing factor
  double delta = 0.0;  // > 0 switches the max operator to temperature 1-delta
};

// (1/T) log_t sum_i exp_t(T x_i). Stabilized by accumulating the per-term
// logs with a classical shifted log-sum-exp before mapping back through
// log_t; clipped terms contribute zero.
double lse_t(const std::vector<double>& x, double T, const Temperature& temp);

// Sandwich bounds (1/T)(max_i T x_i +_t eps^{l,r}) around lse_t.
std::pair<double, double> lse_error_bounds(const std::vector<double>& x,
                                           double T, const Temperature& temp);

// Equivalent standard-sum form of a bound: max_i x_i + eps (1+(1-t) max T x_i)/T.
double lse_bound_sum_form(const std::vector<double>& x, double T,
                          const Temperature& temp, double eps);

double diff_funk(const CoSimplexPoint& p, const CoSimplexPoint& q,
                 const SmoothingConfig& cfg);
double diff_hilbert(const CoSimplexPoint& p, const CoSimplexPoint& q,
                    const SmoothingConfig& cfg);

// Closed-form chain-rule gradient of diff_hilbert with respect to the raw
// components of both arguments.
std::pair<std::vector<double>, std::vector<double>> diff_hilbert_gradient(
    const CoSimplexPoint& p, const CoSimplexPoint& q,
    const SmoothingConfig& cfg);

struct Histogram {
  double t = 1.0;
  double T = 1.0;
  double delta = 0.0;
  int d = 2;
  std::vector<double> bins;  // bin centers over [-1, 1]
  std::vector<int> counts;
  double mean = 0.0;
  double sd = 0.0;
};

// Relative error (rho_dHG - rho_HG) / rho_HG over random co-simplex pairs
// sampled from the flat Dirichlet lift; 101 uniform bins over [-1, 1] with
// outliers clamped to the end bins.
Histogram relative_error_histogram(int n_pairs, int d, const Temperature& temp,
                                   const SmoothingConfig& cfg, uint64_t seed);

std::string to_json(const Histogram& h);

}  // namespace tem

#endif
