#ifndef TEM_TALGEBRA_HPP
#define TEM_TALGEBRA_HPP

#include <cmath>
#include <stdexcept>

// Deformed scalar algebra: tempered log/exp and the (+_t, -_t) operators.
// Everything else in the library is built on these four functions.

namespace tem {

// Switch to the classic log/exp branch inside this window around t = 1;
// the (x^{1-t}-1)/(1-t) form cancels catastrophically there.
inline constexpr double kClassicWindow = 1e-10;

struct Temperature {
  double t;
  double t_star;  // conjugate exponent 1/(2-t), cached

  explicit Temperature(double t_) : t(t_), t_star(1.0 / (2.0 - t_)) {
    if (!(t_ < 2.0)) {
      throw std::domain_error("Temperature: t must be < 2");
    }
  }

  bool classic() const { return std::abs(t - 1.0) < kClassicWindow; }
};

namespace detail {

// Raw deformed log/exp at an arbitrary parameter s. Used internally where a
// parameter outside the t < 2 window appears (e.g. log_{t-1}, the lifted
// t*-Funk route), so the Temperature gate is bypassed on purpose.
inline double log_deformed(double x, double s) {
  if (x <= 0.0) throw std::domain_error("log_t: x must be > 0");
  if (std::abs(s - 1.0) < kClassicWindow) return std::log(x);
  return std::expm1((1.0 - s) * std::log(x)) / (1.0 - s);
}

inline double exp_deformed(double y, double s) {
  if (std::abs(s - 1.0) < kClassicWindow) return std::exp(y);
  const double base = 1.0 + (1.0 - s) * y;
  if (base <= 0.0) return 0.0;  // clipped branch, defined behavior
  return std::exp(std::log(base) / (1.0 - s));
}

}  // namespace detail

inline double log_t(double x, const Temperature& temp) {
  return detail::log_deformed(x, temp.t);
}

inline double exp_t(double y, const Temperature& temp) {
  return detail::exp_deformed(y, temp.t);
}

// True iff exp_t(y) would clip to zero.
inline bool exp_t_clipped(double y, const Temperature& temp) {
  if (temp.classic()) return false;
  return 1.0 + (1.0 - temp.t) * y <= 0.0;
}

// a +_t b = log_t(exp_t a * exp_t b), closed form a + b + (1-t) a b.
inline double t_add(double a, double b, const Temperature& temp) {
  if (exp_t_clipped(a, temp) || exp_t_clipped(b, temp)) {
    throw std::domain_error("t_add: clipped operand");
  }
  return a + b + (1.0 - temp.t) * a * b;
}

// a -_t b = (a - b) / (1 + (1-t) b), requires exp_t(b) != 0.
inline double t_sub(double a, double b, const Temperature& temp) {
  if (exp_t_clipped(b, temp)) {
    throw std::domain_error("t_sub: exp_t of subtrahend is zero");
  }
  return (a - b) / (1.0 + (1.0 - temp.t) * b);
}

// -_t x = 0 -_t x
inline double t_neg(double x, const Temperature& temp) {
  return t_sub(0.0, x, temp);
}

// log_t(exp(u)): the monotone link between classical and tempered distances.
inline double log_t_of_exp(double u, const Temperature& temp) {
  if (temp.classic()) return u;
  return std::expm1((1.0 - temp.t) * u) / (1.0 - temp.t);
}

}  // namespace tem

#endif
