#ifndef TEM_TCALCULUS_HPP
#define TEM_TCALCULUS_HPP

#include <functional>
#include <vector>

#include "tem/talgebra.hpp"
#include "tem/tgeometry.hpp"

// Tempered calculus: t-derivative, constant-t-derivative solutions, Riemann
// t-sums, t-integration and t-lengths on the tautological Finsler structure.
// Rederives the t-Funk distance from first principles.

namespace tem {

using ScalarFn = std::function<double(double)>;

// Division of [a, b] with one interior sample point per cell.
struct Division {
  std::vector<double> knots;          // strictly increasing, a .. b
  std::vector<double> sample_points;  // xi_i in (knots[i-1], knots[i])

  static Division uniform_midpoint(double a, double b, int n_cells);
  double step() const;  // max cell width
  void validate() const;
};

// Parameterized smooth path with velocity; velocity falls back to central
// finite differences of position when not supplied.
struct Curve {
  std::function<Point(double)> position;
  std::function<Point(double)> velocity;  // may be empty

  Point velocity_at(double s) const;
};

// Central-difference estimate of lim (f(x+d) -_t f(x)) / d.
double t_derivative(const ScalarFn& f, double x, const Temperature& temp,
                    double h = 0.0);

// Unique solution of D_t f = K with the classical t->1 limit K x.
ScalarFn const_t_derivative_solution(double K, const Temperature& temp);

// Unique solution of D_t D_t f = K with the classical t->1 limit (K/2) x^2.
ScalarFn const_t_second_derivative_solution(double K, const Temperature& temp);

// (+_t)-fold of |cell| * f(xi) over the division.
double riemann_t_sum(const ScalarFn& f, const Division& division,
                     const Temperature& temp);

// Primitive form F(b) -_t F(a).
double t_integral(const ScalarFn& primitive, double a, double b,
                  const Temperature& temp);

// Riemann t-sum on a uniform midpoint division.
double t_integral_numeric(const ScalarFn& f, double a, double b,
                          const Temperature& temp, int n_cells);

// Lagrangian of the tautological Finsler structure: inf{tau > 0 :
// x + xi/tau in domain}. Closed form for half-spaces, boundary-ratio form
// otherwise. Zero when the ray is contained in the domain.
double tautological_lagrangian(const ConvexDomain& domain, const Point& x,
                               const Point& xi);

// Numeric t-integral of F(gamma(s), gamma'(s)) over [0, 1].
double t_length(const ConvexDomain& domain, const Curve& curve,
                const Temperature& temp, int n_cells);

// Unit-speed linear t-geodesic: r + (1 - exp_t(-_t tau)) / F(r, xi) * xi.
Point t_geodesic_point(const ConvexDomain& domain, const Point& r,
                       const Point& xi, double tau, const Temperature& temp);

}  // namespace tem

#endif
