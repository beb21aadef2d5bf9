#include "tem/tcalculus.hpp"

#include <cmath>

namespace tem {

Division Division::uniform_midpoint(double a, double b, int n_cells) {
  if (n_cells < 1 || !(a < b)) {
    throw std::invalid_argument("Division: need a < b and n_cells >= 1");
  }
  Division div;
  div.knots.resize(n_cells + 1);
  div.sample_points.resize(n_cells);
  const double w = (b - a) / n_cells;
  for (int i = 0; i <= n_cells; ++i) div.knots[i] = a + i * w;
  div.knots.back() = b;
  for (int i = 0; i < n_cells; ++i) {
    div.sample_points[i] = 0.5 * (div.knots[i] + div.knots[i + 1]);
  }
  return div;
}

double Division::step() const {
  double s = 0.0;
  for (size_t i = 1; i < knots.size(); ++i) {
    s = std::max(s, knots[i] - knots[i - 1]);
  }
  return s;
}

void Division::validate() const {
  if (knots.size() < 2 || sample_points.size() != knots.size() - 1) {
    throw std::invalid_argument("Division: shape mismatch");
  }
  for (size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i - 1] < knots[i])) {
      throw std::invalid_argument("Division: knots must increase");
    }
    const double xi = sample_points[i - 1];
    if (!(knots[i - 1] < xi) || !(xi < knots[i])) {
      throw std::invalid_argument("Division: sample point outside cell");
    }
  }
}

Point Curve::velocity_at(double s) const {
  if (velocity) return velocity(s);
  const double h = 1e-6;
  const Point a = position(s - h);
  const Point b = position(s + h);
  Point v(a.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = (b[i] - a[i]) / (2.0 * h);
  return v;
}

double t_derivative(const ScalarFn& f, double x, const Temperature& temp,
                    double h) {
  const double fx = f(x);
  const double scale = 1.0 + (1.0 - temp.t) * fx;
  if (scale <= 0.0) {
    throw std::domain_error("t_derivative: exp_t(f(x)) clipped");
  }
  if (h <= 0.0) h = 1e-5 * std::max(1.0, std::abs(x));
  // (f(x+d) -_t f(x))/d = (f(x+d) - f(x)) / (d (1 + (1-t) f(x))):
  // symmetrizing the difference keeps the O(h^2) truncation.
  return (f(x + h) - f(x - h)) / (2.0 * h * scale);
}

ScalarFn const_t_derivative_solution(double K, const Temperature& temp) {
  const double u = 1.0 - temp.t;
  if (temp.classic()) {
    return [K](double x) { return K * x; };
  }
  return [K, u](double x) { return std::expm1(u * K * x) / u; };
}

ScalarFn const_t_second_derivative_solution(double K, const Temperature& temp) {
  if (K == 0.0) {
    throw std::invalid_argument("const_t_second_derivative_solution: K != 0");
  }
  const double u = 1.0 - temp.t;
  if (temp.classic()) {
    return [K](double x) { return 0.5 * K * x * x; };
  }
  return [K, u](double x) {
    const double inner = (std::expm1(u * K * x) / K - u * x) / u;
    return std::expm1(inner) / u;
  };
}

double riemann_t_sum(const ScalarFn& f, const Division& division,
                     const Temperature& temp) {
  division.validate();
  double acc = 0.0;
  for (size_t i = 1; i < division.knots.size(); ++i) {
    const double w = division.knots[i] - division.knots[i - 1];
    acc = t_add(acc, w * f(division.sample_points[i - 1]), temp);
  }
  return acc;
}

double t_integral(const ScalarFn& primitive, double a, double b,
                  const Temperature& temp) {
  return t_sub(primitive(b), primitive(a), temp);
}

double t_integral_numeric(const ScalarFn& f, double a, double b,
                          const Temperature& temp, int n_cells) {
  if (a == b) return 0.0;
  return riemann_t_sum(f, Division::uniform_midpoint(a, b, n_cells), temp);
}

double tautological_lagrangian(const ConvexDomain& domain, const Point& x,
                               const Point& xi) {
  if (!domain.contains(x)) {
    throw std::domain_error("tautological_lagrangian: x outside domain");
  }
  if (domain.kind() == ConvexDomain::Kind::HalfSpace) {
    const auto& nu = domain.normal();
    double num = 0.0, den = domain.offset();
    for (size_t i = 0; i < xi.size(); ++i) {
      num += nu[i] * xi[i];
      den -= nu[i] * x[i];
    }
    return std::max(num / den, 0.0);
  }
  double xi_norm = 0.0;
  for (double v : xi) xi_norm += v * v;
  xi_norm = std::sqrt(xi_norm);
  if (xi_norm == 0.0) return 0.0;
  // F(x, xi) = |xi| / |b - x| where b is the boundary hit along xi
  const auto hit = domain.ray_boundary_dir(x, xi);
  if (!hit) return 0.0;
  double reach = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    reach += ((*hit)[i] - x[i]) * ((*hit)[i] - x[i]);
  }
  return xi_norm / std::sqrt(reach);
}

double t_length(const ConvexDomain& domain, const Curve& curve,
                const Temperature& temp, int n_cells) {
  return t_integral_numeric(
      [&](double s) {
        const Point pos = curve.position(s);
        if (!domain.contains(pos)) {
          throw std::domain_error("t_length: curve exits domain");
        }
        return tautological_lagrangian(domain, pos, curve.velocity_at(s));
      },
      0.0, 1.0, temp, n_cells);
}

Point t_geodesic_point(const ConvexDomain& domain, const Point& r,
                       const Point& xi, double tau, const Temperature& temp) {
  const double F = tautological_lagrangian(domain, r, xi);
  if (!(F > 0.0)) {
    throw std::domain_error("t_geodesic_point: F(r, xi) must be positive");
  }
  const double decay = exp_t(t_neg(tau, temp), temp);
  if (decay <= 0.0 && tau != 0.0) {
    throw std::domain_error("t_geodesic_point: exp_t(-_t tau) clipped");
  }
  Point out(r.size());
  for (size_t i = 0; i < r.size(); ++i) {
    out[i] = r[i] + (1.0 - decay) / F * xi[i];
  }
  return out;
}

}  // namespace tem
