#include "tem/tgeometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tem {

namespace {

double dot(const Point& a, const Point& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const Point& a) { return std::sqrt(dot(a, a)); }

Point sub(const Point& a, const Point& b) {
  Point out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

double dist2(const Point& a, const Point& b) { return norm2(sub(a, b)); }

void check_pair(const CoSimplexPoint& p, const CoSimplexPoint& q) {
  if (p.dim() != q.dim()) {
    throw std::invalid_argument("co-simplex pair: dimension mismatch");
  }
  if (std::abs(p.temp().t - q.temp().t) > 1e-12) {
    throw std::invalid_argument("co-simplex pair: temperature mismatch");
  }
}

}  // namespace

ConvexDomain ConvexDomain::simplex(int d) {
  ConvexDomain dom;
  dom.kind_ = Kind::Simplex;
  dom.dimension_ = d;
  return dom;
}

ConvexDomain ConvexDomain::ball(Point center, double radius) {
  ConvexDomain dom;
  dom.kind_ = Kind::Ball;
  dom.dimension_ = static_cast<int>(center.size());
  dom.center_ = std::move(center);
  dom.radius_ = radius;
  return dom;
}

ConvexDomain ConvexDomain::half_space(Point normal, double offset) {
  ConvexDomain dom;
  dom.kind_ = Kind::HalfSpace;
  dom.dimension_ = static_cast<int>(normal.size());
  dom.normal_ = std::move(normal);
  dom.offset_ = offset;
  return dom;
}

bool ConvexDomain::contains(const Point& x) const {
  if (static_cast<int>(x.size()) != dimension_) return false;
  switch (kind_) {
    case Kind::Simplex: {
      double sum = 0.0;
      for (double xi : x) {
        if (!(xi > 0.0)) return false;
        sum += xi;
      }
      return std::abs(sum - 1.0) <= 1e-9;
    }
    case Kind::Ball:
      return dist2(x, center_) < radius_;
    case Kind::HalfSpace:
      return dot(normal_, x) < offset_;
  }
  return false;
}

std::optional<Point> ConvexDomain::ray_boundary(const Point& r,
                                                const Point& s) const {
  if (!contains(s)) {
    throw std::domain_error("ray_boundary: point outside domain");
  }
  return ray_boundary_dir(r, sub(s, r));
}

std::optional<Point> ConvexDomain::ray_boundary_dir(const Point& r,
                                                    const Point& u) const {
  if (!contains(r)) {
    throw std::domain_error("ray_boundary: point outside domain");
  }
  if (norm2(u) == 0.0) {
    throw std::invalid_argument("ray_boundary: zero direction");
  }
  double tau = std::numeric_limits<double>::infinity();
  switch (kind_) {
    case Kind::Simplex: {
      // boundary faces x_i = 0; the affine sum is preserved along the ray
      for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] < 0.0) tau = std::min(tau, -r[i] / u[i]);
      }
      break;
    }
    case Kind::Ball: {
      const Point rc = sub(r, center_);
      const double a = dot(u, u);
      const double b = dot(rc, u);
      const double c = dot(rc, rc) - radius_ * radius_;
      tau = (-b + std::sqrt(b * b - a * c)) / a;
      break;
    }
    case Kind::HalfSpace: {
      const double along = dot(normal_, u);
      if (along <= 0.0) return std::nullopt;  // ray contained: at infinity
      tau = (offset_ - dot(normal_, r)) / along;
      break;
    }
  }
  Point out(r.size());
  for (size_t i = 0; i < r.size(); ++i) out[i] = r[i] + tau * u[i];
  return out;
}

double t_funk_domain(const ConvexDomain& domain, const Point& r, const Point& s,
                     const Temperature& temp) {
  if (!domain.contains(r) || !domain.contains(s)) {
    throw std::domain_error("t_funk_domain: point outside domain");
  }
  if (dist2(r, s) == 0.0) return 0.0;
  const auto hit = domain.ray_boundary(r, s);
  if (!hit) return 0.0;  // boundary at infinity
  return log_t(dist2(r, *hit) / dist2(s, *hit), temp);
}

double t_hilbert_domain(const ConvexDomain& domain, const Point& r,
                        const Point& s, const Temperature& temp) {
  return t_add(t_funk_domain(domain, r, s, temp),
               t_funk_domain(domain, s, r, temp), temp);
}

double t_funk_raw(const Point& p, const Point& q, const Temperature& temp) {
  if (p.size() != q.size() || p.empty()) {
    throw std::invalid_argument("t_funk_raw: shape mismatch");
  }
  double max_log_ratio = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] > 0.0) || !(q[i] > 0.0)) {
      throw std::domain_error("t_funk_raw: entries must be positive");
    }
    max_log_ratio = std::max(max_log_ratio, std::log(p[i]) - std::log(q[i]));
  }
  return log_t_of_exp(max_log_ratio, temp);
}

double t_hilbert_raw(const Point& p, const Point& q, const Temperature& temp) {
  if (p.size() != q.size() || p.empty()) {
    throw std::invalid_argument("t_hilbert_raw: shape mismatch");
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] > 0.0) || !(q[i] > 0.0)) {
      throw std::domain_error("t_hilbert_raw: entries must be positive");
    }
    const double lr = std::log(p[i]) - std::log(q[i]);
    lo = std::min(lo, lr);
    hi = std::max(hi, lr);
  }
  return log_t_of_exp(hi - lo, temp);
}

double t_funk_cosimplex(const CoSimplexPoint& p, const CoSimplexPoint& q) {
  check_pair(p, q);
  return t_funk_raw(p.values(), q.values(), p.temp());
}

double t_hilbert_cosimplex(const CoSimplexPoint& p, const CoSimplexPoint& q) {
  check_pair(p, q);
  return t_hilbert_raw(p.values(), q.values(), p.temp());
}

double t_var_norm(const std::vector<double>& x, const Temperature& temp) {
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  if (*lo == *hi) return 0.0;  // constant vectors, any t
  return t_sub(*hi, *lo, temp);
}

// Smallest tau whose ball contains x: the binding constraint is the
// positively-oriented pair, so the signed maximum is taken (the absolute
// reversed differences are not symmetric for t != 1 and would break the
// isometry with the t-Hilbert distance).
double t_nh_norm(const std::vector<double>& x, const Temperature& temp) {
  double best = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    for (size_t j = 0; j < x.size(); ++j) {
      if (i == j || x[i] == x[j]) continue;
      best = std::max(best, t_sub(x[i], x[j], temp));
    }
  }
  return best;
}

double isometry_unconstrained(const CoSimplexPoint& p, const CoSimplexPoint& q) {
  check_pair(p, q);
  const Temperature& temp = p.temp();
  std::vector<double> w(p.dim());
  for (int i = 0; i < p.dim(); ++i) {
    w[i] = t_sub(log_t(p[i], temp), log_t(q[i], temp), temp);
  }
  return t_var_norm(w, temp);
}

double isometry_constrained(const CoSimplexPoint& p, const CoSimplexPoint& q) {
  check_pair(p, q);
  const Temperature& temp = p.temp();
  const auto a = constrained_link(p);
  const auto b = constrained_link(q);
  std::vector<double> w(p.dim());
  for (int i = 0; i < p.dim(); ++i) {
    w[i] = t_sub(a.theta_check[i], b.theta_check[i], temp);
  }
  return t_nh_norm(w, temp);
}

CoSimplexPoint coarse_grain(const CoSimplexPoint& p,
                            const std::vector<std::vector<int>>& partition) {
  const int d = p.dim();
  std::vector<bool> seen(d, false);
  const auto co = codensity(p);
  std::vector<double> values;
  values.reserve(partition.size());
  for (const auto& block : partition) {
    if (block.empty()) throw std::invalid_argument("coarse_grain: empty block");
    double mass = 0.0;
    for (int idx : block) {
      if (idx < 0 || idx >= d || seen[idx]) {
        throw std::invalid_argument("coarse_grain: invalid partition");
      }
      seen[idx] = true;
      mass += co[idx];
    }
    values.push_back(std::pow(mass, p.temp().t_star));
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw std::invalid_argument("coarse_grain: partition must cover [d]");
  }
  return CoSimplexPoint(std::move(values), p.temp());
}

std::pair<double, double> check_contraction(const Matrix& A, const Point& p,
                                            const Point& q,
                                            const Temperature& temp) {
  const size_t d = p.size();
  if (A.size() == 0 || q.size() != d) {
    throw std::invalid_argument("check_contraction: shape mismatch");
  }
  for (const auto& row : A) {
    if (row.size() != d) {
      throw std::invalid_argument("check_contraction: shape mismatch");
    }
    for (double a : row) {
      if (!(a > 0.0)) {
        throw std::domain_error("check_contraction: matrix must be positive");
      }
    }
  }
  Point ap(A.size(), 0.0), aq(A.size(), 0.0);
  for (size_t i = 0; i < A.size(); ++i) {
    for (size_t j = 0; j < d; ++j) {
      ap[i] += A[i][j] * p[j];
      aq[i] += A[i][j] * q[j];
    }
  }
  return {t_hilbert_raw(p, q, temp), t_hilbert_raw(ap, aq, temp)};
}

namespace {

// First two simplex coordinates of the grid cell (i, j); third is implied.
bool grid_point(int i, int j, int res, std::vector<double>& prob) {
  const double x = (i + 0.5) / res;
  const double y = (j + 0.5) / res;
  const double z = 1.0 - x - y;
  if (z <= 1e-9) return false;  // guard round-off slivers on the far edge
  prob = {x, y, z};
  return true;
}

}  // namespace

std::vector<GridSample> sample_ball(const CoSimplexPoint& center, double radius,
                                    int grid_resolution, BallKind which) {
  if (center.dim() != 3) {
    throw std::invalid_argument("sample_ball: 2-simplex (d=3) only");
  }
  const auto c = codensity(center);
  if (radius <= 0.0) {
    return {GridSample{c[0], c[1], 0.0}};
  }
  std::vector<GridSample> out;
  std::vector<double> prob;
  for (int i = 0; i < grid_resolution; ++i) {
    for (int j = 0; j < grid_resolution; ++j) {
      if (!grid_point(i, j, grid_resolution, prob)) continue;
      const CoSimplexPoint x = from_probability(prob, center.temp());
      const double dist = which == BallKind::THilbertDomain
                              ? t_hilbert_cosimplex(center, x)
                              : isometry_constrained(center, x);
      if (dist <= radius) out.push_back({prob[0], prob[1], dist});
    }
  }
  return out;
}

BisectorResult sample_bisector(const CoSimplexPoint& p, const CoSimplexPoint& q,
                               int grid_resolution) {
  check_pair(p, q);
  if (p.dim() != 3) {
    throw std::invalid_argument("sample_bisector: 2-simplex (d=3) only");
  }
  if (t_hilbert_cosimplex(p, q) == 0.0) {
    throw std::invalid_argument("sample_bisector: p == q");
  }
  const Temperature& temp = p.temp();
  const Temperature one(1.0);
  // Membership is evaluated in the t=1 Hilbert metric: the bisector and the
  // t-triangle equality region are both invariant under the monotone link
  // rho_t = log_t exp rho_1, so all temperatures produce the same cells.
  const auto p1 = from_probability(codensity(p), one);
  const auto q1 = from_probability(codensity(q), one);
  const double pq1 = t_hilbert_cosimplex(p1, q1);
  const double pq_t = t_hilbert_cosimplex(p, q);

  BisectorResult out;
  std::vector<double> prob, nb;
  for (int i = 0; i < grid_resolution; ++i) {
    for (int j = 0; j < grid_resolution; ++j) {
      if (!grid_point(i, j, grid_resolution, prob)) continue;
      const CoSimplexPoint x1 = from_probability(prob, one);
      // local cell diameter in distance units
      double cell = 0.0;
      if (grid_point(i + 1, j, grid_resolution, nb)) {
        cell = std::max(cell, t_hilbert_cosimplex(x1, from_probability(nb, one)));
      }
      if (grid_point(i, j + 1, grid_resolution, nb)) {
        cell = std::max(cell, t_hilbert_cosimplex(x1, from_probability(nb, one)));
      }
      if (cell == 0.0) continue;
      const double tol = 1.5 * cell;
      const double dp = t_hilbert_cosimplex(p1, x1);
      const double dq = t_hilbert_cosimplex(q1, x1);
      const CoSimplexPoint xt = from_probability(prob, temp);
      if (std::abs(dp - dq) < tol) {
        const double vt = std::abs(t_hilbert_cosimplex(p, xt) -
                                   t_hilbert_cosimplex(q, xt));
        out.bisector.push_back({prob[0], prob[1], vt});
      }
      if (std::abs(dp + dq - pq1) < tol) {
        const double vt = std::abs(t_add(t_hilbert_cosimplex(p, xt),
                                         t_hilbert_cosimplex(xt, q), temp) -
                                   pq_t);
        out.equality.push_back({prob[0], prob[1], vt});
      }
    }
  }
  return out;
}

}  // namespace tem
