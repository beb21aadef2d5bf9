#include "tem/hypmodels.hpp"

#include <cmath>
#include <stdexcept>

namespace tem {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void check_pair(const DiskPoint& r, const DiskPoint& s) {
  if (r.dim() != s.dim() || r.dim() == 0) {
    throw std::invalid_argument("disk pair: dimension mismatch");
  }
}

}  // namespace

DiskPoint::DiskPoint(std::vector<double> c) : coords(std::move(c)) {
  if (coords.empty() || !(norm() < 1.0)) {
    throw std::domain_error("DiskPoint: need ||coords|| < 1");
  }
}

double DiskPoint::norm() const { return std::sqrt(dot(coords, coords)); }

double psi(double u, const Temperature& temp, double chi) {
  if (u < 0.0 || !(chi > 0.0)) {
    throw std::invalid_argument("psi: need u >= 0 and chi > 0");
  }
  return chi * log_t_of_exp(u / chi, temp);
}

double klein_distance(const DiskPoint& r, const DiskPoint& s) {
  check_pair(r, s);
  const double nr = 1.0 - dot(r.coords, r.coords);
  const double ns = 1.0 - dot(s.coords, s.coords);
  const double c = (1.0 - dot(r.coords, s.coords)) / std::sqrt(nr * ns);
  return std::acosh(std::max(c, 1.0));
}

double poincare_distance(const DiskPoint& r, const DiskPoint& s) {
  check_pair(r, s);
  double d2 = 0.0;
  for (size_t i = 0; i < r.dim(); ++i) {
    d2 += (r[i] - s[i]) * (r[i] - s[i]);
  }
  const double nr = 1.0 - dot(r.coords, r.coords);
  const double ns = 1.0 - dot(s.coords, s.coords);
  return std::acosh(1.0 + 2.0 * d2 / (nr * ns));
}

double tempered_klein(const DiskPoint& r, const DiskPoint& s,
                      const Temperature& temp) {
  return psi(klein_distance(r, s), temp, 0.5);
}

double tempered_poincare(const DiskPoint& r, const DiskPoint& s,
                         const Temperature& temp) {
  return psi(poincare_distance(r, s), temp, 0.5);
}

DiskPoint klein_to_poincare(const DiskPoint& k) {
  const double n2 = dot(k.coords, k.coords);
  // (1 - sqrt(1 - n2)) / n2 -> 1/2 as n2 -> 0
  const double f = n2 < 1e-16 ? 0.5 : (1.0 - std::sqrt(1.0 - n2)) / n2;
  DiskPoint out;
  out.coords.resize(k.dim());
  for (size_t i = 0; i < k.dim(); ++i) out.coords[i] = f * k[i];
  return out;
}

DiskPoint poincare_to_klein(const DiskPoint& p) {
  const double f = 2.0 / (1.0 + dot(p.coords, p.coords));
  DiskPoint out;
  out.coords.resize(p.dim());
  for (size_t i = 0; i < p.dim(); ++i) out.coords[i] = f * p[i];
  return out;
}

DiskPoint fractional_point(const DiskPoint& r, const DiskPoint& s, double alpha,
                           const Temperature& temp, DiskModel model) {
  check_pair(r, s);
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw std::invalid_argument("fractional_point: alpha in (0, 1)");
  }
  if (model == DiskModel::Poincare) {
    // Poincare geodesics through the Klein chart: straight segments there.
    return klein_to_poincare(fractional_point(poincare_to_klein(r),
                                              poincare_to_klein(s), alpha, temp,
                                              DiskModel::Klein));
  }
  const double target = alpha * tempered_klein(r, s, temp);
  if (!(target > 0.0)) {
    throw std::invalid_argument("fractional_point: r == s");
  }
  auto at = [&](double lam) {
    DiskPoint x;
    x.coords.resize(r.dim());
    for (size_t i = 0; i < r.dim(); ++i) {
      x.coords[i] = r[i] + lam * (s[i] - r[i]);
    }
    return x;
  };
  double lo = 0.0, hi = 1.0;
  for (int step = 0; step < 200; ++step) {
    const double mid = 0.5 * (lo + hi);
    const double g = tempered_klein(r, at(mid), temp) - target;
    if (std::abs(g) < 1e-10) return at(mid);
    (g < 0.0 ? lo : hi) = mid;
  }
  if (hi - lo > 1e-10) {
    throw std::runtime_error("fractional_point: bisection failed");
  }
  return at(0.5 * (lo + hi));
}

}  // namespace tem
