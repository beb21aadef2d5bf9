#ifndef TEM_HYPMODELS_HPP
#define TEM_HYPMODELS_HPP

#include <vector>

#include "tem/talgebra.hpp"

// Klein and Poincare disk models of the hyperbolic plane (any dimension),
// their tempered variants through the psi transform, the radial model map,
// and fractional points along geodesics.

namespace tem {

struct DiskPoint {
  std::vector<double> coords;

  DiskPoint() = default;
  explicit DiskPoint(std::vector<double> c);  // validates ||c|| < 1

  size_t dim() const { return coords.size(); }
  double operator[](size_t i) const { return coords[i]; }
  double norm() const;
};

enum class DiskModel { Klein, Poincare };

// chi * log_t exp(u / chi); identity at t = 1, strictly increasing in u.
double psi(double u, const Temperature& temp, double chi);

double klein_distance(const DiskPoint& r, const DiskPoint& s);
double poincare_distance(const DiskPoint& r, const DiskPoint& s);

// psi_{t,1/2} of the base model distance.
double tempered_klein(const DiskPoint& r, const DiskPoint& s,
                      const Temperature& temp);
double tempered_poincare(const DiskPoint& r, const DiskPoint& s,
                         const Temperature& temp);

// Radial rescaling (1 - sqrt(1 - ||k||^2)) / ||k||^2 * k; series k/2 near 0.
DiskPoint klein_to_poincare(const DiskPoint& k);
DiskPoint poincare_to_klein(const DiskPoint& p);

// Point x on the geodesic from r to s with tempered distance(r, x) equal to
// alpha times tempered distance(r, s). Klein geodesics are straight
// segments; Poincare pairs are solved via the Klein model and mapped back.
DiskPoint fractional_point(const DiskPoint& r, const DiskPoint& s, double alpha,
                           const Temperature& temp, DiskModel model);

}  // namespace tem

#endif
