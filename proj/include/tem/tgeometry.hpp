#ifndef TEM_TGEOMETRY_HPP
#define TEM_TGEOMETRY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "tem/talgebra.hpp"
#include "tem/temparam.hpp"

// t-Funk and t-Hilbert distances on convex domains and on the co-simplex,
// the t-variation / t-NH norms, isometry routes, coarse-graining and the
// contraction check, plus grid sampling for ball and bisector figures.

namespace tem {

using Point = std::vector<double>;

// Bounded convex body (simplex, Euclidean ball) or half-space, with exact
// membership and ray-boundary intersection. The half-space is unbounded;
// rays contained in it hit the boundary "at infinity" (nullopt).
class ConvexDomain {
 public:
  enum class Kind { Simplex, Ball, HalfSpace };

  static ConvexDomain simplex(int d);
  static ConvexDomain ball(Point center, double radius);
  static ConvexDomain half_space(Point normal, double offset);

  Kind kind() const { return kind_; }
  int dimension() const { return dimension_; }
  const Point& center() const { return center_; }
  double radius() const { return radius_; }
  const Point& normal() const { return normal_; }
  double offset() const { return offset_; }

  bool contains(const Point& x) const;

  // Intersection of the ray from r through s with the boundary.
  // nullopt means the ray is contained in the domain (point at infinity).
  std::optional<Point> ray_boundary(const Point& r, const Point& s) const;

  // Same intersection, but with the ray given as a direction from x.
  std::optional<Point> ray_boundary_dir(const Point& x, const Point& u) const;

 private:
  Kind kind_;
  int dimension_ = 0;
  Point center_;        // ball
  double radius_ = 0;   // ball
  Point normal_;        // half-space {x : normal . x <= offset}
  double offset_ = 0;   // half-space
};

// log_t of the boundary ratio along the ray from r through s; 0 for r = s
// or when the boundary point is at infinity.
double t_funk_domain(const ConvexDomain& domain, const Point& r, const Point& s,
                     const Temperature& temp);

// t-symmetrization of the two oriented Funk distances (the log_t cross-ratio).
double t_hilbert_domain(const ConvexDomain& domain, const Point& r,
                        const Point& s, const Temperature& temp);

// Co-simplex forms on raw positive vectors (projective: insensitive to
// positive scaling of either argument). Log-space accumulation throughout.
double t_funk_raw(const Point& p, const Point& q, const Temperature& temp);
double t_hilbert_raw(const Point& p, const Point& q, const Temperature& temp);

double t_funk_cosimplex(const CoSimplexPoint& p, const CoSimplexPoint& q);
double t_hilbert_cosimplex(const CoSimplexPoint& p, const CoSimplexPoint& q);

// max_i x_i -_t min_i x_i
double t_var_norm(const std::vector<double>& x, const Temperature& temp);

// max over ordered pairs |x_i -_t x_j|
double t_nh_norm(const std::vector<double>& x, const Temperature& temp);

// The two isometric routes to the t-Hilbert co-simplex distance:
// t-var norm of the unconstrained coordinates, t-NH norm of the
// constrained coordinates.
double isometry_unconstrained(const CoSimplexPoint& p, const CoSimplexPoint& q);
double isometry_constrained(const CoSimplexPoint& p, const CoSimplexPoint& q);

// Block-merge of the co-density over a disjoint cover of [d].
CoSimplexPoint coarse_grain(const CoSimplexPoint& p,
                            const std::vector<std::vector<int>>& partition);

// t-Hilbert distance of the raw pair before and after applying the
// entrywise-positive matrix A. No renormalization: projectivity makes it
// irrelevant.
std::pair<double, double> check_contraction(const Matrix& A, const Point& p,
                                            const Point& q,
                                            const Temperature& temp);

struct GridSample {
  double x;
  double y;
  double value;
};

enum class BallKind { THilbertDomain, TNHSurface };

// Grid sample of the 2-simplex: cells within `radius` of `center`, value =
// distance. Coordinates are the first two simplex coordinates.
std::vector<GridSample> sample_ball(const CoSimplexPoint& center, double radius,
                                    int grid_resolution, BallKind which);

struct BisectorResult {
  std::vector<GridSample> bisector;  // |rho(p,x) - rho(q,x)| < tol
  std::vector<GridSample> equality;  // rho(p,x) +_t rho(x,q) = rho(p,q)
};

BisectorResult sample_bisector(const CoSimplexPoint& p, const CoSimplexPoint& q,
                               int grid_resolution);

}  // namespace tem

#endif
