#ifndef TEM_EMBED_HPP
#define TEM_EMBED_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tem/talgebra.hpp"

// Geometry-comparison harness: dataset generation, stress-loss embeddings
// into four geometries by adaptive-moment gradient descent, loss tables.

namespace tem {

enum class DatasetSource { RandomPoints, ErdosRenyi, BarabasiAlbert };

struct DatasetSpec {
  DatasetSource source = DatasetSource::RandomPoints;
  int n = 50;
  int ambient_dim = 50;  // random points
  double p = 0.5;        // Erdos-Renyi edge probability
  int m = 2;             // Barabasi-Albert edges per new node
};

// Symmetric nonnegative distance matrix with zero diagonal. Graph sources
// use hop distances and are resampled until connected (budget 32).
struct DistanceDataset {
  int n = 0;
  std::vector<double> D;  // row-major n x n
  std::string source_name;
  uint64_t seed = 0;

  double at(int i, int j) const { return D[static_cast<size_t>(i) * n + j]; }
};

DistanceDataset generate_dataset(const DatasetSpec& spec, uint64_t seed);

struct GeometryKind {
  enum class Family { Euclidean, Hyperboloid, HilbertSimplex, THilbert };
  Family family = Family::Euclidean;
  double t = 1.0;  // THilbert only

  static GeometryKind euclidean() { return {Family::Euclidean, 1.0}; }
  static GeometryKind hyperboloid() { return {Family::Hyperboloid, 1.0}; }
  static GeometryKind hilbert_simplex() { return {Family::HilbertSimplex, 1.0}; }
  static GeometryKind t_hilbert(double t) { return {Family::THilbert, t}; }

  std::string name() const;
};

// Exact distance between two chart points. Charts are unconstrained R^dim:
// hyperboloid points are lifted to the upper sheet, Hilbert-family points
// are log-coordinates whose distance is the variation norm of the
// difference (t-Hilbert applies log_t exp on top).
double geometry_distance(const GeometryKind& kind, const std::vector<double>& y1,
                         const std::vector<double>& y2);

// Mean squared stress (1/n^2) sum_ij (D_ij - rho(y_i, y_j))^2.
double embedding_loss(const DistanceDataset& data, const std::vector<double>& Y,
                      int dim, const GeometryKind& kind);

struct OptimConfig {
  int dim = 3;
  int iterations = 1000;
  double learning_rate = 0.05;
  double T = 20.0;  // smoothing factor for the Hilbert-family max
  uint64_t seed = 0;
  double init_scale = 0.1;
};

struct EmbeddingRun {
  std::vector<double> Y;  // row-major n x dim
  int dim = 0;
  std::vector<double> loss_history;  // smoothed objective per iteration
  double final_loss = 0.0;           // exact-distance loss of the result
};

EmbeddingRun optimize_embedding(const DistanceDataset& data,
                                const GeometryKind& kind,
                                const OptimConfig& config);

struct CompareRow {
  std::string dataset;
  std::string geometry;
  double t = 1.0;
  int dim = 0;
  double final_loss = 0.0;
  int iters = 0;
  uint64_t seed = 0;
};

std::vector<CompareRow> compare_geometries(const DatasetSpec& spec,
                                           const std::vector<int>& dims,
                                           const std::vector<GeometryKind>& kinds,
                                           const OptimConfig& config,
                                           uint64_t seed);

}  // namespace tem

#endif
