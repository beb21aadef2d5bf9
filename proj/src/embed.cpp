#include "tem/embed.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <stdexcept>

namespace tem {

namespace {

std::vector<double> hop_distances(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<double> D(static_cast<size_t>(n) * n, -1.0);
  for (int src = 0; src < n; ++src) {
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          q.push(v);
        }
      }
    }
    for (int j = 0; j < n; ++j) {
      if (dist[j] < 0) return {};  // disconnected
      D[static_cast<size_t>(src) * n + j] = dist[j];
    }
  }
  return D;
}

std::vector<std::vector<int>> erdos_renyi(int n, double p,
                                          std::mt19937_64& rng) {
  std::bernoulli_distribution edge(p);
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (edge(rng)) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  return adj;
}

// Preferential attachment via a repeated-endpoint list; seeded with a
// complete graph on m+1 nodes.
std::vector<std::vector<int>> barabasi_albert(int n, int m,
                                              std::mt19937_64& rng) {
  if (n < m + 1) throw std::invalid_argument("barabasi_albert: n too small");
  std::vector<std::vector<int>> adj(n);
  std::vector<int> endpoints;
  for (int i = 0; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      adj[i].push_back(j);
      adj[j].push_back(i);
      endpoints.push_back(i);
      endpoints.push_back(j);
    }
  }
  for (int v = m + 1; v < n; ++v) {
    std::vector<int> targets;
    while (static_cast<int>(targets.size()) < m) {
      std::uniform_int_distribution<size_t> pick(0, endpoints.size() - 1);
      const int u = endpoints[pick(rng)];
      if (std::find(targets.begin(), targets.end(), u) == targets.end()) {
        targets.push_back(u);
      }
    }
    for (int u : targets) {
      adj[v].push_back(u);
      adj[u].push_back(v);
      endpoints.push_back(v);
      endpoints.push_back(u);
    }
  }
  return adj;
}

}  // namespace

DistanceDataset generate_dataset(const DatasetSpec& spec, uint64_t seed) {
  if (spec.n < 1) throw std::invalid_argument("generate_dataset: n >= 1");
  std::mt19937_64 rng(seed);
  DistanceDataset out;
  out.n = spec.n;
  out.seed = seed;

  if (spec.source == DatasetSource::RandomPoints) {
    out.source_name = "points";
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> pts(static_cast<size_t>(spec.n) * spec.ambient_dim);
    for (double& v : pts) v = gauss(rng);
    out.D.assign(static_cast<size_t>(spec.n) * spec.n, 0.0);
    for (int i = 0; i < spec.n; ++i) {
      for (int j = i + 1; j < spec.n; ++j) {
        double s = 0.0;
        for (int k = 0; k < spec.ambient_dim; ++k) {
          const double diff = pts[static_cast<size_t>(i) * spec.ambient_dim + k] -
                              pts[static_cast<size_t>(j) * spec.ambient_dim + k];
          s += diff * diff;
        }
        out.D[static_cast<size_t>(i) * spec.n + j] =
            out.D[static_cast<size_t>(j) * spec.n + i] = std::sqrt(s);
      }
    }
    return out;
  }

  out.source_name =
      spec.source == DatasetSource::ErdosRenyi ? "er" : "ba";
  for (int attempt = 0; attempt < 32; ++attempt) {
    const auto adj = spec.source == DatasetSource::ErdosRenyi
                         ? erdos_renyi(spec.n, spec.p, rng)
                         : barabasi_albert(spec.n, spec.m, rng);
    auto D = hop_distances(adj);
    if (!D.empty()) {
      out.D = std::move(D);
      return out;
    }
  }
  throw std::runtime_error("generate_dataset: graph disconnected after 32 tries");
}

std::string GeometryKind::name() const {
  switch (family) {
    case Family::Euclidean: return "euclidean";
    case Family::Hyperboloid: return "hyperboloid";
    case Family::HilbertSimplex: return "hilbert";
    case Family::THilbert: return "t_hilbert";
  }
  return "?";
}

namespace {

double hyperboloid_inner(const std::vector<double>& y1,
                         const std::vector<double>& y2) {
  double n1 = 0.0, n2 = 0.0, d12 = 0.0;
  for (size_t k = 0; k < y1.size(); ++k) {
    n1 += y1[k] * y1[k];
    n2 += y2[k] * y2[k];
    d12 += y1[k] * y2[k];
  }
  // -<x1, x2>_M for points lifted to the upper sheet
  return std::sqrt((1.0 + n1) * (1.0 + n2)) - d12;
}

double var_norm(const std::vector<double>& diff) {
  const auto [lo, hi] = std::minmax_element(diff.begin(), diff.end());
  return *hi - *lo;
}

}  // namespace

double geometry_distance(const GeometryKind& kind, const std::vector<double>& y1,
                         const std::vector<double>& y2) {
  if (y1.size() != y2.size() || y1.empty()) {
    throw std::invalid_argument("geometry_distance: shape mismatch");
  }
  switch (kind.family) {
    case GeometryKind::Family::Euclidean: {
      double s = 0.0;
      for (size_t k = 0; k < y1.size(); ++k) {
        s += (y1[k] - y2[k]) * (y1[k] - y2[k]);
      }
      return std::sqrt(s);
    }
    case GeometryKind::Family::Hyperboloid: {
      const double c = hyperboloid_inner(y1, y2);
      if (c < 1.0 - 1e-9) {
        throw std::domain_error("geometry_distance: Minkowski product >= -1");
      }
      return std::acosh(std::max(c, 1.0));
    }
    case GeometryKind::Family::HilbertSimplex:
    case GeometryKind::Family::THilbert: {
      std::vector<double> diff(y1.size());
      for (size_t k = 0; k < y1.size(); ++k) diff[k] = y1[k] - y2[k];
      const double h = var_norm(diff);
      if (kind.family == GeometryKind::Family::HilbertSimplex) return h;
      return log_t_of_exp(h, Temperature(kind.t));
    }
  }
  return 0.0;
}

double embedding_loss(const DistanceDataset& data, const std::vector<double>& Y,
                      int dim, const GeometryKind& kind) {
  const int n = data.n;
  if (Y.size() != static_cast<size_t>(n) * dim) {
    throw std::invalid_argument("embedding_loss: shape mismatch");
  }
  double loss = 0.0;
  std::vector<double> yi(dim), yj(dim);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::copy_n(Y.begin() + static_cast<size_t>(i) * dim, dim, yi.begin());
      std::copy_n(Y.begin() + static_cast<size_t>(j) * dim, dim, yj.begin());
      const double r = data.at(i, j) - geometry_distance(kind, yi, yj);
      loss += 2.0 * r * r;
    }
  }
  return loss / (static_cast<double>(n) * n);
}

namespace {

// Smoothed distance and its gradients with respect to both chart points.
// Euclidean and hyperboloid are exact; the Hilbert-family max/min pair is
// replaced by the log-sum-exp pair at smoothing factor T.
struct PairGrad {
  double rho;
  std::vector<double> g1;
  std::vector<double> g2;
};

void softmax_inplace(std::vector<double>& z) {
  const double m = *std::max_element(z.begin(), z.end());
  double s = 0.0;
  for (double& v : z) {
    v = std::exp(v - m);
    s += v;
  }
  for (double& v : z) v /= s;
}

PairGrad smoothed_pair(const GeometryKind& kind, const std::vector<double>& y1,
                       const std::vector<double>& y2, double T) {
  const size_t dim = y1.size();
  PairGrad out;
  out.g1.assign(dim, 0.0);
  out.g2.assign(dim, 0.0);
  switch (kind.family) {
    case GeometryKind::Family::Euclidean: {
      double s = 0.0;
      for (size_t k = 0; k < dim; ++k) {
        s += (y1[k] - y2[k]) * (y1[k] - y2[k]);
      }
      out.rho = std::sqrt(s);
      if (out.rho > 1e-12) {
        for (size_t k = 0; k < dim; ++k) {
          out.g1[k] = (y1[k] - y2[k]) / out.rho;
          out.g2[k] = -out.g1[k];
        }
      }
      return out;
    }
    case GeometryKind::Family::Hyperboloid: {
      const double c = hyperboloid_inner(y1, y2);
      out.rho = std::acosh(std::max(c, 1.0));
      if (c > 1.0 + 1e-12) {
        const double dc = 1.0 / std::sqrt(c * c - 1.0);
        double n1 = 0.0, n2 = 0.0;
        for (size_t k = 0; k < dim; ++k) {
          n1 += y1[k] * y1[k];
          n2 += y2[k] * y2[k];
        }
        const double x01 = std::sqrt(1.0 + n1);
        const double x02 = std::sqrt(1.0 + n2);
        for (size_t k = 0; k < dim; ++k) {
          out.g1[k] = dc * (y1[k] * x02 / x01 - y2[k]);
          out.g2[k] = dc * (y2[k] * x01 / x02 - y1[k]);
        }
      }
      return out;
    }
    case GeometryKind::Family::HilbertSimplex:
    case GeometryKind::Family::THilbert: {
      std::vector<double> fwd(dim), rev(dim);
      for (size_t k = 0; k < dim; ++k) {
        fwd[k] = T * (y1[k] - y2[k]);
        rev[k] = -fwd[k];
      }
      const double mf = *std::max_element(fwd.begin(), fwd.end());
      const double mr = *std::max_element(rev.begin(), rev.end());
      double sf = 0.0, sr = 0.0;
      for (size_t k = 0; k < dim; ++k) {
        sf += std::exp(fwd[k] - mf);
        sr += std::exp(rev[k] - mr);
      }
      const double smooth = (mf + std::log(sf) + mr + std::log(sr)) / T;
      softmax_inplace(fwd);
      softmax_inplace(rev);
      double scale = 1.0;
      out.rho = smooth;
      if (kind.family == GeometryKind::Family::THilbert) {
        out.rho = log_t_of_exp(smooth, Temperature(kind.t));
        scale = std::exp((1.0 - kind.t) * smooth);  // (log_t exp)'
      }
      for (size_t k = 0; k < dim; ++k) {
        out.g1[k] = scale * (fwd[k] - rev[k]);
        out.g2[k] = -out.g1[k];
      }
      return out;
    }
  }
  return out;
}

}  // namespace

EmbeddingRun optimize_embedding(const DistanceDataset& data,
                                const GeometryKind& kind,
                                const OptimConfig& config) {
  const int n = data.n;
  const int dim = config.dim;
  const size_t size = static_cast<size_t>(n) * dim;

  std::mt19937_64 rng(config.seed);
  std::normal_distribution<double> gauss(0.0, config.init_scale);
  EmbeddingRun run;
  run.dim = dim;
  run.Y.resize(size);
  for (double& v : run.Y) v = gauss(rng);

  std::vector<double> grad(size), m1(size, 0.0), m2(size, 0.0);
  const double b1 = 0.9, b2 = 0.999, adam_eps = 1e-8;
  std::vector<double> yi(dim), yj(dim);

  for (int iter = 0; iter < config.iterations; ++iter) {
    std::fill(grad.begin(), grad.end(), 0.0);
    double loss = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        std::copy_n(run.Y.begin() + static_cast<size_t>(i) * dim, dim,
                    yi.begin());
        std::copy_n(run.Y.begin() + static_cast<size_t>(j) * dim, dim,
                    yj.begin());
        const auto pg = smoothed_pair(kind, yi, yj, config.T);
        const double resid = pg.rho - data.at(i, j);
        loss += 2.0 * resid * resid;
        const double w = 4.0 * resid / (static_cast<double>(n) * n);
        for (int k = 0; k < dim; ++k) {
          grad[static_cast<size_t>(i) * dim + k] += w * pg.g1[k];
          grad[static_cast<size_t>(j) * dim + k] += w * pg.g2[k];
        }
      }
    }
    loss /= static_cast<double>(n) * n;
    if (!std::isfinite(loss)) {
      throw std::runtime_error("optimize_embedding: loss diverged at iter " +
                               std::to_string(iter));
    }
    run.loss_history.push_back(loss);

    const double c1 = 1.0 - std::pow(b1, iter + 1);
    const double c2 = 1.0 - std::pow(b2, iter + 1);
    for (size_t k = 0; k < size; ++k) {
      m1[k] = b1 * m1[k] + (1.0 - b1) * grad[k];
      m2[k] = b2 * m2[k] + (1.0 - b2) * grad[k] * grad[k];
      run.Y[k] -= config.learning_rate * (m1[k] / c1) /
                  (std::sqrt(m2[k] / c2) + adam_eps);
    }
  }
  run.final_loss = embedding_loss(data, run.Y, dim, kind);
  return run;
}

std::vector<CompareRow> compare_geometries(const DatasetSpec& spec,
                                           const std::vector<int>& dims,
                                           const std::vector<GeometryKind>& kinds,
                                           const OptimConfig& config,
                                           uint64_t seed) {
  const auto data = generate_dataset(spec, seed);
  std::vector<CompareRow> rows;
  for (const auto& kind : kinds) {
    for (int dim : dims) {
      OptimConfig cfg = config;
      cfg.dim = dim;
      cfg.seed = seed;
      const auto run = optimize_embedding(data, kind, cfg);
      rows.push_back({data.source_name, kind.name(), kind.t, dim,
                      run.final_loss,
                      static_cast<int>(run.loss_history.size()), seed});
    }
  }
  return rows;
}

}  // namespace tem
