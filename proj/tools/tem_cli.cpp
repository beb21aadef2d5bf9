// Command-line front end: distance queries, figure-data generation and the
// embedding experiment. CSV by default, --json for the same numbers as JSON.

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tem/diffapprox.hpp"
#include "tem/embed.hpp"
#include "tem/hypmodels.hpp"
#include "tem/talgebra.hpp"
#include "tem/tcalculus.hpp"
#include "tem/temparam.hpp"
#include "tem/tgeometry.hpp"

namespace {

// Shortest decimal representation that round-trips to the same double.
std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::vector<double> parse_vector(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(std::stod(item));
  }
  if (out.empty()) throw std::invalid_argument("empty vector: " + text);
  return out;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open " + out_path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
  }
}

std::string grid_csv(const std::vector<tem::GridSample>& cells) {
  std::string s = "x,y,value\n";
  for (const auto& c : cells) {
    s += fmt(c.x) + "," + fmt(c.y) + "," + fmt(c.value) + "\n";
  }
  return s;
}

nlohmann::json grid_json(const std::vector<tem::GridSample>& cells) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : cells) {
    rows.push_back({{"x", c.x}, {"y", c.y}, {"value", c.value}});
  }
  return rows;
}

tem::CoSimplexPoint normalized_point(const std::vector<double>& raw,
                                     const tem::Temperature& temp) {
  // Project a raw positive vector onto the co-simplex through its co-density.
  std::vector<double> prob(raw.size());
  double sum = 0.0;
  for (size_t i = 0; i < raw.size(); ++i) {
    if (!(raw[i] > 0.0)) {
      throw std::invalid_argument("vector components must be positive");
    }
    prob[i] = std::pow(raw[i], 1.0 / temp.t_star);
    sum += prob[i];
  }
  for (double& v : prob) v /= sum;
  return tem::from_probability(prob, temp);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tempered-geometry toolkit"};
  app.require_subcommand(1);

  double t = 1.0, T = 20.0, delta = 0.0;
  uint64_t seed = 0;
  std::string out_path;
  bool json = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--t", t, "temperature (t < 2)");
    cmd->add_option("--out", out_path, "output file (default stdout)");
    cmd->add_flag("--json", json, "emit JSON instead of CSV");
  };

  // dist
  std::string p_text, q_text;
  bool raw = false;
  auto* dist = app.add_subcommand("dist", "t-Hilbert distance between vectors");
  add_common(dist);
  dist->add_option("--p", p_text, "first vector, comma-separated")->required();
  dist->add_option("--q", q_text, "second vector, comma-separated")->required();
  dist->add_flag("--raw", raw, "projective mode: skip co-simplex projection");

  // balls
  std::string center_text = "0.25,0.25,0.25";
  std::string radius_text = "1";
  std::string kind_text = "domain";
  int grid = 400;
  auto* balls = app.add_subcommand("balls", "distance-ball grids on the 2-simplex");
  add_common(balls);
  balls->add_option("--center", center_text, "ball center, raw positive vector");
  balls->add_option("--radius-list", radius_text, "radii; grid covers the max");
  balls->add_option("--grid", grid, "grid resolution per axis");
  balls->add_option("--kind", kind_text, "domain | nh")
      ->check(CLI::IsMember({"domain", "nh"}));

  // bisector
  auto* bisector =
      app.add_subcommand("bisector", "Voronoi bisector and equality-region grids");
  add_common(bisector);
  bisector->add_option("--p", p_text, "first site, raw positive vector")->required();
  bisector->add_option("--q", q_text, "second site, raw positive vector")->required();
  bisector->add_option("--grid", grid, "grid resolution per axis");

  // approx-error
  int n_pairs = 1000, dim = 3;
  auto* approx = app.add_subcommand(
      "approx-error", "relative-error histogram of the smoothed distance");
  add_common(approx);
  approx->add_option("--T", T, "smoothing factor");
  approx->add_option("--delta", delta, "operator-temperature offset");
  approx->add_option("--n", n_pairs, "number of random pairs");
  approx->add_option("--d", dim, "co-simplex dimension");
  approx->add_option("--seed", seed, "RNG seed");

  // embed
  std::string dataset_text = "points", dims_text = "3";
  int n_points = 50, ba_m = 2;
  double er_p = 0.5, lr = 0.05;
  int iters = 1000;
  auto* embed = app.add_subcommand("embed", "geometry-comparison embeddings");
  add_common(embed);
  embed->add_option("--dataset", dataset_text, "points | er | ba")
      ->check(CLI::IsMember({"points", "er", "ba"}));
  embed->add_option("--n", n_points, "dataset size");
  embed->add_option("--p", er_p, "Erdos-Renyi edge probability");
  embed->add_option("--m", ba_m, "Barabasi-Albert edges per node");
  embed->add_option("--dims", dims_text, "embedding dimensions, comma-separated");
  embed->add_option("--T", T, "smoothing factor");
  embed->add_option("--iters", iters, "gradient iterations");
  embed->add_option("--lr", lr, "learning rate");
  embed->add_option("--seed", seed, "RNG seed");

  // calculus-check
  double K = 1.0, a = 0.0, b = 1.0;
  int cells = 2000;
  auto* calc = app.add_subcommand(
      "calculus-check", "t-integral consistency of the constant-slope solutions");
  add_common(calc);
  calc->add_option("--K", K, "constant t-derivative");
  calc->add_option("--a", a, "interval start");
  calc->add_option("--b", b, "interval end");
  calc->add_option("--n", cells, "Riemann cells");

  // models
  std::string t_list_text = "1", alpha_list_text = "0.2", model_text = "klein";
  std::string r_text = "0,0", s_text = "0.7,0.2";
  auto* models =
      app.add_subcommand("models", "fractional points on disk-model geodesics");
  models->add_option("--t", t_list_text, "temperatures, comma-separated");
  models->add_option("--alpha", alpha_list_text, "fractions, comma-separated");
  models->add_option("--model", model_text, "klein | poincare")
      ->check(CLI::IsMember({"klein", "poincare"}));
  models->add_option("--r", r_text, "start point");
  models->add_option("--s", s_text, "end point");
  models->add_option("--out", out_path, "output file (default stdout)");
  models->add_flag("--json", json, "emit JSON instead of CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // usage error
  }

  try {
    const tem::Temperature temp(t);

    if (dist->parsed()) {
      const auto pv = parse_vector(p_text);
      const auto qv = parse_vector(q_text);
      double value;
      if (raw) {
        value = tem::t_hilbert_raw(pv, qv, temp);
      } else {
        value = tem::t_hilbert_cosimplex(normalized_point(pv, temp),
                                         normalized_point(qv, temp));
      }
      if (json) {
        emit(out_path, nlohmann::json{{"t", t}, {"distance", value}}.dump());
      } else {
        emit(out_path, fmt(value));
      }
    } else if (balls->parsed()) {
      const auto center = normalized_point(parse_vector(center_text), temp);
      double radius = 0.0;
      for (double r : parse_vector(radius_text)) radius = std::max(radius, r);
      const auto kind = kind_text == "domain" ? tem::BallKind::THilbertDomain
                                              : tem::BallKind::TNHSurface;
      const auto cells_out = tem::sample_ball(center, radius, grid, kind);
      if (json) {
        emit(out_path, nlohmann::json{{"t", t}, {"radius", radius},
                                      {"cells", grid_json(cells_out)}}
                           .dump());
      } else {
        emit(out_path, grid_csv(cells_out));
      }
    } else if (bisector->parsed()) {
      const auto p = normalized_point(parse_vector(p_text), temp);
      const auto q = normalized_point(parse_vector(q_text), temp);
      const auto result = tem::sample_bisector(p, q, grid);
      if (json) {
        emit(out_path,
             nlohmann::json{{"t", t},
                            {"bisector", grid_json(result.bisector)},
                            {"equality", grid_json(result.equality)}}
                 .dump());
      } else {
        emit(out_path, grid_csv(result.bisector));
        if (!out_path.empty()) {
          emit(out_path + ".equality", grid_csv(result.equality));
        }
      }
    } else if (approx->parsed()) {
      const tem::SmoothingConfig cfg{T, delta};
      const auto h = tem::relative_error_histogram(n_pairs, dim, temp, cfg, seed);
      if (json) {
        emit(out_path, tem::to_json(h));
      } else {
        std::string s = "bin,count\n";
        for (size_t i = 0; i < h.bins.size(); ++i) {
          s += fmt(h.bins[i]) + "," + std::to_string(h.counts[i]) + "\n";
        }
        emit(out_path, s);
      }
    } else if (embed->parsed()) {
      tem::DatasetSpec spec;
      spec.n = n_points;
      spec.p = er_p;
      spec.m = ba_m;
      spec.source = dataset_text == "points" ? tem::DatasetSource::RandomPoints
                    : dataset_text == "er"   ? tem::DatasetSource::ErdosRenyi
                                             : tem::DatasetSource::BarabasiAlbert;
      std::vector<int> dims;
      for (double v : parse_vector(dims_text)) dims.push_back(static_cast<int>(v));
      const std::vector<tem::GeometryKind> kinds = {
          tem::GeometryKind::euclidean(), tem::GeometryKind::hyperboloid(),
          tem::GeometryKind::hilbert_simplex(), tem::GeometryKind::t_hilbert(t)};
      tem::OptimConfig config;
      config.iterations = iters;
      config.learning_rate = lr;
      config.T = T;
      const auto rows = tem::compare_geometries(spec, dims, kinds, config, seed);
      if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) {
          arr.push_back({{"dataset", r.dataset},
                         {"geometry", r.geometry},
                         {"t", r.t},
                         {"dim", r.dim},
                         {"final_loss", r.final_loss},
                         {"iters", r.iters},
                         {"seed", r.seed}});
        }
        emit(out_path, arr.dump());
      } else {
        std::string s = "dataset,geometry,t,dim,final_loss,iters,seed\n";
        for (const auto& r : rows) {
          s += r.dataset + "," + r.geometry + "," + fmt(r.t) + "," +
               std::to_string(r.dim) + "," + fmt(r.final_loss) + "," +
               std::to_string(r.iters) + "," + std::to_string(r.seed) + "\n";
        }
        emit(out_path, s);
      }
    } else if (calc->parsed()) {
      const auto primitive = tem::const_t_derivative_solution(K, temp);
      const auto f = [K](double) { return K; };  // constant t-derivative
      const double exact = tem::t_integral(primitive, a, b, temp);
      const double numeric = tem::t_integral_numeric(f, a, b, temp, cells);
      const double deriv_mid =
          tem::t_derivative(primitive, 0.5 * (a + b), temp, 0.0);
      if (json) {
        emit(out_path, nlohmann::json{{"t", t},
                                      {"K", K},
                                      {"t_integral_exact", exact},
                                      {"t_integral_numeric", numeric},
                                      {"t_derivative_midpoint", deriv_mid}}
                           .dump());
      } else {
        std::string s = "quantity,value\n";
        s += "t_integral_exact," + fmt(exact) + "\n";
        s += "t_integral_numeric," + fmt(numeric) + "\n";
        s += "t_derivative_midpoint," + fmt(deriv_mid) + "\n";
        emit(out_path, s);
      }
    } else if (models->parsed()) {
      const tem::DiskPoint r(parse_vector(r_text));
      const tem::DiskPoint s(parse_vector(s_text));
      const auto model = model_text == "klein" ? tem::DiskModel::Klein
                                               : tem::DiskModel::Poincare;
      nlohmann::json arr = nlohmann::json::array();
      std::string csv = "model,t,alpha,x,y\n";
      for (double ti : parse_vector(t_list_text)) {
        for (double alpha : parse_vector(alpha_list_text)) {
          const auto x = tem::fractional_point(r, s, alpha,
                                               tem::Temperature(ti), model);
          csv += model_text + "," + fmt(ti) + "," + fmt(alpha) + "," +
                 fmt(x[0]) + "," + fmt(x.dim() > 1 ? x[1] : 0.0) + "\n";
          arr.push_back({{"model", model_text},
                         {"t", ti},
                         {"alpha", alpha},
                         {"x", x[0]},
                         {"y", x.dim() > 1 ? x[1] : 0.0}});
        }
      }
      emit(out_path, json ? arr.dump() : csv);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
