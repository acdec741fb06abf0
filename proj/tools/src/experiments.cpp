// Copyright 2026 The aqnn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>

#include "aqnn/classify.hpp"
#include "aqnn/coherence.hpp"
#include "aqnn/diamond.hpp"
#include "worker_pool.hpp"

namespace aqnn::cli {

namespace {

[[noreturn]] void config_error(const std::string& what) {
  throw Error(ErrorCode::ParseError, "config: " + what);
}

class Params {
 public:
  explicit Params(const Json& j) : j_(j.is_null() ? Json::object() : j) {
    if (!j_.is_object()) config_error("\"parameters\" must be an object");
  }

  long integer(const std::string& key, long fallback) const {
    if (!j_.contains(key)) return fallback;
    if (!j_[key].is_number_integer()) config_error("\"" + key + "\" must be an integer");
    return j_[key].get<long>();
  }

  double real(const std::string& key, double fallback) const {
    if (!j_.contains(key)) return fallback;
    if (!j_[key].is_number()) config_error("\"" + key + "\" must be a number");
    return j_[key].get<double>();
  }

  std::optional<double> optional_real(const std::string& key) const {
    if (!j_.contains(key)) return std::nullopt;
    return real(key, 0.0);
  }

  Complex complex(const std::string& key, Complex fallback) const {
    if (!j_.contains(key)) return fallback;
    return complex_from_json(j_[key]);
  }

  std::string text(const std::string& key, const std::string& fallback) const {
    if (!j_.contains(key)) return fallback;
    if (!j_[key].is_string()) config_error("\"" + key + "\" must be a string");
    return j_[key].get<std::string>();
  }

  /// A list of numbers or {"start", "stop", "points"} (inclusive ends).
  std::vector<double> grid(const std::string& key, std::vector<double> fallback) const {
    if (!j_.contains(key)) return fallback;
    const Json& g = j_[key];
    std::vector<double> out;
    if (g.is_array()) {
      for (const auto& v : g) {
        if (!v.is_number()) config_error("\"" + key + "\" entries must be numbers");
        out.push_back(v.get<double>());
      }
    } else if (g.is_object() && g.contains("start") && g.contains("stop") && g.contains("points")) {
      const double a = g["start"].get<double>();
      const double b = g["stop"].get<double>();
      const long n = g["points"].get<long>();
      if (n < 1) config_error("\"" + key + "\" needs at least one point");
      for (long k = 0; k < n; ++k) out.push_back(n == 1 ? a : a + (b - a) * static_cast<double>(k) / static_cast<double>(n - 1));
    } else {
      config_error("\"" + key + "\" must be a list or {start, stop, points}");
    }
    if (out.empty()) config_error("\"" + key + "\" is empty");
    return out;
  }

  /// Like grid, but entries may also be {"re", "im"} objects.
  std::vector<Complex> complex_grid(const std::string& key, std::vector<Complex> fallback) const {
    if (!j_.contains(key)) return fallback;
    const Json& g = j_[key];
    if (!g.is_array()) {
      std::vector<Complex> out;
      for (double x : grid(key, {})) out.emplace_back(x, 0.0);
      return out;
    }
    std::vector<Complex> out;
    for (const auto& v : g) out.push_back(complex_from_json(v));
    if (out.empty()) config_error("\"" + key + "\" is empty");
    return out;
  }

 private:
  Json j_;
};

Index dimension(const Params& p, long fallback) {
  const long n = p.integer("N", fallback);
  if (n < 2) config_error("N must be >= 2");
  return static_cast<Index>(n);
}

/// The middle of the uniform-alpha window in which the eps_gamma channel is CPTP.
double central_alpha(Index n, double eps) {
  const double nd = static_cast<double>(n);
  return 0.5 * ((eps - nd) / (nd - 1.0) - eps);
}

using RowFn = std::function<std::vector<Cell>(std::size_t)>;

/// Evaluates rows on the worker pool. A row that throws keeps its parameter
/// prefix, gets empty result cells and the error text in the last column.
std::vector<std::vector<Cell>> evaluate(std::size_t count, std::size_t width,
                                        const std::function<std::vector<Cell>(std::size_t)>& prefix,
                                        const RowFn& results) {
  return parallel_map<std::vector<Cell>>(count, [&](std::size_t i) {
    std::vector<Cell> row = prefix(i);
    try {
      auto tail = results(i);
      row.insert(row.end(), tail.begin(), tail.end());
      row.emplace_back(std::string());
    } catch (const Error& e) {
      row.resize(width - 1);
      row.emplace_back(std::string(e.what()));
    }
    return row;
  });
}

long failed_rows(const Table& t) {
  return std::count_if(t.rows.begin(), t.rows.end(), [](const auto& row) {
    return !std::get<std::string>(row.back()).empty();
  });
}

double as_double(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return *d;
  return std::numeric_limits<double>::quiet_NaN();
}

Table fig2_depth_curve(const Params& p, Json& summary) {
  const Index n = dimension(p, 100);
  const double eta = p.real("eta", 0.01);
  if (!(eta > 0.0 && eta < 1.0)) config_error("eta must lie in (0, 1)");
  const double top = static_cast<double>(n - 1);
  const long points = p.integer("points", 200);
  if (points < 1) config_error("points must be >= 1");
  std::vector<double> defaults;
  for (long k = 1; k <= points; ++k) defaults.push_back(top * static_cast<double>(k) / static_cast<double>(points));
  const auto grid = p.grid("D_grid", defaults);
  const long cap = p.integer("max_iterations", 1'000'000);

  Table t;
  t.header = {"N", "eta", "D", "alpha", "decohering_power", "analytic_depth", "simulated_depth",
              "agreement", "error"};
  t.rows = evaluate(
      grid.size(), t.header.size(),
      [&](std::size_t i) { return std::vector<Cell>{static_cast<long>(n), eta, grid[i], -grid[i] / top}; },
      [&](std::size_t i) {
        const auto spec = ChannelSpec::ideal(AlphaMatrix::uniform(n, -grid[i] / top));
        require_cptp(spec);
        const double d = decohering_power(spec);
        const auto analytic = analytic_depth(n, d, eta);
        const long simulated = simulated_depth(spec, eta, cap);
        return std::vector<Cell>{d, analytic ? Cell(*analytic) : Cell(), simulated,
                                 analytic && *analytic == simulated};
      });

  bool all_agree = true;
  bool monotone = true;
  long previous = std::numeric_limits<long>::max();
  for (const auto& row : t.rows) {
    const auto* agree = std::get_if<bool>(&row[7]);
    all_agree = all_agree && agree && *agree;
    if (const auto* r = std::get_if<long>(&row[5])) {
      monotone = monotone && *r <= previous;
      previous = *r;
    }
  }
  summary["all_agree"] = all_agree;
  summary["monotone_non_increasing"] = monotone;
  return t;
}

Table prop3_diamond_sweep(const Params& p, std::uint64_t seed, Json& summary) {
  const Index n = dimension(p, 3);
  const auto eps_grid = p.grid("eps_grid", {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9});
  const auto alpha = p.optional_real("alpha");
  const int trials = static_cast<int>(p.integer("trials", 200));

  Table t;
  t.header = {"N", "alpha", "epsilon", "sdp_value", "analytic_value", "lower_bound", "sdp_minus_eps",
              "error"};
  t.rows = evaluate(
      eps_grid.size(), t.header.size(),
      [&](std::size_t i) {
        return std::vector<Cell>{static_cast<long>(n), alpha.value_or(central_alpha(n, eps_grid[i])),
                                 eps_grid[i]};
      },
      [&](std::size_t i) {
        const double eps = eps_grid[i];
        const auto a = AlphaMatrix::uniform(n, alpha.value_or(central_alpha(n, eps)));
        const auto ideal = ChannelSpec::ideal(a);
        const auto faulty = ChannelSpec::eps_gamma(a, eps, 0.0);
        const auto sdp = diamond_distance(ideal, faulty, DiamondMethod::InteriorPoint);
        const auto analytic = diamond_analytic_diagonal(ideal, faulty);
        const double lower = diamond_lower_bound(ideal, faulty, trials, seed + i);
        return std::vector<Cell>{sdp.value, analytic ? Cell(analytic->value) : Cell(), lower,
                                 sdp.value - eps};
      });

  double worst = 0.0;
  for (const auto& row : t.rows) {
    const double dev = as_double(row[6]);
    if (!std::isnan(dev)) worst = std::max(worst, std::abs(dev));
  }
  summary["max_abs_sdp_minus_eps"] = worst;
  return t;
}

Table gamma_independence(const Params& p, Json& summary) {
  std::vector<Index> dims;
  for (double x : p.grid("N_grid", {2, 3})) {
    if (x < 2 || x != std::floor(x)) config_error("N_grid entries must be integers >= 2");
    dims.push_back(static_cast<Index>(x));
  }
  const auto eps_grid = p.grid("eps_grid", {0.1, 0.3, 0.5});
  const long points = p.integer("gamma_points", 5);
  if (points < 1) config_error("gamma_points must be >= 1");
  const double phase = p.real("gamma_phase", 0.0);
  const auto alpha = p.optional_real("alpha");

  struct Point {
    Index n;
    double eps;
    double gamma_abs;
  };
  std::vector<Point> grid;
  for (Index n : dims) {
    for (double eps : eps_grid) {
      for (long k = 0; k < points; ++k) {
        const double frac = points == 1 ? 1.0 : static_cast<double>(k) / static_cast<double>(points - 1);
        grid.push_back({n, eps, frac * eps / static_cast<double>(n - 1)});
      }
    }
  }

  Table t;
  t.header = {"N", "alpha", "epsilon", "gamma_abs", "gamma_phase", "sdp_value", "deviation", "error"};
  t.rows = evaluate(
      grid.size(), t.header.size(),
      [&](std::size_t i) {
        const auto& g = grid[i];
        return std::vector<Cell>{static_cast<long>(g.n), alpha.value_or(central_alpha(g.n, g.eps)),
                                 g.eps, g.gamma_abs, phase};
      },
      [&](std::size_t i) {
        const auto& g = grid[i];
        const auto a = AlphaMatrix::uniform(g.n, alpha.value_or(central_alpha(g.n, g.eps)));
        const auto value = diamond_distance(ChannelSpec::ideal(a),
                                            ChannelSpec::eps_gamma(a, g.eps, std::polar(g.gamma_abs, phase)),
                                            DiamondMethod::InteriorPoint)
                               .value;
        return std::vector<Cell>{value, value - g.eps};
      });

  double worst = 0.0;
  for (const auto& row : t.rows) {
    const double dev = as_double(row[6]);
    if (!std::isnan(dev)) worst = std::max(worst, std::abs(dev));
  }
  summary["max_abs_deviation"] = worst;
  return t;
}

struct FamilyPoint {
  double eps;
  Complex gamma;
  Complex lambda;
};

std::vector<FamilyPoint> family_grid(const Params& p, std::vector<double> eps_default,
                                     std::vector<Complex> gamma_default,
                                     std::vector<Complex> lambda_default) {
  const auto eps_grid = p.grid("eps_grid", std::move(eps_default));
  const auto gamma_grid = p.complex_grid("gamma_grid", std::move(gamma_default));
  const auto lambda_grid = p.complex_grid("lambda_grid", std::move(lambda_default));
  std::vector<FamilyPoint> out;
  for (double e : eps_grid) {
    for (Complex g : gamma_grid) {
      for (Complex l : lambda_grid) out.push_back({e, g, l});
    }
  }
  return out;
}

ChannelSpec family_member(const AlphaMatrix& a, const FamilyPoint& f) {
  if (f.lambda != Complex(0.0)) return ChannelSpec::eps_gamma_lambda(a, f.eps, f.gamma, f.lambda);
  return ChannelSpec::eps_gamma(a, f.eps, f.gamma);
}

std::vector<Cell> family_prefix(Index n, Complex alpha, const FamilyPoint& f) {
  return {static_cast<long>(n), alpha.real(), alpha.imag(), f.eps,
          f.gamma.real(), f.gamma.imag(), f.lambda.real(), f.lambda.imag()};
}

Table classify_family(const Params& p, std::uint64_t seed, Json& summary) {
  const Index n = dimension(p, 3);
  const Complex alpha = p.complex("alpha", -0.5);
  const auto grid = family_grid(p, {0.1, 0.3}, {0.0, 0.05}, {0.0, 0.05});
  SearchOptions search;
  search.budget = p.integer("budget", search.budget);
  search.seed = seed;

  std::vector<Json> reports(grid.size());
  Table t;
  t.header = {"N", "alpha_re", "alpha_im", "epsilon", "gamma_re", "gamma_im", "lambda_re",
              "lambda_im", "is_ncg", "is_gio", "sio_certified", "io_certified",
              "activates_coherence", "search_iterations", "error"};
  t.rows = evaluate(
      grid.size(), t.header.size(), [&](std::size_t i) { return family_prefix(n, alpha, grid[i]); },
      [&](std::size_t i) {
        const auto report = classify(family_member(AlphaMatrix::uniform(n, alpha), grid[i]), search);
        reports[i] = to_json(report);
        return std::vector<Cell>{report.is_ncg, report.is_gio, report.sio_certificate.has_value(),
                                 report.io_certificate.has_value(), report.activates_coherence,
                                 report.search_iterations};
      });

  Json all = Json::array();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    all.push_back({{"epsilon", grid[i].eps},
                   {"gamma", complex_to_json(grid[i].gamma)},
                   {"lambda", complex_to_json(grid[i].lambda)},
                   {"report", reports[i]}});
  }
  summary["reports"] = std::move(all);
  return t;
}

Table cp_region_scan(const Params& p, Json& summary) {
  const Index n = dimension(p, 3);
  const auto alpha_grid = p.grid("alpha_grid", {-2.0, -1.75, -1.5, -1.25, -1.0, -0.75, -0.5, -0.25, 0.0, 0.25});
  const auto family = family_grid(p, {0.0, 0.25, 0.5}, {0.0}, {0.0});
  struct Point {
    double alpha;
    FamilyPoint f;
  };
  std::vector<Point> grid;
  for (double a : alpha_grid) {
    for (const auto& f : family) grid.push_back({a, f});
  }

  Table t;
  t.header = {"N", "alpha_re", "alpha_im", "epsilon", "gamma_re", "gamma_im", "lambda_re",
              "lambda_im", "cptp", "min_eigenvalue", "tp_residual", "error"};
  t.rows = evaluate(
      grid.size(), t.header.size(),
      [&](std::size_t i) { return family_prefix(n, grid[i].alpha, grid[i].f); },
      [&](std::size_t i) {
        const auto v = is_cptp(family_member(AlphaMatrix::uniform(n, grid[i].alpha), grid[i].f));
        return std::vector<Cell>{v.cptp, v.min_eigenvalue, v.tp_residual};
      });

  long cptp = 0;
  for (const auto& row : t.rows) {
    if (const auto* b = std::get_if<bool>(&row[8]); b && *b) ++cptp;
  }
  summary["cptp_points"] = cptp;
  return t;
}

}  // namespace

Table experiment_table(const Json& config, std::uint64_t default_seed, Json& summary) {
  if (!config.is_object() || !config.contains("experiment") || !config["experiment"].is_string()) {
    config_error("missing \"experiment\"");
  }
  const std::string name = config["experiment"].get<std::string>();
  const Params p(config.value("parameters", Json::object()));
  const auto seed = static_cast<std::uint64_t>(p.integer("seed", static_cast<long>(default_seed)));
  summary = {{"experiment", name}};

  Table t;
  if (name == "fig2_depth_curve") {
    t = fig2_depth_curve(p, summary);
  } else if (name == "prop3_diamond_sweep") {
    t = prop3_diamond_sweep(p, seed, summary);
  } else if (name == "gamma_independence") {
    t = gamma_independence(p, summary);
  } else if (name == "classify_family") {
    t = classify_family(p, seed, summary);
  } else if (name == "cp_region_scan") {
    t = cp_region_scan(p, summary);
  } else {
    config_error("unknown experiment \"" + name + "\"");
  }
  summary["rows"] = t.rows.size();
  summary["failed_rows"] = failed_rows(t);
  return t;
}

Json run_experiment(const Json& config, const std::string& out_override,
                    std::uint64_t default_seed) {
  std::string path = out_override;
  if (path.empty()) {
    if (!config.contains("output_path") || !config["output_path"].is_string()) {
      config_error("missing \"output_path\" (or pass --out)");
    }
    path = config["output_path"].get<std::string>();
  }
  Json summary;
  const Table t = experiment_table(config, default_seed, summary);
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  write_csv(out, t);
  summary["output_path"] = path;
  return summary;
}

}  // namespace aqnn::cli
