#include <cmath>

#include "orbitlab/ergodic/word_average.hpp"
#include "orbitlab/errors.hpp"
#include "orbitlab/holder/audit.hpp"
#include "orbitlab/matgroup/float_matrix.hpp"
#include "orbitlab/numeric.hpp"
#include "orbitlab/spaces/sampler.hpp"
#include "orbitlab/spaces/sphere.hpp"
#include "runners.hpp"

namespace orbitlab::expcli::detail {

namespace {

holder::TestFunction<spaces::Sphere2> sphere_function(const spaces::Sphere2& s, const Json& f) {
  const Eigen::Vector3d c = vec3(f.at("centre")).normalized();
  const double radius = f.at("radius").get<double>();
  const auto type = f.at("type").get<std::string>();
  if (type == "smooth_bump") return holder::make_smooth_bump(s, c, radius);
  if (type == "bump") return holder::make_bump(s, c, radius, f.value("exponent", 1.0));
  return holder::make_indicator(s, c, radius);
}

}  // namespace

void run_free_sphere2(const ExperimentConfig& cfg, ResultRecord& rec) {
  const Json& doc = cfg.document;
  const spaces::Sphere2 sphere;
  const auto gens = sphere_generators(doc.at("generators"));
  const auto f = sphere_function(sphere, doc.at("function"));
  const auto grid_n = doc.value("grid_points", std::size_t{1000});
  const int radius = doc.at("radius_max").get<int>();
  const auto grid = spaces::Sphere2::fibonacci_grid(grid_n);
  const double mesh = spaces::Sphere2::fibonacci_mesh(grid_n);
  if (!f.exact_mean) throw ConfigError("no closed-form mean for this function");
  const double mean = *f.exact_mean;

  // The certificate is audited on the grid before it is used off the grid.
  const auto audit = holder::audit_holder(f, sphere, std::span<const Eigen::Vector3d>(grid), 20000,
                                          spaces::derive_seed(cfg.seed, 1));
  rec.payload["function"] = {{"name", f.name},
                             {"radius", f.profile->radius},
                             {"exponent", f.exponent},
                             {"holder_constant", number_or_null(f.holder_constant)},
                             {"mean", mean},
                             {"holder_audit", {{"pairs", audit.pairs_checked}, {"worst_ratio", audit.worst_ratio}}}};
  rec.payload["grid"] = {{"kind", "fibonacci"}, {"points", grid_n}, {"mesh", mesh}};

  const ergodic::RadialSphereSums sums(gens, *f.centre, *f.profile, f.scale, grid, radius, cfg.budget, cfg.threads);
  rec.payload["enumeration"] = {{"rank", static_cast<int>(gens.size())},
                                {"radius_max", radius},
                                {"ball_cardinality", freegroup::ball_size(static_cast<int>(gens.size()), radius)},
                                {"elements", sums.orbit_points()}};

  const std::map<std::string, std::string> meta{{"function", f.name},
                                                {"radius", format_double(f.profile->radius)},
                                                {"grid", "fibonacci " + std::to_string(grid_n)},
                                                {"limit", "mean_projection"},
                                                {"t", "n, ball radius 2n"}};
  ergodic::ErrorSeries sup{ergodic::ErrorNorm::sup, {}, {}, meta}, l2{ergodic::ErrorNorm::l2, {}, {}, meta};
  auto odd_meta = meta;
  odd_meta["t"] = "n, ball radius 2n+1";
  ergodic::ErrorSeries odd{ergodic::ErrorNorm::sup, {}, {}, odd_meta};
  NamedSeries certified{"even_sup_offgrid", "sup", {}, {}, meta};
  certified.metadata["bound"] = "grid sup + C mesh^a";
  const double offgrid = f.holder ? f.holder_constant * std::pow(mesh, f.exponent) : std::nan("");

  Json rows = Json::array();
  for (int k = 1; k <= radius; ++k) {
    const auto avg = sums.ball_average(k);
    double s = 0.0;
    std::size_t arg = 0;
    CompensatedSum sq;
    for (std::size_t j = 0; j < avg.size(); ++j) {
      const double e = std::abs(avg[j] - mean);
      if (e > s) {
        s = e;
        arg = j;
      }
      sq.add(e * e);
    }
    const double rms = std::sqrt(sq.value() / static_cast<double>(avg.size()));
    if (k % 2) {
      odd.push(k / 2, s);
      continue;
    }
    sup.push(k / 2, s);
    l2.push(k / 2, rms);
    certified.t.push_back(k / 2);
    certified.value.push_back(s + offgrid);
    rows.push_back({{"n", k / 2}, {"radius", k}, {"sup", s}, {"l2", rms}, {"argmax", arg},
                    {"sup_offgrid", number_or_null(s + offgrid)}});
  }
  bool monotone = true;
  for (std::size_t i = 1; i < sup.size(); ++i) monotone = monotone && sup.value[i] < sup.value[i - 1];
  double lowest = sup.value.front();
  for (double v : sup.value) lowest = std::min(lowest, v);
  const Json fit = fit_json(sup);

  rec.payload["rows"] = rows;
  rec.payload["fit_even_sup"] = fit;
  rec.payload["fit_even_l2"] = fit_json(l2);
  rec.payload["summary"] = {{"monotone_decreasing", monotone},
                            {"theta", fit.is_null() ? Json(nullptr) : fit["theta"]},
                            {"final_sup", sup.value.back()},
                            {"final_sup_offgrid", number_or_null(sup.value.back() + offgrid)},
                            {"cauchy_within_10pct", lowest >= 0.9 * sup.value.back()},
                            {"orbit_points", sums.orbit_points()}};
  rec.series.push_back(NamedSeries::from("even_sup", sup));
  rec.series.push_back(NamedSeries::from("even_l2", l2));
  rec.series.push_back(NamedSeries::from("odd_sup", odd));
  if (f.holder) rec.series.push_back(certified);
}

}  // namespace orbitlab::expcli::detail
