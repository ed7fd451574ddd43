#include <cmath>
#include <numbers>

#include "orbitlab/ergodic/lattice_orbit.hpp"
#include "orbitlab/ergodic/limit.hpp"
#include "orbitlab/ergodic/statistics.hpp"
#include "orbitlab/errors.hpp"
#include "orbitlab/numeric.hpp"
#include "runners.hpp"

namespace orbitlab::expcli::detail {

namespace {

// Orbit-counting constant of SL_2(Z) on the plane for Frobenius balls: with
// V(t) = e^t the limit density is (12/pi^2) |x|^-1 |y|^-1 (Haar volume of the
// ball pi^2 T^2 over covolume zeta(2)).
constexpr double kPlaneConstant = 12.0 / (std::numbers::pi * std::numbers::pi);

ergodic::PlaneBinning binning_from(const Json& doc, double R) {
  const Json b = doc.value("binning", Json::object());
  return {R, b.value("radial_bins", std::size_t{16}), b.value("angular_bins", std::size_t{8})};
}

// Bin masses of the analytic limit density (alpha = 1 only).
std::vector<double> analytic_bins(const ergodic::PlaneBinning& bin, const ergodic::DensityIntegral& op,
                                  const Eigen::Vector2d& x) {
  std::vector<double> out;
  for (std::size_t i = 0; i < bin.radial_bins; ++i) {
    const double ring = ergodic::density_annulus_mass(op, x, bin.radial_edge(i), bin.radial_edge(i + 1));
    for (std::size_t j = 0; j < bin.angular_bins; ++j) out.push_back(ring / static_cast<double>(bin.angular_bins));
  }
  return out;
}

}  // namespace

Json beta_fit_json(const std::vector<double>& t, const std::vector<double>& counts,
                   const matgroup::Normalization& normalization) {
  if (normalization.kind != matgroup::Normalization::Kind::power_exp) return nullptr;
  try {
    const auto fit = ergodic::fit_beta(t, counts, normalization.alpha);
    return {{"alpha", normalization.alpha},
            {"beta_configured", normalization.beta},
            {"beta_fitted", fit.beta},
            {"residual", fit.residual}};
  } catch (const DomainError&) {
    return nullptr;
  }
}

void run_plane_infinite(const ExperimentConfig& cfg, ResultRecord& rec) {
  const Json& doc = cfg.document;
  const double R = doc.at("radius").get<double>();
  const auto thresholds = thresholds_from_json(doc.at("thresholds"));
  const auto binning = binning_from(doc, R);
  std::vector<Eigen::Vector2d> points;
  for (const auto& p : doc.at("points")) points.push_back(vec2(p));

  const Json& nj = doc.at("normalization");
  const double alpha = nj.at("alpha").get<double>();
  auto normalization = normalization_from_json(nj);
  // "unit_mass": V(t) is scaled so that the predicted limit mass of X_R seen
  // from the first point is one.
  const ergodic::DensityIntegral unit{alpha, kPlaneConstant};
  if (nj.contains("scale") && nj.at("scale").is_string())
    normalization.scale = ergodic::density_annulus_mass(unit, points.front(), 1.0 / R, R);
  const ergodic::DensityIntegral predicted{alpha, kPlaneConstant / normalization.scale};
  rec.payload["normalization"] = {{"alpha", normalization.alpha},
                                  {"beta", normalization.beta},
                                  {"scale", normalization.scale},
                                  {"describe", normalization.describe()}};
  rec.payload["binning"] = {{"r", binning.r}, {"radial_bins", binning.radial_bins}, {"angular_bins", binning.angular_bins}};

  std::vector<double> area;
  for (std::size_t b = 0; b < binning.size(); ++b) area.push_back(binning.area(b));

  Json per_point = Json::array();
  std::vector<std::vector<double>> finals;
  double residual = 0.0;
  std::uint64_t elements = 0;
  bool all_decreasing = true, all_reject = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& x = points[i];
    const auto hits = ergodic::collect_plane_hits(x, thresholds, R, cfg.budget);
    elements += hits.hits.size();
    const auto h = ergodic::plane_histograms(hits, binning, normalization);
    const std::string tag = "x" + std::to_string(i);
    const std::map<std::string, std::string> meta{{"point", format_double(x.x()) + "," + format_double(x.y())},
                                                  {"normalization", normalization.describe()},
                                                  {"radius", format_double(R)},
                                                  {"t", "log T"}};
    NamedSeries tv{tag + "_tv_successive", "tv", {}, {}, meta};
    NamedSeries mass{tag + "_mass", "mass", {}, {}, meta};
    Json tv_rows = Json::array();
    bool decreasing = true;
    const auto masses = ergodic::plane_mass_bound(hits, R, normalization);
    for (std::size_t l = 0; l < thresholds.size(); ++l) {
      mass.t.push_back(std::log(thresholds[l]));
      mass.value.push_back(masses[l]);
      if (l == 0) continue;
      const double d = ergodic::total_variation(h.mass[l], h.mass[l - 1]);
      if (!tv.value.empty() && d >= tv.value.back()) decreasing = false;
      tv.t.push_back(std::log(thresholds[l]));
      tv.value.push_back(d);
      tv_rows.push_back({{"T_from", thresholds[l - 1]}, {"T_to", thresholds[l]}, {"tv", d}});
    }
    const auto chi = ergodic::chi_square_against(h.counts.back(), area);
    const auto profile = ergodic::radial_profile(h.mass.back(), binning);
    double lo = mass.value.front(), hi = lo;
    for (double v : mass.value) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    Json pj = {{"x", {x.x(), x.y()}},
               {"hits", hits.hits.size()},
               {"tv", tv_rows},
               {"tv_decreasing", decreasing},
               {"final_tv", tv.value.back()},
               {"final_mass", mass.value.back()},
               {"mass_bound_ratio", lo > 0.0 ? Json(hi / lo) : Json(nullptr)},
               {"chi_square_lebesgue",
                {{"statistic", chi.statistic}, {"threshold_99", chi.threshold}, {"dof", chi.dof}, {"rejects", chi.rejects}}},
               {"radial_profile",
                {{"slope", profile.slope}, {"monotone_decreasing", profile.monotone_decreasing}, {"density", profile.density},
                 {"radius", profile.radius}}},
               {"final_histogram", h.mass.back()}};
    std::vector<double> log_t;
    for (double T : thresholds) log_t.push_back(std::log(T));
    pj["beta_fit"] = beta_fit_json(log_t, ergodic::plane_hit_counts(hits, R), normalization);
    if (alpha == 1.0) {
      const auto ref = analytic_bins(binning, predicted, x);
      pj["analytic_tv"] = ergodic::total_variation(h.mass.back(), ref);
      double ref_mass = 0.0;
      for (double v : ref) ref_mass += v;
      pj["analytic_mass"] = ref_mass;
    }
    per_point.push_back(pj);
    finals.push_back(h.mass.back());
    residual = std::max(residual, tv.value.back());
    all_decreasing = all_decreasing && decreasing;
    all_reject = all_reject && chi.rejects;
    rec.series.push_back(tv);
    rec.series.push_back(mass);
  }
  rec.payload["points"] = per_point;
  Json summary = {{"cauchy_residual", residual},
                  {"tv_decreasing", all_decreasing},
                  {"rejects_lebesgue", all_reject},
                  {"elements", elements}};
  if (finals.size() >= 2) {
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < finals.size(); ++i) gap = std::min(gap, ergodic::total_variation(finals[0], finals[i]));
    summary["point_dependence_tv"] = gap;
    summary["point_dependence_over_residual"] = residual > 0.0 ? Json(gap / residual) : Json(nullptr);
  }
  rec.payload["summary"] = summary;
}

void run_ratio_plane(const Json& part, const ExperimentConfig& cfg, ResultRecord& rec) {
  const double R = part.at("radius").get<double>();
  const auto thresholds = thresholds_from_json(part.at("thresholds"));
  const auto x = vec2(part.at("point"));
  const auto a1 = part.at("A1").get<std::vector<double>>();
  const auto a2 = part.at("A2").get<std::vector<double>>();
  const auto binning = binning_from(part, R);
  const auto hits = ergodic::collect_plane_hits(x, thresholds, R, cfg.budget);

  const auto stat = ergodic::plane_ratio_statistic(hits, {a1[0], a1[1]}, {a2[0], a2[1]});
  NamedSeries ratio{"plane_ratio", "ratio", stat.ratio_t(), stat.ratio(),
                    {{"point", format_double(x.x()) + "," + format_double(x.y())}, {"t", "log T"}}};
  Json rows = Json::array();
  for (std::size_t l = 0; l < thresholds.size(); ++l)
    rows.push_back({{"T", thresholds[l]}, {"N1", stat.n1[l]}, {"N2", stat.n2[l]}});
  Json out = {{"rows", rows}, {"elements", hits.hits.size()}, {"inconclusive", ratio.value.empty()}};
  if (!ratio.value.empty()) {
    const double last = ratio.value.back();
    const double fluct = stat.final_fluctuation();
    const auto h = ergodic::plane_histograms(hits, binning, matgroup::Normalization::power_exp(1.0, 1.0));
    const double hist_ratio = ergodic::annulus_mass_from_histogram(h.mass.back(), binning, a1[0], a1[1]) /
                              ergodic::annulus_mass_from_histogram(h.mass.back(), binning, a2[0], a2[1]);
    const ergodic::DensityIntegral op{1.0, kPlaneConstant};
    const double analytic = ergodic::density_annulus_mass(op, x, a1[0], a1[1]) / ergodic::density_annulus_mass(op, x, a2[0], a2[1]);
    const double lebesgue = (a1[1] * a1[1] - a1[0] * a1[0]) / (a2[1] * a2[1] - a2[0] * a2[0]);
    out["final_ratio"] = last;
    out["fluctuation"] = fluct;
    out["histogram_ratio"] = hist_ratio;
    out["histogram_relative_deviation"] = std::abs(last / hist_ratio - 1.0);
    out["analytic_ratio"] = analytic;
    out["lebesgue_ratio"] = lebesgue;
  }
  rec.series.push_back(ratio);
  rec.payload["plane"] = std::move(out);
}

void run_ratio(const ExperimentConfig& cfg, ResultRecord& rec) {
  const Json& doc = cfg.document;
  if (doc.contains("finite")) run_ratio_finite(doc.at("finite"), cfg, rec);
  if (doc.contains("plane")) run_ratio_plane(doc.at("plane"), cfg, rec);
  Json summary = Json::object();
  if (rec.payload.contains("finite")) {
    const auto& f = rec.payload["finite"];
    summary["finite_final_ratio"] = f.value("final_ratio", Json(nullptr));
    summary["finite_limit_ratio"] = f["limit_ratio"];
    summary["finite_relative_deviation"] = f.value("final_relative_deviation", Json(nullptr));
  }
  if (rec.payload.contains("plane")) {
    const auto& p = rec.payload["plane"];
    for (const char* k : {"final_ratio", "fluctuation", "histogram_ratio", "histogram_relative_deviation",
                          "analytic_ratio", "lebesgue_ratio"})
      summary[std::string("plane_") + k] = p.value(k, Json(nullptr));
  }
  rec.payload["summary"] = summary;
}

}  // namespace orbitlab::expcli::detail
