#include <cmath>
#include <numbers>

#include "orbitlab/ergodic/lattice_orbit.hpp"
#include "orbitlab/ergodic/monotone.hpp"
#include "orbitlab/errors.hpp"
#include "orbitlab/holder/test_function.hpp"
#include "orbitlab/matgroup/float_matrix.hpp"
#include "orbitlab/numeric.hpp"
#include "orbitlab/spaces/circle.hpp"
#include "orbitlab/spaces/desitter.hpp"
#include "runners.hpp"

namespace orbitlab::expcli::detail {

namespace {

std::vector<double> log_all(const std::vector<double>& v) {
  std::vector<double> out;
  for (double x : v) out.push_back(std::log(x));
  return out;
}

// Successive total variation distances between cumulative histograms.
Json tv_table(const std::vector<std::vector<double>>& mass, const std::vector<double>& thresholds, NamedSeries& series) {
  Json rows = Json::array();
  for (std::size_t l = 1; l < mass.size(); ++l) {
    const double tv = ergodic::total_variation(mass[l], mass[l - 1]);
    rows.push_back({{"T_from", thresholds[l - 1]}, {"T_to", thresholds[l]}, {"tv", tv}});
    series.t.push_back(std::log(thresholds[l]));
    series.value.push_back(tv);
  }
  return rows;
}

}  // namespace

void run_lattice_quotient(const ExperimentConfig& cfg, ResultRecord& rec) {
  const Json& doc = cfg.document;
  const matgroup::CongruenceQuotient group(doc.at("modulus").get<int>());
  const auto thresholds = thresholds_from_json(doc.at("thresholds"));
  const std::size_t order = group.order();
  rec.payload["group"] = {{"modulus", group.modulus()}, {"order", order}};

  // Growth of #(Gamma cap B_T): counted without materialising elements.
  if (doc.contains("count_thresholds")) {
    const auto ct = thresholds_from_json(doc.at("count_thresholds"));
    std::vector<double> counts;
    Json rows = Json::array();
    for (double T : ct) {
      const auto n = matgroup::count_sl2z_ball(matgroup::strict_norm_sq_bound_T(T));
      counts.push_back(static_cast<double>(n));
      rows.push_back({{"T", T}, {"count", n}, {"count_over_6T2", static_cast<double>(n) / (6.0 * T * T)}});
    }
    const auto fit = least_squares(log_all(ct), log_all(counts));
    rec.payload["growth"] = {{"rows", rows}, {"exponent", fit.slope}, {"residual", fit.residual_norm}};
    rec.series.push_back({"ball_count", "count", ct, counts, {{"t", "T"}, {"ball", "Frobenius norm < T"}}});
  }

  std::uint32_t target = 0;
  if (doc.contains("function") && doc.at("function").contains("element"))
    target = group.reduce(lattice_from_json(doc.at("function").at("element")));
  // f = delta_e on the left-regular action: gamma^-1 x = e iff gamma = x e^-1,
  // so the ball average at x is hist[x e^-1] / |B|.
  const auto hist = ergodic::congruence_ball_histograms(group, thresholds, cfg.budget);
  const std::map<std::string, std::string> meta{{"function", "delta"},
                                                {"modulus", std::to_string(group.modulus())},
                                                {"limit", "mean_projection"},
                                                {"t", "log T"}};
  ergodic::ErrorSeries sup{ergodic::ErrorNorm::sup, {}, {}, meta}, l2{ergodic::ErrorNorm::l2, {}, {}, meta};
  const double uniform = 1.0 / static_cast<double>(order);
  Json rows = Json::array();
  std::int64_t total = 0;
  for (std::size_t l = 0; l < thresholds.size(); ++l) {
    std::int64_t size = 0;
    for (auto c : hist[l]) size += c;
    double s = 0.0;
    CompensatedSum sq;
    for (std::uint32_t x = 0; x < order; ++x) {
      const double avg = static_cast<double>(hist[l][group.multiply(x, group.inverse(target))]) / static_cast<double>(size);
      const double e = std::abs(avg - uniform);
      s = std::max(s, e);
      sq.add(e * e);
    }
    const double rms = std::sqrt(sq.value() / static_cast<double>(order));
    sup.push(std::log(thresholds[l]), s);
    l2.push(std::log(thresholds[l]), rms);
    rows.push_back({{"T", thresholds[l]}, {"ball", size}, {"sup", s}, {"l2", rms}});
    total = size;
  }
  rec.payload["rows"] = rows;
  rec.payload["enumeration"] = {{"elements", total}};
  rec.payload["fit_sup"] = fit_json(sup);
  rec.payload["summary"] = {{"final_sup", sup.value.back()},
                            {"theta", rec.payload["fit_sup"].is_null() ? Json(nullptr) : rec.payload["fit_sup"]["theta"]},
                            {"growth_exponent", rec.payload.contains("growth") ? rec.payload["growth"]["exponent"] : Json(nullptr)}};
  rec.series.push_back(NamedSeries::from("sup", sup));
  rec.series.push_back(NamedSeries::from("l2", l2));
}

void run_monotonicity(const ExperimentConfig& cfg, ResultRecord& rec) {
  const Json& doc = cfg.document;
  matgroup::NormBallFamily family;
  if (doc.contains("normalization")) family.normalization = normalization_from_json(doc.at("normalization"));
  const auto eps = doc.at("eps").get<std::vector<double>>();
  const auto thresholds = thresholds_from_json(doc.at("thresholds"));
  const auto samples = doc.value("samples_per_eps", std::size_t{16});
  const auto audit = ergodic::coarse_monotone_check(family, eps, samples, thresholds, cfg.seed, cfg.budget,
                                                    {Eigen::Matrix2d::Identity()});
  Json rows = Json::array();
  bool certified = true;
  NamedSeries delta{"delta_minus_one", "delta", {}, {}, {{"normalization", family.normalization.describe()}, {"t", "eps"}}};
  // Rows come in the order of the eps grid; the CSV wants increasing t.
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : audit.rows) {
    const double cap = std::log1p(r.eps) + 0.5 * std::log(2.0);
    certified = certified && r.kappa <= cap;
    Json row = {{"eps", r.eps},         {"samples", r.samples},   {"kappa", r.kappa},  {"kappa_cap", cap},
                {"kappa_measured", r.kappa_measured}, {"delta", r.delta}, {"inclusion_ok", !r.violation}};
    if (r.violation) {
      const auto& w = *r.violation;
      row["witness"] = {{"g", {w.g(0, 0), w.g(0, 1), w.g(1, 0), w.g(1, 1)}},
                        {"t", w.t},
                        {"gamma", {w.gamma.a, w.gamma.b, w.gamma.c, w.gamma.d}}};
    }
    rows.push_back(row);
    pts.emplace_back(r.eps, r.delta - 1.0);
  }
  std::sort(pts.begin(), pts.end());
  for (auto [e, d] : pts) {
    delta.t.push_back(e);
    delta.value.push_back(d);
  }
  bool decreasing = true;  // delta - 1 shrinks with eps
  for (std::size_t i = 1; i < pts.size(); ++i) decreasing = decreasing && pts[i - 1].second <= pts[i].second;
  rec.payload["rows"] = rows;
  rec.payload["summary"] = {{"inclusion_ok", audit.inclusion_ok},
                            {"kappa_within_cap", certified},
                            {"delta_decreasing_in_eps", decreasing},
                            {"a0", audit.a0 ? Json(*audit.a0) : Json(nullptr)},
                            {"a0_goodness", audit.a0_goodness}};
  rec.series.push_back(delta);
  if (!audit.inclusion_ok) throw InvariantViolation("support inclusion g B_t in B_{t+kappa} failed");
  if (!certified) throw InvariantViolation("kappa exceeds log(1+eps) + log sqrt2");
}

void run_boundary_circle(const ExperimentConfig& cfg, ResultRecord& rec) {
  const Json& doc = cfg.document;
  const spaces::Circle circle;
  const auto thresholds = thresholds_from_json(doc.at("thresholds"));
  const Json& fj = doc.at("function");
  const double centre = spaces::Circle::normalize(fj.at("centre").get<double>());
  const double radius = fj.at("radius").get<double>();
  const auto f = fj.at("type") == "smooth_bump" ? holder::make_smooth_bump(circle, centre, radius)
                                                : holder::make_bump(circle, centre, radius, fj.value("exponent", 1.0));
  const double mean = *f.exact_mean;
  const auto G = doc.value("grid_points", std::size_t{64});
  std::vector<double> cs(G), sn(G);
  for (std::size_t j = 0; j < G; ++j) {
    const double th = std::numbers::pi * (static_cast<double>(j) + 0.5) / static_cast<double>(G);
    cs[j] = std::cos(th);
    sn[j] = std::sin(th);
  }
  const auto levels = thresholds.size();
  std::vector<std::vector<CompensatedSum>> sums(levels, std::vector<CompensatedSum>(G));
  std::vector<std::int64_t> count(levels, 0);
  ergodic::for_each_in_nested_balls(thresholds, cfg.budget, [&](const matgroup::LatticeElement& g, std::uint32_t l) {
    // gamma^-1 = [[d, -b], [-c, a]] applied to the line at angle theta_j.
    const auto a = static_cast<double>(g.a), b = static_cast<double>(g.b);
    const auto c = static_cast<double>(g.c), d = static_cast<double>(g.d);
    for (std::size_t j = 0; j < G; ++j) {
      const double y = std::atan2(-c * cs[j] + a * sn[j], d * cs[j] - b * sn[j]);
      sums[l][j].add(f(spaces::Circle::normalize(y)));
    }
    ++count[l];
  });
  const std::map<std::string, std::string> meta{{"function", f.name},
                                                {"centre", format_double(centre)},
                                                {"radius", format_double(radius)},
                                                {"grid", "midpoints " + std::to_string(G)},
                                                {"limit", "mean_projection"},
                                                {"t", "log T"}};
  ergodic::ErrorSeries sup{ergodic::ErrorNorm::sup, {}, {}, meta}, l2{ergodic::ErrorNorm::l2, {}, {}, meta};
  Json rows = Json::array();
  std::vector<CompensatedSum> acc(G);
  std::int64_t n = 0;
  for (std::size_t l = 0; l < levels; ++l) {
    n += count[l];
    double s = 0.0;
    CompensatedSum sq;
    for (std::size_t j = 0; j < G; ++j) {
      acc[j].merge(sums[l][j]);
      const double e = std::abs(acc[j].value() / static_cast<double>(n) - mean);
      s = std::max(s, e);
      sq.add(e * e);
    }
    const double rms = std::sqrt(sq.value() / static_cast<double>(G));
    sup.push(std::log(thresholds[l]), s);
    l2.push(std::log(thresholds[l]), rms);
    rows.push_back({{"T", thresholds[l]}, {"ball", n}, {"sup", s}, {"l2", rms}});
  }
  const Json fit = fit_json(sup);
  rec.payload["function"] = {{"name", f.name}, {"centre", centre}, {"radius", radius}, {"mean", mean}};
  rec.payload["rows"] = rows;
  rec.payload["enumeration"] = {{"elements", n}};
  rec.payload["fit_sup"] = fit;
  rec.payload["summary"] = {{"final_sup", sup.value.back()}, {"theta", fit.is_null() ? Json(nullptr) : fit["theta"]}};
  rec.series.push_back(NamedSeries::from("sup", sup));
  rec.series.push_back(NamedSeries::from("l2", l2));
}

void run_desitter(const ExperimentConfig& cfg, ResultRecord& rec) {
  const Json& doc = cfg.document;
  const spaces::DeSitter space;
  const auto thresholds = thresholds_from_json(doc.at("thresholds"));
  const Json& pj = doc.at("point");
  const Eigen::Vector3d x = spaces::DeSitter::from_coordinates(pj.at("z").get<double>(), pj.at("phi").get<double>());
  const double r = doc.at("filtration_radius").get<double>();
  const Json bin = doc.value("binning", Json::object());
  const auto zb = bin.value("z_bins", std::size_t{8}), pb = bin.value("phi_bins", std::size_t{8});
  const auto normalization = normalization_from_json(doc.at("normalization"));
  const auto levels = thresholds.size();

  // X_r lies in the band |z| <= r (|p - x0| >= |z|); bins split that band.
  std::vector<std::vector<std::int64_t>> counts(levels, std::vector<std::int64_t>(zb * pb, 0));
  std::vector<std::int64_t> ball(levels, 0);
  double worst_defect = 0.0;
  ergodic::for_each_in_nested_balls(thresholds, cfg.budget, [&](const matgroup::LatticeElement& g, std::uint32_t l) {
    ++ball[l];
    const Eigen::Matrix3d m = matgroup::adjoint_so21(matgroup::to_real(g.inverse())).matrix();
    const Eigen::Vector3d raw = m * x;
    if (!space.in_filtration(raw, r + 1e-9)) return;
    worst_defect = std::max(worst_defect, std::abs(spaces::DeSitter::quadric_defect(raw)));
    const Eigen::Vector3d y = spaces::DeSitter::project(raw);
    if (!space.in_filtration(y, r)) return;
    const double u = (y.z() + r) / (2.0 * r);
    const double v = (std::atan2(y.y(), y.x()) + std::numbers::pi) / (2.0 * std::numbers::pi);
    const auto iz = std::min(zb - 1, static_cast<std::size_t>(u * static_cast<double>(zb)));
    const auto ip = std::min(pb - 1, static_cast<std::size_t>(v * static_cast<double>(pb)));
    ++counts[l][iz * pb + ip];
  });
  std::vector<std::vector<double>> mass(levels);
  NamedSeries total{"mass", "mass", {}, {}, {{"normalization", normalization.describe()}, {"t", "log T"}}};
  std::int64_t cum_ball = 0;
  Json rows = Json::array();
  std::vector<double> log_t, hit_counts;
  for (std::size_t l = 0; l < levels; ++l) {
    if (l) for (std::size_t k = 0; k < counts[l].size(); ++k) counts[l][k] += counts[l - 1][k];
    cum_ball += ball[l];
    const double t = std::log(thresholds[l]);
    const double V = normalization.value(t, static_cast<double>(cum_ball));
    double m = 0.0;
    std::int64_t hits = 0;
    for (auto c : counts[l]) {
      mass[l].push_back(static_cast<double>(c) / V);
      m += static_cast<double>(c) / V;
      hits += c;
    }
    total.t.push_back(t);
    total.value.push_back(m);
    log_t.push_back(t);
    hit_counts.push_back(static_cast<double>(hits));
    rows.push_back({{"T", thresholds[l]}, {"ball", cum_ball}, {"hits", hits}, {"V", V}, {"mass", m}});
  }
  NamedSeries tv{"tv_successive", "tv", {}, {}, total.metadata};
  const Json tvs = tv_table(mass, thresholds, tv);
  double lo = total.value.front(), hi = lo;
  for (double v : total.value) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  rec.payload["rows"] = rows;
  rec.payload["tv"] = tvs;
  rec.payload["final_histogram"] = mass.back();
  rec.payload["enumeration"] = {{"elements", cum_ball}};
  rec.payload["summary"] = {{"final_tv", tv.value.empty() ? Json(nullptr) : Json(tv.value.back())},
                            {"mass_bound_ratio", lo > 0.0 ? Json(hi / lo) : Json(nullptr)},
                            {"max_quadric_defect", worst_defect},
                            {"filtration_mass", space.filtration_mass(r)},
                            {"beta_fit", beta_fit_json(log_t, hit_counts, normalization)}};
  rec.series.push_back(total);
  rec.series.push_back(tv);
}

}  // namespace orbitlab::expcli::detail
