#include <cmath>

#include "orbitlab/ergodic/limit.hpp"
#include "orbitlab/ergodic/rates.hpp"
#include "orbitlab/ergodic/statistics.hpp"
#include "orbitlab/errors.hpp"
#include "orbitlab/freegroup/enumerate.hpp"
#include "orbitlab/holder/audit.hpp"
#include "orbitlab/numeric.hpp"
#include "orbitlab/oracle/finite_spectrum.hpp"
#include "runners.hpp"

namespace orbitlab::expcli::detail {

ergodic::SphereCounts quotient_counts(const BuiltQuotient& q, int radius, const std::string& method,
                                      const ExperimentConfig& cfg, std::uint64_t& elements) {
  const auto& hom = q.action();
  if (method == "recursion") return ergodic::recursion_sphere_counts(hom, radius);
  if (method == "auto" && q.group) {
    const auto hist = ergodic::image_histograms(*q.group, q.generator_images, radius, cfg.budget, cfg.threads);
    elements += freegroup::ball_size(hom.rank(), radius);
    return ergodic::regular_sphere_counts(*q.group, hist, hom.rank());
  }
  auto counts = ergodic::enumerate_sphere_counts(hom, radius, cfg.budget, cfg.threads);
  elements += freegroup::ball_size(hom.rank(), radius) * hom.degree();
  return counts;
}

Json fit_json(const ergodic::ErrorSeries& s) {
  try {
    const auto fit = ergodic::fit_exponent(s);
    return {{"theta", fit.theta}, {"log_c", fit.intercept}, {"goodness", fit.goodness}, {"points", fit.points_used}};
  } catch (const DomainError&) {
    return nullptr;
  }
}

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

namespace {

std::vector<double> function_values(const Json& f, const BuiltQuotient& q) {
  const std::size_t n = q.action().degree();
  const auto type = f.at("type").get<std::string>();
  std::vector<double> v(n, 0.0);
  if (type == "delta") {
    v[f.at("point").get<std::size_t>()] = 1.0;
  } else if (type == "table") {
    v = f.at("values").get<std::vector<double>>();
  } else {
    // Bump in the space's own metric: profinite on chains, discrete otherwise.
    const auto c = f.at("centre").get<std::uint32_t>();
    const double radius = f.at("radius").get<double>();
    const double a = f.value("exponent", 1.0);
    for (std::uint32_t x = 0; x < n; ++x) {
      const double d = q.chain ? freegroup::profinite_coset_distance(x, c, *q.chain) : (x == c ? 0.0 : 1.0);
      v[x] = d < radius ? 1.0 - std::pow(d / radius, a) : 0.0;
    }
  }
  return v;
}

std::string function_name(const Json& f, std::size_t i) {
  const auto type = f.at("type").get<std::string>();
  if (type == "delta") return "delta" + std::to_string(f.at("point").get<int>());
  if (type == "bump") return "bump" + std::to_string(f.at("centre").get<int>());
  return "f" + std::to_string(i);
}

}  // namespace

void run_free_quotient(const ExperimentConfig& cfg, ResultRecord& rec) {
  const Json& doc = cfg.document;
  const auto q = build_quotient(doc.at("quotient"));
  const auto& hom = q.action();
  const int radius = doc.at("radius_max").get<int>();
  const int halves = radius / 2;
  const auto method = doc.value("method", std::string("auto"));
  const int r = hom.rank();
  const std::size_t degree = hom.degree();

  auto parity = ergodic::FreeParity::from(hom);
  const bool bipartite = parity.f0.has_value();
  const bool use_parity = doc.value("limit", std::string("free_parity")) == "free_parity";
  const ergodic::LimitOperator op = use_parity ? ergodic::LimitOperator(parity) : ergodic::MeanProjection{};

  rec.payload["group"] = {{"rank", r},
                          {"degree", degree},
                          {"quotient", doc.at("quotient").at("type")},
                          {"transitive", hom.transitive()},
                          {"bipartite", bipartite},
                          {"limit", ergodic::describe(op)}};

  std::uint64_t elements = 0;
  const auto counts = quotient_counts(q, radius, method, cfg, elements);
  rec.payload["enumeration"] = {{"method", method == "auto" && q.group ? "image_histogram" : method},
                                {"radius_max", radius},
                                {"ball_cardinality", counts.ball_cardinality(radius)},
                                {"elements", elements}};

  // Spectral reference for the exponential bound.
  std::optional<oracle::FiniteSpectrumOracle> spectrum;
  if (hom.transitive() && degree <= 1000) spectrum.emplace(hom);
  const double rho0 = spectrum ? spectrum->decay_rate() : std::nan("");
  if (spectrum)
    rec.payload["spectrum"] = {{"second_singular_value", spectrum->second_singular_value()},
                               {"decay_rate", rho0},
                               {"sign_eigenvalue", spectrum->has_sign_eigenvalue()},
                               {"theta_reference", -2.0 * std::log(rho0)}};
  // The oracle's limit is FreeParity; under "mean" on a bipartite action the
  // averages do not converge to the chosen limit and no bound applies.
  const bool bound_applies = spectrum && (use_parity || !bipartite);

  const Json rate = doc.value("rate", Json::object());
  const double a = rate.value("a", 1.0), rho = rate.value("rho", 1.0);
  const double audit_constant = rate.value("audit_constant", 10.0);

  const Json& functions = doc.at("functions");
  Json results = Json::array();
  Json summary = Json::object();
  bool all_bounds = true, all_rates = true;
  std::string first_breach;
  for (std::size_t i = 0; i < functions.size(); ++i) {
    const auto f = function_values(functions[i], q);
    const auto name = function_name(functions[i], i);
    const auto lim = ergodic::limit_apply(op, hom, f);
    // Odd balls see the sign eigenvalue with the opposite sign.
    std::vector<double> lim_odd = lim;
    if (bipartite) {
      const auto mean = ergodic::limit_apply(ergodic::MeanProjection{}, hom, f);
      for (std::size_t x = 0; x < degree; ++x) lim_odd[x] = 2.0 * mean[x] - lim[x];
    }

    std::map<std::string, std::string> meta{{"function", name},
                                            {"quotient", doc.at("quotient").dump()},
                                            {"limit", ergodic::describe(op)},
                                            {"t", "n, ball radius 2n"}};
    ergodic::ErrorSeries even_sup{ergodic::ErrorNorm::sup, {}, {}, meta}, even_l2{ergodic::ErrorNorm::l2, {}, {}, meta};
    auto odd_meta = meta;
    odd_meta["t"] = "n, ball radius 2n+1";
    ergodic::ErrorSeries odd_sup{ergodic::ErrorNorm::sup, {}, {}, odd_meta};

    const double C = spectrum ? spectrum->deviation_constant(Eigen::Map<const Eigen::VectorXd>(f.data(), f.size()))
                              : std::nan("");
    Json rows = Json::array();
    bool bound_ok = true, rate_ok = true, norms_ok = true;
    double spectral_gap_check = 0.0;
    for (int n = 0; n <= halves; ++n) {
      if (2 * n + 1 <= radius) {
        const auto avg = ergodic::apply_table(counts.ball(2 * n + 1), degree, f,
                                              static_cast<double>(counts.ball_cardinality(2 * n + 1)));
        odd_sup.push(n, ergodic::sup_error(avg, lim_odd).sup);
      }
      if (n == 0) continue;
      const auto avg =
          ergodic::apply_table(counts.ball(2 * n), degree, f, static_cast<double>(counts.ball_cardinality(2 * n)));
      const auto d = ergodic::sup_error(avg, lim);
      even_sup.push(n, d.sup);
      even_l2.push(n, d.l2);
      norms_ok = norms_ok && d.sup >= d.l2;
      Json row = {{"n", n}, {"radius", 2 * n}, {"sup", d.sup}, {"l2", d.l2}, {"l1", d.l1}, {"argmax", d.argmax}};
      if (bound_applies) {
        const double bound = C * std::pow(rho0, 2.0 * n);
        row["oracle_bound"] = bound;
        if (d.sup > bound * (1.0 + 1e-9) + 1e-12) bound_ok = false;
        if (n <= 8) {
          const Eigen::VectorXd ref =
              spectrum->ball_average(Eigen::Map<const Eigen::VectorXd>(f.data(), f.size()), 2 * n);
          for (std::size_t x = 0; x < degree; ++x)
            spectral_gap_check = std::max(spectral_gap_check, std::abs(ref(x) - avg[x]));
        }
      }
      if (d.l2 > 0.0 && d.l2 < 1.0) {
        const double predicted = audit_constant * ergodic::predict_uniform_rate(a, rho, d.l2);
        row["rate_bound"] = predicted;
        if (d.sup > predicted) rate_ok = false;
      }
      rows.push_back(row);
    }
    Json res = {{"name", name},
                {"rows", rows},
                {"fit_even_sup", fit_json(even_sup)},
                {"fit_even_l2", fit_json(even_l2)},
                {"sup_dominates_l2", norms_ok},
                {"rate_audit", {{"a", a}, {"rho", rho}, {"constant", audit_constant}, {"holds", rate_ok}}}};
    if (bound_applies) {
      res["oracle"] = {{"C", C}, {"rho0", rho0}, {"bound_holds", bound_ok}, {"spectral_max_abs_diff", spectral_gap_check}};
      const Json fit = res["fit_even_sup"];
      if (!fit.is_null()) {
        const double ref = -2.0 * std::log(rho0);
        res["theta_relative_error"] = std::abs(fit["theta"].get<double>() - ref) / ref;
      }
    }
    if (bipartite) {
      // B_n f0 = f0 * sum_k (-1)^k |S_k| / |B_n| exactly.
      double worst = 0.0;
      for (int n = 1; n <= radius; ++n) {
        const auto avg =
            ergodic::apply_table(counts.ball(n), degree, *parity.f0, static_cast<double>(counts.ball_cardinality(n)));
        double signed_mass = 0.0;
        for (int k = 0; k <= n; ++k)
          signed_mass += (k % 2 ? -1.0 : 1.0) * static_cast<double>(freegroup::sphere_size(r, k));
        signed_mass /= static_cast<double>(counts.ball_cardinality(n));
        for (std::size_t x = 0; x < degree; ++x) worst = std::max(worst, std::abs(avg[x] - (*parity.f0)[x] * signed_mass));
      }
      res["sign_coupling_max_defect"] = worst;
    }
    rec.series.push_back(NamedSeries::from(name + "_even_sup", even_sup));
    rec.series.push_back(NamedSeries::from(name + "_even_l2", even_l2));
    rec.series.push_back(NamedSeries::from(name + "_odd_sup", odd_sup));
    if (i == 0) {
      summary["function"] = name;
      summary["final_sup"] = even_sup.value.back();
      summary["theta"] = res["fit_even_sup"].is_null() ? Json(nullptr) : res["fit_even_sup"]["theta"];
      if (bound_applies) summary["theta_reference"] = -2.0 * std::log(rho0);
      if (res.contains("theta_relative_error")) summary["theta_relative_error"] = res["theta_relative_error"];
    }
    all_bounds = all_bounds && (!bound_applies || bound_ok);
    all_rates = all_rates && rate_ok;
    if (first_breach.empty() && bound_applies && !bound_ok) first_breach = name + ": spectral bound C rho0^2n exceeded";
    results.push_back(std::move(res));
  }
  summary["oracle_bounds_hold"] = all_bounds;
  summary["rate_audits_hold"] = all_rates;
  rec.payload["functions"] = std::move(results);
  rec.payload["summary"] = std::move(summary);
  if (!first_breach.empty()) throw InvariantViolation(first_breach);
}

void run_ratio_finite(const Json& part, const ExperimentConfig& cfg, ResultRecord& rec) {
  const auto q = build_quotient(part.at("quotient"));
  const auto& hom = q.action();
  const int radius = part.at("radius_max").get<int>();
  const auto x = part.at("x").get<std::uint32_t>();
  const auto a1 = part.at("A1").get<std::vector<std::uint32_t>>();
  const auto a2 = part.at("A2").get<std::vector<std::uint32_t>>();
  std::uint64_t elements = 0;
  const auto counts = quotient_counts(q, radius, part.value("method", std::string("auto")), cfg, elements);

  auto parity = ergodic::FreeParity::from(hom);
  auto indicator = [&](const std::vector<std::uint32_t>& a) {
    std::vector<double> v(hom.degree(), 0.0);
    for (auto y : a) v[y] = 1.0;
    return v;
  };
  const double lim1 = ergodic::limit_apply(parity, hom, indicator(a1))[x];
  const double lim2 = ergodic::limit_apply(parity, hom, indicator(a2))[x];
  const double limit_ratio = lim1 / lim2;

  const auto stat = ergodic::finite_ratio_statistic(counts, x, a1, a2);
  NamedSeries ratio{"finite_ratio", "ratio", stat.ratio_t(), stat.ratio(),
                    {{"quotient", part.at("quotient").dump()}, {"t", "n, ball radius 2n"}}};
  Json rows = Json::array();
  for (std::size_t i = 0; i < stat.t.size(); ++i)
    rows.push_back({{"n", stat.t[i]}, {"N1", stat.n1[i]}, {"N2", stat.n2[i]}});
  Json out = {{"rows", rows},
              {"elements", elements},
              {"bipartite", parity.f0.has_value()},
              {"limit_ratio", number_or_null(limit_ratio)},
              {"uniform_ratio", static_cast<double>(a1.size()) / static_cast<double>(a2.size())},
              {"inconclusive", ratio.value.empty()}};
  if (!ratio.value.empty()) {
    out["final_ratio"] = ratio.value.back();
    out["final_relative_deviation"] = std::abs(ratio.value.back() / limit_ratio - 1.0);
  }
  rec.series.push_back(ratio);
  rec.payload["finite"] = std::move(out);
}

}  // namespace orbitlab::expcli::detail
