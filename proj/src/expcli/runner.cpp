#include "orbitlab/expcli/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "orbitlab/ergodic/lattice_orbit.hpp"
#include "orbitlab/ergodic/word_average.hpp"
#include "orbitlab/errors.hpp"
#include "orbitlab/freegroup/enumerate.hpp"
#include "orbitlab/matgroup/float_matrix.hpp"
#include "orbitlab/oracle/finite_spectrum.hpp"
#include "orbitlab/oracle/sl2z_scan.hpp"
#include "orbitlab/oracle/word_list.hpp"
#include "orbitlab/spaces/sphere.hpp"
#include "runners.hpp"

namespace orbitlab::expcli {

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e)) return exit_config;
  if (dynamic_cast<const BudgetExceeded*>(&e)) return exit_budget;
  if (dynamic_cast<const InvariantViolation*>(&e)) return exit_invariant;
  return exit_error;
}

namespace {

// Hash of the fields that can change results; threads and output_dir cannot.
std::string config_hash(const Json& document) {
  Json d = document;
  d.erase("threads");
  d.erase("output_dir");
  return hex64(fnv1a(d.dump()));
}

}  // namespace

ResultRecord run(const ExperimentConfig& cfg) {
  ResultRecord rec;
  rec.config = cfg.document;
  rec.code_version = ORBITLAB_VERSION;
  rec.payload["provenance"] = {{"seed", cfg.seed},
                               {"budget", cfg.budget.max_elements},
                               {"kind", to_string(cfg.kind)},
                               {"config_hash", config_hash(cfg.document)}};
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (cfg.kind) {
      case ExperimentKind::free_quotient: detail::run_free_quotient(cfg, rec); break;
      case ExperimentKind::free_sphere2: detail::run_free_sphere2(cfg, rec); break;
      case ExperimentKind::lattice_quotient: detail::run_lattice_quotient(cfg, rec); break;
      case ExperimentKind::plane_infinite: detail::run_plane_infinite(cfg, rec); break;
      case ExperimentKind::boundary_circle: detail::run_boundary_circle(cfg, rec); break;
      case ExperimentKind::desitter: detail::run_desitter(cfg, rec); break;
      case ExperimentKind::ratio: detail::run_ratio(cfg, rec); break;
      case ExperimentKind::monotonicity_audit: detail::run_monotonicity(cfg, rec); break;
    }
  } catch (const BudgetExceeded& e) {
    rec.status = "budget_exceeded";
    rec.message = e.what();
  } catch (const InvariantViolation& e) {
    rec.status = "invariant_violation";
    rec.message = e.what();
  }
  rec.wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

namespace {

Json check(const std::string& name, bool agree, Json details) {
  return {{"name", name}, {"agree", agree}, {"details", std::move(details)}};
}

void finite_oracles(const Json& quotient, int radius_max, const ExperimentConfig& cfg, Json& checks) {
  const auto q = detail::build_quotient(quotient);
  const auto& hom = q.action();
  const int n_max = std::min(radius_max, 6);
  std::uint64_t elements = 0;
  const auto counts = detail::quotient_counts(q, n_max, "auto", cfg, elements);
  // Sphere tables against word lists, every start point.
  bool agree = true;
  std::size_t compared = 0;
  for (std::uint32_t x = 0; x < hom.degree() && agree; ++x)
    for (int n = 0; n <= n_max && agree; ++n) {
      const auto ref = oracle::word_list_sphere_counts(hom, x, n);
      for (std::uint32_t y = 0; y < hom.degree(); ++y) agree = agree && ref[y] == counts.at(n, x, y);
      ++compared;
    }
  checks.push_back(check("sphere_tables_vs_word_list", agree, {{"radius_max", n_max}, {"rows", compared}}));
  if (q.group) {
    const auto hist = ergodic::image_histograms(*q.group, q.generator_images, n_max, cfg.budget);
    bool same = true;
    for (int n = 0; n <= n_max; ++n) {
      const auto ref = oracle::word_list_histogram(hom.rank(), n, q.group->order(), [&](const freegroup::ReducedWord& w) {
        std::uint32_t h = 0;
        for (auto l : w.letters()) {
          const auto g = q.generator_images[l / 2];
          h = q.group->multiply(h, l % 2 ? q.group->inverse(g) : g);
        }
        return h;
      });
      same = same && ref == hist[static_cast<std::size_t>(n)];
    }
    checks.push_back(check("image_histograms_vs_word_list", same, {{"radius_max", n_max}}));
  }
  if (hom.transitive() && hom.degree() <= 1000) {
    const oracle::FiniteSpectrumOracle spectrum(hom);
    const auto recursion = ergodic::recursion_sphere_counts(hom, n_max);
    const bool rec_ok = recursion == counts;
    checks.push_back(check("sphere_recursion_vs_enumeration", rec_ok, {{"radius_max", n_max}}));
    double worst = 0.0;
    Eigen::VectorXd f = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(hom.degree()));
    f(0) = 1.0;
    const std::vector<double> fv(f.data(), f.data() + f.size());
    for (int n = 1; n <= n_max; ++n) {
      const auto avg = ergodic::apply_table(counts.ball(n), hom.degree(), fv, static_cast<double>(counts.ball_cardinality(n)));
      const auto ref = spectrum.ball_average(f, n);
      for (std::size_t x = 0; x < avg.size(); ++x) worst = std::max(worst, std::abs(avg[x] - ref(static_cast<Eigen::Index>(x))));
    }
    checks.push_back(check("ball_average_vs_spectral", worst < 1e-9, {{"max_abs_diff", worst}}));
  }
}

void lattice_oracle(Json& checks, const EnumerationBudget& budget) {
  bool agree = true;
  std::size_t largest = 0;
  for (int T = 2; T <= 20; ++T) {
    const auto bound = matgroup::strict_norm_sq_bound_T(T);
    std::vector<matgroup::LatticeElement> got;
    matgroup::enumerate_sl2z_ball(bound, budget, [&](const matgroup::LatticeElement& g) { got.push_back(g); });
    std::sort(got.begin(), got.end());
    const auto ref = oracle::sl2z_entry_scan(bound);
    agree = agree && got == ref && matgroup::count_sl2z_ball(bound) == ref.size();
    largest = ref.size();
  }
  checks.push_back(check("sl2z_ball_vs_entry_scan", agree, {{"T_max", 20}, {"ball_at_T_max", largest}}));
}

void plane_oracle(const Eigen::Vector2d& x, double R, Json& checks, const EnumerationBudget& budget) {
  const std::vector<double> thresholds{8, 16, 32, 64};
  const auto hits = ergodic::collect_plane_hits(x, thresholds, R, budget);
  std::vector<std::int64_t> strip(thresholds.size(), 0), full(thresholds.size(), 0);
  for (const auto& h : hits.hits) ++strip[h.level];
  ergodic::for_each_in_nested_balls(thresholds, budget, [&](const matgroup::LatticeElement& g, std::uint32_t l) {
    if ((matgroup::to_real(g) * x).norm() <= R) ++full[l];
  });
  checks.push_back(check("plane_strip_vs_full_ball", strip == full, {{"strip", strip}, {"full", full}}));
}

void sphere_oracle(const ExperimentConfig& cfg, Json& checks) {
  const auto gens = detail::sphere_generators(cfg.document.at("generators"));
  const Json& fj = cfg.document.at("function");
  const Eigen::Vector3d c = detail::vec3(fj.at("centre")).normalized();
  holder::RadialProfile profile{holder::RadialProfile::Shape::smooth_bump, fj.at("radius").get<double>(), 1.0};
  auto grid = spaces::Sphere2::fibonacci_grid(200);
  const int n = 4;
  const ergodic::RadialSphereSums sums(gens, c, profile, 1.0, grid, n, cfg.budget);
  double worst = 0.0;
  for (std::size_t j = 0; j < grid.size(); j += 10) {
    const auto ref = ergodic::word_sphere_sums(
        static_cast<int>(gens.size()), n, grid[j],
        [&](freegroup::Letter l, const Eigen::Vector3d& p) -> Eigen::Vector3d {
          const Eigen::Matrix3d& g = gens[l / 2];
          return l % 2 ? Eigen::Vector3d(g.transpose() * p) : Eigen::Vector3d(g * p);
        },
        [&](const Eigen::Vector3d& p) { return profile((p - c).norm()); }, cfg.budget);
    for (int k = 0; k <= n; ++k) worst = std::max(worst, std::abs(ref[static_cast<std::size_t>(k)] - sums.sphere_sum(k, j)));
  }
  checks.push_back(check("radial_sphere_sums_vs_direct_walk", worst < 1e-9, {{"radius", n}, {"max_abs_diff", worst}}));
}

}  // namespace

Json run_oracles(const ExperimentConfig& cfg) {
  Json checks = Json::array();
  const Json& doc = cfg.document;
  switch (cfg.kind) {
    case ExperimentKind::free_quotient:
      finite_oracles(doc.at("quotient"), doc.at("radius_max").get<int>(), cfg, checks);
      break;
    case ExperimentKind::ratio:
      if (doc.contains("finite"))
        finite_oracles(doc.at("finite").at("quotient"), doc.at("finite").at("radius_max").get<int>(), cfg, checks);
      if (doc.contains("plane"))
        plane_oracle(detail::vec2(doc.at("plane").at("point")), doc.at("plane").at("radius").get<double>(), checks,
                     cfg.budget);
      break;
    case ExperimentKind::free_sphere2: sphere_oracle(cfg, checks); break;
    case ExperimentKind::plane_infinite:
      for (const auto& p : doc.at("points")) plane_oracle(detail::vec2(p), doc.at("radius").get<double>(), checks, cfg.budget);
      break;
    case ExperimentKind::lattice_quotient:
    case ExperimentKind::boundary_circle:
    case ExperimentKind::desitter:
    case ExperimentKind::monotonicity_audit: lattice_oracle(checks, cfg.budget); break;
  }
  bool all = true;
  for (const auto& c : checks) all = all && c.at("agree").get<bool>();
  return {{"kind", to_string(cfg.kind)}, {"checks", checks}, {"all_agree", all}};
}

}  // namespace orbitlab::expcli
