// Acceptance checks. One PASS/FAIL line per criterion; the exit status is the
// number of failures. Each check recomputes its headline quantities against an
// independent reference (word lists, entry scans, spectral decomposition) or
// reads them from a full experiment run on the shipped configs.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "orbitlab/ergodic/finite_ball.hpp"
#include "orbitlab/ergodic/limit.hpp"
#include "orbitlab/ergodic/rates.hpp"
#include "orbitlab/expcli/config.hpp"
#include "orbitlab/expcli/record.hpp"
#include "orbitlab/expcli/runner.hpp"
#include "orbitlab/freegroup/enumerate.hpp"
#include "orbitlab/matgroup/congruence.hpp"
#include "orbitlab/matgroup/sl2z.hpp"
#include "orbitlab/numeric.hpp"
#include "orbitlab/oracle/finite_spectrum.hpp"
#include "orbitlab/oracle/sl2z_scan.hpp"
#include "orbitlab/oracle/word_list.hpp"

using namespace orbitlab;
namespace ex = orbitlab::expcli;
namespace fs = std::filesystem;
using matgroup::LatticeElement;

namespace {

const fs::path kConfigs = fs::path(ORBITLAB_SOURCE_DIR) / "configs";
const EnumerationBudget kBudget{};

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Full runs of the shipped configs, kept for the determinism check.
std::map<std::string, ex::ResultRecord> g_runs;

const ex::ResultRecord& run_config(const std::string& name) {
  auto it = g_runs.find(name);
  if (it != g_runs.end()) return it->second;
  auto rec = ex::run(ex::parse_config(ex::load_json(kConfigs / (name + ".json"))));
  if (!rec.valid()) throw std::runtime_error(name + ": run ended with status " + rec.status + ": " + rec.message);
  return g_runs.emplace(name, std::move(rec)).first->second;
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(4);
  s << v;
  return s.str();
}

std::vector<LatticeElement> sl2_generators() {
  return {LatticeElement::make(1, 1, 0, 1), LatticeElement::make(1, 0, 1, 1)};
}

// Even-ball averages on SL2(Z/5): library enumeration against word lists,
// spectral bound per radius, exponent against -2 log rho0.
Outcome finite_exactness() {
  const matgroup::CongruenceQuotient q(5);
  std::vector<std::uint32_t> images;
  for (const auto& g : sl2_generators()) images.push_back(q.reduce(g));
  const int radius = 16;
  const auto hist = ergodic::image_histograms(q, images, radius, kBudget);
  bool exact = true;
  for (int n = 0; n <= radius && exact; ++n) {
    const auto ref = oracle::word_list_histogram(2, n, q.order(), [&](const freegroup::ReducedWord& w) {
      std::uint32_t h = 0;
      for (auto l : w.letters()) h = q.multiply(h, l % 2 ? q.inverse(images[l / 2]) : images[l / 2]);
      return h;
    });
    exact = ref == hist[static_cast<std::size_t>(n)];
  }

  const auto& rec = run_config("free_quotient_sl2_5");
  const auto& f = rec.payload.at("functions").at(0);
  bool bound = true;
  int rows = 0;
  for (const auto& row : f.at("rows")) {
    bound = bound && row.at("sup").get<double>() <= row.at("oracle_bound").get<double>();
    ++rows;
  }
  // Independent spectral reference for rho0.
  const oracle::FiniteSpectrumOracle spectrum(q.regular_action(sl2_generators()));
  const double theta_ref = -2.0 * std::log(spectrum.decay_rate());
  const double theta = f.at("fit_even_sup").at("theta").get<double>();
  const double rel = std::abs(theta - theta_ref) / theta_ref;
  const bool pass = exact && bound && rows == 8 && rel < 0.05;
  return {pass, "word-list equality over B_0..B_16 " + std::string(exact ? "exact" : "BROKEN") + "; sup <= C rho0^(2n) at " +
                    (bound ? "all " : "not all ") + std::to_string(rows) + " radii; theta " + fmt(theta) + " vs " +
                    fmt(theta_ref) + " (rel err " + fmt(rel) + ", tol 0.05)"};
}

// S_1 S_n = S_{n+1} + c S_{n-1} on count tables of several quotients.
Outcome convolution_identity() {
  const std::vector<freegroup::PermutationHom> homs{
      matgroup::CongruenceQuotient(5).regular_action(sl2_generators()),
      freegroup::PermutationHom({{1, 0, 2, 3}, {1, 2, 3, 0}}),
      freegroup::PermutationHom({{1, 0, 3, 2, 5, 4}, {5, 2, 1, 4, 3, 0}}),
      freegroup::PermutationHom({{1, 2, 0, 3}, {0, 2, 3, 1}, {3, 1, 2, 0}}),
      matgroup::CongruenceQuotient(3).regular_action(
          {LatticeElement::make(1, 1, 0, 1), LatticeElement::make(1, 0, 1, 1), LatticeElement::make(2, 1, 1, 1)}),
  };
  std::int64_t worst = 0, backtrack = 0;
  int identities = 0;
  for (const auto& hom : homs) {
    const auto counts = ergodic::enumerate_sphere_counts(hom, 8, kBudget);
    for (int n = 1; n <= 7; ++n) {
      // The empty word is reached from S_1 by 2r backtracks, 2r - 1 from longer spheres.
      worst = std::max(worst, ergodic::convolution_defect(counts, n));
      ++identities;
    }
    backtrack = std::max(backtrack, std::abs(ergodic::convolution_defect(counts, 1, 2 * hom.rank() - 1)));
  }
  return {worst == 0, std::to_string(identities) + " identities on 5 quotients (r = 2, 3; n = 1..7), max defect " +
                          std::to_string(worst) + "; coefficient 2r-1 for n >= 2, 2r at n = 1 (with 2r-1 there the " +
                          "defect is " + std::to_string(backtrack) + ")"};
}

// Balanced sum identity on a grid, then the audit against criterion-1 data.
Outcome rate_identity() {
  double worst = 0.0;
  int points = 0;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j)
      for (int k = 0; k < 10; ++k) {
        const double a = 0.05 + 0.1 * i + 0.005 * j;
        const double rho = 0.25 + 0.4 * j;
        const double e = std::pow(10.0, -1.0 - 1.1 * k);
        const double eps = ergodic::balance_epsilon(a, rho, e);
        const double lhs = std::pow(eps, -rho) * e + std::pow(eps, a);
        const double rhs = 2.0 * std::pow(e, a / (a + rho));
        worst = std::max(worst, std::abs(lhs - rhs) / rhs);
        ++points;
      }
  const auto& rec = run_config("free_quotient_sl2_5");
  bool audit = true;
  double max_ratio = 0.0;
  for (const auto& row : rec.payload.at("functions").at(0).at("rows")) {
    const double rate = ergodic::predict_uniform_rate(1.0, 1.0, row.at("l2").get<double>());
    max_ratio = std::max(max_ratio, row.at("sup").get<double>() / rate);
    audit = audit && row.at("sup").get<double>() <= 10.0 * rate;
  }
  return {worst <= 1e-12 && audit, std::to_string(points) + "-point grid, max relative defect " + fmt(worst) +
                                       " (tol 1e-12); sup / rate(1, 1, L2) at most " + fmt(max_ratio) + " (cap 10)"};
}

// Norm balls against the entry scan, then the growth exponent.
Outcome lattice_balls() {
  bool equal = true;
  for (int T = 2; T <= 20 && equal; ++T) {
    std::vector<LatticeElement> got;
    matgroup::enumerate_sl2z_ball(matgroup::strict_norm_sq_bound_T(T), kBudget,
                                  [&](const LatticeElement& g) { got.push_back(g); });
    std::sort(got.begin(), got.end());
    equal = std::adjacent_find(got.begin(), got.end()) == got.end() &&
            got == oracle::sl2z_entry_scan(matgroup::strict_norm_sq_bound_T(T));
  }
  std::vector<double> lx, ly;
  for (int k = 5; k <= 13; ++k) {
    const double T = std::pow(2.0, k);
    lx.push_back(std::log(T));
    ly.push_back(std::log(static_cast<double>(matgroup::count_sl2z_ball(matgroup::strict_norm_sq_bound_T(T)))));
  }
  const double slope = least_squares(lx, ly).slope;
  return {equal && std::abs(slope - 2.0) <= 0.05, std::string("set equality with the entry scan for T = 2..20 ") +
                                                      (equal ? "holds" : "FAILS") + "; growth exponent over 2^5..2^13 " +
                                                      fmt(slope) + " (2 +- 0.05)"};
}

Outcome coarse_monotonicity() {
  const auto& rec = run_config("monotonicity");
  const auto& s = rec.payload.at("summary");
  bool kappa = true;
  std::string eps_list;
  for (const auto& row : rec.payload.at("rows")) {
    const double eps = row.at("eps").get<double>();
    kappa = kappa && row.at("kappa").get<double>() <= std::log(1.0 + eps) + 0.5 * std::log(2.0) + 1e-12;
    eps_list += (eps_list.empty() ? "" : ", ") + fmt(eps);
  }
  double t_max = 0.0;
  for (const auto& t : rec.config.at("thresholds")) t_max = std::max(t_max, t.get<double>());
  const bool pass = s.at("inclusion_ok").get<bool>() && kappa && s.at("delta_decreasing_in_eps").get<bool>() &&
                    s.at("a0").get<double>() > 0.0 && t_max <= 200.0;
  return {pass, "eps in {" + eps_list + "}, T <= " + fmt(t_max) + ": inclusion " +
                    (s.at("inclusion_ok").get<bool>() ? "exact" : "BROKEN") + ", kappa within log(1+eps) + log(2)/2 " +
                    (kappa ? "yes" : "NO") + ", delta - 1 decreasing " +
                    (s.at("delta_decreasing_in_eps").get<bool>() ? "yes" : "NO") + ", a0 = " + fmt(s.at("a0").get<double>())};
}

Outcome plane_histograms() {
  const auto& rec = run_config("plane_infinite");
  bool pass = true;
  std::string detail;
  for (const auto& p : rec.payload.at("points")) {
    const bool cauchy = p.at("tv_decreasing").get<bool>() && p.at("final_tv").get<double>() < 0.05;
    const bool rejects = p.at("chi_square_lebesgue").at("rejects").get<bool>();
    pass = pass && cauchy && rejects;
    detail += "final TV " + fmt(p.at("final_tv").get<double>()) + (cauchy ? " decreasing" : " NOT Cauchy") +
              ", chi2 " + fmt(p.at("chi_square_lebesgue").at("statistic").get<double>()) + " vs 99% " +
              fmt(p.at("chi_square_lebesgue").at("threshold_99").get<double>()) + "; ";
  }
  const double dep = rec.payload.at("summary").at("point_dependence_over_residual").get<double>();
  pass = pass && dep > 3.0;
  return {pass, detail + "point dependence / Cauchy residual " + fmt(dep) + " (> 3)"};
}

Outcome ratio_statistics() {
  const auto& rec = run_config("ratio");
  const auto& fin = rec.config.at("finite");
  // Spectral limit of N1/N2 against |A1|/|A2|.
  const auto hom = matgroup::CongruenceQuotient(5).regular_action(sl2_generators());
  const oracle::FiniteSpectrumOracle spectrum(hom);
  auto indicator = [&](const ex::Json& set) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(hom.degree()));
    for (const auto& y : set) v(y.get<Eigen::Index>()) = 1.0;
    return v;
  };
  const auto x = fin.at("x").get<Eigen::Index>();
  const double limit = spectrum.limit(indicator(fin.at("A1")))(x) / spectrum.limit(indicator(fin.at("A2")))(x);
  const double sizes = static_cast<double>(fin.at("A1").size()) / static_cast<double>(fin.at("A2").size());
  const double measured = rec.payload.at("finite").at("final_ratio").get<double>();

  const auto& pl = rec.payload.at("plane");
  const double fluct = pl.at("fluctuation").get<double>();
  const double vs_hist = std::abs(pl.at("final_ratio").get<double>() / pl.at("histogram_ratio").get<double>() - 1.0);
  const bool pass = std::abs(limit - sizes) <= 1e-12 && fluct < 0.05 && vs_hist < 0.1;
  return {pass, "finite: oracle limit " + fmt(limit) + " vs |A1|/|A2| = " + fmt(sizes) + ", measured at n = 8: " +
                    fmt(measured) + "; plane: final fluctuation " + fmt(fluct) + " (< 0.05), ratio vs histogram " +
                    fmt(vs_hist) + " (< 0.1)"};
}

Outcome sphere_trend() {
  const auto& rec = run_config("free_sphere2");
  const auto& s = rec.payload.at("summary");
  std::vector<double> sup;
  for (const auto& row : rec.payload.at("rows")) sup.push_back(row.at("sup").get<double>());
  bool monotone = sup.size() == 5;
  for (std::size_t i = 1; i < sup.size(); ++i) monotone = monotone && sup[i] < sup[i - 1];
  const double theta = s.at("theta").get<double>();
  const auto grid = rec.payload.at("grid").at("points").get<int>();
  return {monotone && theta > 0.0 && grid == 1000,
          std::to_string(grid) + "-point grid, " + std::to_string(s.at("orbit_points").get<std::uint64_t>()) +
              " orbit points, sup " + fmt(sup.front()) + " -> " + fmt(sup.back()) + (monotone ? " decreasing" : " NOT monotone") +
              " over n = 1.." + std::to_string(sup.size()) + ", theta " + fmt(theta)};
}

// Every config twice: canonical payloads byte for byte, provenance traced.
Outcome determinism() {
  int same = 0, total = 0;
  bool traced = true;
  for (const auto& entry : fs::directory_iterator(kConfigs)) {
    if (entry.path().extension() != ".json") continue;
    const std::string name = entry.path().stem().string();
    const auto& first = run_config(name);
    const auto doc = ex::load_json(entry.path());
    const auto again = ex::run(ex::parse_config(doc));
    ++total;
    if (again.canonical_payload().dump() == first.canonical_payload().dump() && again.payload_hash() == first.payload_hash())
      ++same;
    const auto& prov = first.payload.at("provenance");
    traced = traced && prov.at("seed") == doc.at("seed") && first.config == doc && prov.at("kind") == doc.at("kind");
  }
  return {same == total && total == 9 && traced, std::to_string(same) + "/" + std::to_string(total) +
                                                     " configs reproduce byte-identical payloads; provenance " +
                                                     (traced ? "matches" : "DOES NOT match") + " config and seed"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double seconds_cap;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria{
      {"C1 finite-quotient exactness", 60, finite_exactness},
      {"C2 convolution identity", 60, convolution_identity},
      {"C3 rate-predictor identity", 60, rate_identity},
      {"C4 SL2(Z) ball enumeration", 300, lattice_balls},
      {"C5 coarse monotonicity", 300, coarse_monotonicity},
      {"C6 infinite-measure histograms", 900, plane_histograms},
      {"C7 ratio statistics", 900, ratio_statistics},
      {"C8 sphere trend", 600, sphere_trend},
      {"C9 determinism and provenance", 3600, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.check();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.seconds_cap;
    const bool pass = out.pass && in_time;
    failures += !pass;
    std::cout << (pass ? "PASS " : "FAIL ") << c.name << ": " << out.detail << " [" << fmt(secs) << " s"
              << (in_time ? "" : ", over the " + fmt(c.seconds_cap) + " s cap") << "]" << std::endl;
  }
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << criteria.size() - failures << "/" << criteria.size() << std::endl;
  return failures;
}
