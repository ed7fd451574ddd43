#include "orbitlab/ergodic/lattice_orbit.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <numbers>

#include "orbitlab/errors.hpp"

namespace orbitlab::ergodic {

namespace {

std::vector<std::int64_t> bounds_for(const std::vector<double>& thresholds) {
  if (thresholds.empty()) throw DomainError("empty threshold grid");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (i > 0 && !(thresholds[i] > thresholds[i - 1])) throw DomainError("threshold grid must increase");
    out.push_back(matgroup::strict_norm_sq_bound_T(thresholds[i]));
  }
  return out;
}

std::uint32_t level_of(const std::vector<std::int64_t>& bounds, std::int64_t norm_sq) {
  return static_cast<std::uint32_t>(std::lower_bound(bounds.begin(), bounds.end(), norm_sq) - bounds.begin());
}

std::int64_t isqrt(std::int64_t v) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

PlaneHits collect_plane_hits(const Eigen::Vector2d& x, const std::vector<double>& thresholds, double radius,
                             const EnumerationBudget& budget) {
  if (x.y() == 0.0) throw DomainError("plane orbit enumeration needs a point off the horizontal axis");
  PlaneHits out;
  out.x = x;
  out.thresholds = thresholds;
  out.norm_bounds = bounds_for(thresholds);
  out.radius = radius;
  const std::int64_t bound = out.norm_bounds.back();
  const std::int64_t amax = isqrt(bound);
  std::uint64_t examined = 0;
  for (std::int64_t a = -amax; a <= amax; ++a) {
    const std::int64_t bmax = isqrt(bound - a * a);
    double blo = (-radius - static_cast<double>(a) * x.x()) / x.y();
    double bhi = (radius - static_cast<double>(a) * x.x()) / x.y();
    if (blo > bhi) std::swap(blo, bhi);
    const std::int64_t b0 = std::max(-bmax, static_cast<std::int64_t>(std::floor(blo)) - 1);
    const std::int64_t b1 = std::min(bmax, static_cast<std::int64_t>(std::ceil(bhi)) + 1);
    for (std::int64_t b = b0; b <= b1; ++b) {
      const double s = static_cast<double>(a) * x.x() + static_cast<double>(b) * x.y();
      if (std::abs(s) > radius || matgroup::gcd64(a, b) != 1) continue;
      const auto [c0, d0] = matgroup::unimodular_completion(a, b);
      auto [klo, khi] = matgroup::bottom_row_range(a, b, c0, d0, bound);
      if (klo > khi) continue;
      if (s != 0.0) {
        const double t0 = static_cast<double>(c0) * x.x() + static_cast<double>(d0) * x.y();
        double lo = (-radius - t0) / s, hi = (radius - t0) / s;
        if (lo > hi) std::swap(lo, hi);
        klo = std::max(klo, static_cast<std::int64_t>(std::floor(lo)) - 1);
        khi = std::min(khi, static_cast<std::int64_t>(std::ceil(hi)) + 1);
      }
      for (std::int64_t k = klo; k <= khi; ++k) {
        if (++examined > budget.max_elements)
          throw BudgetExceeded("plane orbit enumeration exceeded budget of " + std::to_string(budget.max_elements));
        const matgroup::LatticeElement g{a, b, c0 + k * a, d0 + k * b};
        const Eigen::Vector2d y(s, static_cast<double>(g.c) * x.x() + static_cast<double>(g.d) * x.y());
        if (y.norm() > radius) continue;
        out.hits.push_back({y, level_of(out.norm_bounds, g.norm_sq())});
      }
    }
  }
  return out;
}

std::optional<std::size_t> PlaneBinning::bin_of(const Eigen::Vector2d& y) const {
  const double n = y.norm();
  if (n < 1.0 / r || n >= r) return std::nullopt;
  auto i = static_cast<std::size_t>(std::floor(std::log(n * r) / std::log(r * r) * static_cast<double>(radial_bins)));
  i = std::min(i, radial_bins - 1);
  double phi = std::atan2(y.y(), y.x());
  if (phi < 0.0) phi += 2.0 * std::numbers::pi;
  auto j = static_cast<std::size_t>(std::floor(phi / (2.0 * std::numbers::pi) * static_cast<double>(angular_bins)));
  j = std::min(j, angular_bins - 1);
  return i * angular_bins + j;
}

double PlaneBinning::radial_edge(std::size_t i) const {
  return std::pow(r, 2.0 * static_cast<double>(i) / static_cast<double>(radial_bins) - 1.0);
}

double PlaneBinning::area(std::size_t bin) const {
  const std::size_t i = bin / angular_bins;
  const double lo = radial_edge(i), hi = radial_edge(i + 1);
  return std::numbers::pi * (hi * hi - lo * lo) / static_cast<double>(angular_bins);
}

PlaneHistograms plane_histograms(const PlaneHits& hits, const PlaneBinning& binning,
                                 const matgroup::Normalization& normalization) {
  const std::size_t levels = hits.thresholds.size();
  PlaneHistograms out;
  out.counts.assign(levels, std::vector<std::int64_t>(binning.size(), 0));
  for (const auto& h : hits.hits)
    if (auto b = binning.bin_of(h.y)) ++out.counts[h.level][*b];
  for (std::size_t l = 1; l < levels; ++l)
    for (std::size_t b = 0; b < binning.size(); ++b) out.counts[l][b] += out.counts[l - 1][b];
  for (std::size_t l = 0; l < levels; ++l) {
    const double t = std::log(hits.thresholds[l]);
    double card = 0.0;
    if (normalization.kind == matgroup::Normalization::Kind::cardinality)
      card = static_cast<double>(matgroup::count_sl2z_ball(hits.norm_bounds[l]));
    const double v = normalization.value(t, card);
    out.normaliser.push_back(v);
    std::vector<double> m(binning.size());
    for (std::size_t b = 0; b < binning.size(); ++b) m[b] = static_cast<double>(out.counts[l][b]) / v;
    out.mass.push_back(std::move(m));
  }
  return out;
}

std::vector<double> plane_orbit_sums(const PlaneHits& hits, const std::function<double(const Eigen::Vector2d&)>& g) {
  std::vector<CompensatedSum> acc(hits.thresholds.size());
  for (const auto& h : hits.hits) acc[h.level].add(g(h.y));
  std::vector<double> out;
  CompensatedSum running;
  for (const auto& a : acc) {
    running.merge(a);
    out.push_back(running.value());
  }
  return out;
}

double total_variation(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) throw DomainError("histograms differ in size");
  CompensatedSum s;
  for (std::size_t i = 0; i < p.size(); ++i) s.add(std::abs(p[i] - q[i]));
  return 0.5 * s.value();
}

ChiSquareTest chi_square_against(const std::vector<std::int64_t>& counts, const std::vector<double>& weights,
                                 double level) {
  if (counts.size() != weights.size()) throw DomainError("counts and weights differ in size");
  double total = 0.0, wsum = 0.0;
  std::size_t used = 0;
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (weights[i] > 0.0) {
      total += static_cast<double>(counts[i]);
      wsum += weights[i];
      ++used;
    }
  if (used < 2 || total <= 0.0) throw DomainError("chi-square test needs two weighted bins and a positive total");
  ChiSquareTest out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    const double expected = total * weights[i] / wsum;
    const double d = static_cast<double>(counts[i]) - expected;
    out.statistic += d * d / expected;
  }
  out.dof = used - 1;
  out.threshold = boost::math::quantile(boost::math::chi_squared(static_cast<double>(out.dof)), level);
  out.rejects = out.statistic > out.threshold;
  return out;
}

RadialProfileFit radial_profile(const std::vector<double>& mass, const PlaneBinning& binning) {
  RadialProfileFit out;
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < binning.radial_bins; ++i) {
    double m = 0.0;
    for (std::size_t j = 0; j < binning.angular_bins; ++j) m += mass[i * binning.angular_bins + j];
    const double lo = binning.radial_edge(i), hi = binning.radial_edge(i + 1);
    const double density = m / (std::numbers::pi * (hi * hi - lo * lo));
    out.radius.push_back(std::sqrt(lo * hi));
    out.density.push_back(density);
    if (density > 0.0) {
      lx.push_back(std::log(out.radius.back()));
      ly.push_back(std::log(density));
    }
  }
  if (lx.size() >= 2) out.slope = least_squares(lx, ly).slope;
  out.monotone_decreasing = true;
  for (std::size_t i = 1; i < out.density.size(); ++i)
    if (!(out.density[i] < out.density[i - 1])) out.monotone_decreasing = false;
  return out;
}

double annulus_mass_from_histogram(const std::vector<double>& mass, const PlaneBinning& binning, double rho1,
                                   double rho2) {
  double total = 0.0;
  for (std::size_t i = 0; i < binning.radial_bins; ++i) {
    const double lo = binning.radial_edge(i), hi = binning.radial_edge(i + 1);
    const double a = std::max(lo, rho1), b = std::min(hi, rho2);
    if (b <= a) continue;
    const double frac = (b * b - a * a) / (hi * hi - lo * lo);
    for (std::size_t j = 0; j < binning.angular_bins; ++j) total += frac * mass[i * binning.angular_bins + j];
  }
  return total;
}

void for_each_in_nested_balls(const std::vector<double>& thresholds, const EnumerationBudget& budget,
                              const std::function<void(const matgroup::LatticeElement&, std::uint32_t)>& visit) {
  const auto bounds = bounds_for(thresholds);
  budget.require(matgroup::predicted_sl2z_ball_size(bounds.back()), "lattice ball");
  matgroup::enumerate_sl2z_ball(bounds.back(), budget, [&](const matgroup::LatticeElement& g) {
    visit(g, level_of(bounds, g.norm_sq()));
  });
}

std::vector<std::vector<std::int64_t>> congruence_ball_histograms(const matgroup::CongruenceQuotient& group,
                                                                  const std::vector<double>& thresholds,
                                                                  const EnumerationBudget& budget) {
  std::vector<std::vector<std::int64_t>> hist(thresholds.size(), std::vector<std::int64_t>(group.order(), 0));
  for_each_in_nested_balls(thresholds, budget, [&](const matgroup::LatticeElement& g, std::uint32_t level) {
    ++hist[level][group.reduce(g)];
  });
  for (std::size_t l = 1; l < hist.size(); ++l)
    for (std::size_t h = 0; h < group.order(); ++h) hist[l][h] += hist[l - 1][h];
  return hist;
}

}  // namespace orbitlab::ergodic
