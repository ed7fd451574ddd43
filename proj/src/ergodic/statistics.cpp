#include "orbitlab/ergodic/statistics.hpp"

#include <cmath>

#include "orbitlab/errors.hpp"
#include "orbitlab/numeric.hpp"

namespace orbitlab::ergodic {

GridError sup_error(std::span<const double> average, std::span<const double> limit) {
  if (average.size() != limit.size() || average.empty()) throw DomainError("sup_error needs two grids of equal size");
  GridError d;
  CompensatedSum s1, s2;
  for (std::size_t i = 0; i < average.size(); ++i) {
    const double e = std::abs(average[i] - limit[i]);
    if (e > d.sup) {
      d.sup = e;
      d.argmax = i;
    }
    s1.add(e);
    s2.add(e * e);
  }
  const double n = static_cast<double>(average.size());
  d.l1 = s1.value() / n;
  d.l2 = std::sqrt(s2.value() / n);
  return d;
}

ErrorSeries finite_error_series(const SphereCounts& counts, std::span<const double> f, std::span<const double> limit,
                                ErrorNorm norm, bool odd) {
  ErrorSeries out{norm, {}, {}, {{"t", odd ? "n, ball radius 2n+1" : "n, ball radius 2n"}}};
  for (int n = odd ? 0 : 1; 2 * n + (odd ? 1 : 0) <= counts.max_radius(); ++n) {
    const int m = 2 * n + (odd ? 1 : 0);
    const auto avg = apply_table(counts.ball(m), counts.degree(), f, static_cast<double>(counts.ball_cardinality(m)));
    out.push(n, sup_error(avg, limit).get(norm));
  }
  return out;
}

std::vector<double> plane_hit_counts(const PlaneHits& hits, double r) {
  if (!(r >= 1.0) || r > hits.radius) throw DomainError("X_r must lie inside the enumerated disc");
  std::vector<double> count(hits.thresholds.size(), 0.0);
  for (const auto& h : hits.hits) {
    const double n = h.y.norm();
    if (n >= 1.0 / r && n <= r) count[h.level] += 1.0;
  }
  for (std::size_t l = 1; l < count.size(); ++l) count[l] += count[l - 1];
  return count;
}

BetaFit fit_beta(std::span<const double> t, std::span<const double> counts, double alpha) {
  if (t.size() != counts.size()) throw DomainError("fit_beta: t and counts differ in length");
  std::vector<double> x, y;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(t[i] > 0.0)) throw DomainError("fit_beta needs t > 0");
    if (counts[i] <= 0.0) continue;
    x.push_back(std::log(t[i]));
    y.push_back(std::log(counts[i]) - alpha * t[i]);
  }
  if (x.size() < 3) throw DomainError("fit_beta needs at least three positive counts");
  const auto fit = least_squares(x, y);
  return {fit.slope + 1.0, fit.intercept, fit.residual_norm};
}

std::vector<double> plane_mass_bound(const PlaneHits& hits, double r, const matgroup::Normalization& normalization) {
  // V depends on t only for the power-exp family; the ball size is not
  // known from the hits, so cardinality normalisation is refused.
  if (normalization.kind == matgroup::Normalization::Kind::cardinality)
    throw DomainError("plane mass bound needs a power-exp normalisation");
  auto out = plane_hit_counts(hits, r);
  for (std::size_t l = 0; l < out.size(); ++l) out[l] /= normalization.value(std::log(hits.thresholds[l]), 0.0);
  return out;
}

std::vector<double> RatioStat::ratio_t() const {
  std::vector<double> out;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (n2[i] > 0.0) out.push_back(t[i]);
  return out;
}

std::vector<double> RatioStat::ratio() const {
  std::vector<double> out;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (n2[i] > 0.0) out.push_back(n1[i] / n2[i]);
  return out;
}

double RatioStat::final_fluctuation() const {
  const auto r = ratio();
  if (r.empty()) throw DomainError("no ratio is defined on the grid");
  double out = 0.0;
  for (std::size_t i = r.size() / 2; i < r.size(); ++i) out = std::max(out, std::abs(r[i] / r.back() - 1.0));
  return out;
}

RatioStat finite_ratio_statistic(const SphereCounts& counts, std::uint32_t x, std::span<const std::uint32_t> a1,
                                 std::span<const std::uint32_t> a2) {
  if (x >= counts.degree()) throw DomainError("start point outside the finite set");
  RatioStat out;
  for (int n = 1; 2 * n <= counts.max_radius(); ++n) {
    const auto ball = counts.ball(2 * n);
    std::int64_t s1 = 0, s2 = 0;
    for (auto y : a1) s1 += ball.at(x * counts.degree() + y);
    for (auto y : a2) s2 += ball.at(x * counts.degree() + y);
    out.t.push_back(n);
    out.n1.push_back(static_cast<double>(s1));
    out.n2.push_back(static_cast<double>(s2));
  }
  return out;
}

RatioStat plane_ratio_statistic(const PlaneHits& hits, std::array<double, 2> a1, std::array<double, 2> a2) {
  auto in = [](std::array<double, 2> a) {
    return [a](const Eigen::Vector2d& y) {
      const double n = y.norm();
      return n > a[0] && n < a[1] ? 1.0 : 0.0;
    };
  };
  RatioStat out;
  out.n1 = plane_orbit_sums(hits, in(a1));
  out.n2 = plane_orbit_sums(hits, in(a2));
  for (double T : hits.thresholds) out.t.push_back(std::log(T));
  return out;
}

}  // namespace orbitlab::ergodic
