#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "orbitlab/errors.hpp"
#include "orbitlab/freegroup/hom.hpp"
#include "orbitlab/holder/test_function.hpp"
#include "orbitlab/numeric.hpp"

namespace orbitlab::holder {

/// omega(f, eps): sup of |f(z) - f(w)| over sample pairs with d(z, w) < eps.
/// Zero when eps is at most the space's smallest nonzero distance (no pair
/// can be that close); otherwise ResolutionError when no sample pair is.
template <class Space>
double holder_modulus(const TestFunction<Space>& f, const Space& space, std::span<const typename Space::Point> points,
                      double eps) {
  std::vector<double> values;
  values.reserve(points.size());
  for (const auto& p : points) values.push_back(f(p));
  bool any = false;
  double best = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const double d = space.distance(points[i], points[j]);
      if (d <= 0.0 || d >= eps) continue;
      any = true;
      best = std::max(best, std::abs(values[i] - values[j]));
    }
  if (!any && eps <= space.resolution()) return 0.0;
  if (!any) throw ResolutionError("no sample pair closer than eps " + format_double(eps));
  return best;
}

struct HolderAudit {
  std::size_t pairs_checked = 0;
  std::size_t points_checked = 0;
  double worst_ratio = 0.0;  // max |f(x)-f(y)| / (C d^a) over checked pairs
};

/// Checks |f| <= sup_bound on every point and the Hoelder certificate on
/// `pairs` seeded random pairs plus every pair closer than the support
/// radius among the first 400 points. Throws InvariantViolation on a breach.
template <class Space>
HolderAudit audit_holder(const TestFunction<Space>& f, const Space& space,
                         std::span<const typename Space::Point> points, std::size_t pairs, std::uint64_t seed) {
  HolderAudit out;
  std::vector<double> values;
  for (const auto& p : points) {
    const double v = f(p);
    if (!std::isfinite(v) || std::abs(v) > f.sup_bound * (1.0 + 1e-12) + 1e-15)
      throw InvariantViolation(f.name + ": sup bound " + format_double(f.sup_bound) + " exceeded by " + format_double(v));
    values.push_back(v);
  }
  out.points_checked = points.size();
  if (!f.holder || points.size() < 2) return out;
  auto check = [&](std::size_t i, std::size_t j) {
    const double d = space.distance(points[i], points[j]);
    const double diff = std::abs(values[i] - values[j]);
    ++out.pairs_checked;
    if (d <= 0.0) {
      if (diff > 1e-12) throw InvariantViolation(f.name + ": different values at distance zero");
      return;
    }
    const double allowed = f.holder_constant * std::pow(d, f.exponent);
    if (allowed > 0.0) out.worst_ratio = std::max(out.worst_ratio, diff / allowed);
    if (diff > allowed * (1.0 + 1e-9) + 1e-12)
      throw InvariantViolation(f.name + ": Hoelder certificate breached, |df| = " + format_double(diff) +
                               " > " + format_double(allowed) + " at distance " + format_double(d));
  };
  std::mt19937_64 gen(seed);
  const auto n = points.size();
  for (std::size_t k = 0; k < pairs; ++k) {
    const std::size_t i = gen() % n, j = gen() % n;
    if (i != j) check(i, j);
  }
  const std::size_t near = std::min<std::size_t>(n, 400);
  for (std::size_t i = 0; i < near; ++i)
    for (std::size_t j = i + 1; j < near; ++j) check(i, j);
  return out;
}

/// Unit vector f0 of L^2(mu), mu uniform probability, with f0(l x) = -f0(x)
/// for every letter l: exists iff the Schreier graph is bipartite, i.e. the
/// even-length words have two orbits. Values are +-1 with f0(0) = +1; the
/// overall sign is a convention. Empty when the even words act transitively.
std::optional<std::vector<double>> parity_vector(const freegroup::PermutationHom& hom);

}  // namespace orbitlab::holder
