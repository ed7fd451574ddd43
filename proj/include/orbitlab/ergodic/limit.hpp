#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orbitlab/freegroup/hom.hpp"
#include "orbitlab/holder/test_function.hpp"
#include "orbitlab/spaces/measure.hpp"

namespace orbitlab::ergodic {

/// f -> integral of f against the probability measure.
struct MeanProjection {};

/// f -> int f + ((r-1)/r) <f, f0> f0 on a finite F_r-set, f0 the parity
/// vector when the Schreier graph is bipartite. Even-ball averages converge
/// to this; the formula is quadratic in f0, hence independent of its sign.
struct FreeParity {
  int rank = 2;
  std::optional<std::vector<double>> f0;

  /// Computes f0 from the action.
  static FreeParity from(const freegroup::PermutationHom& hom);
};

/// Infinite-measure limit on the plane for V(t) = e^{alpha t} balls:
///   f -> scale * |x|^-alpha * int f(y) |y|^-alpha dy,
/// evaluated by quasi-Monte Carlo over the support disc of a radial f.
struct DensityIntegral {
  double alpha = 1.0;
  double scale = 1.0;
  std::size_t quadrature_points = 1u << 16;
  std::uint64_t seed = 1;

  double density(const spaces::Plane::Point& x, const spaces::Plane::Point& y) const;
};

using LimitOperator = std::variant<MeanProjection, FreeParity, DensityIntegral>;
std::string describe(const LimitOperator& op);

/// Limit applied to a function table on a finite set, all points at once.
/// MeanProjection and FreeParity only. ConfigError when FreeParity lacks
/// f0 but `hom` is bipartite, or when asked for a DensityIntegral.
std::vector<double> limit_apply(const LimitOperator& op, const freegroup::PermutationHom& hom,
                                const std::vector<double>& f);

/// MeanProjection on a continuous space: the exact mean when f carries one,
/// otherwise the model's quadrature over X_r (which must contain supp f).
template <class Space>
double limit_apply(const LimitOperator& op, const holder::TestFunction<Space>& f,
                   const spaces::MeasureModel<Space>& model) {
  if (!std::holds_alternative<MeanProjection>(op)) throw ConfigError("only the mean projection applies on this space");
  if (f.exact_mean) return *f.exact_mean;
  CompensatedSum s;
  for (const auto& p : model.points()) s.add(f(p));
  return s.value() * model.point_weight();
}

/// DensityIntegral on the plane; f must be radial (centre and profile set).
double limit_apply(const DensityIntegral& op, const holder::TestFunction<spaces::Plane>& f,
                   const spaces::Plane::Point& x);
/// The same density integrated over the annulus rho1 < |y| < rho2, in closed
/// form for alpha = 1: scale |x|^-1 2 pi (rho2 - rho1).
double density_annulus_mass(const DensityIntegral& op, const spaces::Plane::Point& x, double rho1, double rho2);

}  // namespace orbitlab::ergodic
