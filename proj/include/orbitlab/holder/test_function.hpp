#pragma once

// Test functions with analytic Hoelder certificates: |f| <= sup_bound and
// |f(x) - f(y)| <= holder_constant * d(x, y)^exponent. Sampling only audits
// these numbers; it never produces them.

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "orbitlab/errors.hpp"
#include "orbitlab/spaces/circle.hpp"
#include "orbitlab/spaces/desitter.hpp"
#include "orbitlab/spaces/finite.hpp"
#include "orbitlab/spaces/plane.hpp"
#include "orbitlab/spaces/sphere.hpp"

namespace orbitlab::holder {

/// phi(d) for a function of the distance to a centre.
struct RadialProfile {
  enum class Shape { power_bump, smooth_bump, indicator };
  Shape shape = Shape::power_bump;
  double radius = 1.0;
  double exponent = 1.0;

  double operator()(double d) const {
    if (d >= radius) return 0.0;
    switch (shape) {
      case Shape::power_bump: return 1.0 - std::pow(d / radius, exponent);
      case Shape::smooth_bump: {
        const double s = 1.0 - (d / radius) * (d / radius);
        return s * s;
      }
      case Shape::indicator: return 1.0;
    }
    return 0.0;
  }
};

std::string to_string(RadialProfile::Shape shape);

template <class Space>
struct TestFunction {
  using Point = typename Space::Point;

  std::string name;
  std::function<double(const Point&)> evaluator;
  /// supp f lies in X_r for r = support_radius.
  double support_radius = std::numeric_limits<double>::infinity();
  double exponent = 1.0;
  double holder_constant = 0.0;
  double sup_bound = 0.0;
  std::optional<double> exact_mean;
  /// False for indicators: usable only in ratio statistics and transitive
  /// experiments, where bounded Borel functions are allowed.
  bool holder = true;
  /// Set when f(x) = scale * profile(d(x, centre)).
  std::optional<Point> centre;
  std::optional<RadialProfile> profile;
  double scale = 1.0;

  double operator()(const Point& x) const { return evaluator(x); }

  /// Membership in C^a(X)_1: sup bound plus Hoelder constant at most one.
  bool in_unit_ball() const { return holder && sup_bound + holder_constant <= 1.0 + 1e-12; }

  TestFunction scaled(double c) const {
    TestFunction out = *this;
    auto inner = evaluator;
    out.evaluator = [inner, c](const Point& x) { return c * inner(x); };
    out.holder_constant = std::abs(c) * holder_constant;
    out.sup_bound = std::abs(c) * sup_bound;
    if (exact_mean) out.exact_mean = c * *exact_mean;
    out.scale = c * scale;
    return out;
  }

  /// f / (sup + constant) when that sum exceeds one, so the result lies in
  /// C^a(X)_1; unchanged otherwise. Throws DomainError on non-Hoelder f.
  TestFunction normalized() const {
    if (!holder) throw DomainError("indicator functions have no Hoelder normalisation");
    const double n = sup_bound + holder_constant;
    if (n <= 1.0) return *this;
    TestFunction out = scaled(1.0 / n);
    out.name = name + "/normalized";
    return out;
  }
};

// Analytic integrals of radial profiles against each space's measure, when
// the ball fits in one chart. Empty when no closed form is available.
std::optional<double> radial_mean(const spaces::Sphere2&, const RadialProfile& p);
std::optional<double> radial_mean(const spaces::Circle&, const RadialProfile& p);
std::optional<double> radial_mean(const spaces::Plane&, const RadialProfile& p);
inline std::optional<double> radial_mean(const spaces::DeSitter&, const RadialProfile&) { return std::nullopt; }

/// Smallest r with D_radius(centre) inside X_r.
double support_radius_for(const spaces::Plane& space, const spaces::Plane::Point& centre, double radius);
template <class Space>
double support_radius_for(const Space& space, const typename Space::Point& centre, double radius) {
  return space.distance(centre, space.basepoint()) + radius;
}

namespace detail {

template <class Space>
double finite_mean(const Space& space, const std::function<double(const typename Space::Point&)>& f) {
  double s = 0.0;
  for (std::uint32_t x = 0; x < space.size(); ++x) s += f(x);
  return s / static_cast<double>(space.size());
}

template <class Space>
constexpr bool is_finite_space =
    Space::kind == spaces::SpaceKind::finite_coset || Space::kind == spaces::SpaceKind::profinite_level;

template <class Space>
TestFunction<Space> radial(const Space& space, const typename Space::Point& centre, RadialProfile profile,
                           std::string name) {
  TestFunction<Space> f;
  f.name = std::move(name);
  f.evaluator = [space, centre, profile](const typename Space::Point& x) { return profile(space.distance(x, centre)); };
  f.support_radius = support_radius_for(space, centre, profile.radius);
  f.sup_bound = 1.0;
  f.centre = centre;
  f.profile = profile;
  if constexpr (is_finite_space<Space>)
    f.exact_mean = finite_mean(space, f.evaluator);
  else
    f.exact_mean = radial_mean(space, profile);
  return f;
}

}  // namespace detail

/// f(x) = max(0, 1 - (d(x, centre)/radius)^a), with certificate radius^-a:
/// s -> s^a is a-Hoelder with constant 1 for a <= 1, and truncation at zero
/// is 1-Lipschitz. Throws ResolutionError if radius is below the smallest
/// nonzero distance of the space, DomainError outside radius > 0, a in (0,1].
template <class Space>
TestFunction<Space> make_bump(const Space& space, const typename Space::Point& centre, double radius, double a) {
  if (!(radius > 0.0) || !(a > 0.0 && a <= 1.0)) throw DomainError("bump needs radius > 0 and a in (0, 1]");
  if (radius < space.resolution()) throw ResolutionError("bump radius below metric resolution");
  auto f = detail::radial(space, centre, RadialProfile{RadialProfile::Shape::power_bump, radius, a}, "bump");
  f.exponent = a;
  f.holder_constant = std::pow(radius, -a);
  return f;
}

/// C^1 bump (1 - d^2/R^2)^2 on d < R. Lipschitz with constant 8/(3 sqrt3 R),
/// the maximum of |phi'| attained at d = R/sqrt3.
template <class Space>
TestFunction<Space> make_smooth_bump(const Space& space, const typename Space::Point& centre, double radius) {
  if (!(radius > 0.0)) throw DomainError("bump needs radius > 0");
  if (radius < space.resolution()) throw ResolutionError("bump radius below metric resolution");
  auto f = detail::radial(space, centre, RadialProfile{RadialProfile::Shape::smooth_bump, radius, 1.0}, "smooth_bump");
  f.exponent = 1.0;
  f.holder_constant = 8.0 / (3.0 * std::sqrt(3.0) * radius);
  return f;
}

/// Indicator of the open ball D_radius(centre). Not Hoelder.
template <class Space>
TestFunction<Space> make_indicator(const Space& space, const typename Space::Point& centre, double radius) {
  if (!(radius > 0.0)) throw DomainError("indicator needs radius > 0");
  auto f = detail::radial(space, centre, RadialProfile{RadialProfile::Shape::indicator, radius, 1.0}, "indicator");
  f.holder = false;
  f.holder_constant = std::numeric_limits<double>::infinity();
  if constexpr (!detail::is_finite_space<Space>) f.exact_mean = space.ball_mass(centre, radius);
  return f;
}

template <class Space>
TestFunction<Space> make_constant(double c) {
  TestFunction<Space> f;
  f.name = "constant";
  f.evaluator = [c](const typename Space::Point&) { return c; };
  f.sup_bound = std::abs(c);
  f.exact_mean = c;
  return f;
}

/// Arbitrary function on a finite space given by its values; the discrete
/// metric makes every function Lipschitz with constant max - min.
template <class Space>
TestFunction<Space> make_table_function(const Space& space, std::vector<double> values, std::string name) {
  if (values.size() != space.size()) throw DomainError("value table size differs from the space");
  TestFunction<Space> f;
  f.name = std::move(name);
  double lo = values.front(), hi = values.front(), s = 0.0, sup = 0.0;
  for (double v : values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    s += v;
    sup = std::max(sup, std::abs(v));
  }
  f.sup_bound = sup;
  f.holder_constant = (hi - lo) / std::pow(space.resolution(), 1.0);
  f.exact_mean = s / static_cast<double>(values.size());
  f.support_radius = 1.0;
  f.evaluator = [values = std::move(values)](const typename Space::Point& x) { return values[x]; };
  return f;
}

}  // namespace orbitlab::holder
