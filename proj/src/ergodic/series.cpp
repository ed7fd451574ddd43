#include "orbitlab/ergodic/series.hpp"

#include <cmath>
#include <sstream>

#include "orbitlab/errors.hpp"
#include "orbitlab/numeric.hpp"

namespace orbitlab::ergodic {

std::string to_string(ErrorNorm norm) {
  switch (norm) {
    case ErrorNorm::l1: return "L1";
    case ErrorNorm::l2: return "L2";
    case ErrorNorm::sup: return "sup";
  }
  return "unknown";
}

void ErrorSeries::push(double time, double e) {
  if (!std::isfinite(e) || e < 0.0) throw InvariantViolation("error value must be finite and nonnegative");
  if (!t.empty() && !(time > t.back())) throw DomainError("error series times must increase strictly");
  t.push_back(time);
  value.push_back(e);
}

std::uint64_t ErrorSeries::metadata_hash() const {
  std::ostringstream s;
  s << to_string(norm) << '\n';
  for (const auto& [k, v] : metadata) s << k << '=' << v << '\n';
  return fnv1a(s.str());
}

void write_series_csv(std::ostream& out, const ErrorSeries& series) {
  const std::string hash = hex64(series.metadata_hash());
  out << "t,value,norm,metadata_hash\n";
  for (std::size_t i = 0; i < series.size(); ++i)
    out << format_double(series.t[i]) << ',' << format_double(series.value[i]) << ',' << to_string(series.norm) << ','
        << hash << '\n';
}

ExponentFit fit_exponent(const ErrorSeries& series, double drop_fraction) {
  if (series.size() < 4) throw DomainError("exponent fit needs at least 4 points");
  const auto skip = static_cast<std::size_t>(std::floor(drop_fraction * static_cast<double>(series.size())));
  std::vector<double> x, y;
  for (std::size_t i = skip; i < series.size(); ++i) {
    if (series.value[i] <= 0.0) continue;
    x.push_back(series.t[i]);
    y.push_back(std::log(series.value[i]));
  }
  if (x.size() < 2) throw DomainError("exponent fit: fewer than 2 positive points after dropping the transient");
  const LinearFit fit = least_squares(x, y);
  return {-fit.slope, fit.intercept, fit.residual_norm, x.size()};
}

double window_sup(const ErrorSeries& series, double t, double kappa) {
  if (series.size() < 2 || t - kappa < series.t.front() || t + kappa > series.t.back())
    throw DomainError("window (" + format_double(t - kappa) + ", " + format_double(t + kappa) +
                      ") lies outside the recorded series");
  auto interp = [&](double s) {
    std::size_t i = 1;
    while (i + 1 < series.size() && series.t[i] < s) ++i;
    const double w = (s - series.t[i - 1]) / (series.t[i] - series.t[i - 1]);
    return (1.0 - w) * series.value[i - 1] + w * series.value[i];
  };
  double best = std::max(interp(t - kappa), interp(t + kappa));
  best = std::max(best, interp(t));
  for (std::size_t i = 0; i < series.size(); ++i)
    if (series.t[i] > t - kappa && series.t[i] < t + kappa) best = std::max(best, series.value[i]);
  return best;
}

}  // namespace orbitlab::ergodic
