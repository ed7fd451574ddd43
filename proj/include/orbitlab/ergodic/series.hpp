#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace orbitlab::ergodic {

enum class ErrorNorm { l1, l2, sup };
std::string to_string(ErrorNorm norm);

/// (t, E(f, t)) with E >= 0 and t strictly increasing, checked on push.
struct ErrorSeries {
  ErrorNorm norm = ErrorNorm::l2;
  std::vector<double> t;
  std::vector<double> value;
  /// Free-form provenance: space, function, radius, normalisation, grid.
  std::map<std::string, std::string> metadata;

  /// Throws InvariantViolation on a negative or non-finite value, DomainError
  /// on a non-increasing t.
  void push(double time, double e);
  std::size_t size() const { return t.size(); }
  /// FNV-1a of the sorted metadata.
  std::uint64_t metadata_hash() const;
};

/// CSV with columns t,value,norm,metadata_hash.
void write_series_csv(std::ostream& out, const ErrorSeries& series);

struct ExponentFit {
  double theta = 0.0;      // E ~ C exp(-theta t)
  double intercept = 0.0;  // log C
  double goodness = 0.0;   // residual norm of the log-linear fit
  std::size_t points_used = 0;
};

/// Least-squares slope of log E against t after dropping the earliest
/// `drop_fraction` of the points (transient regime) and every E <= 0.
/// Throws DomainError with fewer than 4 points before dropping or fewer than
/// 2 usable points after.
ExponentFit fit_exponent(const ErrorSeries& series, double drop_fraction = 0.2);

/// sup of E over the open window (t - kappa, t + kappa), with linearly
/// interpolated values at the window ends. Throws DomainError when the
/// window is not inside the recorded range.
double window_sup(const ErrorSeries& series, double t, double kappa);

}  // namespace orbitlab::ergodic
