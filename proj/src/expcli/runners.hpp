#pragma once

#include <string>
#include <vector>

#include "build.hpp"
#include "orbitlab/ergodic/finite_ball.hpp"
#include "orbitlab/ergodic/series.hpp"
#include "orbitlab/expcli/record.hpp"

namespace orbitlab::expcli::detail {

// Each runner fills record.payload and record.series as it goes, so a
// BudgetExceeded or InvariantViolation leaves the finished parts in place.
void run_free_quotient(const ExperimentConfig& cfg, ResultRecord& rec);
void run_free_sphere2(const ExperimentConfig& cfg, ResultRecord& rec);
void run_lattice_quotient(const ExperimentConfig& cfg, ResultRecord& rec);
void run_plane_infinite(const ExperimentConfig& cfg, ResultRecord& rec);
void run_boundary_circle(const ExperimentConfig& cfg, ResultRecord& rec);
void run_desitter(const ExperimentConfig& cfg, ResultRecord& rec);
void run_ratio(const ExperimentConfig& cfg, ResultRecord& rec);
void run_monotonicity(const ExperimentConfig& cfg, ResultRecord& rec);

/// Polynomial-correction fit of cumulative hit counts against t = log T with
/// the configured alpha, beside the configured beta. Null when the
/// normalisation is cardinality or too few counts are positive.
Json beta_fit_json(const std::vector<double>& t, const std::vector<double>& counts,
                   const matgroup::Normalization& normalization);

// Halves of a ratio experiment; each writes its own payload section.
void run_ratio_finite(const Json& part, const ExperimentConfig& cfg, ResultRecord& rec);
void run_ratio_plane(const Json& part, const ExperimentConfig& cfg, ResultRecord& rec);

/// Sphere tables up to `radius`: the image-histogram path for SL_2(Z/N)
/// quotients, per-point enumeration, or the integer recursion. Adds the
/// number of enumerated elements to `elements`.
ergodic::SphereCounts quotient_counts(const BuiltQuotient& q, int radius, const std::string& method,
                                      const ExperimentConfig& cfg, std::uint64_t& elements);

/// theta of a series, or null when too few positive points remain.
Json fit_json(const ergodic::ErrorSeries& s);

/// Null for NaN and infinities, the number otherwise.
Json number_or_null(double v);

}  // namespace orbitlab::expcli::detail
