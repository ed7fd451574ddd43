#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "orbitlab/budget.hpp"

namespace orbitlab::matgroup {

/// Element of SL_2(Z). Entries are exact 64-bit integers; every product is
/// overflow-checked and raises std::overflow_error instead of wrapping.
struct LatticeElement {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  /// Throws std::invalid_argument unless ad - bc == 1.
  static LatticeElement make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
  static LatticeElement identity() { return {}; }

  LatticeElement inverse() const { return {d, -b, -c, a}; }
  LatticeElement negated() const { return {-a, -b, -c, -d}; }
  __int128 determinant() const { return static_cast<__int128>(a) * d - static_cast<__int128>(b) * c; }
  /// Squared Frobenius norm.
  std::int64_t norm_sq() const;

  friend LatticeElement operator*(const LatticeElement& x, const LatticeElement& y);
  friend bool operator==(const LatticeElement&, const LatticeElement&) = default;
  friend auto operator<=>(const LatticeElement&, const LatticeElement&) = default;
};

inline LatticeElement group_inverse(const LatticeElement& g) { return g.inverse(); }

enum class NormKind { euclidean, max };

double matrix_norm(const LatticeElement& g, NormKind kind);

/// Largest integer strictly below e^{2t}: the squared-norm bound of
/// B_t = {g : log||g|| < t}.
std::int64_t strict_norm_sq_bound(double t);
/// Largest integer strictly below T^2, exact when T^2 is an integer (the
/// T = 2^k grids used by experiments).
std::int64_t strict_norm_sq_bound_T(double T);
/// floor(T^2) with a guard for T^2 landing just below an integer.
std::int64_t closed_norm_sq_bound(double T);

/// Solution (c0, d0) of a*d0 - b*c0 = 1 for coprime (a, b).
std::pair<std::int64_t, std::int64_t> unimodular_completion(std::int64_t a, std::int64_t b);

/// Integer k-range [lo, hi] with ||[[a,b],[c0+ka, d0+kb]]||^2 <= bound, or
/// lo > hi when empty.
std::pair<std::int64_t, std::int64_t> bottom_row_range(std::int64_t a, std::int64_t b, std::int64_t c0,
                                                       std::int64_t d0, std::int64_t bound);

/// Predicted size of the Frobenius ball of squared radius `norm_sq_bound`
/// from the leading asymptotic 6 T^2, used for budget estimates.
std::uint64_t predicted_sl2z_ball_size(std::int64_t norm_sq_bound);

/// Streams every gamma in SL_2(Z) with ||gamma||_F^2 <= norm_sq_bound exactly
/// once: coprime top rows (a, b) in order of a then b, and for each the
/// bottom rows on the line (c0 + ka, d0 + kb) meeting the bound, k ascending.
/// Rows with a in [a_lo, a_hi] only when a shard range is given.
template <class Visit>
void enumerate_sl2z_ball(std::int64_t norm_sq_bound, const EnumerationBudget& budget, Visit&& visit,
                         std::int64_t a_lo = INT64_MIN, std::int64_t a_hi = INT64_MAX);

/// Number of elements of the ball, by the same row/line strategy without
/// materialising elements.
std::uint64_t count_sl2z_ball(std::int64_t norm_sq_bound);

/// Writes the ball as CSV with columns a,b,c,d,norm.
void write_ball_csv(std::ostream& out, std::int64_t norm_sq_bound, const EnumerationBudget& budget);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

// ---------------------------------------------------------------------------

template <class Visit>
void enumerate_sl2z_ball(std::int64_t norm_sq_bound, const EnumerationBudget& budget, Visit&& visit,
                         std::int64_t a_lo, std::int64_t a_hi) {
  if (norm_sq_bound < 2) return;
  const auto amax = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(norm_sq_bound)))) + 1;
  std::uint64_t emitted = 0;
  for (std::int64_t a = std::max(-amax, a_lo); a <= std::min(amax, a_hi); ++a) {
    const std::int64_t rem = norm_sq_bound - a * a;
    if (rem < 0) continue;
    auto bmax = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(rem))));
    while (bmax * bmax > rem) --bmax;
    while ((bmax + 1) * (bmax + 1) <= rem) ++bmax;
    for (std::int64_t b = -bmax; b <= bmax; ++b) {
      if (gcd64(a, b) != 1) continue;
      const auto [c0, d0] = unimodular_completion(a, b);
      const auto [lo, hi] = bottom_row_range(a, b, c0, d0, norm_sq_bound);
      for (std::int64_t k = lo; k <= hi; ++k) {
        if (++emitted > budget.max_elements)
          throw BudgetExceeded("SL2(Z) ball enumeration exceeded budget of " + std::to_string(budget.max_elements));
        visit(LatticeElement{a, b, c0 + k * a, d0 + k * b});
      }
    }
  }
}

}  // namespace orbitlab::matgroup
