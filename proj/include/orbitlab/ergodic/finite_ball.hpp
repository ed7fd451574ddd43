#pragma once

// Exact word-ball sums on finite F_r-sets. A sphere table holds
//   C_n(x, y) = #{gamma in S_n : gamma^-1 x = y},
// so the sphere sum of any f is (C_n f)(x) and ball sums are partial sums
// over n. Tables are integers; averages are formed only at the end.

#include <cstdint>
#include <span>
#include <vector>

#include "orbitlab/budget.hpp"
#include "orbitlab/freegroup/hom.hpp"
#include "orbitlab/matgroup/congruence.hpp"

namespace orbitlab::ergodic {

class SphereCounts {
 public:
  SphereCounts(int rank, std::size_t degree) : rank_(rank), degree_(degree) {}

  int rank() const { return rank_; }
  std::size_t degree() const { return degree_; }
  int max_radius() const { return static_cast<int>(spheres_.size()) - 1; }
  std::span<const std::int64_t> sphere(int n) const { return spheres_.at(static_cast<std::size_t>(n)); }
  std::int64_t at(int n, std::uint32_t x, std::uint32_t y) const { return sphere(n)[x * degree_ + y]; }
  void push(std::vector<std::int64_t> table) { spheres_.push_back(std::move(table)); }

  /// Ball table sum_{k <= n} C_k.
  std::vector<std::int64_t> ball(int n) const;
  /// sum_{k<=n} |S_k| read off row 0 of the tables.
  std::int64_t ball_cardinality(int n) const;

  friend bool operator==(const SphereCounts&, const SphereCounts&) = default;

 private:
  int rank_;
  std::size_t degree_;
  std::vector<std::vector<std::int64_t>> spheres_;
};

/// Depth-first enumeration from every x, sharded by first letter. Touches
/// |X| * |B_n| states; BudgetExceeded if that exceeds the budget.
SphereCounts enumerate_sphere_counts(const freegroup::PermutationHom& hom, int n_max, const EnumerationBudget& budget,
                                     int threads = 1);

/// C_0 = I, C_1 = A, C_2 = A C_1 - 2r I, C_{n+1} = A C_n - (2r-1) C_{n-1}:
/// the sphere recursion, with A(x, y) = #{letters l : l x = y}.
SphereCounts recursion_sphere_counts(const freegroup::PermutationHom& hom, int n_max);

/// Image histogram hist_n[h] = #{gamma in S_n : phi(gamma) = h} for
/// phi : F_r -> SL_2(Z/N), enumerated once by a depth-first walk over group
/// indices.
std::vector<std::vector<std::int64_t>> image_histograms(const matgroup::CongruenceQuotient& group,
                                                        const std::vector<std::uint32_t>& generator_images, int n_max,
                                                        const EnumerationBudget& budget, int threads = 1);

/// Sphere tables of the left-regular action of SL_2(Z/N): gamma^-1 x = y iff
/// phi(gamma) = x y^-1, so C_n(x, y) = hist_n[x y^-1].
SphereCounts regular_sphere_counts(const matgroup::CongruenceQuotient& group,
                                   const std::vector<std::vector<std::int64_t>>& histograms, int rank);

/// (T f)(x) = sum_y table(x, y) f(y) / normaliser, compensated.
std::vector<double> apply_table(std::span<const std::int64_t> table, std::size_t degree, std::span<const double> f,
                                double normaliser);

/// Largest |entry| of C_1 C_n - C_{n+1} - c C_{n-1} with c = 2r for n = 1 and
/// 2r - 1 for n >= 2 (at n = 1 each letter cancels against its own inverse,
/// one extra backtrack per word). `coefficient_override` replaces c when >= 0.
std::int64_t convolution_defect(const SphereCounts& counts, int n, std::int64_t coefficient_override = -1);

}  // namespace orbitlab::ergodic
