#include "orbitlab/ergodic/finite_ball.hpp"

#include <cstdlib>
#include <limits>
#include <string>

#include "orbitlab/errors.hpp"
#include "orbitlab/freegroup/enumerate.hpp"
#include "orbitlab/numeric.hpp"

namespace orbitlab::ergodic {

using freegroup::Letter;

std::vector<std::int64_t> SphereCounts::ball(int n) const {
  std::vector<std::int64_t> out(degree_ * degree_, 0);
  for (int k = 0; k <= n; ++k) {
    const auto s = sphere(k);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += s[i];
  }
  return out;
}

std::int64_t SphereCounts::ball_cardinality(int n) const {
  std::int64_t total = 0;
  for (int k = 0; k <= n; ++k)
    for (std::size_t y = 0; y < degree_; ++y) total += sphere(k)[y];
  return total;
}

SphereCounts enumerate_sphere_counts(const freegroup::PermutationHom& hom, int n_max, const EnumerationBudget& budget,
                                     int threads) {
  const std::size_t deg = hom.degree();
  const std::uint64_t states = freegroup::ball_size(hom.rank(), n_max);
  if (states > budget.max_elements / std::max<std::size_t>(deg, 1))
    throw BudgetExceeded("sphere tables need " + std::to_string(states) + " x " + std::to_string(deg) +
                         " states, budget " + std::to_string(budget.max_elements));
  using Tables = std::vector<std::vector<std::int64_t>>;
  auto shard = [&](int first) {
    Tables t(static_cast<std::size_t>(n_max) + 1, std::vector<std::int64_t>(deg * deg, 0));
    for (std::uint32_t x = 0; x < deg; ++x) {
      // State gamma^-1 x; appending l on the right applies l^-1 on the left.
      freegroup::walk_ball(
          hom.rank(), n_max, x, [&](Letter l, std::uint32_t y) { return hom.act(freegroup::inverse_letter(l), y); },
          [&](int depth, std::uint32_t y) { ++t[static_cast<std::size_t>(depth)][x * deg + y]; }, first);
    }
    return t;
  };
  const auto shards = freegroup::run_shards<Tables>(hom.rank(), threads, shard);
  SphereCounts out(hom.rank(), deg);
  for (int n = 0; n <= n_max; ++n) {
    std::vector<std::int64_t> table(deg * deg, 0);
    if (n == 0)
      for (std::size_t x = 0; x < deg; ++x) table[x * deg + x] = 1;
    for (const auto& s : shards)
      for (std::size_t i = 0; i < table.size(); ++i) table[i] += s[static_cast<std::size_t>(n)][i];
    out.push(std::move(table));
  }
  return out;
}

SphereCounts recursion_sphere_counts(const freegroup::PermutationHom& hom, int n_max) {
  const std::size_t deg = hom.degree();
  const std::int64_t r2 = 2 * hom.rank();
  // Entries are bounded by |S_n| and ball sums by |B_n|.
  if (freegroup::ball_size(hom.rank(), n_max) > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    throw BudgetExceeded("word ball of radius " + std::to_string(n_max) + " overflows 64-bit counts");
  SphereCounts out(hom.rank(), deg);
  std::vector<std::int64_t> prev(deg * deg, 0), cur(deg * deg, 0);
  for (std::size_t x = 0; x < deg; ++x) prev[x * deg + x] = 1;
  out.push(prev);
  if (n_max == 0) return out;
  for (std::uint32_t x = 0; x < deg; ++x)
    for (int l = 0; l < r2; ++l) ++cur[x * deg + hom.act(static_cast<Letter>(l), x)];
  out.push(cur);
  for (int n = 1; n < n_max; ++n) {
    const std::int64_t c = n == 1 ? r2 : r2 - 1;
    std::vector<std::int64_t> next(deg * deg, 0);
    // (A C_n)(x, y) = sum_l C_n(l x, y).
    for (std::uint32_t x = 0; x < deg; ++x) {
      std::int64_t* row = &next[x * deg];
      for (int l = 0; l < r2; ++l) {
        const std::int64_t* src = &cur[hom.act(static_cast<Letter>(l), x) * deg];
        for (std::size_t y = 0; y < deg; ++y) row[y] += src[y];
      }
      for (std::size_t y = 0; y < deg; ++y) row[y] -= c * prev[x * deg + y];
    }
    prev = std::move(cur);
    cur = std::move(next);
    out.push(cur);
  }
  return out;
}

std::vector<std::vector<std::int64_t>> image_histograms(const matgroup::CongruenceQuotient& group,
                                                        const std::vector<std::uint32_t>& generator_images, int n_max,
                                                        const EnumerationBudget& budget, int threads) {
  const int rank = static_cast<int>(generator_images.size());
  budget.require(freegroup::ball_size(rank, n_max), "word ball");
  std::vector<std::uint32_t> letter_image;
  for (auto g : generator_images) {
    letter_image.push_back(g);
    letter_image.push_back(group.inverse(g));
  }
  using Hist = std::vector<std::vector<std::int64_t>>;
  const std::size_t order = group.order();
  auto shard = [&](int first) {
    Hist h(static_cast<std::size_t>(n_max) + 1, std::vector<std::int64_t>(order, 0));
    freegroup::walk_ball(
        rank, n_max, std::uint32_t{0}, [&](Letter l, std::uint32_t g) { return group.multiply(g, letter_image[l]); },
        [&](int depth, std::uint32_t g) { ++h[static_cast<std::size_t>(depth)][g]; }, first);
    return h;
  };
  const auto shards = freegroup::run_shards<Hist>(rank, threads, shard);
  Hist out(static_cast<std::size_t>(n_max) + 1, std::vector<std::int64_t>(order, 0));
  out[0][0] = 1;
  for (const auto& s : shards)
    for (int n = 1; n <= n_max; ++n)
      for (std::size_t g = 0; g < order; ++g) out[static_cast<std::size_t>(n)][g] += s[static_cast<std::size_t>(n)][g];
  return out;
}

SphereCounts regular_sphere_counts(const matgroup::CongruenceQuotient& group,
                                   const std::vector<std::vector<std::int64_t>>& histograms, int rank) {
  const std::size_t order = group.order();
  SphereCounts out(rank, order);
  for (const auto& h : histograms) {
    std::vector<std::int64_t> table(order * order);
    for (std::uint32_t x = 0; x < order; ++x)
      for (std::uint32_t y = 0; y < order; ++y) table[x * order + y] = h[group.multiply(x, group.inverse(y))];
    out.push(std::move(table));
  }
  return out;
}

std::vector<double> apply_table(std::span<const std::int64_t> table, std::size_t degree, std::span<const double> f,
                                double normaliser) {
  std::vector<double> out(degree);
  for (std::size_t x = 0; x < degree; ++x) {
    CompensatedSum s;
    for (std::size_t y = 0; y < degree; ++y) {
      const std::int64_t c = table[x * degree + y];
      if (c != 0) s.add(static_cast<double>(c) * f[y]);
    }
    out[x] = s.value() / normaliser;
  }
  return out;
}

std::int64_t convolution_defect(const SphereCounts& counts, int n, std::int64_t coefficient_override) {
  if (n < 1 || n + 1 > counts.max_radius()) throw DomainError("convolution check needs tables up to n + 1");
  const std::size_t deg = counts.degree();
  const std::int64_t c = coefficient_override >= 0 ? coefficient_override
                                                   : (n == 1 ? 2 * counts.rank() : 2 * counts.rank() - 1);
  const auto c1 = counts.sphere(1), cn = counts.sphere(n), cnext = counts.sphere(n + 1), cprev = counts.sphere(n - 1);
  std::int64_t worst = 0;
  for (std::size_t x = 0; x < deg; ++x)
    for (std::size_t y = 0; y < deg; ++y) {
      std::int64_t prod = 0;
      for (std::size_t z = 0; z < deg; ++z) prod += c1[x * deg + z] * cn[z * deg + y];
      worst = std::max<std::int64_t>(worst, std::llabs(prod - cnext[x * deg + y] - c * cprev[x * deg + y]));
    }
  return worst;
}

}  // namespace orbitlab::ergodic
