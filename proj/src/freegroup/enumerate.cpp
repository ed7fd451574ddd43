#include "orbitlab/freegroup/enumerate.hpp"

#include <limits>
#include <stdexcept>

namespace orbitlab::freegroup {

namespace {
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw BudgetExceeded("word count overflows 64 bits");
  return out;
}
}  // namespace

std::uint64_t sphere_size(int rank, int n) {
  if (rank < 2) throw std::invalid_argument("rank must be >= 2");
  if (n < 0) return 0;
  if (n == 0) return 1;
  std::uint64_t s = 2 * static_cast<std::uint64_t>(rank);
  for (int k = 1; k < n; ++k) s = checked_mul(s, 2 * static_cast<std::uint64_t>(rank) - 1);
  return s;
}

std::uint64_t ball_size(int rank, int n) {
  std::uint64_t total = 0;
  for (int k = 0; k <= n; ++k) {
    const std::uint64_t s = sphere_size(rank, k);
    if (total > std::numeric_limits<std::uint64_t>::max() - s)
      throw BudgetExceeded("ball size overflows 64 bits");
    total += s;
  }
  return total;
}

void for_each_in_sphere(int rank, int n, const EnumerationBudget& budget,
                        const std::function<void(std::span<const Letter>)>& visit) {
  if (n < 0) throw std::invalid_argument("radius must be >= 0");
  budget.require(sphere_size(rank, n), "sphere enumeration");
  std::vector<Letter> word;
  word.reserve(static_cast<std::size_t>(n));
  // State is the current word length; the buffer holds the letters.
  walk_ball(
      rank, n, 0,
      [&word](Letter l, int depth) {
        word.resize(static_cast<std::size_t>(depth));
        word.push_back(l);
        return depth + 1;
      },
      [&](int depth, int) {
        if (depth == n) visit(std::span<const Letter>(word.data(), static_cast<std::size_t>(n)));
      });
}

}  // namespace orbitlab::freegroup
