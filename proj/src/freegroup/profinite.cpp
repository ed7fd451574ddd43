#include "orbitlab/freegroup/profinite.hpp"

#include <limits>

#include "orbitlab/errors.hpp"

namespace orbitlab::freegroup {

SubgroupChain::SubgroupChain(std::vector<PermutationHom> levels) : levels_(std::move(levels)) {
  if (levels_.empty()) throw ConfigError("subgroup chain needs at least one level");
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const auto& lv = levels_[i];
    if (lv.rank() != levels_.front().rank()) throw ConfigError("chain levels have different ranks");
    if (!lv.transitive()) throw ConfigError("chain level " + std::to_string(i) + " is not transitive");
    if (i > 0 && lv.degree() <= levels_[i - 1].degree())
      throw ConfigError("chain indices must be strictly increasing");
  }
  constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
  for (std::size_t i = 0; i + 1 < levels_.size(); ++i) {
    const auto& fine = levels_[i + 1];
    const auto& coarse = levels_[i];
    std::vector<std::uint32_t> proj(fine.degree(), unset);
    proj[0] = 0;
    std::vector<std::uint32_t> stack{0};
    const auto alphabet = static_cast<Letter>(2 * fine.rank());
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (Letter l = 0; l < alphabet; ++l) {
        const auto y = fine.act(l, x);
        const auto py = coarse.act(l, proj[x]);
        if (proj[y] == unset) {
          proj[y] = py;
          stack.push_back(y);
        } else if (proj[y] != py) {
          throw ConfigError("subgroup chain is not nested between levels " + std::to_string(i) + " and " +
                            std::to_string(i + 1));
        }
      }
    }
    projection_.push_back(std::move(proj));
  }
}

std::uint32_t SubgroupChain::project(std::uint32_t deepest_coset, std::size_t i) const {
  std::uint32_t x = deepest_coset;
  for (std::size_t lv = levels_.size() - 1; lv > i; --lv) x = projection_[lv - 1][x];
  return x;
}

ProfiniteDistance profinite_metric(const ReducedWord& w1, const ReducedWord& w2, const SubgroupChain& chain) {
  const ReducedWord q = w1.inverse() * w2;
  ProfiniteDistance out;
  out.depth = chain.depth();
  out.first_exit = chain.depth();
  // Indices increase along the chain and membership is monotone, so the max
  // is attained at the first level the quotient leaves.
  for (std::size_t i = 0; i < chain.depth(); ++i) {
    if (!chain.contains(i, q)) {
      out.first_exit = i;
      out.distance = 1.0 / static_cast<double>(chain.index(i));
      break;
    }
  }
  return out;
}

double profinite_coset_distance(std::uint32_t x, std::uint32_t y, const SubgroupChain& chain) {
  for (std::size_t i = 0; i < chain.depth(); ++i)
    if (chain.project(x, i) != chain.project(y, i)) return 1.0 / static_cast<double>(chain.index(i));
  return 0.0;
}

}  // namespace orbitlab::freegroup
